#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qhyp/hyperbolic.hpp"
#include "qhyp/invariants.hpp"

namespace qhyp {

/// Conjugacy data of a loxodromic element of Sp(2,1): dilation r (r != 1)
/// and rotation angles beta, theta in [0, pi].
struct LoxodromicClass {
  double r = 2.0;
  double beta = 0.0;
  double theta = 0.0;

  /// Throws InvalidArgument when r <= 0, |r - 1| <= tol or an angle is
  /// outside [0, pi].
  void validate(double tol = 1e-9) const;
};

/// The H4 form for n = 2: [[0,-1,0],[-1,0,0],[0,0,1]].
HermitianForm loxodromic_form();

/// diag(r e^{i beta}, r^{-1} e^{i beta}, e^{i theta}); audited against the
/// H4 form to 1e-12.
QMatrix normal_form(const LoxodromicClass& c);

/// Class with the canonical representative r > 1, or nullopt when the
/// spectrum of chi(M) is not {rho, rho, 1, 1, 1/rho, 1/rho} with rho > 1 + tol.
/// Throws PreconditionViolation unless M is an H4 isometry.
std::optional<LoxodromicClass> classify(const QMatrix& m, const Tolerances& tol = {});

struct FixedPoints {
  LiftVector attracting;
  LiftVector repelling;
};

/// Fixed points from the eigenvectors of chi(M) of modulus rho and 1/rho.
/// The labels are confirmed by power iteration from a negative vector and
/// swapped if the iteration disagrees. Throws PreconditionViolation when M is
/// not loxodromic.
FixedPoints fixed_points(const QMatrix& m, const Tolerances& tol = {});

struct GeneratorData {
  QMatrix matrix;
  LoxodromicClass cls;
  LiftVector p_plus;
  LiftVector p_minus;
};

GeneratorData analyze_generator(const QMatrix& m, const Tolerances& tol = {});

struct RepCoordinates {
  /// Coordinates of (p1+, p1-, ..., pk+, pk-) under H4; empty for k = 1,
  /// where two points carry no coordinates.
  std::optional<ModuliCoordinates> points_part;
  std::vector<LiftVector> points;
  std::vector<double> radii;
  /// beta_1, theta_1, ..., beta_k, theta_k.
  std::vector<double> angles;
};

/// Assumes, without checking, that the generated group is discrete and
/// faithful. Throws CoincidentPoints when two fixed points coincide.
RepCoordinates rep_coordinates(std::span<const QMatrix> generators, const Tolerances& tol = {});

/// Q L Q^{-1} for a random class with r in (1, 10] and a random H4 isometry Q.
QMatrix random_loxodromic(Rng& rng, LoxodromicClass* cls = nullptr);

}  // namespace qhyp
