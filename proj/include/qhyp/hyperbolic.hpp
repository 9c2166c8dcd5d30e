#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qhyp/qlinalg.hpp"
#include "qhyp/qmatrix.hpp"
#include "qhyp/tolerance.hpp"

namespace qhyp {

using Rng = std::mt19937_64;

enum class FormTag { H1, H2, H3, H4 };

std::string to_string(FormTag tag);
/// Parses "H1".."H4"; throws InvalidArgument otherwise.
FormTag parse_form_tag(std::string_view s);

/// Hermitian form of signature (n, 1) on H^{n+1}; <z, w> = w* H z.
///
///   H1 = diag(1, I_{n-1}, -1)          ball model
///   H2 = antidiag corners 1, I_{n-1}   Siegel domain
///   H3 = diag(-1, I_{n-1}, 1)          ball model
///   H4 = [[0,-1],[-1,0]] (+) I_{n-1}   Siegel domain
class HermitianForm {
 public:
  HermitianForm() = default;
  HermitianForm(FormTag tag, int n);

  FormTag tag() const { return tag_; }
  int n() const { return n_; }
  std::size_t dim() const { return static_cast<std::size_t>(n_) + 1; }

  HermitianQMatrix matrix() const;
  /// w* H z.
  Quaternion inner(const QVector& z, const QVector& w) const;
  /// <z, z>, always real.
  double self_inner(const QVector& z) const { return inner(z, z).t; }

  /// Coordinate set to 1 by the standard lift of an isotropic vector z.
  std::size_t normalizing_coordinate(const QVector& z) const;

  friend bool operator==(const HermitianForm&, const HermitianForm&) = default;

 private:
  FormTag tag_ = FormTag::H1;
  int n_ = 2;
};

enum class VectorClass { negative, isotropic, positive };

/// Vector of H^{n,1} together with the form it is measured by.
class LiftVector {
 public:
  LiftVector() = default;
  LiftVector(HermitianForm form, QVector coords);

  const HermitianForm& form() const { return form_; }
  const QVector& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  const Quaternion& operator[](std::size_t i) const { return coords_[i]; }

  /// z * lambda.
  LiftVector scaled(const Quaternion& lambda) const;
  /// T z.
  LiftVector transformed(const QMatrix& t) const;

 private:
  HermitianForm form_;
  QVector coords_;
};

/// <z, w> = w* H z; throws InvalidArgument on form or dimension mismatch.
Quaternion inner(const LiftVector& z, const LiftVector& w);

/// Sign of <z, z> with dead-band tol * |z|^2 mapped to isotropic.
VectorClass classify(const LiftVector& z, const Tolerances& tol = {});
bool is_isotropic(const LiftVector& z, const Tolerances& tol = {});

/// Right-rescales an isotropic vector so its normalizing coordinate is 1
/// (the last coordinate for H1).
LiftVector standard_lift(const LiftVector& z, const Tolerances& tol = {});

/// Hyperbolic distance between two negative points.
double distance(const LiftVector& z, const LiftVector& w, const Tolerances& tol = {});

/// M* H M = H within tol * ||H||.
bool is_isometry(const QMatrix& m, const HermitianForm& form, const Tolerances& tol = {});

/// Random element of Sp(n,1) for the given form.
QMatrix random_isometry(const HermitianForm& form, Rng& rng);
QMatrix random_isometry(const HermitianForm& form, std::uint64_t seed);

/// W with W* H W = H1 (a change of model from the ball H1 to `form`):
/// H1-vectors z map to form-vectors W z preserving all inner products.
QMatrix model_change_from_h1(const HermitianForm& form);

/// Basis F of H^{n+1} with first column `z` and F* H F = [[0,-1],[-1,0]] (+) I.
/// Requires z isotropic and nonzero.
QMatrix hyperbolic_frame(const LiftVector& z, const Tolerances& tol = {});

/// Isometry T with T z = w exactly (to rounding) for nonzero isotropic z, w.
QMatrix isometry_sending(const LiftVector& z, const LiftVector& w, const Tolerances& tol = {});

/// m pairwise distinct isotropic points: random unit vectors in H^n with last
/// coordinate 1 in the H1 ball, then carried to `form` by model_change_from_h1.
std::vector<LiftVector> random_boundary_tuple(int n, int m, Rng& rng, FormTag form = FormTag::H1);
std::vector<LiftVector> random_boundary_tuple(int n, int m, std::uint64_t seed, FormTag form = FormTag::H1);

/// Uniform random quaternion of unit modulus.
Quaternion random_unit_quaternion(Rng& rng);
/// Quaternion with independent standard normal components.
Quaternion random_gaussian_quaternion(Rng& rng);

}  // namespace qhyp
