#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qhyp/hyperbolic.hpp"
#include "qhyp/qlinalg.hpp"

namespace qhyp {

/// Special-Gram matrix G = (<p_j, p_i>) of m pairwise distinct isotropic
/// lifts: Hermitian, zero diagonal, every off-diagonal entry nonzero.
class SpecialGram {
 public:
  /// Validates the zero diagonal (|g_ii| <= tol * max|g|) and distinctness
  /// (|g_ij| > 1e-8 * max|g|); throws CoincidentPoints on a vanishing
  /// off-diagonal entry and InvalidArgument on a nonzero diagonal.
  SpecialGram(HermitianQMatrix g, FormTag form = FormTag::H1, double tol = 1e-9);

  const HermitianQMatrix& matrix() const { return g_; }
  std::size_t m() const { return g_.size(); }
  FormTag form() const { return form_; }
  /// 0-based entry g_(i+1)(j+1).
  const Quaternion& operator()(std::size_t i, std::size_t j) const { return g_(i, j); }

 private:
  HermitianQMatrix g_;
  FormTag form_;
};

/// Special-Gram matrix whose first row is 1 off the diagonal.
class NormalizedGram {
 public:
  NormalizedGram(SpecialGram g, double tol = 1e-9);

  const SpecialGram& gram() const { return g_; }
  const HermitianQMatrix& matrix() const { return g_.matrix(); }
  std::size_t m() const { return g_.m(); }
  const Quaternion& operator()(std::size_t i, std::size_t j) const { return g_(i, j); }

 private:
  SpecialGram g_;
};

/// G_ij = <p_j, p_i> for the lifts exactly as given.
SpecialGram gram_from_tuple(std::span<const LiftVector> lifts, const Tolerances& tol = {});

struct Normalization {
  NormalizedGram gram;
  /// lambda_2 .. lambda_m with lambda_j = <p_j, p_1>^{-1}, p_1 standard.
  std::vector<Quaternion> scalars;
  /// mu with standard_lift(p_1) = p_1 * mu.
  Quaternion first_scale;
};

/// Replaces p_1 by its standard lift and p_j by p_j lambda_j.
Normalization normalize(std::span<const LiftVector> lifts, const Tolerances& tol = {});

struct AssociatedMatrix {
  /// (m-2)x(m-2) matrix indexed by points 3..m.
  HermitianQMatrix gstar;
  /// Upper triangular T with T* G T = blockdiag([[0,1],[1,0]], gstar).
  QMatrix transformer;
};

/// Requires m > 2. Checks the block identity and throws NumericalFailure
/// when it fails beyond rounding.
AssociatedMatrix associated_matrix(const NormalizedGram& g);

struct ValidityReport {
  bool valid = false;
  int rank = 0;
  /// Principal minors of G* below the dead-band (0-based index sets).
  std::vector<PrincipalMinor> violations;
  bool positive_semidefinite = false;
};

/// rank(G*) <= n-1 and every principal minor of G* >= -tol; the minor route
/// is checked against the spectral PSD route.
ValidityReport is_valid_boundary_gram(const NormalizedGram& g, int n, const Tolerances& tol = {});

enum class SubspaceType { hyperbolic, elliptic, parabolic };

std::string to_string(SubspaceType t);

struct SignatureReport {
  Signature signature;
  SubspaceType type = SubspaceType::hyperbolic;
  /// n_- = 1, 1 <= n_+ <= n and n_+ + 1 + n_0 = m.
  bool boundary_conditions = false;
};

/// Signature of G and the type of the spanned subspace. `span_dim`, when
/// known, separates linear dependence of the vectors from degeneracy of the
/// form; otherwise the vectors are taken as independent.
SignatureReport signature_conditions(const HermitianQMatrix& g, int n, std::optional<int> span_dim = std::nullopt,
                                     const Tolerances& tol = {});

/// Lifts p_1..p_m in H^{n,1} with <p_j, p_i> = g_ij. Throws
/// PreconditionViolation unless n_- = 1 and rank(G) <= n + 1.
std::vector<LiftVector> reconstruct_points(const HermitianQMatrix& g, int n, FormTag form = FormTag::H1,
                                           const Tolerances& tol = {});

enum class CongruenceMode { strict, gauge };

struct CongruenceResult {
  bool congruent = false;
  /// Frobenius distance between the compared normalized matrices.
  double discrepancy = 0.0;
};

/// Strict: normalized Grams equal entrywise. Gauge: additionally minimizes
/// over g -> c * conj(v) g v (v unit, c > 0) on rows and columns 2..m, the
/// freedom left by rescaling the first lift.
CongruenceResult congruence_test(std::span<const LiftVector> a, std::span<const LiftVector> b, CongruenceMode mode,
                                 double threshold = 1e-6, const Tolerances& tol = {});

}  // namespace qhyp
