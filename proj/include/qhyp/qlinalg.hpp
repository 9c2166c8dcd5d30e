#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "qhyp/qmatrix.hpp"
#include "qhyp/tolerance.hpp"

namespace qhyp {

/// Largest order accepted by the cycle-sum Moore determinant.
inline constexpr std::size_t kMaxMooreOrder = 12;
/// Largest order accepted by principal-minor enumeration.
inline constexpr std::size_t kMaxMinorOrder = 12;

/// Square quaternionic matrix with M* = M.
///
/// Construction checks ||M - M*|| <= tol * max|m_ij| and then replaces M by
/// (M + M*) / 2, so the stored diagonal is exactly real.
class HermitianQMatrix {
 public:
  HermitianQMatrix() = default;
  explicit HermitianQMatrix(const QMatrix& m, double tol = 1e-9);

  std::size_t size() const { return m_.rows(); }
  const QMatrix& matrix() const { return m_; }
  const Quaternion& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  HermitianQMatrix principal_submatrix(std::span<const std::size_t> idx) const;

 private:
  QMatrix m_;
};

/// Counts of positive, negative and zero eigenvalues.
struct Signature {
  int n_plus = 0;
  int n_minus = 0;
  int n_zero = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

using ComplexMatrix = Eigen::MatrixXcd;

/// chi(M) = [[A, B], [-conj(B), conj(A)]] for M = A + B j.
ComplexMatrix complex_adjoint(const QMatrix& m);
/// Inverse of complex_adjoint, reading the A and B blocks.
QMatrix from_complex_adjoint(const ComplexMatrix& c);

/// Eigenvalues of a complex Hermitian matrix by cyclic Jacobi, ascending.
std::vector<double> hermitian_eigenvalues(ComplexMatrix a);

/// The n real eigenvalues of a Hermitian quaternionic matrix, ascending;
/// obtained by pairing the 2n eigenvalues of chi(M). Throws NumericalFailure
/// when adjacent eigenvalues fail to pair within 1e-6 * ||M||.
std::vector<double> quaternionic_eigenvalues(const HermitianQMatrix& m);

/// Moore determinant by cycle-ordered permutation sum.
double moore_det(const HermitianQMatrix& m);
/// Moore determinant as the product of the paired eigenvalues of chi(M).
double moore_det_oracle(const HermitianQMatrix& m);

/// (det_M(blockdiag(m1, m2)), det_M(m1) * det_M(m2)).
std::pair<double, double> block_diag_property_check(const HermitianQMatrix& m1, const HermitianQMatrix& m2);
/// (det_M(U* M U), det_M(M) * det_M(U* U)).
std::pair<double, double> congruence_det_property(const HermitianQMatrix& m, const QMatrix& u);
/// Ordinary determinant of a Hermitian matrix whose entries are all complex
/// (no j or k components). Throws InvalidArgument otherwise.
double complex_determinant(const HermitianQMatrix& m);

Signature signature(const HermitianQMatrix& m, const Tolerances& tol = {});

/// Quaternionic rank: half the numerical rank of chi(M), threshold
/// tol * (largest singular value).
int rank(const QMatrix& m, const Tolerances& tol = {});

/// Principal minor on a 0-based index set.
struct PrincipalMinor {
  std::vector<std::size_t> indices;
  double value = 0.0;
};

/// Moore determinants of all 2^n - 1 principal submatrices, ordered by size
/// and then lexicographically.
std::vector<PrincipalMinor> principal_minors(const HermitianQMatrix& m, std::size_t cap = kMaxMinorOrder);

/// Dead-band for a minor of order s: tol * (max |m_ij|)^s.
double minor_threshold(double tol, double scale, std::size_t order);

/// Leading principal minors all positive beyond the dead-band.
bool is_positive_definite(const HermitianQMatrix& m, const Tolerances& tol = {});
/// All principal minors nonnegative within the dead-band. Cross-checked
/// against min eig(chi(M)) >= -tol * ||M||; throws NumericalFailure when the
/// two routes disagree.
bool is_positive_semidefinite(const HermitianQMatrix& m, const Tolerances& tol = {});

double min_eigenvalue(const HermitianQMatrix& m);

/// U* M U = diag(+1 ... +1, -1 ... -1, 0 ... 0).
struct Congruence {
  QMatrix u;
  std::vector<int> diagonal;
  Signature signature;
};

Congruence congruence_diagonalize(const HermitianQMatrix& m, const Tolerances& tol = {});

}  // namespace qhyp
