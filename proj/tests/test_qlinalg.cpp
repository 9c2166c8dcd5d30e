#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qhyp/error.hpp"
#include "qhyp/qlinalg.hpp"

using namespace qhyp;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_CASE("Moore determinant of the hyperbolic block is -1") {
  CHECK(moore_det(HermitianQMatrix(QMatrix{{0.0, 1.0}, {1.0, 0.0}})) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("Moore determinant of a diagonal matrix is the product of the diagonal") {
  CHECK(moore_det(HermitianQMatrix(QMatrix::diagonal(std::vector<Quaternion>{2.0, -3.0, 0.5}))) == doctest::Approx(-3.0));
}

TEST_CASE("2x2 Moore determinant is ad - |b|^2") {
  const Quaternion b(0.3, -1.0, 2.0, 0.5);
  const HermitianQMatrix m(QMatrix{{2.0, b}, {conj(b), -1.5}});
  CHECK(moore_det(m) == doctest::Approx(-3.0 - norm2(b)));
}

TEST_CASE("cycle sum agrees with the brute-force permutation sum") {
  Rng rng(11);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int s = 0; s < 10; ++s) {
      const HermitianQMatrix h = oracle::random_hermitian(n, rng);
      CHECK(rel(moore_det(h), oracle::brute_moore_det(h.matrix())) < 1e-10);
    }
  }
}

TEST_CASE("library eigenvalue oracle agrees with Eigen's solver") {
  Rng rng(12);
  for (std::size_t n = 1; n <= 6; ++n) {
    const HermitianQMatrix h = oracle::random_hermitian(n, rng);
    CHECK(rel(moore_det_oracle(h), oracle::eigen_moore_det(h.matrix())) < 1e-9);
    const std::vector<double> ev = quaternionic_eigenvalues(h);
    const std::vector<double> ref = oracle::chi_eigenvalues(h.matrix());
    REQUIRE(ev.size() == n);
    for (std::size_t i = 0; i < n; ++i) CHECK(ev[i] == doctest::Approx(ref[2 * i]).epsilon(1e-9));
  }
}

TEST_CASE("complex adjoint is a homomorphism") {
  Rng rng(13);
  const QMatrix a = oracle::random_matrix(3, 3, rng);
  const QMatrix b = oracle::random_matrix(3, 3, rng);
  CHECK((complex_adjoint(a * b) - complex_adjoint(a) * complex_adjoint(b)).norm() < 1e-12);
  CHECK((complex_adjoint(a) - oracle::chi(a)).norm() == 0.0);
  CHECK((from_complex_adjoint(complex_adjoint(a)) - a).max_abs() == 0.0);
}

TEST_CASE("block and congruence identities") {
  Rng rng(14);
  for (int s = 0; s < 20; ++s) {
    const HermitianQMatrix a = oracle::random_hermitian(2, rng);
    const HermitianQMatrix b = oracle::random_hermitian(3, rng);
    const auto [lhs, rhs] = block_diag_property_check(a, b);
    CHECK(rel(lhs, rhs) < 1e-9);
    const auto [l2, r2] = congruence_det_property(b, oracle::random_matrix(3, 3, rng));
    CHECK(rel(l2, r2) < 1e-9);
  }
}

TEST_CASE("complex determinant only for complex entries") {
  const HermitianQMatrix c(QMatrix{{1.0, Quaternion(0.0, 1.0, 0.0, 0.0)}, {Quaternion(0.0, -1.0, 0.0, 0.0), 3.0}});
  CHECK(complex_determinant(c) == doctest::Approx(2.0));
  CHECK(moore_det(c) == doctest::Approx(2.0));
  const HermitianQMatrix q(QMatrix{{1.0, Quaternion::j()}, {-Quaternion::j(), 3.0}});
  CHECK_THROWS_AS(complex_determinant(q), InvalidArgument);
}

TEST_CASE("Moore determinant refuses orders above the cap") {
  CHECK_THROWS_AS(moore_det(HermitianQMatrix(QMatrix::identity(kMaxMooreOrder + 1))), CapExceeded);
  CHECK(moore_det(HermitianQMatrix(QMatrix::identity(kMaxMooreOrder))) == doctest::Approx(1.0));
}

TEST_CASE("Hermitian construction rejects asymmetric input") {
  CHECK_THROWS_AS(HermitianQMatrix(QMatrix{{1.0, 2.0}, {3.0, 1.0}}), InvalidArgument);
  CHECK_THROWS_AS(HermitianQMatrix(QMatrix{{Quaternion::i(), 0.0}, {0.0, 1.0}}), InvalidArgument);
}

TEST_CASE("signature and congruence diagonalization") {
  Rng rng(15);
  for (int s = 0; s < 30; ++s) {
    const std::size_t n = 2 + static_cast<std::size_t>(s % 4);
    std::vector<Quaternion> d;
    Signature expect;
    for (std::size_t i = 0; i < n; ++i) {
      const int kind = (s + static_cast<int>(i)) % 3;
      d.push_back(kind == 0 ? 1.0 : kind == 1 ? -2.0 : 0.0);
      if (kind == 0) ++expect.n_plus;
      else if (kind == 1) ++expect.n_minus;
      else ++expect.n_zero;
    }
    const QMatrix u = oracle::random_matrix(n, n, rng);
    const HermitianQMatrix h(u.adjoint() * QMatrix::diagonal(d) * u, 1e-8);
    CHECK(signature(h) == expect);
    const Congruence c = congruence_diagonalize(h);
    CHECK(c.signature == expect);
    QMatrix target(n, n);
    for (std::size_t i = 0; i < n; ++i) target(i, i) = static_cast<double>(c.diagonal[i]);
    CHECK((c.u.adjoint() * h.matrix() * c.u - target).max_abs() < 1e-8);
    std::vector<int> order(static_cast<std::size_t>(expect.n_plus), 1);
    order.insert(order.end(), static_cast<std::size_t>(expect.n_minus), -1);
    order.insert(order.end(), static_cast<std::size_t>(expect.n_zero), 0);
    CHECK(c.diagonal == order);
  }
}

TEST_CASE("congruence diagonalization with a zero diagonal") {
  const HermitianQMatrix h(QMatrix{{0.0, Quaternion(0.0, 0.0, 1.0, 0.0)}, {Quaternion(0.0, 0.0, -1.0, 0.0), 0.0}});
  const Congruence c = congruence_diagonalize(h);
  CHECK(c.signature == Signature{1, 1, 0});
  CHECK(c.diagonal == std::vector<int>{1, -1});
}

TEST_CASE("quaternionic rank") {
  Rng rng(16);
  const QMatrix v = oracle::random_matrix(2, 4, rng);
  CHECK(rank(v.adjoint() * v) == 2);
  CHECK(rank(oracle::random_matrix(4, 4, rng)) == 4);
  CHECK(rank(QMatrix(3, 3)) == 0);
}

TEST_CASE("principal minors are ordered by size then lexicographically") {
  Rng rng(17);
  const HermitianQMatrix h = oracle::random_hermitian(3, rng);
  const auto pm = principal_minors(h);
  REQUIRE(pm.size() == 7);
  CHECK(pm[0].indices == std::vector<std::size_t>{0});
  CHECK(pm[3].indices == std::vector<std::size_t>{0, 1});
  CHECK(pm[5].indices == std::vector<std::size_t>{1, 2});
  CHECK(pm[6].indices == std::vector<std::size_t>{0, 1, 2});
  CHECK(pm[6].value == doctest::Approx(moore_det(h)));
}

TEST_CASE("semidefiniteness needs all principal minors, not only leading ones") {
  // Leading minors 0, 0 but the (2,2) entry is negative.
  const HermitianQMatrix h(QMatrix::diagonal(std::vector<Quaternion>{0.0, -1.0}));
  CHECK_FALSE(is_positive_semidefinite(h));
  CHECK_FALSE(is_positive_definite(h));
  const HermitianQMatrix p(QMatrix::diagonal(std::vector<Quaternion>{0.0, 1.0}));
  CHECK(is_positive_semidefinite(p));
  CHECK_FALSE(is_positive_definite(p));
  CHECK(is_positive_definite(HermitianQMatrix(QMatrix::diagonal(std::vector<Quaternion>{2.0, 1.0}))));
}

TEST_CASE("inverse reproduces the identity") {
  Rng rng(18);
  const QMatrix a = oracle::random_matrix(4, 4, rng);
  CHECK((a * inverse(a) - QMatrix::identity(4)).max_abs() < 1e-11);
  CHECK((inverse(a) * a - QMatrix::identity(4)).max_abs() < 1e-11);
  CHECK_THROWS_AS(inverse(QMatrix(2, 2)), PreconditionViolation);
}
