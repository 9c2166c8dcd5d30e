#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "qhyp/error.hpp"
#include "qhyp/gram.hpp"

using namespace qhyp;

TEST_CASE("Gram matrix of T0") {
  const auto t0 = oracle::t0();
  const SpecialGram g = gram_from_tuple(t0);
  CHECK(g(0, 1) == Quaternion(-2.0));
  CHECK(g(0, 2) == Quaternion(-1.0));
  CHECK(g(1, 2) == Quaternion(-1.0));
  CHECK(g(1, 0) == Quaternion(-2.0));
  CHECK(g(0, 0) == Quaternion(0.0));
}

TEST_CASE("normalized Gram matrix and G* of T0") {
  const auto nz = normalize(oracle::t0());
  CHECK(nz.gram(0, 1) == Quaternion(1.0));
  CHECK(nz.gram(0, 2) == Quaternion(1.0));
  CHECK(approx_equal(nz.gram(1, 2), Quaternion(-0.5), 1e-14));
  const AssociatedMatrix am = associated_matrix(nz.gram);
  REQUIRE(am.gstar.size() == 1);
  CHECK(approx_equal(am.gstar(0, 0), Quaternion(1.0), 1e-14));
  CHECK(signature(gram_from_tuple(oracle::t0()).matrix()) == Signature{2, 1, 0});
}

TEST_CASE("Gram entries are the inner products of the lifts") {
  Rng rng(31);
  const auto tuple = random_boundary_tuple(3, 5, rng, FormTag::H2);
  const SpecialGram g = gram_from_tuple(tuple);
  const QMatrix h = tuple.front().form().matrix().matrix();
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      if (i != j) CHECK(approx_equal(g(i, j), oracle::matrix_inner(h, tuple[j].coords(), tuple[i].coords()), 1e-12));
}

TEST_CASE("Gram matrix is invariant under isometries of fixed lifts") {
  Rng rng(32);
  for (int s = 0; s < 4; ++s) {
    const FormTag tag = static_cast<FormTag>(s);
    const auto tuple = random_boundary_tuple(2, 5, rng, tag);
    const QMatrix t = random_isometry(HermitianForm(tag, 2), rng);
    std::vector<LiftVector> moved;
    for (const auto& p : tuple) moved.push_back(p.transformed(t));
    const QMatrix g = gram_from_tuple(tuple).matrix().matrix();
    CHECK((gram_from_tuple(moved).matrix().matrix() - g).max_abs() < 1e-9 * g.max_abs());
  }
}

TEST_CASE("coincident points are rejected") {
  const auto t0 = oracle::t0();
  const std::vector<LiftVector> dup{t0[0], t0[1], t0[0].scaled(Quaternion(0.0, 0.0, 2.0, 0.0))};
  CHECK_THROWS_AS(gram_from_tuple(dup), CoincidentPoints);
  const HermitianForm f(FormTag::H1, 2);
  const std::vector<LiftVector> bad{t0[0], LiftVector(f, {0.0, 0.0, 1.0})};
  CHECK_THROWS_AS(gram_from_tuple(bad), PreconditionViolation);
}

TEST_CASE("normalization picks a unique representative") {
  Rng rng(33);
  for (int s = 0; s < 20; ++s) {
    const auto tuple = random_boundary_tuple(2 + s % 2, 4 + s % 3, rng);
    const QMatrix ref = normalize(tuple).gram.matrix().matrix();
    std::vector<LiftVector> relift{tuple.front()};
    for (std::size_t j = 1; j < tuple.size(); ++j) relift.push_back(tuple[j].scaled(random_gaussian_quaternion(rng)));
    CHECK((normalize(relift).gram.matrix().matrix() - ref).max_abs() < 1e-10 * std::max(1.0, ref.max_abs()));
  }
}

TEST_CASE("associated matrix block identity") {
  Rng rng(34);
  for (int s = 0; s < 30; ++s) {
    const auto tuple = random_boundary_tuple(2 + s % 3, 3 + s % 5, rng);
    const NormalizedGram g = normalize(tuple).gram;
    const AssociatedMatrix am = associated_matrix(g);
    const QMatrix lhs = am.transformer.adjoint() * g.matrix().matrix() * am.transformer;
    const QMatrix rhs = block_diag(QMatrix{{0.0, 1.0}, {1.0, 0.0}}, am.gstar.matrix());
    CHECK((lhs - rhs).max_abs() <= 1e-10 * std::max(1.0, g.matrix().matrix().max_abs()));
    // Singleton minors are -2 Re(g_2j).
    for (std::size_t j = 0; j < am.gstar.size(); ++j) CHECK(am.gstar(j, j).t == doctest::Approx(-2.0 * g(1, j + 2).t));
  }
}

TEST_CASE("genuine tuples give valid Grams with the boundary signature") {
  Rng rng(35);
  for (int n = 2; n <= 3; ++n)
    for (int m = 3; m <= 7; ++m) {
      const auto tuple = random_boundary_tuple(n, m, rng);
      const ValidityReport v = is_valid_boundary_gram(normalize(tuple).gram, n);
      CHECK(v.valid);
      CHECK(v.positive_semidefinite);
      CHECK(v.rank <= n - 1);
      const SignatureReport sr = signature_conditions(gram_from_tuple(tuple).matrix(), n, std::min(m, n + 1));
      CHECK(sr.boundary_conditions);
      CHECK(sr.signature.n_minus == 1);
      CHECK(sr.type == SubspaceType::hyperbolic);
    }
}

TEST_CASE("subspace type trichotomy") {
  const HermitianQMatrix neg(QMatrix::diagonal(std::vector<Quaternion>{1.0, -1.0}));
  CHECK(signature_conditions(neg, 2).type == SubspaceType::hyperbolic);
  const HermitianQMatrix pos(QMatrix::diagonal(std::vector<Quaternion>{1.0, 2.0}));
  CHECK(signature_conditions(pos, 2).type == SubspaceType::elliptic);
  const HermitianQMatrix deg(QMatrix::diagonal(std::vector<Quaternion>{1.0, 0.0}));
  CHECK(signature_conditions(deg, 2).type == SubspaceType::parabolic);
  // Dependent vectors spanning a positive line are elliptic, not parabolic.
  CHECK(signature_conditions(deg, 2, 1).type == SubspaceType::elliptic);
}

TEST_CASE("reconstruction reproduces the Gram matrix in every form") {
  Rng rng(36);
  for (int s = 0; s < 24; ++s) {
    const int n = 2 + s % 2;
    const int m = 3 + s % 5;
    const FormTag tag = static_cast<FormTag>(s % 4);
    const SpecialGram g = gram_from_tuple(random_boundary_tuple(n, m, rng));
    const auto pts = reconstruct_points(g.matrix(), n, tag);
    REQUIRE(pts.size() == static_cast<std::size_t>(m));
    for (const auto& p : pts) CHECK(p.form().tag() == tag);
    const QMatrix back = gram_from_tuple(pts).matrix().matrix();
    CHECK((back - g.matrix().matrix()).max_abs() <= 1e-8 * std::max(1.0, g.matrix().matrix().max_abs()));
  }
}

TEST_CASE("reconstruction rejects Grams without a unique negative direction") {
  const HermitianQMatrix g(QMatrix{{0.0, 1.0, 1.0}, {1.0, 0.0, 1.0}, {1.0, 1.0, 0.0}});
  // Signature (1, 2, 0): two negative directions.
  CHECK_THROWS_AS(reconstruct_points(g, 2), PreconditionViolation);
  // Rank too large for the ambient dimension.
  Rng rng(37);
  const SpecialGram big = gram_from_tuple(random_boundary_tuple(4, 6, rng));
  CHECK_THROWS_AS(reconstruct_points(big.matrix(), 2), PreconditionViolation);
}

TEST_CASE("strict and gauge congruence") {
  Rng rng(38);
  for (int s = 0; s < 12; ++s) {
    const int n = 2 + s % 2;
    const FormTag tag = static_cast<FormTag>(s % 4);
    const HermitianForm f(tag, n);
    const auto tuple = random_boundary_tuple(n, 5, rng, tag);
    const QMatrix t = random_isometry(f, rng);
    std::vector<LiftVector> moved;
    for (const auto& p : tuple) moved.push_back(p.transformed(t).scaled(random_gaussian_quaternion(rng)));
    CHECK(congruence_test(tuple, moved, CongruenceMode::gauge).congruent);

    // Composing with an isometry that restores the standard lift of p1 makes
    // the normalized Grams equal outright.
    std::vector<LiftVector> aligned;
    for (const auto& p : tuple) aligned.push_back(p.transformed(t));
    const QMatrix fix = isometry_sending(aligned.front(), standard_lift(aligned.front()));
    for (auto& p : aligned) p = p.transformed(fix);
    std::vector<LiftVector> src;
    const QMatrix fix0 = isometry_sending(tuple.front(), standard_lift(tuple.front()));
    for (const auto& p : tuple) src.push_back(p.transformed(fix0));
    CHECK(congruence_test(src, aligned, CongruenceMode::strict).congruent);

    const auto other = random_boundary_tuple(n, 5, rng, tag);
    CHECK_FALSE(congruence_test(tuple, other, CongruenceMode::gauge).congruent);
    CHECK_FALSE(congruence_test(tuple, other, CongruenceMode::strict).congruent);
  }
}

TEST_CASE("congruence of tuples of different sizes is false") {
  Rng rng(39);
  const auto a = random_boundary_tuple(2, 4, rng);
  const auto b = random_boundary_tuple(2, 5, rng);
  CHECK_FALSE(congruence_test(a, b, CongruenceMode::gauge).congruent);
}
