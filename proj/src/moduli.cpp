#include "qhyp/moduli.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "qhyp/error.hpp"

namespace qhyp {

HermitianQMatrix associated_matrix(const ModuliCoordinates& w) {
  return associated_matrix(gram_from_coordinates(w)).gstar;
}

namespace {

double minor_on(const HermitianQMatrix& gstar, const MinorIndexSet& set) {
  const auto k = static_cast<int>(gstar.size());
  std::vector<std::size_t> idx;
  int prev = 0;
  for (int i : set.indices) {
    if (i <= prev || i > k) throw InvalidArgument("minor index set must be increasing within 1..m-2");
    idx.push_back(static_cast<std::size_t>(i - 1));
    prev = i;
  }
  if (idx.empty()) throw InvalidArgument("empty minor index set");
  return moore_det(gstar.principal_submatrix(idx));
}

}  // namespace

double minor_function(const ModuliCoordinates& w, const MinorIndexSet& set) {
  return minor_on(associated_matrix(w), set);
}

MembershipReport is_member(const ModuliCoordinates& w, int n, const Tolerances& tol) {
  tol.validate();
  if (w.m < 3 || n < 2) throw InvalidArgument("membership needs m >= 3 and n >= 2");
  if (static_cast<std::size_t>(w.m - 2) > kMaxMinorOrder) throw CapExceeded("m exceeds the minor enumeration cap");
  const HermitianQMatrix gstar = associated_matrix(w);
  const double scale = gstar.matrix().max_abs();

  MembershipReport report;
  report.rank = rank(gstar.matrix(), tol);
  for (const PrincipalMinor& pm : principal_minors(gstar)) {
    const std::size_t s = pm.indices.size();
    MinorIndexSet set;
    for (std::size_t i : pm.indices) set.indices.push_back(static_cast<int>(i) + 1);
    if (static_cast<int>(s) <= n - 1) {
      if (pm.value < -minor_threshold(tol.tol, scale, s)) {
        report.violations.push_back({std::move(set), pm.value, Requirement::nonnegative});
      }
    } else if (std::abs(pm.value) > minor_threshold(tol.tol_eq, scale, s)) {
      report.violations.push_back({std::move(set), pm.value, Requirement::zero});
    }
  }
  report.member = report.violations.empty();
  return report;
}

std::vector<LiftVector> realize(const ModuliCoordinates& w, int n, FormTag form, const Tolerances& tol) {
  if (!is_member(w, n, tol).member) throw PreconditionViolation("coordinates are not in the moduli space");
  const NormalizedGram g = gram_from_coordinates(w);
  std::vector<LiftVector> points = reconstruct_points(g.matrix(), n, form, tol);
  // Reconstruction fixes the Gram matrix but not the lift of p1; move p1 onto
  // its standard lift by an isometry so normalization reproduces w.
  const QMatrix t = isometry_sending(points.front(), standard_lift(points.front(), tol), tol);
  for (LiftVector& p : points) p = p.transformed(t);
  return points;
}

std::int64_t expected_dimension(int n, int m) {
  if (n < 1 || m <= n + 1) throw InvalidArgument("dimension formula needs m > n + 1");
  auto binom = [](std::int64_t a, std::int64_t b) {
    if (b < 0 || b > a) return std::int64_t{0};
    std::int64_t c = 1;
    for (std::int64_t i = 1; i <= b; ++i) c = c * (a - b + i) / i;
    return c;
  };
  const std::int64_t mm = m;
  std::int64_t d = 2 * mm * mm - 6 * mm + 5;
  for (int i = 1; i <= m - n - 1; ++i) d -= binom(mm - 2, n - 1 + i);
  return d;
}

std::int64_t ambient_dimension(int m) {
  const std::int64_t d = static_cast<std::int64_t>(m) * (m - 3) / 2;
  return 4 * d + 4;
}

namespace {

std::vector<double> pack(const ModuliCoordinates& w) {
  std::vector<double> v;
  for (const auto* list : {&w.x2, &w.x3, &w.xk})
    for (const CrossRatio& x : *list) v.insert(v.end(), {x.value.t, x.value.x, x.value.y, x.value.z});
  v.insert(v.end(), {w.u.x(), w.u.y(), w.u.z(), w.cartan});
  return v;
}

ModuliCoordinates unpack(const ModuliCoordinates& base, const std::vector<double>& v) {
  ModuliCoordinates w = base;
  std::size_t e = 0;
  for (auto* list : {&w.x2, &w.x3, &w.xk})
    for (CrossRatio& x : *list) {
      x.value = Quaternion(v[e], v[e + 1], v[e + 2], v[e + 3]);
      e += 4;
    }
  const double nu = std::sqrt(v[e] * v[e] + v[e + 1] * v[e + 1] + v[e + 2] * v[e + 2]);
  w.u = UnitPureQuaternion(v[e] / nu, v[e + 1] / nu, v[e + 2] / nu);
  w.cartan = std::clamp(v[e + 3], 0.0, std::numbers::pi / 2);
  return w;
}

}  // namespace

int equality_jacobian_rank(const ModuliCoordinates& w, int n, double h, double rel_tol) {
  const HermitianQMatrix base = associated_matrix(w);
  std::vector<MinorIndexSet> sets;
  for (const PrincipalMinor& pm : principal_minors(base)) {
    if (static_cast<int>(pm.indices.size()) <= n - 1) continue;
    MinorIndexSet s;
    for (std::size_t i : pm.indices) s.indices.push_back(static_cast<int>(i) + 1);
    sets.push_back(std::move(s));
  }
  if (sets.empty()) return 0;

  const std::vector<double> x0 = pack(w);
  // r is the final slot, handled apart from the packed vector.
  const auto cols = static_cast<Eigen::Index>(x0.size() + 1);
  Eigen::MatrixXd jac(static_cast<Eigen::Index>(sets.size()), cols);
  auto eval = [&](const ModuliCoordinates& c, Eigen::Index col, double sign) {
    const HermitianQMatrix gs = associated_matrix(c);
    for (std::size_t r = 0; r < sets.size(); ++r) jac(static_cast<Eigen::Index>(r), col) += sign * minor_on(gs, sets[r]);
  };
  jac.setZero();
  for (std::size_t c = 0; c < x0.size(); ++c) {
    std::vector<double> xp = x0;
    std::vector<double> xm = x0;
    xp[c] += h;
    xm[c] -= h;
    eval(unpack(w, xp), static_cast<Eigen::Index>(c), 0.5 / h);
    eval(unpack(w, xm), static_cast<Eigen::Index>(c), -0.5 / h);
  }
  ModuliCoordinates wp = w;
  ModuliCoordinates wm = w;
  wp.r += h;
  wm.r -= h;
  eval(wp, cols - 1, 0.5 / h);
  eval(wm, cols - 1, -0.5 / h);

  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_tol * sv(0)) ++r;
  return r;
}

}  // namespace qhyp
