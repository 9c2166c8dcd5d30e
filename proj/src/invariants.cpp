#include "qhyp/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qhyp/error.hpp"

namespace qhyp {

double cartan_angle(const LiftVector& p1, const LiftVector& p2, const LiftVector& p3, const Tolerances& tol) {
  for (const LiftVector* p : {&p1, &p2, &p3}) {
    if (!is_isotropic(*p, tol)) throw PreconditionViolation("Cartan angle needs isotropic points");
  }
  // Ordered so that rescaling lifts conjugates the product.
  const Quaternion triple = inner(p2, p1) * inner(p3, p2) * inner(p1, p3);
  const double mod = norm(triple);
  if (mod == 0.0) throw CoincidentPoints("Cartan angle of coincident points");
  const double c = -triple.t / mod;
  if (c < -tol.tol) throw PreconditionViolation("Re(-<p1,p2,p3>) is negative");
  return std::acos(std::clamp(c, 0.0, 1.0));
}

Quaternion cross_ratio(const LiftVector& p1, const LiftVector& p2, const LiftVector& p3, const LiftVector& p4) {
  const Quaternion a = inner(p3, p1);
  const Quaternion b = inner(p3, p2);
  const Quaternion c = inner(p4, p2);
  const Quaternion d = inner(p4, p1);
  if (norm(b) == 0.0 || norm(d) == 0.0 || norm(a) == 0.0 || norm(c) == 0.0) {
    throw CoincidentPoints("cross-ratio of coincident points");
  }
  return a * inv(b) * c * inv(d);
}

void ModuliCoordinates::validate() const {
  if (m < 3) throw InvalidArgument("coordinates need m >= 3");
  if (n < 1) throw InvalidArgument("coordinates need n >= 1");
  if (!(r > 0.0) || !std::isfinite(r)) throw InvalidArgument("r must be positive");
  if (!(cartan >= 0.0 && cartan <= std::numbers::pi / 2)) throw InvalidArgument("Cartan angle outside [0, pi/2]");
  const auto extra = static_cast<std::size_t>(m - 3);
  if (x2.size() != extra || x3.size() != extra || xk.size() != extra * (extra - 1) / 2) {
    throw InvalidArgument("cross-ratio lists do not match m");
  }
  auto check = [](const CrossRatio& x, CrossRatio::Kind kind, int k, int j) {
    if (x.kind != kind || x.k != k || x.j != j) throw InvalidArgument("cross-ratio labels out of order");
    if (norm(x.value) == 0.0 || !std::isfinite(norm(x.value))) throw InvalidArgument("cross-ratios must be nonzero");
  };
  std::size_t e = 0;
  for (int j = 4; j <= m; ++j) {
    check(x2[static_cast<std::size_t>(j - 4)], CrossRatio::Kind::X2, 2, j);
    check(x3[static_cast<std::size_t>(j - 4)], CrossRatio::Kind::X3, 3, j);
  }
  for (int k = 4; k <= m; ++k)
    for (int j = k + 1; j <= m; ++j) check(xk[e++], CrossRatio::Kind::Xk, k, j);
}

ModuliCoordinates coordinates(const NormalizedGram& g, int n, const Tolerances& tol) {
  const int m = static_cast<int>(g.m());
  if (m < 3) throw InvalidArgument("coordinates need m >= 3");
  ModuliCoordinates w;
  w.m = m;
  w.n = n;

  const Quaternion g23 = g(1, 2);
  const Quaternion minus_bar = -1.0 * conj(g23);
  if (minus_bar.t < -tol.tol * norm(g23)) throw PreconditionViolation("Re(-conj(g23)) is negative");
  const PolarForm pf = polar(minus_bar);
  w.r = pf.modulus;
  w.u = pf.axis;
  w.cartan = std::min(pf.angle, std::numbers::pi / 2);

  const Quaternion g23_inv = inv(g23);
  const Quaternion g23_bar_inv = inv(conj(g23));
  for (int j = 4; j <= m; ++j) {
    const auto jj = static_cast<std::size_t>(j - 1);
    w.x2.push_back({CrossRatio::Kind::X2, 2, j, g23_inv * g(1, jj)});
    w.x3.push_back({CrossRatio::Kind::X3, 3, j, g23_bar_inv * g(2, jj)});
  }
  for (int k = 4; k <= m; ++k) {
    const auto kk = static_cast<std::size_t>(k - 1);
    const Quaternion g2k_bar_inv = inv(conj(g(1, kk)));
    for (int j = k + 1; j <= m; ++j) {
      w.xk.push_back({CrossRatio::Kind::Xk, k, j, g2k_bar_inv * g(kk, static_cast<std::size_t>(j - 1))});
    }
  }
  return w;
}

ModuliCoordinates coordinates(std::span<const LiftVector> tuple, const Tolerances& tol) {
  if (tuple.size() < 3) throw InvalidArgument("coordinates need m >= 3");
  return coordinates(normalize(tuple, tol).gram, tuple.front().form().n(), tol);
}

NormalizedGram gram_from_coordinates(const ModuliCoordinates& w) {
  w.validate();
  const auto m = static_cast<std::size_t>(w.m);
  QMatrix g(m, m);
  for (std::size_t j = 1; j < m; ++j) g(0, j) = 1.0;

  const Quaternion e_minus = exp_form(1.0, w.u, -w.cartan);
  const Quaternion e_plus = exp_form(1.0, w.u, w.cartan);
  const Quaternion g23 = -w.r * e_minus;
  g(1, 2) = g23;
  for (std::size_t e = 0; e < w.x2.size(); ++e) {
    const std::size_t j = static_cast<std::size_t>(w.x2[e].j) - 1;
    g(1, j) = g23 * w.x2[e].value;
    g(2, j) = -w.r * e_plus * w.x3[e].value;
  }
  for (const CrossRatio& x : w.xk) {
    const auto k = static_cast<std::size_t>(x.k - 1);
    const auto j = static_cast<std::size_t>(x.j - 1);
    const Quaternion x2k = w.x2[k - 3].value;
    g(k, j) = -w.r * conj(x2k) * e_plus * x.value;
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) g(j, i) = conj(g(i, j));
  return NormalizedGram(SpecialGram(HermitianQMatrix(g), FormTag::H1));
}

double coordinate_distance(const ModuliCoordinates& a, const ModuliCoordinates& b) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (a.m != b.m || a.x2.size() != b.x2.size() || a.x3.size() != b.x3.size() || a.xk.size() != b.xk.size()) {
    return inf;
  }
  auto rel = [](const Quaternion& p, const Quaternion& q) { return norm(p - q) / std::max(1.0, norm(p)); };
  double d = 0.0;
  auto lists = {std::pair{&a.x2, &b.x2}, std::pair{&a.x3, &b.x3}, std::pair{&a.xk, &b.xk}};
  for (const auto& [la, lb] : lists) {
    for (std::size_t e = 0; e < la->size(); ++e) {
      if ((*la)[e].k != (*lb)[e].k || (*la)[e].j != (*lb)[e].j) return inf;
      d = std::max(d, rel((*la)[e].value, (*lb)[e].value));
    }
  }
  d = std::max(d, std::abs(a.cartan - b.cartan));
  d = std::max(d, std::abs(a.r - b.r) / std::max(1.0, a.r));
  d = std::max(d, std::sin(std::max(a.cartan, b.cartan)) * norm(a.u.quaternion() - b.u.quaternion()));
  return d;
}

}  // namespace qhyp
