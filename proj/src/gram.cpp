#include "qhyp/gram.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "qhyp/error.hpp"

namespace qhyp {

SpecialGram::SpecialGram(HermitianQMatrix g, FormTag form, double tol) : g_(std::move(g)), form_(form) {
  const double scale = g_.matrix().max_abs();
  for (std::size_t i = 0; i < g_.size(); ++i) {
    if (norm(g_(i, i)) > tol * scale) throw InvalidArgument("special-Gram matrix must have a zero diagonal");
    for (std::size_t j = i + 1; j < g_.size(); ++j) {
      if (norm(g_(i, j)) <= 1e-8 * scale) {
        throw CoincidentPoints("points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
      }
    }
  }
}

NormalizedGram::NormalizedGram(SpecialGram g, double tol) : g_(std::move(g)) {
  for (std::size_t j = 1; j < g_.m(); ++j) {
    if (norm(g_(0, j) - Quaternion(1.0)) > tol * std::max(1.0, g_.matrix().matrix().max_abs())) {
      throw InvalidArgument("normalized Gram matrix needs g_1j = 1");
    }
  }
}

SpecialGram gram_from_tuple(std::span<const LiftVector> lifts, const Tolerances& tol) {
  if (lifts.empty()) throw InvalidArgument("empty tuple");
  const HermitianForm form = lifts.front().form();
  for (const auto& p : lifts) {
    if (!(p.form() == form)) throw InvalidArgument("tuple mixes Hermitian forms");
    if (!is_isotropic(p, tol)) throw PreconditionViolation("tuple contains a non-isotropic lift");
  }
  const std::size_t m = lifts.size();
  QMatrix g(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(i, j) = i == j ? Quaternion{} : inner(lifts[j], lifts[i]);
  return SpecialGram(HermitianQMatrix(g, 1e-8), form.tag(), tol.tol);
}

Normalization normalize(std::span<const LiftVector> lifts, const Tolerances& tol) {
  if (lifts.empty()) throw InvalidArgument("empty tuple");
  const LiftVector first = standard_lift(lifts.front(), tol);
  const std::size_t c = first.form().normalizing_coordinate(lifts.front().coords());
  const Quaternion mu = inv(lifts.front()[c]);

  std::vector<LiftVector> scaled{first};
  std::vector<Quaternion> scalars;
  for (std::size_t j = 1; j < lifts.size(); ++j) {
    const Quaternion pj1 = inner(lifts[j], first);
    if (norm(pj1) == 0.0) throw CoincidentPoints("point " + std::to_string(j + 1) + " coincides with point 1");
    const Quaternion lambda = inv(pj1);
    scalars.push_back(lambda);
    scaled.push_back(lifts[j].scaled(lambda));
  }
  SpecialGram g = gram_from_tuple(scaled, tol);
  // First row is 1 up to rounding; store it exactly.
  QMatrix exact = g.matrix().matrix();
  for (std::size_t j = 1; j < exact.rows(); ++j) {
    exact(0, j) = 1.0;
    exact(j, 0) = 1.0;
  }
  return {NormalizedGram(SpecialGram(HermitianQMatrix(exact), g.form(), tol.tol), tol.tol), std::move(scalars), mu};
}

AssociatedMatrix associated_matrix(const NormalizedGram& g) {
  const std::size_t m = g.m();
  if (m <= 2) throw InvalidArgument("associated matrix needs m > 2");
  const std::size_t k = m - 2;
  QMatrix gs(k, k);
  for (std::size_t s = 0; s < k; ++s) {
    const Quaternion g2s = g(1, s + 2);
    gs(s, s) = Quaternion(-2.0 * g2s.t);
    for (std::size_t t = s + 1; t < k; ++t) {
      gs(s, t) = -conj(g2s) - g(1, t + 2) + g(s + 2, t + 2);
      gs(t, s) = conj(gs(s, t));
    }
  }

  QMatrix t = QMatrix::identity(m);
  for (std::size_t j = 2; j < m; ++j) {
    t(0, j) = -g(1, j);
    t(1, j) = -1.0;
  }

  AssociatedMatrix out{HermitianQMatrix(gs), t};
  const QMatrix lhs = t.adjoint() * g.matrix().matrix() * t;
  const QMatrix rhs = block_diag(QMatrix{{0.0, 1.0}, {1.0, 0.0}}, gs);
  const double scale = std::max(1.0, g.matrix().matrix().max_abs());
  if ((lhs - rhs).max_abs() > 1e-10 * scale * scale * static_cast<double>(m)) {
    throw NumericalFailure("T* G T does not reduce to blockdiag(J, G*)");
  }
  return out;
}

ValidityReport is_valid_boundary_gram(const NormalizedGram& g, int n, const Tolerances& tol) {
  const AssociatedMatrix am = associated_matrix(g);
  ValidityReport report;
  report.rank = rank(am.gstar.matrix(), tol);
  const double scale = am.gstar.matrix().max_abs();
  if (scale > 0.0) {
    for (auto& pm : principal_minors(am.gstar)) {
      if (pm.value < -minor_threshold(tol.tol, scale, pm.indices.size())) report.violations.push_back(std::move(pm));
    }
  }
  report.positive_semidefinite = min_eigenvalue(am.gstar) >= -tol.tol * am.gstar.matrix().frobenius_norm();
  if (report.positive_semidefinite != report.violations.empty()) {
    throw NumericalFailure("validity: principal minors and spectrum of G* disagree");
  }
  report.valid = report.rank <= n - 1 && report.violations.empty();
  return report;
}

std::string to_string(SubspaceType t) {
  switch (t) {
    case SubspaceType::hyperbolic: return "hyperbolic";
    case SubspaceType::elliptic: return "elliptic";
    case SubspaceType::parabolic: return "parabolic";
  }
  return "hyperbolic";
}

SignatureReport signature_conditions(const HermitianQMatrix& g, int n, std::optional<int> span_dim,
                                     const Tolerances& tol) {
  SignatureReport r;
  r.signature = signature(g, tol);
  const int m = static_cast<int>(g.size());
  const int dependent = m - span_dim.value_or(m);
  const int form_zero = r.signature.n_zero - dependent;
  if (r.signature.n_minus >= 1 && form_zero <= 0) r.type = SubspaceType::hyperbolic;
  else if (form_zero <= 0) r.type = SubspaceType::elliptic;
  else r.type = SubspaceType::parabolic;
  r.boundary_conditions = r.signature.n_minus == 1 && r.signature.n_plus >= 1 && r.signature.n_plus <= n &&
                          r.signature.n_plus + 1 + r.signature.n_zero == m;
  return r;
}

namespace {

QMatrix embedding_matrix(const Congruence& c, int n, bool as_printed) {
  const auto d = static_cast<std::size_t>(n) + 1;
  const auto np = static_cast<std::size_t>(c.signature.n_plus);
  QMatrix a(d, c.diagonal.size());
  for (std::size_t i = 0; i < np; ++i) a(i, i) = 1.0;
  if (as_printed) a(np, np) = -1.0;
  else a(d - 1, np) = 1.0;
  return a;
}

}  // namespace

std::vector<LiftVector> reconstruct_points(const HermitianQMatrix& g, int n, FormTag tag, const Tolerances& tol) {
  if (n < 1) throw InvalidArgument("dimension must be positive");
  const std::size_t m = g.size();
  const Congruence c = congruence_diagonalize(g, tol);
  if (c.signature.n_minus != 1) throw PreconditionViolation("Gram matrix must have exactly one negative direction");
  if (c.signature.n_plus > n) throw PreconditionViolation("Gram matrix rank exceeds n + 1");

  // Audit A* H1 A = B: the embedding as printed places the -1 in row n_+ + 1,
  // which only meets the negative coordinate of H1 when n_+ = n.
  const HermitianForm h1(FormTag::H1, n);
  const QMatrix h1m = h1.matrix().matrix();
  QMatrix b(m, m);
  for (std::size_t i = 0; i < m; ++i) b(i, i) = static_cast<double>(c.diagonal[i]);
  QMatrix a = embedding_matrix(c, n, true);
  if ((a.adjoint() * h1m * a - b).max_abs() > 1e-12) {
    a = embedding_matrix(c, n, false);
    if ((a.adjoint() * h1m * a - b).max_abs() > 1e-12) throw NumericalFailure("embedding audit failed");
  }

  QMatrix p = a * inverse(c.u);
  const HermitianForm form(tag, n);
  if (tag != FormTag::H1) p = model_change_from_h1(form) * p;

  std::vector<LiftVector> out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) out.emplace_back(form, p.column(i));

  double residual = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) residual = std::max(residual, norm(inner(out[j], out[i]) - g(i, j)));
  if (residual > 1e-6 * std::max(1.0, g.matrix().max_abs())) {
    throw NumericalFailure("reconstructed points do not reproduce the Gram matrix");
  }
  return out;
}

namespace {

struct GaugeProblem {
  std::vector<Quaternion> source;
  std::vector<Quaternion> target;
  double scale = 1.0;

  double objective(const Quaternion& v) const {
    double f = 0.0;
    const Quaternion vb = conj(v);
    for (std::size_t e = 0; e < source.size(); ++e) f += norm2(scale * (vb * source[e] * v) - target[e]);
    return f;
  }
};

Quaternion axis_exp(int axis, double angle) {
  Quaternion q(std::cos(angle));
  const double s = std::sin(angle);
  if (axis == 0) q.x = s;
  else if (axis == 1) q.y = s;
  else q.z = s;
  return q;
}

double minimize_gauge(const GaugeProblem& prob) {
  constexpr int kAxis = 32;
  constexpr int kAngle = 16;
  constexpr int kRefine = 20;
  const double pi = std::numbers::pi;

  Quaternion best(1.0);
  double best_f = prob.objective(best);
  for (int a = 0; a < kAxis; ++a) {
    const double polar_angle = pi * (a + 0.5) / kAxis;
    for (int b = 0; b < kAxis; ++b) {
      const double azimuth = 2.0 * pi * b / kAxis;
      const UnitPureQuaternion u(std::sin(polar_angle) * std::cos(azimuth), std::sin(polar_angle) * std::sin(azimuth),
                                 std::cos(polar_angle));
      for (int c = 0; c < kAngle; ++c) {
        const Quaternion v = exp_form(1.0, u, pi * c / kAngle);
        const double f = prob.objective(v);
        if (f < best_f) {
          best_f = f;
          best = v;
        }
      }
    }
  }

  // Derivative-free refinement: parabolic line search along each body axis.
  double h = pi / kAxis;
  for (int step = 0; step < kRefine; ++step) {
    for (int axis = 0; axis < 3; ++axis) {
      const double fm = prob.objective(best * axis_exp(axis, -h));
      const double fp = prob.objective(best * axis_exp(axis, h));
      const double curv = fm - 2.0 * best_f + fp;
      double delta = 0.0;
      if (curv > 0.0) delta = std::clamp(0.5 * h * (fm - fp) / curv, -2.0 * h, 2.0 * h);
      else delta = fm < fp ? -h : h;
      const Quaternion cand = unit(best * axis_exp(axis, delta));
      const double fc = prob.objective(cand);
      if (fc < best_f) {
        best_f = fc;
        best = cand;
      }
    }
    h *= 0.5;
  }

  // Exact polish: the real parts are gauge invariant and the pure parts are
  // rotated, so the optimum is the Davenport eigenvector of the attitude
  // profile matrix. Either sign convention may apply; keep the better one.
  Eigen::Matrix3d bmat = Eigen::Matrix3d::Zero();
  for (std::size_t e = 0; e < prob.source.size(); ++e) {
    const Eigen::Vector3d a(prob.source[e].x, prob.source[e].y, prob.source[e].z);
    const Eigen::Vector3d b(prob.target[e].x, prob.target[e].y, prob.target[e].z);
    bmat += b * a.transpose();
  }
  const double sigma = bmat.trace();
  Eigen::Matrix4d k = Eigen::Matrix4d::Zero();
  k.topLeftCorner<3, 3>() = bmat + bmat.transpose() - sigma * Eigen::Matrix3d::Identity();
  const Eigen::Vector3d z(bmat(1, 2) - bmat(2, 1), bmat(2, 0) - bmat(0, 2), bmat(0, 1) - bmat(1, 0));
  k.topRightCorner<3, 1>() = z;
  k.bottomLeftCorner<1, 3>() = z.transpose();
  k(3, 3) = sigma;
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(k);
  const Eigen::Vector4d q = es.eigenvectors().col(3);
  for (const Quaternion& cand : {Quaternion(q(3), q(0), q(1), q(2)), Quaternion(q(3), -q(0), -q(1), -q(2))}) {
    const double fc = prob.objective(unit(cand));
    if (fc < best_f) best_f = fc;
  }
  return best_f;
}

}  // namespace

CongruenceResult congruence_test(std::span<const LiftVector> a, std::span<const LiftVector> b, CongruenceMode mode,
                                 double threshold, const Tolerances& tol) {
  if (a.size() != b.size()) return {false, std::numeric_limits<double>::infinity()};
  if (a.empty()) return {true, 0.0};
  if (!(a.front().form().n() == b.front().form().n())) return {false, std::numeric_limits<double>::infinity()};
  const NormalizedGram ga = normalize(a, tol).gram;
  const NormalizedGram gb = normalize(b, tol).gram;
  const double ref = ga.matrix().matrix().frobenius_norm();
  const double strict = (ga.matrix().matrix() - gb.matrix().matrix()).frobenius_norm();
  if (mode == CongruenceMode::strict || strict <= threshold * ref) return {strict <= threshold * ref, strict};

  GaugeProblem prob;
  double sum_a = 0.0;
  double sum_b = 0.0;
  for (std::size_t i = 1; i < ga.m(); ++i)
    for (std::size_t j = i + 1; j < ga.m(); ++j) {
      prob.source.push_back(ga(i, j));
      prob.target.push_back(gb(i, j));
      sum_a += norm(ga(i, j));
      sum_b += norm(gb(i, j));
    }
  if (prob.source.empty()) return {true, 0.0};
  prob.scale = sum_b / sum_a;
  // Both triangles of the lower block contribute.
  const double disc = std::sqrt(2.0 * minimize_gauge(prob));
  return {disc <= threshold * ref, disc};
}

}  // namespace qhyp
