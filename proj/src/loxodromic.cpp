#include "qhyp/loxodromic.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "qhyp/error.hpp"

namespace qhyp {

namespace {

using cd = std::complex<double>;

struct Spectrum {
  Eigen::VectorXcd values;
  Eigen::MatrixXcd vectors;
  /// Indices sorted by decreasing modulus.
  std::vector<Eigen::Index> order;
};

Spectrum spectrum(const QMatrix& m) {
  const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(complex_adjoint(m));
  if (es.info() != Eigen::Success) throw NumericalFailure("eigen decomposition of chi(M) failed");
  Spectrum s{es.eigenvalues(), es.eigenvectors(), {}};
  for (Eigen::Index i = 0; i < s.values.size(); ++i) s.order.push_back(i);
  std::sort(s.order.begin(), s.order.end(),
            [&](Eigen::Index a, Eigen::Index b) { return std::abs(s.values(a)) > std::abs(s.values(b)); });
  return s;
}

// chi(M) u = u lambda with u = [u1; u2] gives M v = v lambda for
// v = u1 + (-conj(u2)) j.
LiftVector fold(const Eigen::VectorXcd& u, const HermitianForm& form) {
  const Eigen::Index n = u.size() / 2;
  QVector v(static_cast<std::size_t>(n));
  for (Eigen::Index a = 0; a < n; ++a) {
    const cd u1 = u(a);
    const cd u2 = -std::conj(u(n + a));
    v[static_cast<std::size_t>(a)] = Quaternion(u1.real(), u1.imag(), u2.real(), u2.imag());
  }
  return LiftVector(form, v);
}

// |<x, p>| / (|x| |p|) in the Euclidean quaternionic product: 1 on the line.
double line_alignment(const QVector& x, const QVector& p) {
  Quaternion s;
  for (std::size_t i = 0; i < x.size(); ++i) s += conj(p[i]) * x[i];
  return norm(s) / (euclidean_norm(x) * euclidean_norm(p));
}

}  // namespace

void LoxodromicClass::validate(double tol) const {
  if (!(r > 0.0) || !std::isfinite(r)) throw InvalidArgument("loxodromic r must be positive");
  if (std::abs(r - 1.0) <= tol) throw InvalidArgument("loxodromic r must differ from 1");
  const double pi = std::numbers::pi;
  if (!(beta >= 0.0 && beta <= pi) || !(theta >= 0.0 && theta <= pi)) {
    throw InvalidArgument("loxodromic angles must lie in [0, pi]");
  }
}

HermitianForm loxodromic_form() { return HermitianForm(FormTag::H4, 2); }

QMatrix normal_form(const LoxodromicClass& c) {
  c.validate();
  QMatrix l(3, 3);
  l(0, 0) = Quaternion(c.r * std::cos(c.beta), c.r * std::sin(c.beta), 0.0, 0.0);
  l(1, 1) = Quaternion(std::cos(c.beta) / c.r, std::sin(c.beta) / c.r, 0.0, 0.0);
  l(2, 2) = Quaternion(std::cos(c.theta), std::sin(c.theta), 0.0, 0.0);
  const QMatrix h = loxodromic_form().matrix().matrix();
  if ((l.adjoint() * h * l - h).max_abs() > 1e-12) throw NumericalFailure("normal form is not an H4 isometry");
  return l;
}

std::optional<LoxodromicClass> classify(const QMatrix& m, const Tolerances& tol) {
  const HermitianForm form = loxodromic_form();
  if (m.rows() != 3 || m.cols() != 3 || !is_isometry(m, form, tol)) {
    throw PreconditionViolation("classify needs an isometry of the H4 form in dimension 2");
  }
  const Spectrum s = spectrum(m);
  std::array<double, 6> mod{};
  for (std::size_t i = 0; i < 6; ++i) mod[i] = std::abs(s.values(s.order[i]));
  const double rho = std::sqrt(mod[0] * mod[1]);
  if (!(rho > 1.0 + tol.tol)) return std::nullopt;
  const double band = 1e-6 * rho;
  const bool pattern = std::abs(mod[0] - mod[1]) <= band && std::abs(mod[2] - 1.0) <= band &&
                       std::abs(mod[3] - 1.0) <= band && std::abs(mod[4] * rho - 1.0) <= band &&
                       std::abs(mod[5] * rho - 1.0) <= band;
  if (!pattern) return std::nullopt;

  auto folded_arg = [&](std::size_t a, std::size_t b) {
    return 0.5 * (std::abs(std::arg(s.values(s.order[a]))) + std::abs(std::arg(s.values(s.order[b]))));
  };
  return LoxodromicClass{rho, folded_arg(0, 1), folded_arg(2, 3)};
}

FixedPoints fixed_points(const QMatrix& m, const Tolerances& tol) {
  const std::optional<LoxodromicClass> cls = classify(m, tol);
  if (!cls) throw PreconditionViolation("fixed points need a loxodromic element");
  const HermitianForm form = loxodromic_form();
  const Spectrum s = spectrum(m);
  FixedPoints fp{fold(s.vectors.col(s.order[0]), form), fold(s.vectors.col(s.order[5]), form)};
  for (const LiftVector* p : {&fp.attracting, &fp.repelling}) {
    const QVector mp = m * p->coords();
    if (1.0 - line_alignment(mp, p->coords()) > 1e-9) throw NumericalFailure("eigenvector fold is not fixed by M");
  }

  // Power iteration from a fixed negative vector.
  QVector x{Quaternion(1.0, 0.1, 0.0, 0.0), Quaternion(1.0, 0.0, 0.2, 0.0), Quaternion(0.0, 0.0, 0.0, 0.3)};
  const double iters = std::clamp(std::ceil(30.0 / std::log(cls->r)), 50.0, 1e5);
  for (int k = 0; k < static_cast<int>(iters); ++k) {
    x = m * x;
    x = scale_right(x, Quaternion(1.0 / euclidean_norm(x)));
  }
  if (line_alignment(x, fp.repelling.coords()) > line_alignment(x, fp.attracting.coords())) {
    std::swap(fp.attracting, fp.repelling);
  }
  return fp;
}

GeneratorData analyze_generator(const QMatrix& m, const Tolerances& tol) {
  const std::optional<LoxodromicClass> cls = classify(m, tol);
  if (!cls) throw PreconditionViolation("generator is not loxodromic");
  FixedPoints fp = fixed_points(m, tol);
  return {m, *cls, std::move(fp.attracting), std::move(fp.repelling)};
}

RepCoordinates rep_coordinates(std::span<const QMatrix> generators, const Tolerances& tol) {
  if (generators.empty()) throw InvalidArgument("rep coordinates need at least one generator");
  RepCoordinates out;
  for (const QMatrix& g : generators) {
    GeneratorData d = analyze_generator(g, tol);
    out.points.push_back(std::move(d.p_plus));
    out.points.push_back(std::move(d.p_minus));
    out.radii.push_back(d.cls.r);
    out.angles.push_back(d.cls.beta);
    out.angles.push_back(d.cls.theta);
  }
  // Distinctness: SpecialGram rejects vanishing off-diagonal entries.
  const SpecialGram g = gram_from_tuple(out.points, tol);
  (void)g;
  if (out.points.size() >= 3) out.points_part = coordinates(out.points, tol);
  return out;
}

QMatrix random_loxodromic(Rng& rng, LoxodromicClass* cls) {
  std::uniform_real_distribution<double> radius(1.0, 10.0);
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
  LoxodromicClass c{0.0, angle(rng), angle(rng)};
  do c.r = radius(rng);
  while (c.r <= 1.0 + 1e-3);
  const QMatrix q = random_isometry(loxodromic_form(), rng);
  if (cls) *cls = c;
  return q * normal_form(c) * inverse(q);
}

}  // namespace qhyp
