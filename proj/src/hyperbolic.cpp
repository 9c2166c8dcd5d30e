#include "qhyp/hyperbolic.hpp"

#include <algorithm>
#include <cmath>

#include "qhyp/error.hpp"

namespace qhyp {

std::string to_string(FormTag tag) {
  switch (tag) {
    case FormTag::H1: return "H1";
    case FormTag::H2: return "H2";
    case FormTag::H3: return "H3";
    case FormTag::H4: return "H4";
  }
  return "H1";
}

FormTag parse_form_tag(std::string_view s) {
  if (s == "H1") return FormTag::H1;
  if (s == "H2") return FormTag::H2;
  if (s == "H3") return FormTag::H3;
  if (s == "H4") return FormTag::H4;
  throw InvalidArgument("unknown Hermitian form '" + std::string(s) + "'");
}

HermitianForm::HermitianForm(FormTag tag, int n) : tag_(tag), n_(n) {
  if (n < 1) throw InvalidArgument("form dimension must be >= 1");
}

HermitianQMatrix HermitianForm::matrix() const {
  const std::size_t d = dim();
  QMatrix h(d, d);
  const std::size_t last = d - 1;
  switch (tag_) {
    case FormTag::H1:
      for (std::size_t i = 0; i < last; ++i) h(i, i) = 1.0;
      h(last, last) = -1.0;
      break;
    case FormTag::H2:
      for (std::size_t i = 1; i < last; ++i) h(i, i) = 1.0;
      h(0, last) = 1.0;
      h(last, 0) = 1.0;
      break;
    case FormTag::H3:
      h(0, 0) = -1.0;
      for (std::size_t i = 1; i < d; ++i) h(i, i) = 1.0;
      break;
    case FormTag::H4:
      h(0, 1) = -1.0;
      h(1, 0) = -1.0;
      for (std::size_t i = 2; i < d; ++i) h(i, i) = 1.0;
      break;
  }
  return HermitianQMatrix(h);
}

Quaternion HermitianForm::inner(const QVector& z, const QVector& w) const {
  const std::size_t d = dim();
  if (z.size() != d || w.size() != d) throw InvalidArgument("vector dimension does not match the form");
  const std::size_t last = d - 1;
  Quaternion s;
  switch (tag_) {
    case FormTag::H1:
      for (std::size_t a = 0; a < last; ++a) s += conj(w[a]) * z[a];
      s -= conj(w[last]) * z[last];
      break;
    case FormTag::H2:
      s += conj(w[0]) * z[last] + conj(w[last]) * z[0];
      for (std::size_t a = 1; a < last; ++a) s += conj(w[a]) * z[a];
      break;
    case FormTag::H3:
      s -= conj(w[0]) * z[0];
      for (std::size_t a = 1; a < d; ++a) s += conj(w[a]) * z[a];
      break;
    case FormTag::H4:
      s -= conj(w[0]) * z[1] + conj(w[1]) * z[0];
      for (std::size_t a = 2; a < d; ++a) s += conj(w[a]) * z[a];
      break;
  }
  return s;
}

std::size_t HermitianForm::normalizing_coordinate(const QVector& z) const {
  const double small = 1e-8 * euclidean_norm(z);
  switch (tag_) {
    case FormTag::H1: return dim() - 1;
    case FormTag::H3: return 0;
    case FormTag::H2: return norm(z[dim() - 1]) > small ? dim() - 1 : 0;
    case FormTag::H4: return norm(z[1]) > small ? 1 : 0;
  }
  return dim() - 1;
}

LiftVector::LiftVector(HermitianForm form, QVector coords) : form_(form), coords_(std::move(coords)) {
  if (coords_.size() != form_.dim()) throw InvalidArgument("lift has the wrong number of coordinates");
  for (const auto& q : coords_)
    if (!std::isfinite(norm2(q))) throw InvalidArgument("lift has non-finite coordinates");
}

LiftVector LiftVector::scaled(const Quaternion& lambda) const { return {form_, scale_right(coords_, lambda)}; }

LiftVector LiftVector::transformed(const QMatrix& t) const { return {form_, t * coords_}; }

Quaternion inner(const LiftVector& z, const LiftVector& w) {
  if (!(z.form() == w.form())) throw InvalidArgument("inner product of vectors under different forms");
  return z.form().inner(z.coords(), w.coords());
}

VectorClass classify(const LiftVector& z, const Tolerances& tol) {
  const double n2 = euclidean_norm(z.coords());
  if (n2 == 0.0) throw InvalidArgument("zero vector has no class");
  const double v = z.form().self_inner(z.coords());
  const double band = tol.tol * n2 * n2;
  if (v < -band) return VectorClass::negative;
  if (v > band) return VectorClass::positive;
  return VectorClass::isotropic;
}

bool is_isotropic(const LiftVector& z, const Tolerances& tol) { return classify(z, tol) == VectorClass::isotropic; }

LiftVector standard_lift(const LiftVector& z, const Tolerances& tol) {
  if (!is_isotropic(z, tol)) throw PreconditionViolation("standard lift of a non-isotropic vector");
  const std::size_t c = z.form().normalizing_coordinate(z.coords());
  if (norm(z[c]) == 0.0) throw PreconditionViolation("normalizing coordinate vanishes");
  return z.scaled(inv(z[c]));
}

double distance(const LiftVector& z, const LiftVector& w, const Tolerances& tol) {
  if (classify(z, tol) != VectorClass::negative || classify(w, tol) != VectorClass::negative) {
    throw PreconditionViolation("distance requires negative vectors");
  }
  const double zw = norm2(inner(z, w));
  const double ratio = zw / (z.form().self_inner(z.coords()) * w.form().self_inner(w.coords()));
  if (ratio < 1.0 - 1e-8) throw NumericalFailure("cosh^2 argument below 1; inputs misclassified");
  return 2.0 * std::acosh(std::sqrt(std::max(1.0, ratio)));
}

bool is_isometry(const QMatrix& m, const HermitianForm& form, const Tolerances& tol) {
  if (!m.is_square() || m.rows() != form.dim()) return false;
  const QMatrix h = form.matrix().matrix();
  const QMatrix residual = m.adjoint() * h * m - h;
  return residual.frobenius_norm() <= tol.tol * h.frobenius_norm();
}

Quaternion random_gaussian_quaternion(Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  const double t = g(rng);
  const double x = g(rng);
  const double y = g(rng);
  const double z = g(rng);
  return {t, x, y, z};
}

Quaternion random_unit_quaternion(Rng& rng) {
  for (;;) {
    const Quaternion q = random_gaussian_quaternion(rng);
    if (norm(q) > 1e-6) return unit(q);
  }
}

namespace {

QVector random_unit_vector(std::size_t len, Rng& rng) {
  for (;;) {
    QVector v(len);
    for (auto& q : v) q = random_gaussian_quaternion(rng);
    const double n = euclidean_norm(v);
    if (n > 1e-6) return scale_right(v, 1.0 / n);
  }
}

// v - f <v, f> for a unit positive f, or v + f <v, f> for a unit negative f.
QVector project_out(const HermitianForm& form, const QVector& v, const QVector& f, double f_self) {
  const Quaternion c = form.inner(v, f);
  return add(v, scale_right(f, -c / f_self));
}

QMatrix random_h1_isometry(int n, Rng& rng) {
  const HermitianForm h1(FormTag::H1, n);
  const std::size_t d = h1.dim();
  std::uniform_real_distribution<double> boost(0.0, 1.5);

  const double a = boost(rng);
  const QVector dir = random_unit_vector(d - 1, rng);
  QVector neg(d);
  for (std::size_t i = 0; i + 1 < d; ++i) neg[i] = dir[i] * std::sinh(a);
  neg[d - 1] = random_unit_quaternion(rng) * std::cosh(a);

  std::vector<QVector> cols;
  int attempts = 0;
  while (cols.size() + 1 < d) {
    if (++attempts > 1000) throw NumericalFailure("random isometry: degenerate draws");
    QVector v(d);
    for (auto& q : v) q = random_gaussian_quaternion(rng);
    for (int pass = 0; pass < 2; ++pass) {
      v = project_out(h1, v, neg, -1.0);
      for (const auto& f : cols) v = project_out(h1, v, f, 1.0);
    }
    const double self = h1.self_inner(v);
    const double e2 = euclidean_norm(v);
    if (self <= 1e-3 * e2 * e2) continue;
    cols.push_back(scale_right(v, 1.0 / std::sqrt(self)));
  }
  cols.push_back(neg);
  return QMatrix::from_columns(cols);
}

}  // namespace

QMatrix model_change_from_h1(const HermitianForm& form) {
  if (form.tag() == FormTag::H1) return QMatrix::identity(form.dim());
  const Congruence c = congruence_diagonalize(form.matrix());
  return c.u;
}

QMatrix random_isometry(const HermitianForm& form, Rng& rng) {
  const QMatrix m = random_h1_isometry(form.n(), rng);
  if (form.tag() == FormTag::H1) return m;
  const QMatrix w = model_change_from_h1(form);
  return w * m * inverse(w);
}

QMatrix random_isometry(const HermitianForm& form, std::uint64_t seed) {
  Rng rng(seed);
  return random_isometry(form, rng);
}

QMatrix hyperbolic_frame(const LiftVector& z, const Tolerances& tol) {
  if (!is_isotropic(z, tol)) throw PreconditionViolation("hyperbolic frame needs an isotropic vector");
  const HermitianForm& form = z.form();
  const std::size_t d = form.dim();
  const QVector& p = z.coords();

  auto basis = [d](std::size_t k) {
    QVector e(d);
    e[k] = 1.0;
    return e;
  };

  std::size_t best = 0;
  double best_mag = -1.0;
  for (std::size_t k = 0; k < d; ++k) {
    const double mag = norm(form.inner(basis(k), p));
    if (mag > best_mag) {
      best_mag = mag;
      best = k;
    }
  }
  if (best_mag <= 0.0) throw PreconditionViolation("hyperbolic frame of a zero vector");
  const Quaternion alpha = -inv(form.inner(basis(best), p));
  const QVector y = scale_right(basis(best), alpha);
  const double a = form.self_inner(y);
  const QVector q = add(y, scale_right(p, 0.5 * a));  // <q,q> = 0, <q,p> = -1

  std::vector<QVector> cols{p, q};
  std::vector<bool> taken(d, false);
  while (cols.size() < d) {
    QVector chosen;
    double chosen_self = 0.0;
    std::size_t chosen_k = d;
    for (std::size_t k = 0; k < d; ++k) {
      if (taken[k]) continue;
      QVector v = basis(k);
      for (int pass = 0; pass < 2; ++pass) {
        v = add(add(v, scale_right(p, form.inner(v, q))), scale_right(q, form.inner(v, p)));
        for (std::size_t c = 2; c < cols.size(); ++c) v = project_out(form, v, cols[c], 1.0);
      }
      const double self = form.self_inner(v);
      if (self > chosen_self) {
        chosen_self = self;
        chosen = v;
        chosen_k = k;
      }
    }
    if (chosen_k == d || chosen_self <= 1e-12) throw NumericalFailure("hyperbolic frame: complement is degenerate");
    taken[chosen_k] = true;
    cols.push_back(scale_right(chosen, 1.0 / std::sqrt(chosen_self)));
  }
  return QMatrix::from_columns(cols);
}

QMatrix isometry_sending(const LiftVector& z, const LiftVector& w, const Tolerances& tol) {
  if (!(z.form() == w.form())) throw InvalidArgument("isometry between different forms");
  return hyperbolic_frame(w, tol) * inverse(hyperbolic_frame(z, tol));
}

std::vector<LiftVector> random_boundary_tuple(int n, int m, Rng& rng, FormTag tag) {
  if (n < 2) throw InvalidArgument("boundary tuples need n >= 2");
  if (m < 1) throw InvalidArgument("boundary tuples need m >= 1");
  const HermitianForm form(tag, n);
  const QMatrix w = model_change_from_h1(form);
  const auto nn = static_cast<std::size_t>(n);

  std::vector<QVector> sphere;
  int rejections = 0;
  while (sphere.size() < static_cast<std::size_t>(m)) {
    QVector z = random_unit_vector(nn, rng);
    bool distinct = true;
    for (const auto& other : sphere) {
      QVector diff(nn);
      for (std::size_t i = 0; i < nn; ++i) diff[i] = z[i] - other[i];
      if (euclidean_norm(diff) < 1e-6) distinct = false;
    }
    if (!distinct) {
      if (++rejections > 1000) throw NumericalFailure("random boundary tuple: too many rejections");
      continue;
    }
    sphere.push_back(std::move(z));
  }

  std::vector<LiftVector> out;
  out.reserve(sphere.size());
  for (auto& z : sphere) {
    z.push_back(1.0);
    out.emplace_back(form, tag == FormTag::H1 ? z : w * z);
  }
  return out;
}

std::vector<LiftVector> random_boundary_tuple(int n, int m, std::uint64_t seed, FormTag form) {
  Rng rng(seed);
  return random_boundary_tuple(n, m, rng, form);
}

}  // namespace qhyp
