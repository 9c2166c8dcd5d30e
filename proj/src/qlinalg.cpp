#include "qhyp/qlinalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "qhyp/error.hpp"

namespace qhyp {

using cd = std::complex<double>;

HermitianQMatrix::HermitianQMatrix(const QMatrix& m, double tol) {
  if (!m.is_square()) throw InvalidArgument("Hermitian matrix must be square");
  const double scale = std::max(m.max_abs(), 1e-300);
  const std::size_t n = m.rows();
  m_ = QMatrix(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) {
      const Quaternion a = m(r, c);
      const Quaternion b = conj(m(c, r));
      if (norm(a - b) > tol * scale) {
        throw InvalidArgument("matrix is not Hermitian at (" + std::to_string(r) + ", " + std::to_string(c) + ")");
      }
      const Quaternion avg = (a + b) * 0.5;
      m_(r, c) = r == c ? Quaternion(avg.t) : avg;
      m_(c, r) = conj(m_(r, c));
    }
  }
}

HermitianQMatrix HermitianQMatrix::principal_submatrix(std::span<const std::size_t> idx) const {
  HermitianQMatrix out;
  out.m_ = m_.principal_submatrix(idx);
  return out;
}

ComplexMatrix complex_adjoint(const QMatrix& m) {
  const auto r = static_cast<Eigen::Index>(m.rows());
  const auto c = static_cast<Eigen::Index>(m.cols());
  ComplexMatrix out(2 * r, 2 * c);
  for (Eigen::Index a = 0; a < r; ++a) {
    for (Eigen::Index b = 0; b < c; ++b) {
      const Quaternion& q = m(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
      // q = (t + i x) + (y + i z) j
      const cd za(q.t, q.x);
      const cd zb(q.y, q.z);
      out(a, b) = za;
      out(a, c + b) = zb;
      out(r + a, b) = -std::conj(zb);
      out(r + a, c + b) = std::conj(za);
    }
  }
  return out;
}

QMatrix from_complex_adjoint(const ComplexMatrix& cm) {
  if (cm.rows() % 2 != 0 || cm.cols() % 2 != 0) throw InvalidArgument("complex adjoint must have even shape");
  const Eigen::Index r = cm.rows() / 2;
  const Eigen::Index c = cm.cols() / 2;
  QMatrix out(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  for (Eigen::Index a = 0; a < r; ++a)
    for (Eigen::Index b = 0; b < c; ++b) {
      const cd za = cm(a, b);
      const cd zb = cm(a, c + b);
      out(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = {za.real(), za.imag(), zb.real(), zb.imag()};
    }
  return out;
}

std::vector<double> hermitian_eigenvalues(ComplexMatrix a) {
  const Eigen::Index n = a.rows();
  const double fro = a.norm();
  for (int sweep = 0; sweep < 100 && fro > 0.0; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = 0; q < n; ++q)
        if (p != q) off += std::norm(a(p, q));
    if (std::sqrt(off) <= 1e-13 * fro) break;

    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const cd apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= 1e-300) continue;
        const cd phase = apq / mag;
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // J = diag(1, conj(phase)) * [[c, s], [-s, c]] on the (p, q) plane.
        const cd jqp = -s * std::conj(phase);
        const cd jqq = c * std::conj(phase);
        for (Eigen::Index k = 0; k < n; ++k) {
          const cd akp = a(k, p);
          const cd akq = a(k, q);
          a(k, p) = akp * c + akq * jqp;
          a(k, q) = akp * s + akq * jqq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const cd apk = a(p, k);
          const cd aqk = a(q, k);
          a(p, k) = c * apk + std::conj(jqp) * aqk;
          a(q, k) = s * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
  std::vector<double> ev(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) ev[static_cast<std::size_t>(i)] = a(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

std::vector<double> quaternionic_eigenvalues(const HermitianQMatrix& m) {
  const std::vector<double> ev = hermitian_eigenvalues(complex_adjoint(m.matrix()));
  const double gap = 1e-6 * std::max(m.matrix().frobenius_norm(), 1e-300);
  std::vector<double> out;
  out.reserve(m.size());
  for (std::size_t i = 0; i + 1 < ev.size(); i += 2) {
    if (std::abs(ev[i + 1] - ev[i]) > gap) {
      throw NumericalFailure("eigenvalues of the complex adjoint do not pair");
    }
    out.push_back(0.5 * (ev[i] + ev[i + 1]));
  }
  return out;
}

namespace {

// Enumerates permutations in canonical cycle form: each cycle opens at the
// smallest unused index, so leaders lead their cycles and ascend. Products
// are accumulated left to right in the printed index order.
class MooreCycleSum {
 public:
  explicit MooreCycleSum(const QMatrix& m) : m_(m), n_(static_cast<int>(m.rows())) {
    full_ = n_ == 32 ? ~0u : ((1u << n_) - 1u);
  }

  void run() { open_cycle(Quaternion(1.0), 0u, 0); }

  Quaternion total() const { return total_; }
  double bound() const { return bound_; }

 private:
  void open_cycle(const Quaternion& prefix, std::uint32_t used, int cycles) {
    if (used == full_) {
      const bool negative = ((n_ - cycles) % 2) != 0;
      total_ += negative ? -prefix : prefix;
      bound_ += norm(prefix);
      return;
    }
    int leader = 0;
    while (used & (1u << leader)) ++leader;
    extend(prefix, leader, leader, used | (1u << leader), cycles);
  }

  void extend(const Quaternion& prefix, int last, int leader, std::uint32_t used, int cycles) {
    const Quaternion closed = prefix * m_(last, leader);
    if (!(closed == Quaternion{})) open_cycle(closed, used, cycles + 1);
    for (int next = leader + 1; next < n_; ++next) {
      if (used & (1u << next)) continue;
      const Quaternion step = prefix * m_(last, next);
      if (step == Quaternion{}) continue;
      extend(step, next, leader, used | (1u << next), cycles);
    }
  }

  const QMatrix& m_;
  int n_;
  std::uint32_t full_ = 0;
  Quaternion total_{};
  double bound_ = 0.0;
};

}  // namespace

double moore_det(const HermitianQMatrix& m) {
  if (m.size() == 0) return 1.0;
  if (m.size() > kMaxMooreOrder) throw CapExceeded("Moore determinant order exceeds cap");
  MooreCycleSum sum(m.matrix());
  sum.run();
  const Quaternion total = sum.total();
  if (norm(pu(total)) > 1e-10 * std::max(sum.bound(), 1e-300)) {
    throw NumericalFailure("Moore determinant has a non-negligible imaginary part");
  }
  return total.t;
}

double moore_det_oracle(const HermitianQMatrix& m) {
  const std::vector<double> ev = quaternionic_eigenvalues(m);
  return std::accumulate(ev.begin(), ev.end(), 1.0, std::multiplies<>());
}

std::pair<double, double> block_diag_property_check(const HermitianQMatrix& m1, const HermitianQMatrix& m2) {
  const HermitianQMatrix joined(block_diag(m1.matrix(), m2.matrix()));
  return {moore_det(joined), moore_det(m1) * moore_det(m2)};
}

std::pair<double, double> congruence_det_property(const HermitianQMatrix& m, const QMatrix& u) {
  if (!u.is_square() || u.rows() != m.size()) throw InvalidArgument("U must be square of the same order as M");
  const QMatrix ustar = u.adjoint();
  const HermitianQMatrix lhs(ustar * m.matrix() * u, 1e-8);
  const HermitianQMatrix gram(ustar * u, 1e-8);
  return {moore_det(lhs), moore_det(m) * moore_det(gram)};
}

double complex_determinant(const HermitianQMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  ComplexMatrix c(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index k = 0; k < n; ++k) {
      const Quaternion& q = m(static_cast<std::size_t>(r), static_cast<std::size_t>(k));
      if (q.y != 0.0 || q.z != 0.0) throw InvalidArgument("matrix has non-complex entries");
      c(r, k) = cd(q.t, q.x);
    }
  return c.partialPivLu().determinant().real();
}

Signature signature(const HermitianQMatrix& m, const Tolerances& tol) {
  const std::vector<double> ev = quaternionic_eigenvalues(m);
  const double thr = tol.tol * m.matrix().frobenius_norm();
  Signature s;
  for (double v : ev) {
    if (v > thr) ++s.n_plus;
    else if (v < -thr) ++s.n_minus;
    else ++s.n_zero;
  }
  return s;
}

int rank(const QMatrix& m, const Tolerances& tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const ComplexMatrix c = complex_adjoint(m);
  Eigen::JacobiSVD<ComplexMatrix> svd(c);
  const Eigen::VectorXd sv = svd.singularValues();  // descending
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double thr = tol.tol * sv(0);
  int r = 0;
  for (Eigen::Index i = 0; i + 1 < sv.size(); i += 2) {
    if (0.5 * (sv(i) + sv(i + 1)) > thr) ++r;
  }
  return r;
}

std::vector<PrincipalMinor> principal_minors(const HermitianQMatrix& m, std::size_t cap) {
  const std::size_t n = m.size();
  if (n > cap || n > kMaxMinorOrder) throw CapExceeded("principal minor enumeration exceeds cap");
  std::vector<PrincipalMinor> out;
  out.reserve((std::size_t{1} << n) - 1);
  for (std::size_t size = 1; size <= n; ++size) {
    // lexicographic combinations of `size` indices from {0..n-1}
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      out.push_back({idx, moore_det(m.principal_submatrix(idx))});
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == n - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t k = pos; k < size; ++k) idx[k] = idx[k - 1] + 1;
    }
  }
  return out;
}

double minor_threshold(double tol, double scale, std::size_t order) {
  return tol * std::pow(scale, static_cast<double>(order));
}

bool is_positive_definite(const HermitianQMatrix& m, const Tolerances& tol) {
  const double scale = m.matrix().max_abs();
  if (scale == 0.0) return false;
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < m.size(); ++k) {
    idx.push_back(k);
    if (moore_det(m.principal_submatrix(idx)) <= minor_threshold(tol.tol, scale, k + 1)) return false;
  }
  return true;
}

double min_eigenvalue(const HermitianQMatrix& m) {
  const std::vector<double> ev = hermitian_eigenvalues(complex_adjoint(m.matrix()));
  return ev.empty() ? 0.0 : ev.front();
}

bool is_positive_semidefinite(const HermitianQMatrix& m, const Tolerances& tol) {
  const double scale = m.matrix().max_abs();
  bool by_minors = true;
  if (scale > 0.0) {
    for (const auto& pm : principal_minors(m)) {
      if (pm.value < -minor_threshold(tol.tol, scale, pm.indices.size())) {
        by_minors = false;
        break;
      }
    }
  }
  const bool by_spectrum = min_eigenvalue(m) >= -tol.tol * m.matrix().frobenius_norm();
  if (by_minors != by_spectrum) {
    throw NumericalFailure("semidefiniteness: principal minors and spectrum disagree");
  }
  return by_minors;
}

Congruence congruence_diagonalize(const HermitianQMatrix& m, const Tolerances& tol) {
  const std::size_t n = m.size();
  QMatrix a = m.matrix();
  QMatrix u = QMatrix::identity(n);
  const double thr = tol.tol * m.matrix().max_abs();

  auto swap_index = [&](std::size_t p, std::size_t q) {
    if (p == q) return;
    for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(q, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(a(k, p), a(k, q));
    for (std::size_t k = 0; k < n; ++k) std::swap(u(k, p), u(k, q));
  };

  std::size_t pivots = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a(i, i).t) > std::abs(a(p, p).t)) p = i;

    if (std::abs(a(p, p).t) <= thr) {
      // Zero diagonal: pair up the largest off-diagonal entry. Column s gains
      // column t * alpha with alpha = conj(a_st)/|a_st|, so a_ss grows by
      // 2|a_st| + a_tt.
      std::size_t s = n, t = n;
      double best = thr;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (norm(a(i, j)) > best) {
            best = norm(a(i, j));
            s = i;
            t = j;
          }
      if (s == n) break;
      const Quaternion alpha = conj(a(s, t)) / norm(a(s, t));
      const Quaternion alpha_bar = conj(alpha);
      for (std::size_t r = 0; r < n; ++r) a(r, s) += a(r, t) * alpha;
      for (std::size_t c = 0; c < n; ++c) a(s, c) += alpha_bar * a(t, c);
      for (std::size_t r = 0; r < n; ++r) u(r, s) += u(r, t) * alpha;
      a(s, s) = Quaternion(a(s, s).t);
      p = s;
    }
    swap_index(k, p);

    const double d = a(k, k).t;
    for (std::size_t j = k + 1; j < n; ++j) {
      const Quaternion c = a(k, j) / d;
      if (c == Quaternion{}) continue;
      for (std::size_t r = 0; r < n; ++r) u(r, j) -= u(r, k) * c;
      for (std::size_t i = k + 1; i < n; ++i) a(i, j) -= a(i, k) * c;
    }
    for (std::size_t j = k + 1; j < n; ++j) {
      a(k, j) = Quaternion{};
      a(j, k) = Quaternion{};
      a(j, j) = Quaternion(a(j, j).t);
    }
    ++pivots;
  }

  std::vector<int> sign(n, 0);
  for (std::size_t k = 0; k < pivots; ++k) {
    const double d = a(k, k).t;
    const double s = 1.0 / std::sqrt(std::abs(d));
    for (std::size_t r = 0; r < n; ++r) u(r, k) *= s;
    sign[k] = d > 0.0 ? 1 : -1;
  }

  // Order columns +1, -1, 0.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto rank_of = [](int s) { return s > 0 ? 0 : (s < 0 ? 1 : 2); };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return rank_of(sign[x]) < rank_of(sign[y]); });

  Congruence out;
  out.u = QMatrix(n, n);
  out.diagonal.resize(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) out.u(r, c) = u(r, order[c]);
    out.diagonal[c] = sign[order[c]];
    if (sign[order[c]] > 0) ++out.signature.n_plus;
    else if (sign[order[c]] < 0) ++out.signature.n_minus;
    else ++out.signature.n_zero;
  }
  return out;
}

}  // namespace qhyp
