#pragma once

#include <cmath>
#include <iosfwd>

namespace qhyp {

/// Real quaternion q = t + i x + j y + k z with ij = k, jk = i, ki = j.
struct Quaternion {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double t_) : t(t_) {}  // NOLINT: reals embed implicitly
  constexpr Quaternion(double t_, double x_, double y_, double z_) : t(t_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr Quaternion operator-() const { return {-t, -x, -y, -z}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    t += o.t;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    t -= o.t;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    t *= s;
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

/// Hamilton product.
constexpr Quaternion mul(const Quaternion& a, const Quaternion& b) {
  return {a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z,
          a.t * b.x + a.x * b.t + a.y * b.z - a.z * b.y,
          a.t * b.y - a.x * b.z + a.y * b.t + a.z * b.x,
          a.t * b.z + a.x * b.y - a.y * b.x + a.z * b.t};
}
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) { return mul(a, b); }

constexpr Quaternion conj(const Quaternion& q) { return {q.t, -q.x, -q.y, -q.z}; }
constexpr double re(const Quaternion& q) { return q.t; }
constexpr Quaternion pu(const Quaternion& q) { return {0.0, q.x, q.y, q.z}; }
constexpr double norm2(const Quaternion& q) { return q.t * q.t + q.x * q.x + q.y * q.y + q.z * q.z; }

/// Modulus |q|.
inline double norm(const Quaternion& q) { return std::hypot(std::hypot(q.t, q.x), std::hypot(q.y, q.z)); }
inline double abs(const Quaternion& q) { return norm(q); }

/// Throws ZeroDivisor for q == 0.
Quaternion inv(const Quaternion& q);
/// q / |q|; throws ZeroDivisor for q == 0.
Quaternion unit(const Quaternion& q);

/// Relative comparison |a - b| <= tol * max(1, |a|, |b|).
bool approx_equal(const Quaternion& a, const Quaternion& b, double tol = 1e-9);

/// Unit pure quaternion u (u^2 = -1), an element of sp(1).
class UnitPureQuaternion {
 public:
  /// Defaults to i.
  UnitPureQuaternion() = default;
  /// Accepts (x, y, z) within `tol` of the unit sphere and renormalizes.
  UnitPureQuaternion(double x, double y, double z, double tol = 1e-8);
  /// Accepts a quaternion with vanishing real part and unit modulus (within tol).
  static UnitPureQuaternion from_quaternion(const Quaternion& q, double tol = 1e-8);

  double x() const { return x_; }
  double y() const { return y_; }
  double z() const { return z_; }
  Quaternion quaternion() const { return {0.0, x_, y_, z_}; }
  operator Quaternion() const { return quaternion(); }  // NOLINT

 private:
  double x_ = 1.0;
  double y_ = 0.0;
  double z_ = 0.0;
};

/// q = modulus * (cos(angle) + axis * sin(angle)), angle in [0, pi].
struct PolarForm {
  double modulus = 0.0;
  UnitPureQuaternion axis;
  double angle = 0.0;
};

/// Polar decomposition; real arguments get axis i. Throws ZeroDivisor for 0.
PolarForm polar(const Quaternion& q);

/// modulus * e^{axis * angle}.
Quaternion exp_form(double modulus, const UnitPureQuaternion& axis, double angle);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace qhyp
