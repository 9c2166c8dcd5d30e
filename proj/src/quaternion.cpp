#include "qhyp/quaternion.hpp"

#include <algorithm>
#include <ostream>

#include "qhyp/error.hpp"

namespace qhyp {

Quaternion inv(const Quaternion& q) {
  const double n2 = norm2(q);
  if (n2 == 0.0) throw ZeroDivisor("inverse of zero quaternion");
  return conj(q) / n2;
}

Quaternion unit(const Quaternion& q) {
  const double n = norm(q);
  if (n == 0.0) throw ZeroDivisor("unit of zero quaternion");
  return q / n;
}

bool approx_equal(const Quaternion& a, const Quaternion& b, double tol) {
  const double scale = std::max({1.0, norm(a), norm(b)});
  return norm(a - b) <= tol * scale;
}

UnitPureQuaternion::UnitPureQuaternion(double x, double y, double z, double tol) {
  const double n = std::hypot(x, std::hypot(y, z));
  if (!std::isfinite(n) || std::abs(n - 1.0) > tol) {
    throw InvalidArgument("axis is not a unit pure quaternion");
  }
  x_ = x / n;
  y_ = y / n;
  z_ = z / n;
}

UnitPureQuaternion UnitPureQuaternion::from_quaternion(const Quaternion& q, double tol) {
  if (std::abs(q.t) > tol) throw InvalidArgument("axis has a nonzero real part");
  return UnitPureQuaternion(q.x, q.y, q.z, tol);
}

PolarForm polar(const Quaternion& q) {
  const double modulus = norm(q);
  if (modulus == 0.0) throw ZeroDivisor("polar form of zero quaternion");
  const double pure = std::hypot(q.x, std::hypot(q.y, q.z));
  PolarForm out;
  out.modulus = modulus;
  // atan2 keeps full precision near 0 and pi where arccos does not.
  out.angle = std::atan2(pure, q.t);
  if (pure > 0.0) out.axis = UnitPureQuaternion(q.x / pure, q.y / pure, q.z / pure);
  return out;
}

Quaternion exp_form(double modulus, const UnitPureQuaternion& axis, double angle) {
  const double s = modulus * std::sin(angle);
  return {modulus * std::cos(angle), s * axis.x(), s * axis.y(), s * axis.z()};
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.t << ", " << q.x << ", " << q.y << ", " << q.z << ')';
}

}  // namespace qhyp
