#pragma once

#include <span>
#include <vector>

#include "qhyp/gram.hpp"
#include "qhyp/hyperbolic.hpp"

namespace qhyp {

/// arccos(Re(-<p1,p2,p3>) / |<p1,p2,p3>|) in [0, pi/2], with the triple
/// product <p1,p2><p2,p3><p3,p1> taken from the lifts as given.
///
/// Throws PreconditionViolation when Re(-triple) < -tol * |triple|, and
/// CoincidentPoints when the triple product vanishes.
double cartan_angle(const LiftVector& p1, const LiftVector& p2, const LiftVector& p3, const Tolerances& tol = {});

/// <p3,p1><p3,p2>^{-1}<p4,p2><p4,p1>^{-1}, multiplied left to right.
Quaternion cross_ratio(const LiftVector& p1, const LiftVector& p2, const LiftVector& p3, const LiftVector& p4);

struct CrossRatio {
  enum class Kind { X2, X3, Xk };
  Kind kind = Kind::X2;
  /// 1-based point labels; k = 2 for X2 and k = 3 for X3.
  int k = 2;
  int j = 4;
  Quaternion value;
};

/// Coordinates w = (cross-ratios, u, t1, r) of a tuple of m >= 3 boundary
/// points in H^n.
///
/// x2, x3: j = 4..m ascending. xk: (k, j) lexicographic, 4 <= k < j <= m.
struct ModuliCoordinates {
  int m = 3;
  int n = 2;
  std::vector<CrossRatio> x2;
  std::vector<CrossRatio> x3;
  std::vector<CrossRatio> xk;
  UnitPureQuaternion u;
  double cartan = 0.0;
  double r = 1.0;

  /// d = m(m-3)/2.
  std::size_t cross_ratio_count() const { return x2.size() + x3.size() + xk.size(); }
  /// Real parameters of H^d x sp(1) x R^2 as stored: 4d + 4.
  std::size_t ambient_real_dimension() const { return 4 * cross_ratio_count() + 4; }

  /// Layout, labels, r > 0, t1 in [0, pi/2] and nonzero cross-ratios;
  /// throws InvalidArgument.
  void validate() const;
};

/// Reads w off a normalized Gram matrix.
ModuliCoordinates coordinates(const NormalizedGram& g, int n, const Tolerances& tol = {});
/// Normalizes the tuple, then reads w off the normalized Gram matrix.
ModuliCoordinates coordinates(std::span<const LiftVector> tuple, const Tolerances& tol = {});

/// Inverse relations: the normalized Gram matrix with coordinates w.
NormalizedGram gram_from_coordinates(const ModuliCoordinates& w);

/// Largest per-component discrepancy: cross-ratios and r relative to
/// max(1, |value|), t1 absolute, u weighted by sin(t1) since the axis is free
/// at t1 = 0. Infinite when the layouts differ.
double coordinate_distance(const ModuliCoordinates& a, const ModuliCoordinates& b);

}  // namespace qhyp
