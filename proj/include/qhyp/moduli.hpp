#pragma once

#include <cstdint>
#include <vector>

#include "qhyp/invariants.hpp"

namespace qhyp {

/// Strictly increasing 1-based labels within {1..m-2}; label i refers to
/// point i + 2 of the tuple.
struct MinorIndexSet {
  std::vector<int> indices;

  std::size_t size() const { return indices.size(); }
  friend bool operator==(const MinorIndexSet&, const MinorIndexSet&) = default;
};

enum class Requirement { nonnegative, zero };

struct MinorViolation {
  MinorIndexSet set;
  double value = 0.0;
  Requirement need = Requirement::nonnegative;
};

struct MembershipReport {
  bool member = false;
  int rank = 0;
  std::vector<MinorViolation> violations;
};

/// G* of the normalized Gram matrix with coordinates w.
HermitianQMatrix associated_matrix(const ModuliCoordinates& w);

/// Moore determinant of G* restricted to I.
double minor_function(const ModuliCoordinates& w, const MinorIndexSet& set);

/// Every nonempty I within {1..m-2}: D >= -tol * s^|I| for |I| <= n-1 and
/// |D| <= tol_eq * s^|I| beyond, with s = max |G*_ij|. Requires m <= 12.
MembershipReport is_member(const ModuliCoordinates& w, int n, const Tolerances& tol = {});

/// Boundary tuple in H^n with coordinates w. The first lift is a standard
/// lift so that coordinates(realize(w)) reproduces w. Throws
/// PreconditionViolation when w is not a member.
std::vector<LiftVector> realize(const ModuliCoordinates& w, int n, FormTag form = FormTag::H1,
                                const Tolerances& tol = {});

/// 2m^2 - 6m + 5 - sum_{i=1}^{m-n-1} C(m-2, n-1+i); throws InvalidArgument
/// unless m > n + 1.
std::int64_t expected_dimension(int n, int m);

/// 4d + 4 with d = m(m-3)/2.
std::int64_t ambient_dimension(int m);

/// Numerical rank of the Jacobian of the equality constraints (minors of
/// size > n-1) with respect to the 4d + 4 real coordinates, by central
/// differences with step h. Experimental: not used for membership.
int equality_jacobian_rank(const ModuliCoordinates& w, int n, double h = 1e-6, double rel_tol = 1e-6);

}  // namespace qhyp
