#pragma once

#include "qhyp/error.hpp"

namespace qhyp {

/// Numerical thresholds shared by all pipelines.
///
/// `tol` is the relative dead-band used for sign tests, zero tests and
/// structural checks (Hermitian symmetry, isotropy, isometry membership).
/// `tol_eq` is the wider band used when a determinant must vanish.
struct Tolerances {
  double tol = 1e-9;
  double tol_eq = 1e-7;

  void validate() const {
    if (!(tol > 0.0 && tol <= tol_eq && tol_eq < 1.0)) {
      throw InvalidArgument("tolerances must satisfy 0 < tol <= tol_eq < 1");
    }
  }
};

}  // namespace qhyp
