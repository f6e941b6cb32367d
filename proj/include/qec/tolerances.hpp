#pragma once

namespace qec {

/// Numerical tolerances shared across the library. Defaults are sized for
/// small integer matrices whose spectral gaps sit far above round-off.
struct Tolerances {
  double eig_tol = 1e-10;    ///< relative residual/orthonormality bound
  double group_tol = 1e-7;   ///< absolute gap for merging distinct eigenvalues
  double main_tol = 1e-7;    ///< main-angle threshold for main eigenvalues

  double qec_match_tol = 1e-7;     ///< |formula - direct| acceptance bound
  double qec_zero_tol = 1e-8;      ///< |QEC| below this counts as zero
  double stationarity_tol = 1e-8;  ///< certificate residual bound
  double pole_tol = 1e-12;         ///< denominator magnitude treated as a pole
  double root_refine_tol = 1e-12;  ///< bisection refinement width
  double psi_value_tol = 1e-9;     ///< psi(root) must match target this well
  double shift_reject_tol = 1e-9;  ///< roots this close to a singular shift are dropped

  void validate() const;
};

}  // namespace qec
