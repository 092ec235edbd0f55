#pragma once

#include "youngk/matrix.hpp"
#include "youngk/scalar.hpp"

// Hilbert-Schmidt norm Young-type inequalities with eigenvalue-ratio
// Kantorovich factors and an arbitrary square matrix X between the
// positive definite pair.

namespace youngk {

struct HsInstance {
  SpdMatrix A;
  SpdMatrix B;
  Mat X;
};

HsInstance make_hs_instance(SpdMatrix a, SpdMatrix b, Mat x);

// under = min_{i,j} K((mu_j/lambda_i)^{1/2^{t-1}})^{r_t},
// over  = max_{i,j} K((mu_j/lambda_i)^{1/2^{t-1}})^{R_t}.
struct KtFactors {
  int t = 1;
  double under = 1;
  double over = 1;
};
KtFactors kt_factors(const HsInstance& inst, Weight w, int t);

// The statements display a minus in the combined term; the proof (and
// truth) require the plus. The minus variant stays available as a
// counterexample probe.
enum class HsSign { plus, minus };

struct HsReport {
  double nu = 0;
  int t = 1;
  int dim = 0;
  double lower = 0;
  double middle = 0;
  double upper = 0;
  double slack_left = 0;   // middle - lower
  double slack_right = 0;  // upper - middle
  double scale = 0;
  bool pass = false;
};

// under ||A^{1-nu} X B^nu||^2 <= ||(1-nu)AX + nu XB||^2
//   - r_0^2 ||AX - XB||^2 - sum_{k=1}^{t-1} r_k ||...||^2 <= over (...).
HsReport hs_chain_check(const HsInstance& inst, Weight w, int t, double tol,
                        HsSign sign = HsSign::plus);

// ||(1-nu)AX + nu XB||^2 <= under^{-1} ||A^{1-nu} X B^nu||^2
//   + R_0^2 ||AX - XB||^2 - sum (exchanged exponents); single bound, the
// report's upper/slack_right carry it.
HsReport hs_reverse_check(const HsInstance& inst, Weight w, int t, double tol,
                          HsSign sign = HsSign::plus);

}  // namespace youngk
