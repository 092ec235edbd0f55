#pragma once

#include "youngk/matrix.hpp"
#include "youngk/scalar.hpp"

// Loewner-order inequality chains for ordered pairs of positive definite
// matrices: the Kantorovich-refined Young chain, its reverse, the Heinz
// forms, and the quarter-power baseline they refine.

namespace youngk {

// Pair with M(A) <= m(B); h = m(B)/M(A) is computed from the exact
// extremal eigenvalues, never supplied by the caller. h_wide is the
// largest spectral ratio M(B)/m(A): the spectrum of A^{-1/2}BA^{-1/2}
// lies in [h, h_wide], so Kantorovich factors that must dominate the
// whole spectrum (the chain's upper side) take h_wide, while factors
// that must be dominated (lower side, reverses) take h.
struct OrderedPairInstance {
  SpdMatrix A;
  SpdMatrix B;
  double h = 1;
  double h_wide = 1;
};

// Throws (naming the offending spectra) unless M(A) <= m(B).
OrderedPairInstance make_ordered_pair(SpdMatrix a, SpdMatrix b);

struct OperatorChainReport {
  double nu = 0;
  int n = 0;
  double h = 1;
  int dim = 0;
  double lambda_min_left = 0;   // of middle - lower bound
  double lambda_min_right = 0;  // of upper bound - middle
  double scale = 0;
  bool pass_left = false;
  bool pass_right = false;
  bool pass = false;
};

// sum_{k<n} r_k [ A #_{m_k/2^k} B - 2 A #_{(2m_k+1)/2^{k+1}} B
//               + A #_{(m_k+1)/2^k} B ];  positive semidefinite.
SymMatrix op_refinement_sum(const OrderedPairInstance& inst, Weight w, int n);

// K(h^{1/2^n})^{r_n} A#B <= A\/B - sum <= K(h_wide^{1/2^n})^{R_n} A#B.
OperatorChainReport op_chain_check(const OrderedPairInstance& inst, Weight w,
                                   int n, double tol);

// A\/B <= K(h^{1/2^n})^{-r_n} A#B + (A - 2 A#B + B) - exchanged sum,
// where the bracket means carry exponents 1 - m_k/2^k (the form the
// scalar reverse provides). Single inequality: only the left slot of the
// report is populated.
OperatorChainReport op_reverse_check(const OrderedPairInstance& inst, Weight w,
                                     int n, double tol);

// Heinz chain (both sides) and its reverse, combined: pass requires all
// three Loewner inequalities. lambda_min_left is the minimum over the
// chain-lower and reverse slack directions, lambda_min_right the chain
// upper.
OperatorChainReport op_heinz_check(const OrderedPairInstance& inst, Weight w,
                                   int n, double tol);

// Quarter-power baseline (lower and upper displays with the nu <= 1/2
// case split); the tightness comparator for the refined chain.
OperatorChainReport liao_wu_baseline_check(const OrderedPairInstance& inst,
                                           Weight w, double tol);

}  // namespace youngk
