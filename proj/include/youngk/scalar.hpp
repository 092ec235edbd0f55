#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

// Scalar mean inequalities refined by Kantorovich-constant factors:
// the iterated Young chains, their reverses, the squared and Heinz
// variants, and the prior-work baseline bounds they are compared to.

namespace youngk {

// Weights nu beyond this depth leave the Kantorovich factor at 1 to
// machine precision; deeper requests are clamped (with a warning).
inline constexpr int kDepthCap = 60;

// Default relative slack tolerance for double-precision verdicts.
inline constexpr double kRelSlackTol = 1e-9;

struct Weight {
  double nu;
  explicit Weight(double nu_);  // requires 0 <= nu <= 1
};

struct ScalarPair {
  double a;
  double b;
  ScalarPair(double a_, double b_);  // requires a, b > 0
  double h() const { return b / a; }
};

// r_0 = min(nu, 1-nu), r_k = min(2 r_{k-1}, 1 - 2 r_{k-1}),
// R_k = 1 - r_k, m_k = floor(2^k nu).
struct RefinementSeq {
  double nu = 0;
  int depth = 0;
  std::vector<double> r;
  std::vector<double> R;
  std::vector<std::int64_t> m;
};

struct ChainResult {
  double lower = 0;
  double middle = 0;
  double upper = 0;
  std::vector<double> terms;  // k-indexed refinement summands, all >= 0
  bool degenerate = false;    // nu at an endpoint of [0,1]
};

struct InequalityReport {
  std::string id;
  double lhs = 0;
  double rhs = 0;
  double slack = 0;  // rhs - lhs
  double tol = kRelSlackTol;
  bool pass = false;
  bool degenerate = false;
};

// (1+t)^2 / (4t); >= 1, equal to 1 iff t == 1, symmetric under t <-> 1/t.
double kantorovich(double t);

RefinementSeq refinement_seq(double nu, int depth);

double arith_mean(const ScalarPair& p, Weight w);
double geo_mean(const ScalarPair& p, Weight w);
double heinz_mean(const ScalarPair& p, Weight w);

// Total and per-k summands of
//   sum_{k<n} r_k [ (a^{1-m_k/2^k} b^{m_k/2^k})^{1/2}
//                 - (a^{1-(m_k+1)/2^k} b^{(m_k+1)/2^k})^{1/2} ]^2.
std::pair<double, std::vector<double>> refinement_sum(const ScalarPair& p,
                                                      const RefinementSeq& seq,
                                                      int n);
// Same with the roles of a and b exchanged in the exponents (m_k kept).
double refinement_sum_swapped(const ScalarPair& p, const RefinementSeq& seq,
                              int n);

// K(h^{1/2^n})^{r_n} a#b <= a\/b - sum <= K(h^{1/2^n})^{R_n} a#b.
ChainResult chain_y1(const ScalarPair& p, Weight w, int n);

// a\/b <= K(h^{1/2^n})^{-r_n} a#b + (sqrt a - sqrt b)^2 - swapped sum.
InequalityReport reverse_y2(const ScalarPair& p, Weight w, int n);

// chain_y1 on squared arguments (differences not square-rooted).
ChainResult chain_y3(const ScalarPair& p, Weight w, int n);
InequalityReport reverse_y4(const ScalarPair& p, Weight w, int n);

// Squared-mean forms: (a\/b)^2 against K^{+-r_n} (a#b)^2 with the k=0
// summand absorbed into r_0^2 (a-b)^2.
ChainResult chain_y5(const ScalarPair& p, Weight w, int n);
InequalityReport reverse_y6(const ScalarPair& p, Weight w, int n);

// Heinz-mean chain and its reverse (second-difference summands).
ChainResult heinz_chain(const ScalarPair& p, Weight w, int n);
InequalityReport heinz_reverse(const ScalarPair& p, Weight w, int n);

// Equality case of the chain at nu = numerator / 2^t (reduced), n = t-1.
InequalityReport dyadic_equality(const ScalarPair& p, std::int64_t numerator,
                                 int t);

// Prior-work bounds used as tightness comparators.
struct BaselineBounds {
  std::vector<InequalityReport> reports;
  // K(sqrt h)^{r'} a#b with r' = min(2r, 1-2r); equals chain_y1 lower at n=1.
  double eq13_kfactor_bound = 0;
};
BaselineBounds baseline_bounds(const ScalarPair& p, Weight w);

}  // namespace youngk
