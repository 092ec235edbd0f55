#include "youngk/hs_ineq.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace youngk {
namespace {

// Y = U^T X V with U, V the eigenvector matrices of A and B. All norm
// expressions below are weighted sums of |y_ij|^2 over the eigenvalue
// grid (lambda_i, mu_j), which is the proof's reduction and avoids
// forming any A^p X B^q product explicitly.
Mat rotated(const HsInstance& inst) {
  return transpose(inst.A.eigen().q) * inst.X * inst.B.eigen().q;
}

HsReport base_report(const HsInstance& inst, Weight w, int t) {
  HsReport rep;
  rep.nu = w.nu;
  rep.t = t;
  rep.dim = inst.X.dim();
  return rep;
}

void finish(HsReport& rep, double tol) {
  rep.slack_left = rep.middle - rep.lower;
  rep.slack_right = rep.upper - rep.middle;
  rep.scale = std::max({std::abs(rep.lower), std::abs(rep.middle),
                        std::abs(rep.upper)});
  rep.pass = rep.slack_left >= -tol * rep.scale &&
             rep.slack_right >= -tol * rep.scale;
}

}  // namespace

HsInstance make_hs_instance(SpdMatrix a, SpdMatrix b, Mat x) {
  if (a.dim() != b.dim() || a.dim() != x.dim())
    throw std::invalid_argument("hs instance: dimension mismatch");
  return HsInstance{std::move(a), std::move(b), std::move(x)};
}

KtFactors kt_factors(const HsInstance& inst, Weight w, int t) {
  if (t < 1) throw std::invalid_argument("kt_factors: t must be >= 1");
  RefinementSeq seq = refinement_seq(w.nu, t);
  KtFactors f;
  f.t = t;
  double under = std::numeric_limits<double>::infinity();
  double over = 0;
  for (double lam : inst.A.eigen().lambda)
    for (double mu : inst.B.eigen().lambda) {
      double K = kantorovich(std::pow(mu / lam, std::ldexp(1.0, 1 - t)));
      under = std::min(under, std::pow(K, seq.r[t]));
      over = std::max(over, std::pow(K, seq.R[t]));
    }
  f.under = under;
  f.over = over;
  return f;
}

HsReport hs_chain_check(const HsInstance& inst, Weight w, int t, double tol,
                        HsSign sign) {
  KtFactors f = kt_factors(inst, w, t);
  Mat y = rotated(inst);
  HsReport rep = base_report(inst, w, t);
  const auto& lam = inst.A.eigen().lambda;
  const auto& mu = inst.B.eigen().lambda;
  for (int i = 0; i < y.dim(); ++i)
    for (int j = 0; j < y.dim(); ++j) {
      double y2 = y(i, j) * y(i, j);
      if (y2 == 0.0) continue;
      ScalarPair p(lam[i], mu[j]);
      double mid = chain_y5(p, w, t).middle;
      if (sign == HsSign::minus)
        mid -= 4.0 * w.nu * (1.0 - w.nu) * lam[i] * mu[j];
      double geo2 = std::pow(geo_mean(p, w), 2);
      rep.lower += y2 * f.under * geo2;
      rep.middle += y2 * mid;
      rep.upper += y2 * f.over * geo2;
    }
  finish(rep, tol);
  return rep;
}

HsReport hs_reverse_check(const HsInstance& inst, Weight w, int t, double tol,
                          HsSign sign) {
  KtFactors f = kt_factors(inst, w, t);
  RefinementSeq seq = refinement_seq(w.nu, t);
  Mat y = rotated(inst);
  HsReport rep = base_report(inst, w, t);
  const auto& lam = inst.A.eigen().lambda;
  const auto& mu = inst.B.eigen().lambda;
  for (int i = 0; i < y.dim(); ++i)
    for (int j = 0; j < y.dim(); ++j) {
      double y2 = y(i, j) * y(i, j);
      if (y2 == 0.0) continue;
      double a = lam[i], b = mu[j];
      double lhs = std::pow((1.0 - w.nu) * a + (sign == HsSign::plus
                                                    ? w.nu * b
                                                    : -w.nu * b),
                            2);
      // R_0^2 d^2 - sum_{k>=1} r_k (exchanged diffs)^2 written through
      // the telescoped chain middle of (b^2, a^2), exactly as in the
      // scalar reverse: the exchanged k=0 summand is r_0 d^2.
      ScalarPair swapped(b * b, a * a);
      double mtilde = chain_y1(swapped, w, t).middle;
      double geo2 = std::pow(geo_mean(ScalarPair(a, b), w), 2);
      double d2 = (a - b) * (a - b);
      double arith_ba = (1.0 - w.nu) * b * b + w.nu * a * a;
      double rhs = geo2 / f.under +
                   (seq.R[0] * seq.R[0] + seq.r[0]) * d2 - arith_ba + mtilde;
      rep.middle += y2 * lhs;
      rep.upper += y2 * rhs;
    }
  rep.lower = rep.middle;  // single-sided bound: only slack_right informs
  finish(rep, tol);
  return rep;
}

}  // namespace youngk
