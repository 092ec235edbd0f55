#include "youngk/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <stdexcept>

namespace youngk {
namespace {

double sq(double x) { return x * x; }

// a^{1-x} b^{x} from the logs of a and b.
double wgeo(double la, double lb, double x) {
  return std::exp((1.0 - x) * la + x * lb);
}

int clamp_depth(int n) {
  if (n < 1) throw std::invalid_argument("refinement depth must be >= 1");
  if (n > kDepthCap) {
    std::cerr << "youngk: depth " << n << " clamped to " << kDepthCap << "\n";
    return kDepthCap;
  }
  return n;
}

struct CorePath {
  double middle = 0;
  std::vector<double> terms;
};

// Walks the dyadic geodesic between e^{la} and e^{lb}: at step k the
// current pair is the adjacent interpolants with exponents m_k/2^k and
// (m_k+1)/2^k, and the residual weight is the fractional part of 2^k nu.
// The middle of the chain is the convex combination of the final pair,
// which sidesteps the big-minus-big cancellation of the displayed
// arithmetic-mean-minus-sum form.
CorePath chain_core(double la, double lb, double nu, int n,
                    const RefinementSeq& seq) {
  CorePath out;
  out.terms.resize(n);
  double lx = la, ly = lb, w = nu;
  for (int k = 0; k < n; ++k) {
    out.terms[k] = seq.r[k] * sq(std::exp(0.5 * lx) - std::exp(0.5 * ly));
    if (w >= 0.5) {
      lx = 0.5 * (lx + ly);
      w = 2.0 * w - 1.0;
    } else {
      ly = 0.5 * (lx + ly);
      w = 2.0 * w;
    }
  }
  out.middle = (1.0 - w) * std::exp(lx) + w * std::exp(ly);
  return out;
}

double kfactor(double la, double lb, int n) {
  return kantorovich(std::exp(std::ldexp(lb - la, -n)));
}

InequalityReport make_report(std::string id, double lhs, double rhs,
                             bool degenerate) {
  InequalityReport rep;
  rep.id = std::move(id);
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.slack = rhs - lhs;
  rep.degenerate = degenerate;
  double scale = std::max(std::abs(lhs), std::abs(rhs));
  rep.pass = rep.slack >= -rep.tol * scale;
  return rep;
}

bool endpoint(double nu) { return nu == 0.0 || nu == 1.0; }

}  // namespace

Weight::Weight(double nu_) : nu(nu_) {
  if (!(nu >= 0.0 && nu <= 1.0))
    throw std::domain_error("weight nu must lie in [0,1]");
}

ScalarPair::ScalarPair(double a_, double b_) : a(a_), b(b_) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::domain_error("scalar pair entries must be positive");
}

double kantorovich(double t) {
  if (!(t > 0.0)) throw std::domain_error("kantorovich: t must be positive");
  return sq(1.0 + t) / (4.0 * t);
}

RefinementSeq refinement_seq(double nu, int depth) {
  if (!(nu >= 0.0 && nu <= 1.0))
    throw std::domain_error("refinement_seq: nu must lie in [0,1]");
  depth = clamp_depth(depth);
  RefinementSeq s;
  s.nu = nu;
  s.depth = depth;
  s.r.resize(depth + 1);
  s.R.resize(depth + 1);
  s.m.resize(depth + 1);
  s.r[0] = std::min(nu, 1.0 - nu);
  for (int k = 1; k <= depth; ++k)
    s.r[k] = std::min(2.0 * s.r[k - 1], 1.0 - 2.0 * s.r[k - 1]);
  for (int k = 0; k <= depth; ++k) {
    s.R[k] = 1.0 - s.r[k];
    s.m[k] = static_cast<std::int64_t>(std::floor(std::ldexp(nu, k)));
  }
  return s;
}

double arith_mean(const ScalarPair& p, Weight w) {
  return (1.0 - w.nu) * p.a + w.nu * p.b;
}

double geo_mean(const ScalarPair& p, Weight w) {
  return wgeo(std::log(p.a), std::log(p.b), w.nu);
}

double heinz_mean(const ScalarPair& p, Weight w) {
  double la = std::log(p.a), lb = std::log(p.b);
  return 0.5 * (wgeo(la, lb, w.nu) + wgeo(lb, la, w.nu));
}

std::pair<double, std::vector<double>> refinement_sum(const ScalarPair& p,
                                                      const RefinementSeq& seq,
                                                      int n) {
  if (n < 1 || n > seq.depth)
    throw std::invalid_argument("refinement_sum: n must lie in [1, depth]");
  double la = std::log(p.a), lb = std::log(p.b);
  std::vector<double> terms(n);
  double total = 0;
  for (int k = 0; k < n; ++k) {
    double x = std::ldexp(static_cast<double>(seq.m[k]), -k);
    double x1 = std::ldexp(static_cast<double>(seq.m[k] + 1), -k);
    double d = std::exp(0.5 * ((1.0 - x) * la + x * lb)) -
               std::exp(0.5 * ((1.0 - x1) * la + x1 * lb));
    terms[k] = seq.r[k] * d * d;
    total += terms[k];
  }
  return {total, terms};
}

double refinement_sum_swapped(const ScalarPair& p, const RefinementSeq& seq,
                              int n) {
  return refinement_sum(ScalarPair(p.b, p.a), seq, n).first;
}

ChainResult chain_y1(const ScalarPair& p, Weight w, int n) {
  n = clamp_depth(n);
  RefinementSeq seq = refinement_seq(w.nu, n);
  double la = std::log(p.a), lb = std::log(p.b);
  CorePath core = chain_core(la, lb, w.nu, n, seq);
  double geo = wgeo(la, lb, w.nu);
  double K = kfactor(la, lb, n);
  ChainResult res;
  res.lower = std::pow(K, seq.r[n]) * geo;
  res.middle = core.middle;
  res.upper = std::pow(K, seq.R[n]) * geo;
  res.terms = std::move(core.terms);
  res.degenerate = endpoint(w.nu);
  return res;
}

InequalityReport reverse_y2(const ScalarPair& p, Weight w, int n) {
  n = clamp_depth(n);
  RefinementSeq seq = refinement_seq(w.nu, n);
  double la = std::log(p.a), lb = std::log(p.b);
  double arith = arith_mean(p, w);
  // rhs as displayed equals  K^{-r_n} a#b + a\/b - 2 sqrt(ab) + M~  where
  // M~ is the chain middle of the exchanged pair (b, a); the exchanged
  // refinement sum telescopes against b \/_nu a.
  double mtilde = chain_core(lb, la, w.nu, n, seq).middle;
  double rhs = std::pow(kfactor(la, lb, n), -seq.r[n]) * wgeo(la, lb, w.nu) +
               arith - 2.0 * std::exp(0.5 * (la + lb)) + mtilde;
  return make_report("y2", arith, rhs, endpoint(w.nu));
}

ChainResult chain_y3(const ScalarPair& p, Weight w, int n) {
  ChainResult res = chain_y1(ScalarPair(p.a * p.a, p.b * p.b), w, n);
  return res;
}

InequalityReport reverse_y4(const ScalarPair& p, Weight w, int n) {
  InequalityReport rep = reverse_y2(ScalarPair(p.a * p.a, p.b * p.b), w, n);
  rep.id = "y4";
  return rep;
}

ChainResult chain_y5(const ScalarPair& p, Weight w, int n) {
  // Identical bound values to the squared-argument chain; only the k=0
  // summand is displayed differently (absorbed into r_0^2 (a-b)^2).
  ChainResult res = chain_y3(p, w, n);
  if (!res.terms.empty()) {
    RefinementSeq seq = refinement_seq(w.nu, 1);
    res.terms[0] = sq(seq.r[0]) * sq(p.a - p.b);
  }
  return res;
}

InequalityReport reverse_y6(const ScalarPair& p, Weight w, int n) {
  n = clamp_depth(n);
  RefinementSeq seq = refinement_seq(w.nu, n);
  double la2 = 2.0 * std::log(p.a), lb2 = 2.0 * std::log(p.b);
  double lhs = sq(arith_mean(p, w));
  double geo2 = wgeo(la2, lb2, w.nu);
  // Sum runs over the exchanged-exponent differences (the form the
  // squared-argument reverse actually provides); expressed through the
  // chain middle of (b^2, a^2) to avoid cancellation.
  double mtilde = chain_core(lb2, la2, w.nu, n, seq).middle;
  double arith_ba = (1.0 - w.nu) * sq(p.b) + w.nu * sq(p.a);
  double rhs = std::pow(kfactor(la2, lb2, n), -seq.r[n]) * geo2 +
               (sq(seq.R[0]) + seq.r[0]) * sq(p.a - p.b) - arith_ba + mtilde;
  return make_report("y6", lhs, rhs, endpoint(w.nu));
}

ChainResult heinz_chain(const ScalarPair& p, Weight w, int n) {
  n = clamp_depth(n);
  RefinementSeq seq = refinement_seq(w.nu, n);
  double la = std::log(p.a), lb = std::log(p.b);
  CorePath ab = chain_core(la, lb, w.nu, n, seq);
  CorePath ba = chain_core(lb, la, w.nu, n, seq);
  double hn = heinz_mean(p, w);
  double K = kfactor(la, lb, n);
  ChainResult res;
  res.lower = std::pow(K, seq.r[n]) * hn;
  res.middle = 0.5 * (ab.middle + ba.middle);
  res.upper = std::pow(K, seq.R[n]) * hn;
  res.terms.resize(n);
  for (int k = 0; k < n; ++k)
    res.terms[k] = 0.5 * (ab.terms[k] + ba.terms[k]);
  res.degenerate = endpoint(w.nu);
  return res;
}

InequalityReport heinz_reverse(const ScalarPair& p, Weight w, int n) {
  n = clamp_depth(n);
  RefinementSeq seq = refinement_seq(w.nu, n);
  double la = std::log(p.a), lb = std::log(p.b);
  double lhs = 0.5 * (p.a + p.b);
  double hmid = 0.5 * (chain_core(la, lb, w.nu, n, seq).middle +
                       chain_core(lb, la, w.nu, n, seq).middle);
  double rhs = std::pow(kfactor(la, lb, n), -seq.r[n]) * heinz_mean(p, w) +
               lhs - 2.0 * std::exp(0.5 * (la + lb)) + hmid;
  return make_report("heinz_rev", lhs, rhs, endpoint(w.nu));
}

InequalityReport dyadic_equality(const ScalarPair& p, std::int64_t numerator,
                                 int t) {
  while (numerator > 0 && numerator % 2 == 0) {
    numerator /= 2;
    --t;
  }
  if (t <= 1 || numerator <= 0 || numerator >= (std::int64_t{1} << t))
    throw std::domain_error(
        "dyadic_equality: need reduced nu = p/2^t with p odd, 0 < p < 2^t, "
        "t > 1");
  double nu = std::ldexp(static_cast<double>(numerator), -t);
  ChainResult c = chain_y1(p, Weight(nu), t - 1);
  InequalityReport rep = make_report("dyadic_eq", c.lower, c.upper, false);
  double tol = 1e-10 * c.upper;
  rep.tol = 1e-10;
  rep.pass = std::abs(c.upper - c.lower) <= tol &&
             std::abs(c.middle - c.lower) <= tol;
  return rep;
}

BaselineBounds baseline_bounds(const ScalarPair& p, Weight w) {
  RefinementSeq seq = refinement_seq(w.nu, 2);
  double la = std::log(p.a), lb = std::log(p.b);
  double arith = arith_mean(p, w);
  double geo = wgeo(la, lb, w.nu);
  double sqd = sq(std::sqrt(p.a) - std::sqrt(p.b));
  double r0 = seq.r[0], R0 = seq.R[0], r1 = seq.r[1], R1 = seq.R[1];
  bool deg = endpoint(w.nu);

  BaselineBounds out;
  double Ksqrt = kantorovich(std::exp(0.5 * (lb - la)));
  out.eq13_kfactor_bound = std::pow(Ksqrt, r1) * geo;

  // (1.1) Kittaneh-Manasrah.
  out.reports.push_back(make_report("eq11", geo + r0 * sqd, arith, deg));
  // (1.2) squared form.
  out.reports.push_back(
      make_report("eq12", sq(geo) + sq(r0) * sq(p.a - p.b), sq(arith), deg));
  // (1.3) K(sqrt h)^{r'} lower bound.
  out.reports.push_back(
      make_report("eq13", out.eq13_kfactor_bound + r0 * sqd, arith, deg));
  // (1.4) reverse with R coefficient.
  out.reports.push_back(make_report("eq14", arith - R0 * sqd,
                                    std::pow(Ksqrt, -r1) * geo, deg));
  // (1.5) reverse with K^{R'} factor.
  out.reports.push_back(make_report("eq15", arith - r0 * sqd,
                                    std::pow(Ksqrt, R1) * geo, deg));

  // (1.7)/(1.8) Liao-Wu, nu-case split. The coefficient is min(2r, 1-2r)
  // and the exponent iterates once more; the quarter-power quadratic
  // attaches to the endpoint nearer to nu.
  double Kq = kantorovich(std::exp(0.25 * (lb - la)));
  double qa = sq(std::pow(p.a * p.b, 0.25) - std::sqrt(p.a));
  double qb = sq(std::pow(p.a * p.b, 0.25) - std::sqrt(p.b));
  double lw_lower, lw_upper;
  if (w.nu <= 0.5) {
    lw_lower = w.nu * sqd + r1 * qa + std::pow(Kq, seq.r[2]) * geo;
    lw_upper = (1.0 - w.nu) * sqd - r1 * qb + std::pow(Kq, -seq.r[2]) * geo;
  } else {
    lw_lower = (1.0 - w.nu) * sqd + r1 * qb + std::pow(Kq, seq.r[2]) * geo;
    lw_upper = w.nu * sqd - r1 * qa + std::pow(Kq, -seq.r[2]) * geo;
  }
  out.reports.push_back(make_report("eq17_lower", lw_lower, arith, deg));
  out.reports.push_back(make_report("eq17_upper", arith, lw_upper, deg));
  return out;
}

}  // namespace youngk
