#include "youngk/oracle.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <stdexcept>
#include <vector>

namespace youngk {
namespace {

using Big = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<60>>;

Big bpow(const Big& x, const Big& e) {
  using boost::multiprecision::pow;
  using boost::multiprecision::exp;
  using boost::multiprecision::log;
  if (e == 0) return Big(1);
  return exp(e * log(x));
}

Big kantor(const Big& t) { return (1 + t) * (1 + t) / (4 * t); }

struct BigSeq {
  std::vector<Big> r;
  std::vector<Big> m;  // integer-valued
  std::vector<Big> frac;  // m_k / 2^k
};

BigSeq big_seq(const Big& nu, int depth) {
  BigSeq s;
  s.r.resize(depth + 1);
  s.m.resize(depth + 1);
  s.frac.resize(depth + 1);
  s.r[0] = nu < 1 - nu ? nu : 1 - nu;
  for (int k = 1; k <= depth; ++k) {
    Big twice = 2 * s.r[k - 1];
    s.r[k] = twice < 1 - twice ? twice : 1 - twice;
  }
  Big pow2 = 1;
  for (int k = 0; k <= depth; ++k) {
    s.m[k] = floor(pow2 * nu);
    s.frac[k] = s.m[k] / pow2;
    pow2 *= 2;
  }
  return s;
}

// Geodesic point a^{1-x} b^x.
Big gpt(const Big& a, const Big& b, const Big& x) {
  return bpow(a, 1 - x) * bpow(b, x);
}

// sum_{k<n} r_k [ sqrt(g(m_k/2^k)) - sqrt(g((m_k+1)/2^k)) ]^2 as displayed.
Big disp_sum(const Big& a, const Big& b, const BigSeq& s, int n) {
  Big total = 0;
  for (int k = 0; k < n; ++k) {
    Big x = s.frac[k];
    Big x1 = x + Big(1) / bpow(Big(2), Big(k));
    Big d = sqrt(gpt(a, b, x)) - sqrt(gpt(a, b, x1));
    total += s.r[k] * d * d;
  }
  return total;
}

OracleChain to_chain(const Big& lo, const Big& mid, const Big& up) {
  return {lo.convert_to<double>(), mid.convert_to<double>(),
          up.convert_to<double>()};
}

}  // namespace

OracleValues highprec_oracle(double a_, double b_, double nu_, int n) {
  if (!(a_ > 0) || !(b_ > 0))
    throw std::domain_error("oracle: a, b must be positive");
  if (!(nu_ >= 0 && nu_ <= 1))
    throw std::domain_error("oracle: nu must lie in [0,1]");
  if (n < 1 || n > kDepthCap)
    throw std::invalid_argument("oracle: n out of range");
  const Big a(a_), b(b_), nu(nu_);
  const Big a2 = a * a, b2 = b * b;
  BigSeq s = big_seq(nu, n);

  const Big arith = (1 - nu) * a + nu * b;
  const Big geo = gpt(a, b, nu);
  const Big geo_sw = gpt(b, a, nu);
  const Big sqab = sqrt(a * b);

  const Big Kn = kantor(bpow(b / a, Big(1) / bpow(Big(2), Big(n))));
  const Big Kn1 = kantor(bpow(b2 / a2, Big(1) / bpow(Big(2), Big(n))));

  OracleValues out;
  out.arith = arith.convert_to<double>();
  out.geo = geo.convert_to<double>();
  out.heinz_mean = ((geo + geo_sw) / 2).convert_to<double>();

  const Big sum_ab = disp_sum(a, b, s, n);
  const Big sum_ba = disp_sum(b, a, s, n);
  out.y1 = to_chain(bpow(Kn, s.r[n]) * geo, arith - sum_ab,
                    bpow(Kn, 1 - s.r[n]) * geo);

  const Big arith2 = (1 - nu) * a2 + nu * b2;
  const Big sum2_ab = disp_sum(a2, b2, s, n);
  const Big sum2_ba = disp_sum(b2, a2, s, n);
  out.y3 = to_chain(bpow(Kn1, s.r[n]) * geo * geo, arith2 - sum2_ab,
                    bpow(Kn1, 1 - s.r[n]) * geo * geo);

  // (a \/ b)^2 - r_0^2 (a-b)^2 - tail equals the y3 middle shifted by
  // the k=0 identity; evaluate the display literally.
  const Big d = a - b;
  Big tail = 0;
  for (int k = 1; k < n; ++k) {
    Big x = s.frac[k];
    Big x1 = x + Big(1) / bpow(Big(2), Big(k));
    Big dk = gpt(a, b, x) - gpt(a, b, x1);
    tail += s.r[k] * dk * dk;
  }
  out.y5 = to_chain(bpow(Kn1, s.r[n]) * geo * geo,
                    arith * arith - s.r[0] * s.r[0] * d * d - tail,
                    bpow(Kn1, 1 - s.r[n]) * geo * geo);

  const Big heinz = (geo + geo_sw) / 2;
  out.heinz = to_chain(bpow(Kn, s.r[n]) * heinz,
                       (a + b) / 2 - (sum_ab + sum_ba) / 2,
                       bpow(Kn, 1 - s.r[n]) * heinz);

  const Big sqd = (sqrt(a) - sqrt(b)) * (sqrt(a) - sqrt(b));
  out.y2_rhs = (bpow(Kn, -s.r[n]) * geo + sqd - sum_ba).convert_to<double>();
  out.y4_rhs =
      (bpow(Kn1, -s.r[n]) * geo * geo + d * d - sum2_ba).convert_to<double>();

  // Reverse squared-mean bound with the exchanged-exponent tail (the
  // form the squared reverse provides).
  Big tail_sw = 0;
  for (int k = 1; k < n; ++k) {
    Big x = s.frac[k];
    Big x1 = x + Big(1) / bpow(Big(2), Big(k));
    Big dk = gpt(b2, a2, x) - gpt(b2, a2, x1);
    tail_sw += s.r[k] * dk * dk;
  }
  out.y6_rhs = (bpow(Kn1, -s.r[n]) * geo * geo +
                (1 - s.r[0]) * (1 - s.r[0]) * d * d - tail_sw)
                   .convert_to<double>();

  out.heinz_rev_rhs = (bpow(Kn, -s.r[n]) * heinz + sqd - (sum_ab + sum_ba) / 2)
                          .convert_to<double>();
  return out;
}

ChainResult highprec_chain_oracle(double a, double b, double nu, int n) {
  OracleValues v = highprec_oracle(a, b, nu, n);
  ChainResult c;
  c.lower = v.y1.lower;
  c.middle = v.y1.middle;
  c.upper = v.y1.upper;
  c.degenerate = (nu == 0.0 || nu == 1.0);
  return c;
}

}  // namespace youngk
