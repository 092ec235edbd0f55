#include <doctest.h>

#include <cmath>

#include "youngk/harness.hpp"
#include "youngk/hs_ineq.hpp"

using namespace youngk;

namespace {

SpdMatrix diag_spd(std::vector<double> vals) {
  EigenDecomp d;
  d.q = Mat::identity(static_cast<int>(vals.size()));
  d.lambda = std::move(vals);
  return SpdMatrix(std::move(d));
}

HsInstance random_instance(std::uint64_t seed, int dim) {
  Rng rng(derive_seed(seed, 9));
  Mat x(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) x(i, j) = rng.uniform(-1.0, 1.0);
  return make_hs_instance(gen_spd(derive_seed(seed, 1), dim, 0.4, 3.0),
                          gen_spd(derive_seed(seed, 2), dim, 0.4, 3.0),
                          std::move(x));
}

}  // namespace

TEST_CASE("kt factors: identities and single-ratio case") {
  Mat id3 = Mat::identity(3);
  HsInstance eye = make_hs_instance(SpdMatrix(SymMatrix(id3)),
                                    SpdMatrix(SymMatrix(id3)), id3);
  KtFactors f = kt_factors(eye, Weight(0.3), 2);
  CHECK(f.under == doctest::Approx(1.0));
  CHECK(f.over == doctest::Approx(1.0));

  HsInstance single = make_hs_instance(diag_spd({1.0}), diag_spd({4.0}),
                                       Mat::identity(1));
  RefinementSeq seq = refinement_seq(0.3, 1);
  KtFactors f1 = kt_factors(single, Weight(0.3), 1);
  CHECK(f1.under ==
        doctest::Approx(std::pow(25.0 / 16.0, seq.r[1])).epsilon(1e-13));
  CHECK(f1.over ==
        doctest::Approx(std::pow(25.0 / 16.0, seq.R[1])).epsilon(1e-13));
}

TEST_CASE("kt factors are the exhaustive grid extremes") {
  HsInstance inst = random_instance(5150, 6);
  for (int t : {1, 2, 3}) {
    Weight w(0.62);
    RefinementSeq seq = refinement_seq(w.nu, t);
    KtFactors f = kt_factors(inst, w, t);
    CHECK(f.under >= 1.0);
    CHECK(f.under <= f.over);
    for (double lam : inst.A.eigen().lambda)
      for (double mu : inst.B.eigen().lambda) {
        double K = kantorovich(std::pow(mu / lam, std::ldexp(1.0, 1 - t)));
        CHECK(f.under <= std::pow(K, seq.r[t]) * (1 + 1e-12));
        CHECK(f.over >= std::pow(K, seq.R[t]) * (1 - 1e-12));
      }
  }
}

TEST_CASE("dimension one reduces to the scalar squared chains") {
  for (double mu : {0.4, 1.0, 5.0}) {
    HsInstance inst =
        make_hs_instance(diag_spd({2.0}), diag_spd({mu}), Mat::identity(1));
    for (double nu : {0.2, 0.5, 0.8}) {
      Weight w(nu);
      for (int t : {1, 2, 3}) {
        ChainResult c = chain_y5(ScalarPair(2.0, mu), w, t);
        HsReport rep = hs_chain_check(inst, w, t, 1e-9);
        CHECK(rep.lower == doctest::Approx(c.lower).epsilon(1e-12));
        CHECK(rep.middle == doctest::Approx(c.middle).epsilon(1e-12));
        CHECK(rep.upper == doctest::Approx(c.upper).epsilon(1e-12));
        CHECK(rep.pass);
        InequalityReport r6 = reverse_y6(ScalarPair(2.0, mu), w, t);
        HsReport rev = hs_reverse_check(inst, w, t, 1e-9);
        CHECK(rev.middle == doctest::Approx(r6.lhs).epsilon(1e-12));
        CHECK(rev.upper == doctest::Approx(r6.rhs).epsilon(1e-12));
        CHECK(rev.pass);
      }
    }
  }
}

TEST_CASE("random instances pass both norm inequalities") {
  Rng seeds(88);
  for (int rep = 0; rep < 20; ++rep) {
    int dim = 2 + static_cast<int>(seeds.next() % 7);
    HsInstance inst = random_instance(seeds.next(), dim);
    Weight w(Rng(seeds.next()).uniform(0.05, 0.95));
    int t = 1 + static_cast<int>(seeds.next() % 3);
    CHECK(hs_chain_check(inst, w, t, 1e-9).pass);
    CHECK(hs_reverse_check(inst, w, t, 1e-9).pass);
  }
}

TEST_CASE("middles are unitarily invariant") {
  Rng seeds(89);
  for (int rep = 0; rep < 8; ++rep) {
    int dim = 2 + static_cast<int>(seeds.next() % 6);
    HsInstance inst = random_instance(seeds.next(), dim);
    Mat q = gen_orthogonal(seeds.next(), dim);
    Mat r = gen_orthogonal(seeds.next(), dim);
    HsInstance conj = make_hs_instance(
        SpdMatrix(SymMatrix(transpose(q) * inst.A.mat() * q)),
        SpdMatrix(SymMatrix(transpose(r) * inst.B.mat() * r)),
        transpose(q) * inst.X * r);
    Weight w(0.37);
    for (int t : {1, 2}) {
      HsReport a = hs_chain_check(inst, w, t, 1e-9);
      HsReport b = hs_chain_check(conj, w, t, 1e-9);
      CHECK(b.middle == doctest::Approx(a.middle).epsilon(1e-10));
      CHECK(b.lower == doctest::Approx(a.lower).epsilon(1e-10));
    }
  }
}

TEST_CASE("norms scale quadratically in X") {
  HsInstance inst = random_instance(31337, 4);
  HsInstance scaled = make_hs_instance(inst.A, inst.B, 2.5 * inst.X);
  Weight w(0.44);
  HsReport a = hs_chain_check(inst, w, 2, 1e-9);
  HsReport b = hs_chain_check(scaled, w, 2, 1e-9);
  CHECK(b.middle == doctest::Approx(6.25 * a.middle).epsilon(1e-11));
  CHECK(b.pass == a.pass);
}

TEST_CASE("minus-sign display fails at the identity") {
  Mat id3 = Mat::identity(3);
  HsInstance inst = make_hs_instance(SpdMatrix(SymMatrix(id3)),
                                     SpdMatrix(SymMatrix(id3)), id3);
  Weight w(0.5);
  HsReport plus = hs_chain_check(inst, w, 1, 1e-9, HsSign::plus);
  CHECK(plus.pass);
  CHECK(plus.middle == doctest::Approx(3.0));  // ||X||^2 = dim
  HsReport minus = hs_chain_check(inst, w, 1, 1e-9, HsSign::minus);
  CHECK(!minus.pass);
  CHECK(minus.middle == doctest::Approx(0.0));
  CHECK(minus.lower == doctest::Approx(3.0));
}
