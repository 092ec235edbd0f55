#include <doctest.h>

#include <cmath>
#include <string>

#include "youngk/harness.hpp"
#include "youngk/operator_ineq.hpp"

using namespace youngk;

namespace {

SpdMatrix diag_spd(std::vector<double> vals) {
  EigenDecomp d;
  d.q = Mat::identity(static_cast<int>(vals.size()));
  d.lambda = std::move(vals);
  return SpdMatrix(std::move(d));
}

}  // namespace

TEST_CASE("hypothesis violation names the spectra") {
  SpdMatrix a = diag_spd({1.0, 3.0});
  SpdMatrix b = diag_spd({2.0, 5.0});  // m(B) = 2 < 3 = M(A)
  try {
    make_ordered_pair(a, b);
    FAIL("expected a hypothesis error");
  } catch (const std::domain_error& e) {
    std::string what = e.what();
    CHECK(what.find("M(A) <= m(B)") != std::string::npos);
    CHECK(what.find("3") != std::string::npos);
    CHECK(what.find("2") != std::string::npos);
  }
  // touching spectra give h = 1 and are accepted
  CHECK(make_ordered_pair(diag_spd({1.0, 2.0}), diag_spd({2.0, 4.0})).h ==
        doctest::Approx(1.0));
}

TEST_CASE("refinement sum collapses for n=1 and vanishes at A=B") {
  OrderedPairInstance inst =
      make_ordered_pair(diag_spd({1.0, 2.0}), diag_spd({3.0, 5.0}));
  Weight w(0.3);
  Mat sum = op_refinement_sum(inst, w, 1).mat();
  Mat sharp = weighted_geo(inst.A, inst.B, Weight(0.5)).mat();
  Mat expect = 0.3 * (inst.A.mat() - 2.0 * sharp + inst.B.mat());
  CHECK(max_abs(sum - expect) <= 1e-12 * max_abs(expect));

  OrderedPairInstance same =
      make_ordered_pair(diag_spd({2.0, 2.0}), diag_spd({2.0, 2.0}));
  CHECK(max_abs(op_refinement_sum(same, w, 3).mat()) <= 1e-12);
}

TEST_CASE("diagonal example with the global ratio") {
  // A = diag(1,2), B = diag(4,9): h = 4/2 = 2 for BOTH entries.
  OrderedPairInstance inst =
      make_ordered_pair(diag_spd({1.0, 2.0}), diag_spd({4.0, 9.0}));
  CHECK(inst.h == doctest::Approx(2.0));
  Weight w(0.25);
  Mat middle = weighted_arith(inst.A, inst.B, w).mat() -
               op_refinement_sum(inst, w, 1).mat();
  CHECK(middle(0, 0) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(middle(1, 1) ==
        doctest::Approx(3.1213203435596425732).epsilon(1e-12));
  // lower bound entries: K(2^{1/2})^{r_1} times the geometric means
  RefinementSeq seq = refinement_seq(0.25, 1);
  double kf = std::pow(kantorovich(std::sqrt(2.0)), seq.r[1]);
  Mat geo = weighted_geo(inst.A, inst.B, w).mat();
  CHECK(kf * geo(0, 0) ==
        doctest::Approx(1.4354999727550750764).epsilon(1e-12));
  CHECK(kf * geo(1, 1) ==
        doctest::Approx(2.9567956789604663426).epsilon(1e-12));
  CHECK(op_chain_check(inst, w, 1, 1e-9).pass);
}

TEST_CASE("one-dimensional instances reproduce the scalar chains") {
  for (double h : {1.0, 2.0, 7.5}) {
    OrderedPairInstance inst =
        make_ordered_pair(diag_spd({1.0}), diag_spd({h}));
    for (double nu : {0.1, 0.5, 0.85}) {
      Weight w(nu);
      for (int n : {1, 2, 3}) {
        ScalarPair p(1.0, h);
        ChainResult c = chain_y1(p, w, n);
        Mat middle = weighted_arith(inst.A, inst.B, w).mat() -
                     op_refinement_sum(inst, w, n).mat();
        CHECK(middle(0, 0) == doctest::Approx(c.middle).epsilon(1e-12));
        CHECK(op_chain_check(inst, w, n, 1e-9).pass);
        CHECK(op_reverse_check(inst, w, n, 1e-9).pass);
        CHECK(op_heinz_check(inst, w, n, 1e-9).pass);
        CHECK(liao_wu_baseline_check(inst, w, 1e-9).pass);
      }
    }
  }
}

TEST_CASE("random noncommuting instances pass every check") {
  Rng seeds(411);
  for (int rep = 0; rep < 12; ++rep) {
    int dim = 2 + static_cast<int>(seeds.next() % 7);
    double gap = 1.0 + 0.5 * static_cast<double>(seeds.next() % 4);
    OrderedPairInstance inst = gen_ordered_pair(seeds.next(), dim, gap);
    for (double nu : {0.25, 0.7}) {
      Weight w(nu);
      int n = 1 + static_cast<int>(seeds.next() % 3);
      OperatorChainReport chain = op_chain_check(inst, w, n, 1e-9);
      CHECK(chain.pass);
      CHECK(chain.h >= gap);
      CHECK(op_reverse_check(inst, w, n, 1e-9).pass);
      CHECK(op_heinz_check(inst, w, n, 1e-9).pass);
      CHECK(liao_wu_baseline_check(inst, w, 1e-9).pass);
    }
  }
}

TEST_CASE("verdicts are invariant under joint scaling") {
  OrderedPairInstance inst = gen_ordered_pair(902, 4, 1.5);
  double c = 37.5;
  OrderedPairInstance scaled = make_ordered_pair(
      SpdMatrix(SymMatrix(c * inst.A.mat())),
      SpdMatrix(SymMatrix(c * inst.B.mat())));
  CHECK(scaled.h == doctest::Approx(inst.h).epsilon(1e-12));
  Weight w(0.35);
  OperatorChainReport base = op_chain_check(inst, w, 2, 1e-9);
  OperatorChainReport rep = op_chain_check(scaled, w, 2, 1e-9);
  CHECK(rep.pass == base.pass);
  CHECK(rep.lambda_min_left ==
        doctest::Approx(c * base.lambda_min_left).epsilon(1e-6));
}
