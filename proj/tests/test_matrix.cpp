#include <doctest.h>

#include <cmath>
#include <sstream>

#include "youngk/harness.hpp"
#include "youngk/matrix.hpp"

using namespace youngk;

namespace {

Mat random_sym(Rng& rng, int dim, double amp) {
  Mat m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j)
      m(i, j) = m(j, i) = rng.uniform(-amp, amp);
  return m;
}

double residual_recon(const SymMatrix& s, const EigenDecomp& d) {
  int n = s.dim();
  Mat lam(n);
  for (int i = 0; i < n; ++i) lam(i, i) = d.lambda[i];
  return max_abs(d.q * lam * transpose(d.q) - s.mat());
}

double residual_orth(const EigenDecomp& d) {
  return max_abs(transpose(d.q) * d.q - Mat::identity(d.q.dim()));
}

}  // namespace

TEST_CASE("jacobi eigensolver residuals across dimensions") {
  Rng seeds(31);
  for (int dim = 1; dim <= 16; ++dim) {
    for (int rep = 0; rep < 5; ++rep) {
      Rng rng(seeds.next());
      SymMatrix s{random_sym(rng, dim, 10.0)};
      EigenDecomp d = eigen_sym(s);
      double scale = std::max(max_abs(s.mat()), 1.0);
      CHECK(residual_recon(s, d) <= 1e-12 * scale);
      CHECK(residual_orth(d) <= 1e-13 * dim);
      for (size_t i = 1; i < d.lambda.size(); ++i)
        CHECK(d.lambda[i - 1] <= d.lambda[i]);
    }
  }
}

TEST_CASE("symmetry and positivity validation") {
  Mat bad(2);
  bad(0, 1) = 1.0;
  bad(1, 0) = 2.0;
  CHECK_THROWS(SymMatrix(bad));

  Mat indef(2);
  indef(0, 0) = 1.0;
  indef(1, 1) = -1.0;
  CHECK_THROWS(SpdMatrix(SymMatrix(indef)));
  CHECK_THROWS(SpdMatrix(SymMatrix(Mat(2))));  // zero matrix
}

TEST_CASE("matrix power group law and inverse") {
  Rng seeds(57);
  for (int rep = 0; rep < 20; ++rep) {
    int dim = 1 + static_cast<int>(seeds.next() % 8);
    SpdMatrix a = gen_spd(seeds.next(), dim, 0.2, 5.0);
    Mat prod = matrix_power(a, 0.3).mat() * matrix_power(a, 0.7).mat();
    CHECK(max_abs(prod - a.mat()) <= 1e-10 * max_abs(a.mat()));
    Mat inv = matrix_power(a, -1.0).mat() * a.mat();
    CHECK(max_abs(inv - Mat::identity(dim)) <= 1e-10);
  }
}

TEST_CASE("weighted geometric mean properties") {
  Rng seeds(58);
  for (int rep = 0; rep < 10; ++rep) {
    int dim = 2 + static_cast<int>(seeds.next() % 5);
    SpdMatrix a = gen_spd(seeds.next(), dim, 0.5, 2.0);
    SpdMatrix b = gen_spd(seeds.next(), dim, 1.0, 4.0);
    CHECK(max_abs(weighted_geo(a, b, Weight(0.0)).mat() - a.mat()) <=
          1e-11 * max_abs(a.mat()));
    CHECK(max_abs(weighted_geo(a, b, Weight(1.0)).mat() - b.mat()) <=
          1e-10 * max_abs(b.mat()));
    // the midpoint solves the Riccati equation G A^{-1} G = B
    Mat g = weighted_geo(a, b, Weight(0.5)).mat();
    Mat riccati = g * matrix_power(a, -1.0).mat() * g;
    CHECK(max_abs(riccati - b.mat()) <= 1e-9 * max_abs(b.mat()));
  }
}

TEST_CASE("commuting pairs reduce to scalar means") {
  EigenDecomp da, db;
  da.q = Mat::identity(3);
  db.q = Mat::identity(3);
  da.lambda = {1.0, 2.0, 3.0};
  db.lambda = {4.0, 5.0, 9.0};
  SpdMatrix a(da), b(db);
  Mat g = weighted_geo(a, b, Weight(0.3)).mat();
  for (int i = 0; i < 3; ++i) {
    double want = std::pow(da.lambda[i], 0.7) * std::pow(db.lambda[i], 0.3);
    CHECK(std::abs(g(i, i) - want) <= 1e-12 * want);
  }
  Mat h = heinz_op(a, b, Weight(0.3)).mat();
  for (int i = 0; i < 3; ++i) {
    double want = heinz_mean(ScalarPair(da.lambda[i], db.lambda[i]),
                             Weight(0.3));
    CHECK(std::abs(h(i, i) - want) <= 1e-12 * want);
  }
}

TEST_CASE("hs norm is orthogonally invariant") {
  Rng seeds(59);
  for (int rep = 0; rep < 10; ++rep) {
    int dim = 2 + static_cast<int>(seeds.next() % 7);
    Rng rng(seeds.next());
    Mat x(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) x(i, j) = rng.uniform(-2.0, 2.0);
    Mat q = gen_orthogonal(seeds.next(), dim);
    Mat r = gen_orthogonal(seeds.next(), dim);
    CHECK(std::abs(hs_norm(transpose(q) * x * r) - hs_norm(x)) <=
          1e-12 * hs_norm(x));
  }
}

TEST_CASE("loewner order test") {
  EigenDecomp d;
  d.q = Mat::identity(2);
  d.lambda = {1.0, 2.0};
  SpdMatrix a(d);
  Mat shifted = a.mat() + 0.5 * Mat::identity(2);
  CHECK(loewner_geq(SymMatrix(shifted), a.sym(), 1e-9).pass);
  LoewnerReport rep = loewner_geq(a.sym(), SymMatrix(shifted), 1e-9);
  CHECK(!rep.pass);
  CHECK(rep.lambda_min == doctest::Approx(-0.5));
}

TEST_CASE("matrix text round trip") {
  Rng rng(61);
  Mat m(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = rng.uniform(-1.0, 1.0);
  std::stringstream ss;
  write_matrix(ss, m);
  Mat back = read_matrix(ss);
  CHECK(back.dim() == 4);
  CHECK(max_abs(back - m) == 0.0);

  std::stringstream bad("2\n1 2 3\n");
  CHECK_THROWS(read_matrix(bad));
  std::stringstream negdim("-1\n");
  CHECK_THROWS(read_matrix(negdim));
}
