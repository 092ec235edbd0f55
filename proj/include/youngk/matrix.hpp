#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <vector>

#include "youngk/scalar.hpp"

// Dense real symmetric positive definite kernel: cyclic-Jacobi
// eigendecomposition, spectral function application, operator means,
// Loewner-order testing and the Hilbert-Schmidt norm.

namespace youngk {

class Mat {
 public:
  Mat() = default;
  explicit Mat(int dim) : dim_(dim), v_(static_cast<size_t>(dim) * dim, 0.0) {}
  static Mat identity(int dim);

  int dim() const { return dim_; }
  double& operator()(int i, int j) { return v_[static_cast<size_t>(i) * dim_ + j]; }
  double operator()(int i, int j) const { return v_[static_cast<size_t>(i) * dim_ + j]; }

 private:
  int dim_ = 0;
  std::vector<double> v_;
};

Mat operator+(const Mat& x, const Mat& y);
Mat operator-(const Mat& x, const Mat& y);
Mat operator*(const Mat& x, const Mat& y);
Mat operator*(double c, const Mat& x);
Mat transpose(const Mat& x);
double max_abs(const Mat& x);

// Hilbert-Schmidt (Frobenius) norm.
double hs_norm(const Mat& m);

struct EigenDecomp {
  Mat q;                       // orthogonal, eigenvectors in columns
  std::vector<double> lambda;  // ascending
};

// Validated symmetric matrix; stored exactly symmetrized.
class SymMatrix {
 public:
  explicit SymMatrix(Mat m);  // requires symmetry within 1e-13 * maxabs
  const Mat& mat() const { return m_; }
  int dim() const { return m_.dim(); }

 private:
  Mat m_;
};

// Positive definite matrix with its eigendecomposition cached once at
// construction; immutable thereafter.
class SpdMatrix {
 public:
  explicit SpdMatrix(SymMatrix s);  // rejects lambda_min <= 1e-13 lambda_max
  // Assemble from a known spectral factorization (no re-decomposition);
  // used so that powers of one matrix share an exact eigenbasis.
  explicit SpdMatrix(EigenDecomp d);

  const Mat& mat() const { return m_; }
  int dim() const { return m_.dim(); }
  const EigenDecomp& eigen() const { return *eig_; }
  SymMatrix sym() const { return SymMatrix(m_); }

 private:
  Mat m_;
  std::shared_ptr<const EigenDecomp> eig_;
};

struct SpectrumBounds {
  double lo = 0;  // m(X)
  double hi = 0;  // M(X)
};

// Cyclic Jacobi rotations; deterministic for fixed input.
EigenDecomp eigen_sym(const SymMatrix& s);

SymMatrix spectral_apply(const SpdMatrix& p,
                         const std::function<double(double)>& f);
SpdMatrix matrix_power(const SpdMatrix& p, double t);

// A #_nu B = A^{1/2} (A^{-1/2} B A^{-1/2})^nu A^{1/2}.
SpdMatrix weighted_geo(const SpdMatrix& a, const SpdMatrix& b, Weight w);
SpdMatrix weighted_arith(const SpdMatrix& a, const SpdMatrix& b, Weight w);
SymMatrix heinz_op(const SpdMatrix& a, const SpdMatrix& b, Weight w);

struct LoewnerReport {
  bool pass = false;
  double lambda_min = 0;  // of P - Q
  double scale = 0;       // max(maxabs(P), maxabs(Q))
};

// Tests P >= Q in the Loewner order: lambda_min(P-Q) >= -tol * scale.
LoewnerReport loewner_geq(const SymMatrix& p, const SymMatrix& q, double tol);

SpectrumBounds spectrum_bounds(const SymMatrix& p);

// Text fixture format: first line dim, then dim rows of dim decimals.
Mat read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const Mat& m);

}  // namespace youngk
