#include "youngk/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace youngk {

Mat Mat::identity(int dim) {
  Mat m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

namespace {

void check_same_dim(const Mat& x, const Mat& y) {
  if (x.dim() != y.dim())
    throw std::invalid_argument("matrix dimension mismatch");
}

}  // namespace

Mat operator+(const Mat& x, const Mat& y) {
  check_same_dim(x, y);
  Mat r(x.dim());
  for (int i = 0; i < x.dim(); ++i)
    for (int j = 0; j < x.dim(); ++j) r(i, j) = x(i, j) + y(i, j);
  return r;
}

Mat operator-(const Mat& x, const Mat& y) {
  check_same_dim(x, y);
  Mat r(x.dim());
  for (int i = 0; i < x.dim(); ++i)
    for (int j = 0; j < x.dim(); ++j) r(i, j) = x(i, j) - y(i, j);
  return r;
}

Mat operator*(const Mat& x, const Mat& y) {
  check_same_dim(x, y);
  int n = x.dim();
  Mat r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      double xik = x(i, k);
      if (xik == 0.0) continue;
      for (int j = 0; j < n; ++j) r(i, j) += xik * y(k, j);
    }
  return r;
}

Mat operator*(double c, const Mat& x) {
  Mat r(x.dim());
  for (int i = 0; i < x.dim(); ++i)
    for (int j = 0; j < x.dim(); ++j) r(i, j) = c * x(i, j);
  return r;
}

Mat transpose(const Mat& x) {
  Mat r(x.dim());
  for (int i = 0; i < x.dim(); ++i)
    for (int j = 0; j < x.dim(); ++j) r(i, j) = x(j, i);
  return r;
}

double max_abs(const Mat& x) {
  double m = 0;
  for (int i = 0; i < x.dim(); ++i)
    for (int j = 0; j < x.dim(); ++j) m = std::max(m, std::abs(x(i, j)));
  return m;
}

double hs_norm(const Mat& m) {
  double s = 0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) s += m(i, j) * m(i, j);
  return std::sqrt(s);
}

SymMatrix::SymMatrix(Mat m) : m_(std::move(m)) {
  double scale = max_abs(m_);
  for (int i = 0; i < m_.dim(); ++i)
    for (int j = i + 1; j < m_.dim(); ++j) {
      if (std::abs(m_(i, j) - m_(j, i)) > 1e-13 * scale)
        throw std::invalid_argument("SymMatrix: input is not symmetric");
      double avg = 0.5 * (m_(i, j) + m_(j, i));
      m_(i, j) = avg;
      m_(j, i) = avg;
    }
}

EigenDecomp eigen_sym(const SymMatrix& s) {
  int n = s.dim();
  Mat a = s.mat();
  Mat q = Mat::identity(n);
  double scale = max_abs(a);

  auto off_norm = [&] {
    double o = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) o += 2.0 * a(i, j) * a(i, j);
    return std::sqrt(o);
  };

  const int max_sweeps = 30;
  const double thresh = 1e-14 * std::max(scale, 1e-300);
  int sweep = 0;
  for (; sweep < max_sweeps && off_norm() > thresh; ++sweep) {
    for (int p = 0; p < n - 1; ++p)
      for (int qi = p + 1; qi < n; ++qi) {
        double apq = a(p, qi);
        if (std::abs(apq) <= 1e-300) {
          a(p, qi) = a(qi, p) = 0.0;
          continue;
        }
        double theta = (a(qi, qi) - a(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double sgn = t * c;
        double tau = sgn / (1.0 + c);
        double app = a(p, p), aqq = a(qi, qi);
        a(p, p) = app - t * apq;
        a(qi, qi) = aqq + t * apq;
        a(p, qi) = a(qi, p) = 0.0;
        for (int i = 0; i < n; ++i) {
          if (i != p && i != qi) {
            double aip = a(i, p), aiq = a(i, qi);
            a(i, p) = a(p, i) = aip - sgn * (aiq + tau * aip);
            a(i, qi) = a(qi, i) = aiq + sgn * (aip - tau * aiq);
          }
          double qip = q(i, p), qiq = q(i, qi);
          q(i, p) = qip - sgn * (qiq + tau * qip);
          q(i, qi) = qiq + sgn * (qip - tau * qiq);
        }
      }
  }
  if (off_norm() > thresh) {
    std::ostringstream msg;
    msg << "eigen_sym: no convergence after " << max_sweeps
        << " sweeps, off-diagonal residual " << off_norm();
    throw std::runtime_error(msg.str());
  }

  EigenDecomp d;
  d.lambda.resize(n);
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int i, int j) { return a(i, i) < a(j, j); });
  d.q = Mat(n);
  for (int j = 0; j < n; ++j) {
    d.lambda[j] = a(idx[j], idx[j]);
    for (int i = 0; i < n; ++i) d.q(i, j) = q(i, idx[j]);
  }
  return d;
}

namespace {

Mat assemble(const EigenDecomp& d, const std::vector<double>& vals) {
  int n = d.q.dim();
  Mat r(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double s = 0;
      for (int k = 0; k < n; ++k) s += d.q(i, k) * vals[k] * d.q(j, k);
      r(i, j) = r(j, i) = s;
    }
  return r;
}

}  // namespace

SpdMatrix::SpdMatrix(SymMatrix s) : m_(s.mat()) {
  auto eig = std::make_shared<EigenDecomp>(eigen_sym(s));
  double lmax = eig->lambda.back();
  if (!(eig->lambda.front() > 1e-13 * lmax) || !(lmax > 0))
    throw std::domain_error("SpdMatrix: matrix is not positive definite");
  eig_ = std::move(eig);
}

SpdMatrix::SpdMatrix(EigenDecomp d)
    : m_(assemble(d, d.lambda)),
      eig_(std::make_shared<EigenDecomp>(std::move(d))) {}

SymMatrix spectral_apply(const SpdMatrix& p,
                         const std::function<double(double)>& f) {
  const EigenDecomp& d = p.eigen();
  std::vector<double> vals(d.lambda.size());
  for (size_t i = 0; i < vals.size(); ++i) {
    vals[i] = f(d.lambda[i]);
    if (!std::isfinite(vals[i]))
      throw std::domain_error("spectral_apply: f undefined on the spectrum");
  }
  return SymMatrix(assemble(d, vals));
}

SpdMatrix matrix_power(const SpdMatrix& p, double t) {
  EigenDecomp d;
  d.q = p.eigen().q;
  d.lambda.resize(p.eigen().lambda.size());
  for (size_t i = 0; i < d.lambda.size(); ++i)
    d.lambda[i] = std::pow(p.eigen().lambda[i], t);
  return SpdMatrix(std::move(d));
}

SpdMatrix weighted_geo(const SpdMatrix& a, const SpdMatrix& b, Weight w) {
  check_same_dim(a.mat(), b.mat());
  Mat ah = matrix_power(a, 0.5).mat();
  Mat aih = matrix_power(a, -0.5).mat();
  SpdMatrix x{SymMatrix(aih * b.mat() * aih)};
  Mat xw = matrix_power(x, w.nu).mat();
  return SpdMatrix{SymMatrix(ah * xw * ah)};
}

SpdMatrix weighted_arith(const SpdMatrix& a, const SpdMatrix& b, Weight w) {
  check_same_dim(a.mat(), b.mat());
  return SpdMatrix{
      SymMatrix((1.0 - w.nu) * a.mat() + w.nu * b.mat())};
}

SymMatrix heinz_op(const SpdMatrix& a, const SpdMatrix& b, Weight w) {
  check_same_dim(a.mat(), b.mat());
  Mat s = weighted_geo(a, b, w).mat() +
          weighted_geo(a, b, Weight(1.0 - w.nu)).mat();
  return SymMatrix(0.5 * s);
}

LoewnerReport loewner_geq(const SymMatrix& p, const SymMatrix& q, double tol) {
  LoewnerReport rep;
  rep.scale = std::max(max_abs(p.mat()), max_abs(q.mat()));
  EigenDecomp d = eigen_sym(SymMatrix(p.mat() - q.mat()));
  rep.lambda_min = d.lambda.front();
  rep.pass = rep.lambda_min >= -tol * rep.scale;
  return rep;
}

SpectrumBounds spectrum_bounds(const SymMatrix& p) {
  EigenDecomp d = eigen_sym(p);
  return {d.lambda.front(), d.lambda.back()};
}

Mat read_matrix(std::istream& in) {
  int n = 0;
  if (!(in >> n) || n <= 0)
    throw std::runtime_error("read_matrix: bad dimension line");
  Mat m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(in >> m(i, j)))
        throw std::runtime_error("read_matrix: truncated matrix data");
  return m;
}

void write_matrix(std::ostream& out, const Mat& m) {
  out << m.dim() << "\n";
  out.precision(17);
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) out << (j ? " " : "") << m(i, j);
    out << "\n";
  }
}

}  // namespace youngk
