#include "youngk/harness.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace youngk {
namespace {

double rel(double raw, double scale) {
  return raw / (scale > 0 ? scale : 1.0);
}

std::string tag(char kind, int index) {
  std::ostringstream os;
  os << kind << std::setw(6) << std::setfill('0') << index;
  return os.str();
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

class RecordSink {
 public:
  RecordSink(std::vector<SlackRecord>& records, std::string instance,
             double tol)
      : records_(records), instance_(std::move(instance)), tol_(tol) {}

  void add(const std::string& id, double rel_slack) {
    SlackRecord rec;
    rec.instance = instance_;
    rec.inequality = id;
    rec.slack = rel_slack;
    rec.tol = tol_;
    rec.pass = rel_slack >= -tol_;
    records_.push_back(std::move(rec));
  }

  void fail(const std::string& id, const std::string& what) {
    SlackRecord rec;
    rec.instance = instance_;
    rec.inequality = id;
    rec.tol = tol_;
    rec.pass = false;
    rec.error = what;
    records_.push_back(std::move(rec));
  }

 private:
  std::vector<SlackRecord>& records_;
  std::string instance_;
  double tol_;
};

double chain_scale(const ChainResult& c) {
  return std::max({std::abs(c.lower), std::abs(c.middle), std::abs(c.upper)});
}

void scalar_records(RecordSink& sink, const ScalarCase& sc) {
  ScalarPair p(sc.a, sc.b);
  Weight w(sc.nu);

  ChainResult y1 = chain_y1(p, w, sc.n);
  double s1 = chain_scale(y1);
  sink.add("y1L", rel(y1.middle - y1.lower, s1));
  sink.add("y1R", rel(y1.upper - y1.middle, s1));

  InequalityReport y2 = reverse_y2(p, w, sc.n);
  sink.add("y2", rel(y2.slack, std::max(std::abs(y2.lhs), std::abs(y2.rhs))));

  ChainResult y3 = chain_y3(p, w, sc.n);
  double s3 = chain_scale(y3);
  sink.add("y3L", rel(y3.middle - y3.lower, s3));
  sink.add("y3R", rel(y3.upper - y3.middle, s3));

  InequalityReport y4 = reverse_y4(p, w, sc.n);
  sink.add("y4", rel(y4.slack, std::max(std::abs(y4.lhs), std::abs(y4.rhs))));

  ChainResult y5 = chain_y5(p, w, sc.n);
  double s5 = chain_scale(y5);
  sink.add("y5L", rel(y5.middle - y5.lower, s5));
  sink.add("y5R", rel(y5.upper - y5.middle, s5));

  InequalityReport y6 = reverse_y6(p, w, sc.n);
  sink.add("y6", rel(y6.slack, std::max(std::abs(y6.lhs), std::abs(y6.rhs))));

  ChainResult hz = heinz_chain(p, w, sc.n);
  double sh = chain_scale(hz);
  sink.add("heinz",
           rel(std::min(hz.middle - hz.lower, hz.upper - hz.middle), sh));

  InequalityReport hr = heinz_reverse(p, w, sc.n);
  sink.add("heinz_rev",
           rel(hr.slack, std::max(std::abs(hr.lhs), std::abs(hr.rhs))));

  for (const InequalityReport& rep : baseline_bounds(p, w).reports)
    sink.add(rep.id,
             rel(rep.slack, std::max(std::abs(rep.lhs), std::abs(rep.rhs))));
}

}  // namespace

std::uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  // 53 high bits; identical on every IEEE-754 platform.
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  Rng mix(seed ^ (0xd6e8feb86659fd93ULL * (index + 1)));
  mix.next();
  return mix.next();
}

std::vector<ScalarCase> gen_scalar_cases(const CaseSpec& spec) {
  if (!(spec.a_lo > 0 && spec.a_lo <= spec.a_hi) ||
      !(spec.h_lo > 0 && spec.h_lo <= spec.h_hi) || spec.n_set.empty())
    throw std::invalid_argument("gen_scalar_cases: empty or invalid ranges");

  std::vector<ScalarCase> cases;
  cases.push_back({2.0, 2.0, 0.3, 1});              // a = b
  cases.push_back({1.0, 4.0, 0.0, 1});              // endpoint weights
  cases.push_back({1.0, 4.0, 1.0, 2});
  cases.push_back({1.0, 4.0, 0.5, 3});
  for (int t = 2; t <= 10; ++t) {                   // dyadic nu = p / 2^t
    double nu = std::ldexp(static_cast<double>((1 << (t - 1)) + 1), -t);
    cases.push_back({1.0, 7.0, nu, t - 1});
  }
  cases.push_back({1.0, 1.0 - 1e-8, 0.3, 4});       // h near 1 and extreme
  cases.push_back({1.0, 1.0 + 1e-8, 0.3, 4});
  cases.push_back({1.0, 1e6, 0.3, 4});

  for (int i = 0; i < spec.scalar_count; ++i) {
    Rng rng(derive_seed(spec.seed, static_cast<std::uint64_t>(i)));
    ScalarCase sc;
    sc.a = std::exp(rng.uniform(std::log(spec.a_lo), std::log(spec.a_hi)));
    double h = std::exp(rng.uniform(std::log(spec.h_lo), std::log(spec.h_hi)));
    sc.b = sc.a * h;
    sc.nu = rng.uniform(1e-9, 1.0 - 1e-9);
    sc.n = spec.n_set[rng.next() % spec.n_set.size()];
    cases.push_back(sc);
  }
  return cases;
}

Mat gen_orthogonal(std::uint64_t seed, int dim) {
  Rng rng(seed);
  Mat q = Mat::identity(dim);
  std::vector<double> v(dim);
  for (int rep = 0; rep < dim; ++rep) {
    double norm2 = 0;
    for (int i = 0; i < dim; ++i) {
      v[i] = rng.uniform(-1.0, 1.0);
      norm2 += v[i] * v[i];
    }
    if (norm2 < 1e-12) {
      std::fill(v.begin(), v.end(), 0.0);
      v[rep] = 1.0;
      norm2 = 1.0;
    }
    double inv = 1.0 / std::sqrt(norm2);
    for (double& x : v) x *= inv;
    for (int j = 0; j < dim; ++j) {  // q <- (I - 2 v v^T) q, column-wise
      double s = 0;
      for (int i = 0; i < dim; ++i) s += v[i] * q(i, j);
      for (int i = 0; i < dim; ++i) q(i, j) -= 2.0 * v[i] * s;
    }
  }
  return q;
}

SpdMatrix gen_spd(std::uint64_t seed, int dim, double eig_lo, double eig_hi) {
  if (!(eig_lo > 0 && eig_lo <= eig_hi))
    throw std::invalid_argument("gen_spd: need 0 < eig_lo <= eig_hi");
  Rng rng(derive_seed(seed, 0));
  EigenDecomp d;
  d.lambda.resize(dim);
  for (double& x : d.lambda) x = rng.uniform(eig_lo, eig_hi);
  std::sort(d.lambda.begin(), d.lambda.end());
  d.q = gen_orthogonal(derive_seed(seed, 1), dim);
  return SpdMatrix(std::move(d));
}

OrderedPairInstance gen_ordered_pair(std::uint64_t seed, int dim,
                                     double gap_factor) {
  if (!(gap_factor >= 1.0))
    throw std::invalid_argument("gen_ordered_pair: gap_factor must be >= 1");
  SpdMatrix a = gen_spd(derive_seed(seed, 101), dim, 1.0, 2.0);
  SpdMatrix b = gen_spd(derive_seed(seed, 202), dim, 2.0 * gap_factor,
                        4.0 * gap_factor);
  return make_ordered_pair(std::move(a), std::move(b));
}

SweepResult slack_sweep(const CaseSpec& spec) {
  SweepResult result;

  std::vector<ScalarCase> scalars = gen_scalar_cases(spec);
  for (size_t i = 0; i < scalars.size(); ++i) {
    RecordSink sink(result.records, tag('s', static_cast<int>(i)), spec.tol);
    try {
      scalar_records(sink, scalars[i]);
    } catch (const std::exception& e) {
      sink.fail("scalar", e.what());
    }
  }

  const double gaps[] = {1.0, 1.5, 10.0};
  const double nus[] = {0.1, 0.25, 0.5, 0.7, 0.9};
  const int depths[] = {1, 2, 3};
  for (int i = 0; i < spec.operator_count; ++i) {
    RecordSink sink(result.records, tag('m', i), spec.tol);
    try {
      int dim = spec.dims[i % spec.dims.size()];
      double gap = gaps[(i / 3) % 3];
      Weight w(nus[i % 5]);
      int n = depths[i % 3];
      OrderedPairInstance inst = gen_ordered_pair(
          derive_seed(spec.seed, 70000 + static_cast<std::uint64_t>(i)), dim,
          gap);
      OperatorChainReport c = op_chain_check(inst, w, n, spec.tol);
      sink.add("op_chain",
               rel(std::min(c.lambda_min_left, c.lambda_min_right), c.scale));
      OperatorChainReport r = op_reverse_check(inst, w, n, spec.tol);
      sink.add("op_rev", rel(r.lambda_min_left, r.scale));
      OperatorChainReport hz = op_heinz_check(inst, w, n, spec.tol);
      sink.add("op_heinz",
               rel(std::min(hz.lambda_min_left, hz.lambda_min_right),
                   hz.scale));
      OperatorChainReport lw = liao_wu_baseline_check(inst, w, spec.tol);
      sink.add("op_baseline",
               rel(std::min(lw.lambda_min_left, lw.lambda_min_right),
                   lw.scale));
    } catch (const std::exception& e) {
      sink.fail("operator", e.what());
    }
  }

  for (int i = 0; i < spec.hs_count; ++i) {
    RecordSink sink(result.records, tag('h', i), spec.tol);
    try {
      HsInstance inst = [&] {
        if (i == 0) {  // forced sign-probe instance
          Mat id2 = Mat::identity(2);
          return make_hs_instance(SpdMatrix(SymMatrix(id2)),
                                  SpdMatrix(SymMatrix(id2)), id2);
        }
        std::uint64_t s = derive_seed(spec.seed, 90000 + i);
        int dim = spec.dims[i % spec.dims.size()];
        if (dim > 8) dim = 8;
        Rng rng(derive_seed(s, 3));
        Mat x(dim);
        for (int r = 0; r < dim; ++r)
          for (int c = 0; c < dim; ++c) x(r, c) = rng.uniform(-1.0, 1.0);
        return make_hs_instance(gen_spd(derive_seed(s, 1), dim, 0.3, 4.0),
                                gen_spd(derive_seed(s, 2), dim, 0.3, 4.0),
                                std::move(x));
      }();
      Weight w(i == 0 ? 0.5
                      : Rng(derive_seed(spec.seed, 91000 + i)).uniform(0.05,
                                                                       0.95));
      int t = 1 + i % 3;
      HsReport c = hs_chain_check(inst, w, t, spec.tol, spec.hs_sign);
      sink.add("hs_chain",
               rel(std::min(c.slack_left, c.slack_right), c.scale));
      HsReport r = hs_reverse_check(inst, w, t, spec.tol, spec.hs_sign);
      sink.add("hs_rev", rel(r.slack_right, r.scale));
    } catch (const std::exception& e) {
      sink.fail("hs", e.what());
    }
  }

  std::sort(result.records.begin(), result.records.end(),
            [](const SlackRecord& x, const SlackRecord& y) {
              return std::tie(x.instance, x.inequality) <
                     std::tie(y.instance, y.inequality);
            });

  result.all_pass = true;
  for (const SlackRecord& rec : result.records) {
    SweepSummary& s = result.summaries[rec.inequality];
    if (s.count == 0 || rec.slack < s.min_slack) s.min_slack = rec.slack;
    s.mean_slack += rec.slack;
    ++s.count;
    if (!rec.pass) {
      ++s.failures;
      result.all_pass = false;
    }
  }
  for (auto& [id, s] : result.summaries)
    if (s.count > 0) s.mean_slack /= s.count;
  return result;
}

void write_jsonl(std::ostream& out, const SweepResult& result) {
  for (const SlackRecord& rec : result.records) {
    out << "{\"instance\":\"" << rec.instance << "\",\"inequality\":\""
        << rec.inequality << "\",\"slack\":" << fmt(rec.slack)
        << ",\"tol\":" << fmt(rec.tol)
        << ",\"pass\":" << (rec.pass ? "true" : "false") << ",\"error\":\""
        << rec.error << "\"}\n";
  }
}

void write_csv(std::ostream& out, const SweepResult& result) {
  out << "instance,inequality,slack,tol,pass,error\n";
  for (const SlackRecord& rec : result.records) {
    out << rec.instance << ',' << rec.inequality << ',' << fmt(rec.slack)
        << ',' << fmt(rec.tol) << ',' << (rec.pass ? "true" : "false") << ','
        << rec.error << "\n";
  }
}

void write_summary(std::ostream& out, const SweepResult& result) {
  out << "inequality        count   failures   min slack        mean slack\n";
  for (const auto& [id, s] : result.summaries) {
    out << std::left << std::setw(18) << id << std::right << std::setw(5)
        << s.count << std::setw(11) << s.failures << "   " << std::setw(14)
        << std::setprecision(6) << std::scientific << s.min_slack << "   "
        << std::setw(14) << s.mean_slack << "\n";
    out << std::defaultfloat;
  }
  out << (result.all_pass ? "ALL PASS" : "FAILURES PRESENT") << "\n";
}

}  // namespace youngk
