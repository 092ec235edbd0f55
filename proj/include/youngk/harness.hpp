#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "youngk/hs_ineq.hpp"
#include "youngk/operator_ineq.hpp"
#include "youngk/scalar.hpp"

// Deterministic instance generation and slack sweeps over every
// inequality family, with JSON-lines / CSV reporting.

namespace youngk {

struct CaseSpec {
  std::uint64_t seed = 1;
  int scalar_count = 10000;
  int operator_count = 50;
  int hs_count = 50;
  double a_lo = 1e-3, a_hi = 1e3;
  double h_lo = 1e-6, h_hi = 1e6;
  std::vector<int> n_set = {1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<int> dims = {1, 2, 3, 5, 8};
  double tol = kRelSlackTol;
  HsSign hs_sign = HsSign::plus;
};

struct ScalarCase {
  double a = 1, b = 1, nu = 0.5;
  int n = 1;
};

struct SlackRecord {
  std::string instance;    // sortable id, e.g. s000042 / m000007 / h000003
  std::string inequality;  // y1L, y1R, y2, ..., op_chain, hs_rev, eq11, ...
  double slack = 0;        // relative: (rhs - lhs) / scale
  double tol = kRelSlackTol;
  bool pass = false;
  std::string error;  // nonempty if evaluation threw; pass is then false
};

struct SweepSummary {
  double min_slack = 0;
  double mean_slack = 0;
  int count = 0;
  int failures = 0;
};

struct SweepResult {
  std::vector<SlackRecord> records;               // sorted by (instance, id)
  std::map<std::string, SweepSummary> summaries;  // per inequality id
  bool all_pass = false;
};

// Counter-based deterministic generator; identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  double uniform();  // [0, 1)
  double uniform(double lo, double hi);

 private:
  std::uint64_t state_;
};

// Stable per-instance seed so parallel evaluation order cannot matter.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Random cases plus forced edges (a=b; nu in {0, 1/2, 1}; dyadic nu up
// to t=10; h in {1 - 1e-8, 1 + 1e-8, 1e6}). count=0 keeps only the
// forced edges.
std::vector<ScalarCase> gen_scalar_cases(const CaseSpec& spec);

Mat gen_orthogonal(std::uint64_t seed, int dim);
SpdMatrix gen_spd(std::uint64_t seed, int dim, double eig_lo, double eig_hi);

// A with spectrum in [1,2], B in [2 gap, 4 gap]; hypothesis holds by
// construction.
OrderedPairInstance gen_ordered_pair(std::uint64_t seed, int dim,
                                     double gap_factor);

SweepResult slack_sweep(const CaseSpec& spec);

void write_jsonl(std::ostream& out, const SweepResult& result);
void write_csv(std::ostream& out, const SweepResult& result);
void write_summary(std::ostream& out, const SweepResult& result);

}  // namespace youngk
