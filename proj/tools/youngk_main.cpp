#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "youngk/harness.hpp"
#include "youngk/hs_ineq.hpp"
#include "youngk/matrix.hpp"
#include "youngk/operator_ineq.hpp"
#include "youngk/oracle.hpp"
#include "youngk/scalar.hpp"

namespace {

using namespace youngk;

struct ParsedNu {
  double value = 0.5;
  bool exact_dyadic = false;  // entered as p / 2^t, reduced, t > 1
  std::int64_t p = 0;
  int t = 0;
};

// Accepts a plain decimal or an exact fraction "p/q". Only the exact
// fraction form with a power-of-two denominator arms the dyadic
// equality path: a decimal near p/2^t is proximity, not equality.
ParsedNu parse_nu(const std::string& text) {
  ParsedNu out;
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    size_t used = 0;
    out.value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("bad nu: " + text);
    return out;
  }
  std::int64_t p = std::stoll(text.substr(0, slash));
  std::int64_t q = std::stoll(text.substr(slash + 1));
  if (p < 0 || q <= 0 || p > q) throw std::invalid_argument("bad nu: " + text);
  std::int64_t g = std::gcd(p, q);
  p /= g;
  q /= g;
  out.value = static_cast<double>(p) / static_cast<double>(q);
  int t = 0;
  std::int64_t qq = q;
  while (qq % 2 == 0) {
    qq /= 2;
    ++t;
  }
  if (qq == 1 && t > 1 && p > 0) {
    out.exact_dyadic = true;
    out.p = p;
    out.t = t;
  }
  return out;
}

struct Options {
  std::uint64_t seed = 1;
  double tol = kRelSlackTol;
  std::string format = "table";
  std::string out_path;
  std::string hs_sign = "plus";
  int depth_cap = kDepthCap;
};

HsSign sign_of(const Options& opt) {
  return opt.hs_sign == "minus" ? HsSign::minus : HsSign::plus;
}

int clamp_n(const Options& opt, int n) { return std::min(n, opt.depth_cap); }

std::string fmt(double x, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

Mat load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open matrix file: " + path);
  return read_matrix(in);
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

int run_verify(const Options& opt) {
  CaseSpec spec;
  spec.seed = opt.seed;
  spec.tol = opt.tol;
  spec.hs_sign = sign_of(opt);
  SweepResult result = slack_sweep(spec);
  write_summary(std::cout, result);
  if (!result.all_pass) {
    for (const SlackRecord& rec : result.records)
      if (!rec.pass)
        std::cout << "FAIL " << rec.instance << " " << rec.inequality
                  << " slack " << fmt(rec.slack, 12)
                  << (rec.error.empty() ? "" : " error: " + rec.error) << "\n";
  }
  if (!opt.out_path.empty()) {
    std::ofstream file;
    std::ostream& out = open_out(file, opt.out_path);
    if (opt.format == "csv")
      write_csv(out, result);
    else
      write_jsonl(out, result);
  }
  return result.all_pass ? 0 : 1;
}

void print_scalar_table(double a, double b, const ParsedNu& nu, int n,
                        const Options& opt) {
  const int digits = opt.format == "table" ? 12 : 17;
  ScalarPair p(a, b);
  Weight w(nu.value);
  auto line3 = [&](const char* id, const ChainResult& c) {
    std::cout << id << "  lower " << fmt(c.lower, digits) << "  middle "
              << fmt(c.middle, digits) << "  upper " << fmt(c.upper, digits)
              << "\n";
  };
  auto line2 = [&](const InequalityReport& rep) {
    std::cout << rep.id << "  lhs " << fmt(rep.lhs, digits) << "  rhs "
              << fmt(rep.rhs, digits) << "  slack " << fmt(rep.slack, digits)
              << (rep.pass ? "" : "  FAIL") << "\n";
  };
  std::cout << "a " << fmt(a, digits) << "  b " << fmt(b, digits) << "  nu "
            << fmt(nu.value, digits) << "  n " << n << "\n";
  std::cout << "arith " << fmt(arith_mean(p, w), digits) << "  geo "
            << fmt(geo_mean(p, w), digits) << "  heinz "
            << fmt(heinz_mean(p, w), digits) << "\n";
  line3("y1   ", chain_y1(p, w, n));
  line2(reverse_y2(p, w, n));
  line3("y3   ", chain_y3(p, w, n));
  line2(reverse_y4(p, w, n));
  line3("y5   ", chain_y5(p, w, n));
  line2(reverse_y6(p, w, n));
  line3("heinz", heinz_chain(p, w, n));
  line2(heinz_reverse(p, w, n));
  for (const InequalityReport& rep : baseline_bounds(p, w).reports)
    line2(rep);
  if (nu.exact_dyadic) {
    InequalityReport eq = dyadic_equality(p, nu.p, nu.t);
    std::cout << "equality (dyadic): nu = " << nu.p << "/2^" << nu.t
              << ", chain collapses at n = " << nu.t - 1 << " ("
              << (eq.pass ? "verified" : "NOT VERIFIED") << ")\n";
  }
}

int run_eval_matrix(const Options& opt, const std::string& a_path,
                    const std::string& b_path, const std::string& x_path,
                    double nu, int n) {
  const int digits = opt.format == "table" ? 12 : 17;
  SpdMatrix a{SymMatrix(load_matrix(a_path))};
  SpdMatrix b{SymMatrix(load_matrix(b_path))};
  Weight w(nu);
  bool pass = true;
  if (!x_path.empty()) {
    HsInstance inst = make_hs_instance(a, b, load_matrix(x_path));
    HsReport c = hs_chain_check(inst, w, n, opt.tol, sign_of(opt));
    HsReport r = hs_reverse_check(inst, w, n, opt.tol, sign_of(opt));
    std::cout << "hs_chain  lower " << fmt(c.lower, digits) << "  middle "
              << fmt(c.middle, digits) << "  upper " << fmt(c.upper, digits)
              << (c.pass ? "" : "  FAIL") << "\n";
    std::cout << "hs_rev    lhs " << fmt(r.middle, digits) << "  rhs "
              << fmt(r.upper, digits) << (r.pass ? "" : "  FAIL") << "\n";
    pass = c.pass && r.pass;
  } else {
    OrderedPairInstance inst = make_ordered_pair(a, b);
    auto show = [&](const char* id, const OperatorChainReport& rep) {
      std::cout << id << "  h " << fmt(rep.h, digits) << "  lambda_min_left "
                << fmt(rep.lambda_min_left, digits) << "  lambda_min_right "
                << fmt(rep.lambda_min_right, digits)
                << (rep.pass ? "" : "  FAIL") << "\n";
      pass = pass && rep.pass;
    };
    show("op_chain   ", op_chain_check(inst, w, n, opt.tol));
    show("op_rev     ", op_reverse_check(inst, w, n, opt.tol));
    show("op_heinz   ", op_heinz_check(inst, w, n, opt.tol));
    show("op_baseline", liao_wu_baseline_check(inst, w, opt.tol));
  }
  return pass ? 0 : 1;
}

int run_sweep(const Options& opt, const std::vector<std::string>& nus,
              const std::vector<double>& hs, const std::vector<int>& ns) {
  if (nus.empty() || hs.empty() || ns.empty())
    throw CLI::ValidationError("sweep", "empty grid");
  std::ofstream file;
  std::ostream& out = open_out(file, opt.out_path);
  bool json = opt.format == "json";
  if (!json)
    out << "nu,h,n,lower,middle,upper,slack_lower,slack_upper,"
           "baseline_slack,tightness\n";
  bool all_pass = true;
  for (const std::string& nu_text : nus) {
    ParsedNu nu = parse_nu(nu_text);
    for (double h : hs)
      for (int n_raw : ns) {
        int n = clamp_n(opt, n_raw);
        ScalarPair p(1.0, h);
        Weight w(nu.value);
        ChainResult c = chain_y1(p, w, n);
        double scale = std::max({c.lower, c.middle, c.upper});
        double slo = (c.middle - c.lower) / scale;
        double sup = (c.upper - c.middle) / scale;
        BaselineBounds base = baseline_bounds(p, w);
        RefinementSeq seq = refinement_seq(nu.value, 1);
        double base_mid =
            arith_mean(p, w) -
            seq.r[0] * std::pow(std::sqrt(p.a) - std::sqrt(p.b), 2);
        double base_slack = (base_mid - base.eq13_kfactor_bound) / scale;
        double tightness = slo - base_slack;
        all_pass = all_pass && slo >= -opt.tol && sup >= -opt.tol;
        if (json) {
          out << "{\"nu\":" << fmt(nu.value, 17) << ",\"h\":" << fmt(h, 17)
              << ",\"n\":" << n << ",\"lower\":" << fmt(c.lower, 17)
              << ",\"middle\":" << fmt(c.middle, 17)
              << ",\"upper\":" << fmt(c.upper, 17)
              << ",\"slack_lower\":" << fmt(slo, 17)
              << ",\"slack_upper\":" << fmt(sup, 17)
              << ",\"baseline_slack\":" << fmt(base_slack, 17)
              << ",\"tightness\":" << fmt(tightness, 17) << "}\n";
        } else {
          out << fmt(nu.value, 17) << ',' << fmt(h, 17) << ',' << n << ','
              << fmt(c.lower, 17) << ',' << fmt(c.middle, 17) << ','
              << fmt(c.upper, 17) << ',' << fmt(slo, 17) << ','
              << fmt(sup, 17) << ',' << fmt(base_slack, 17) << ','
              << fmt(tightness, 17) << "\n";
        }
      }
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kantorovich-refined Young inequality verifier"};
  app.require_subcommand(1);
  // Let global flags (--seed, --tol, ...) appear after the subcommand.
  app.fallthrough(true);

  Options opt;
  app.add_option("--seed", opt.seed, "base RNG seed");
  app.add_option("--tol", opt.tol, "relative slack tolerance");
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--out", opt.out_path, "report output path");
  app.add_option("--hs-sign", opt.hs_sign,
                 "combined-term sign in the Hilbert-Schmidt chains")
      ->check(CLI::IsMember({"plus", "minus"}));
  app.add_option("--depth-cap", opt.depth_cap, "maximum refinement depth")
      ->check(CLI::Range(1, kDepthCap));

  CLI::App* verify = app.add_subcommand("verify", "run the default sweep");

  CLI::App* eval = app.add_subcommand("eval", "evaluate a single instance");
  std::vector<std::string> scalar_args;
  std::string a_path, b_path, x_path;
  eval->add_option("args", scalar_args, "scalar instance: a b nu [n]")
      ->expected(0, 4);
  eval->add_option("--A", a_path, "matrix fixture for A");
  eval->add_option("--B", b_path, "matrix fixture for B");
  eval->add_option("--X", x_path, "matrix fixture for X (Hilbert-Schmidt)");
  std::string eval_nu = "0.5";
  int eval_n = 1;
  eval->add_option("--nu", eval_nu, "weight for matrix evaluation");
  eval->add_option("--n", eval_n, "refinement depth for matrix evaluation");

  CLI::App* sweep = app.add_subcommand("sweep", "grid sweep over (nu, h, n)");
  sweep->set_help_flag("--help", "print help");  // frees -h for the ratio grid
  std::vector<std::string> sweep_nu = {"0.1", "0.2", "0.3", "0.4", "0.5",
                                       "0.6", "0.7", "0.8", "0.9"};
  std::vector<double> sweep_h = {2.0, 10.0, 100.0};
  std::vector<int> sweep_n = {1, 2, 3, 4, 5};
  sweep->add_option("--nu", sweep_nu, "weights (decimal or p/q)");
  sweep->add_option("--h", sweep_h, "ratios b/a");
  sweep->add_option("--n", sweep_n, "refinement depths");

  try {
    app.parse(argc, argv);
    if (verify->parsed()) return run_verify(opt);
    if (eval->parsed()) {
      if (!a_path.empty() || !b_path.empty()) {
        if (a_path.empty() || b_path.empty())
          throw CLI::ValidationError("eval", "need both --A and --B");
        return run_eval_matrix(opt, a_path, b_path, x_path,
                               parse_nu(eval_nu).value,
                               clamp_n(opt, eval_n));
      }
      if (scalar_args.size() < 3)
        throw CLI::ValidationError("eval", "need a b nu [n]");
      double a = std::stod(scalar_args[0]);
      double b = std::stod(scalar_args[1]);
      ParsedNu nu = parse_nu(scalar_args[2]);
      int n = scalar_args.size() > 3 ? std::stoi(scalar_args[3]) : 1;
      print_scalar_table(a, b, nu, clamp_n(opt, n), opt);
      return 0;
    }
    return run_sweep(opt, sweep_nu, sweep_h, sweep_n);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
