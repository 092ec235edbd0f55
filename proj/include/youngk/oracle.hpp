#pragma once

#include "youngk/scalar.hpp"

// Extended-precision ground truth for the scalar chains. Everything here
// evaluates the displayed formulas literally (arithmetic mean minus the
// summed squares) in 60-decimal-digit floating point, deliberately NOT
// sharing the double-precision module's telescoped evaluation path.

namespace youngk {

struct OracleChain {
  double lower = 0;
  double middle = 0;
  double upper = 0;
};

struct OracleValues {
  OracleChain y1;
  OracleChain y3;
  OracleChain y5;
  OracleChain heinz;
  double y2_rhs = 0;
  double y4_rhs = 0;
  double y6_rhs = 0;
  double heinz_rev_rhs = 0;
  double arith = 0;
  double geo = 0;
  double heinz_mean = 0;
};

// All chains and reverse right-hand sides at once.
OracleValues highprec_oracle(double a, double b, double nu, int n);

// The Theorem-2.1 chain alone, in the library's ChainResult shape.
ChainResult highprec_chain_oracle(double a, double b, double nu, int n);

}  // namespace youngk
