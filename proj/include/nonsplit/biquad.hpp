#pragma once

#include <vector>

#include "nonsplit/incexc.hpp"
#include "nonsplit/numeric.hpp"

namespace nonsplit {

// int_2^B of the pointwise-min envelope for (1-P(t))/t, B = (2-delta) A.
double biquad_integral_bound(double A, double delta, const IncExcConfig& cfg);

// int_2^{1+e^{1/4}} 8 log(t-1)/t dt
double biquad_first_piece(double tol = 1e-13);

struct BiquadSolve {
  double A = 0.0;
  bool feasible = true;  // false when even A = 2 misses 4 log A + integral >= 3
};

BiquadSolve biquad_solve_A(double delta, const IncExcConfig& cfg);

struct BiquadRow {
  double delta, A;
  bool feasible;
  double exp_interaction, exp_trivial, exp_final;
  double exp_q1q2;  // exp_final/(2 - delta): exponent on q1 q2 = q^{2-delta}
};

struct BiquadReport {
  std::vector<BiquadRow> rows;
  double worst_delta = 0.0;
  double worst_exponent_q = 0.0;
  double worst_exponent_q1q2 = 0.0;
  double delta0_exponent_q1q2 = 0.0;
};

BiquadReport biquad_sweep(const IncExcConfig& cfg, double grid_step = 0.001,
                          double delta_max = 0.5, Exec exec = Exec::parallel);

}  // namespace nonsplit
