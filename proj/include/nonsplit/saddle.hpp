#pragma once

#include <string>
#include <utility>

#include "nonsplit/specfun.hpp"

namespace nonsplit {

struct XiResult {
  double xi;
  WBranch branch;
};

// Real solution of (k+1) e^xi = k + u xi; W_0 below k, W_-1 above.
XiResult xi_of(double k, double u);

struct SaddleEstimate {
  double k = 0.0, u = 0.0;
  double xi = 0.0;
  double log_abs_main = 0.0;
  int sign = 0;
  double main_term = 0.0;  // sign * exp(log_abs_main); may overflow to inf
  bool in_range = false;
  WBranch branch_used = WBranch::principal;
};

// -(k-1)! xi e^{(k+1)(gamma + I(xi)) - u xi} / sqrt(2 pi (k+1) I''(xi))
SaddleEstimate sigma_saddle(double k, double u);

double ein_second_derivative(double xi);  // I''(xi) = (xi e^xi - e^xi + 1)/xi^2

std::pair<double, double> theorem3_first_zero_window(double k);

// Rows u, xi, saddle, dde over [u_lo, u_hi] outside the 2 sqrt(k) band.
std::string saddle_table_csv(double k, double u_lo, double u_hi, double du, double step);

}  // namespace nonsplit
