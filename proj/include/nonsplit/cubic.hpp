#pragma once

#include <utility>
#include <vector>

#include "nonsplit/incexc.hpp"
#include "nonsplit/numeric.hpp"

namespace nonsplit {

struct CubicTerms {
  double I1_upper, I2_lower, I3prime, rhs;
};

// Lower bound for sigma(2A): 1 - I1_upper + I2_lower/2 - coef * I3'.
CubicTerms cubic_terms(double A, const IncExcConfig& cfg, int m = 2, double i3_coef = 4.5);
double cubic_rhs(double A, const IncExcConfig& cfg, int m = 2, double i3_coef = 4.5);

struct CubicReport {
  double A_star = 0.0;
  double exponent = 0.0;  // 1/(4 A_star), up to d_K^eps
  double baseline = 0.0;  // 1/(4 sqrt e)
  int m = 2;
  double i3_coef = 4.5;
  double rhs_at_16625 = 0.0;
  std::vector<std::pair<double, double>> curve;  // (A, rhs)
};

// Largest A in [sqrt e, 2] with rhs(A) > zero_tol, scanning down from A = 2.
CubicReport cubic_critical_A(const IncExcConfig& cfg, int m = 2, double i3_coef = 4.5,
                             double scan_step = 0.01, double a_tol = 1e-6,
                             Exec exec = Exec::parallel);

// int_1^A P'(t) dt >= 2A/sqrt(e) - 1 - A for a character with int_1^A (1-P')/t = 1.
double cubic_two_step_bound(double A);

// The Galois cubic case reduces to a quadratic character of conductor q1 ~ d_K^{1/2}.
inline constexpr double galois_cubic_exponent = 1.0 / 8.0;

}  // namespace nonsplit
