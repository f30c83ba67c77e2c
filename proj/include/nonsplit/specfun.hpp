#pragma once

#include <complex>

namespace nonsplit {

using Complex = std::complex<double>;

inline constexpr double euler_gamma = 0.577215664901532860606512090082;

enum class WBranch { principal, lower };

// Real branches of the Lambert W function: w e^w = x.
double lambert_w(WBranch branch, double x);

// I(s) = int_0^s (e^t - 1)/t dt. Series for |s| <= 30, segment quadrature beyond.
Complex ein(Complex s);
Complex ein_series(Complex s);
Complex ein_quadrature(Complex s);

// J(s) = int_0^inf e^{-(s+t)}/(s+t) dt, i.e. E_1(s). Not defined on (-inf, 0].
Complex exp_integral_J(Complex s);

double log_factorial(double n);

}  // namespace nonsplit
