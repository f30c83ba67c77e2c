#include "nonsplit/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "nonsplit/numeric.hpp"

namespace nonsplit {

namespace {

constexpr double kInvE = 0.36787944117144232159552377016146;

double halley(double x, double w) {
  for (int it = 0; it < 60; ++it) {
    double ew = std::exp(w);
    double f = w * ew - x;
    if (f == 0.0) break;
    double wp1 = w + 1.0;
    if (std::abs(wp1) < 1e-9) break;
    double dw = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= dw;
    if (std::abs(dw) <= 1e-16 * (1.0 + std::abs(w))) break;
  }
  return w;
}

}  // namespace

double lambert_w(WBranch branch, double x) {
  if (!std::isfinite(x)) throw std::domain_error("lambert_w: non-finite argument");
  if (x < -kInvE) {
    if (x < -kInvE * (1.0 + 4 * std::numeric_limits<double>::epsilon()))
      throw std::domain_error("lambert_w: argument below -1/e");
    return -1.0;
  }
  if (branch == WBranch::lower && x >= 0.0)
    throw std::domain_error("lambert_w: lower branch needs x < 0");
  if (x == -kInvE) return -1.0;
  if (branch == WBranch::principal && x == 0.0) return 0.0;

  // p is the branch-point variable: w = -1 +- p - p^2/3 + 11 p^3/72 + ...
  double p = std::sqrt(std::max(0.0, 2.0 * (std::exp(1.0) * x + 1.0)));
  double w;
  if (branch == WBranch::principal) {
    if (x < -0.25)
      w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
    else if (x <= 3.0)
      w = std::log1p(x);
    else {
      double l1 = std::log(x), l2 = std::log(l1);
      w = l1 - l2 + l2 / l1;
    }
    w = halley(x, w);
    return std::max(w, -1.0);
  }
  if (x < -0.25)
    w = -1.0 - p - p * p / 3.0 - 11.0 / 72.0 * p * p * p;
  else {
    double l1 = std::log(-x), l2 = std::log(-l1);
    w = l1 - l2 + l2 / l1;
  }
  w = halley(x, w);
  return std::min(w, -1.0);
}

Complex ein_series(Complex s) {
  // Re s >= 0: sum s^n/(n n!). Re s < 0: I(s) = -e^s sum (-s)^n H_n/n!, whose
  // terms do not alternate on the negative axis.
  if (s == Complex(0.0)) return 0.0;
  if (s.real() >= 0.0) {
    Complex term = 1.0, sum = 0.0;
    for (int n = 1; n < 400; ++n) {
      term *= s / double(n);
      Complex add = term / double(n);
      sum += add;
      if (n > std::abs(s) && std::abs(add) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
  }
  Complex z = -s, term = 1.0, sum = 0.0;
  double h = 0.0;
  for (int n = 1; n < 400; ++n) {
    term *= z / double(n);
    h += 1.0 / n;
    Complex add = term * h;
    sum += add;
    if (n > std::abs(s) && std::abs(add) < 1e-18 * std::abs(sum)) break;
  }
  return -std::exp(s) * sum;
}

namespace {

// Largest magnitude among the series terms relative to the sum; large values
// mean the series lost digits to cancellation.
double series_condition(Complex s) {
  Complex z = s.real() >= 0.0 ? s : -s;
  Complex term = 1.0, sum = 0.0;
  double abs_sum = 0.0, h = 0.0;
  for (int n = 1; n < 400; ++n) {
    term *= z / double(n);
    h += 1.0 / n;
    Complex add = s.real() >= 0.0 ? term / double(n) : term * h;
    sum += add;
    abs_sum += std::abs(add);
    if (n > std::abs(s) && std::abs(add) < 1e-18 * abs_sum) break;
  }
  return abs_sum / std::max(std::abs(sum), 1e-300);
}

}  // namespace

Complex ein_quadrature(Complex s) {
  // I(s) = int_0^1 (e^{s x} - 1)/x dx along the segment [0, s].
  auto g = [s](double x) -> Complex {
    Complex z = s * x;
    if (std::abs(z) < 1e-3) return s * (1.0 + z / 2.0 + z * z / 6.0 + z * z * z / 24.0);
    return (std::exp(z) - 1.0) / x;
  };
  int panels = 1 + int(std::abs(s) / 4.0);
  std::vector<double> cuts;
  for (int i = 1; i < panels; ++i) cuts.push_back(double(i) / panels);
  double re = integrate([&](double x) { return g(x).real(); }, 0.0, 1.0, cuts, 1e-12);
  double im = integrate([&](double x) { return g(x).imag(); }, 0.0, 1.0, cuts, 1e-12);
  return {re, im};
}

Complex ein(Complex s) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
    throw std::domain_error("ein: non-finite argument");
  if (std::abs(s) > 30.0) return ein_quadrature(s);
  if (series_condition(s) > 1e4) return ein_quadrature(s);
  return ein_series(s);
}

Complex exp_integral_J(Complex s) {
  if (s.imag() == 0.0 && s.real() <= 0.0)
    throw std::domain_error("exp_integral_J: argument on the cut (-inf, 0]");
  // J(s) = e^{-s} int_0^inf e^{-t}/(s+t) dt.
  boost::math::quadrature::exp_sinh<double> es;
  auto re = es.integrate([s](double t) { return (std::exp(-t) / (s + t)).real(); }, 1e-15);
  auto im = es.integrate([s](double t) { return (std::exp(-t) / (s + t)).imag(); }, 1e-15);
  return std::exp(-s) * Complex(re, im);
}

double log_factorial(double n) {
  if (n < 0.0) throw std::domain_error("log_factorial: negative argument");
  return std::lgamma(n + 1.0);
}

}  // namespace nonsplit
