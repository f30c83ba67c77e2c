#include "nonsplit/saddle.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "nonsplit/sigma.hpp"

namespace nonsplit {

XiResult xi_of(double k, double u) {
  if (!(u > 0.0)) throw std::domain_error("xi_of: u must be positive");
  if (std::abs(u - k) < 2.0 * std::sqrt(k))
    throw std::domain_error("xi_of: u inside the band |u-k| < 2 sqrt(k)");
  WBranch br = u < k ? WBranch::principal : WBranch::lower;
  double arg = -(k + 1.0) * std::exp(-k / u) / u;
  if (arg < -std::exp(-1.0)) throw std::domain_error("xi_of: no real saddle point, W argument below -1/e");
  return {-lambert_w(br, arg) - k / u, br};
}

double ein_second_derivative(double xi) {
  if (std::abs(xi) < 1e-3) return 0.5 + xi / 3.0 + xi * xi / 8.0;
  return (xi * std::exp(xi) - std::expm1(xi)) / (xi * xi);
}

SaddleEstimate sigma_saddle(double k, double u) {
  SaddleEstimate s;
  s.k = k;
  s.u = u;
  s.in_range = k >= 3.0 && u >= k / (2.0 * std::log(k)) && u <= 10.0 * k &&
               std::abs(u - k) >= 2.0 * std::sqrt(k);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  WBranch br = u < k ? WBranch::principal : WBranch::lower;
  double arg = -(k + 1.0) * std::exp(-k / u) / u;
  if (!(u > 0.0) || arg < -std::exp(-1.0) || u == k) {
    s.xi = s.log_abs_main = s.main_term = nan;
    s.branch_used = br;
    return s;
  }
  s.branch_used = br;
  s.xi = -lambert_w(br, arg) - k / u;
  const double xi = s.xi;
  double I = ein(Complex(xi, 0.0)).real();
  s.log_abs_main = log_factorial(k - 1.0) + std::log(std::abs(xi)) +
                   (k + 1.0) * (euler_gamma + I) - u * xi -
                   0.5 * std::log(2.0 * M_PI * (k + 1.0) * ein_second_derivative(xi));
  s.sign = xi > 0.0 ? -1 : (xi < 0.0 ? 1 : 0);
  s.main_term = s.sign * std::exp(s.log_abs_main);
  return s;
}

std::pair<double, double> theorem3_first_zero_window(double k) {
  if (!(k >= 3.0)) throw std::domain_error("theorem3_first_zero_window: k must be >= 3");
  double w = 3.0 * std::pow(k, 0.6);
  return {std::max(k - w, k / std::log(k)), k + w};
}

std::string saddle_table_csv(double k, double u_lo, double u_hi, double du, double step) {
  if (!(du > 0.0) || !(u_hi >= u_lo)) throw std::invalid_argument("saddle table: bad u range");
  auto dde = solve_extremal_dde(k, std::min(u_hi, 10.0 * k), step);
  std::string out = "u,xi,saddle,dde,in_range\n";
  char buf[160];
  long n = std::lround((u_hi - u_lo) / du);
  for (long i = 0; i <= n; ++i) {
    double u = u_lo + double(i) * du;
    if (std::abs(u - k) < 2.0 * std::sqrt(k) || u > dde.u_max() + 1e-12) continue;
    auto s = sigma_saddle(k, u);
    auto idx = static_cast<std::size_t>(std::llround(u / dde.step));
    std::snprintf(buf, sizeof buf, "%.6f,%.12g,%.12g,%.12g,%d\n", u, s.xi, s.main_term,
                  dde.sigma(idx), s.in_range ? 1 : 0);
    out += buf;
  }
  return out;
}

}  // namespace nonsplit
