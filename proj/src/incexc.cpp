#include "nonsplit/incexc.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "nonsplit/numeric.hpp"

namespace nonsplit {

namespace {

void check(const IncExcConfig& cfg) {
  if (cfg.j_max < 0 || cfg.j_max > 3) throw std::invalid_argument("incexc: j_max must be in [0,3]");
  if (!(cfg.quad_tolerance > 0.0)) throw std::invalid_argument("incexc: tolerance must be positive");
}

// Cuts for an inner variable on [1, hi]: profile breakpoints and their shifts by
// the outer variables, so every kink of the integrand is a panel boundary.
std::vector<double> cuts_for(const std::vector<double>& bp, double hi, double shift) {
  std::vector<double> c;
  for (double b : bp) {
    if (b > 1.0 && b < hi) c.push_back(b);
    double s = shift - b;
    if (s > 1.0 && s < hi) c.push_back(s);
  }
  return c;
}

}  // namespace

double eval_Ij(const Profile& p, double k, int j, double u, const IncExcConfig& cfg) {
  check(cfg);
  if (j < 0 || j > 3) throw std::invalid_argument("eval_Ij: j must be in {0,1,2,3}");
  if (j == 0) return 1.0;
  if (u <= double(j)) return 0.0;
  if (u > p.t_max() + 1e-12) throw std::invalid_argument("eval_Ij: u beyond the profile domain");
  const double wexp = cfg.weight_exponent.value_or(k - 1.0);
  const double tol = cfg.quad_tolerance;
  auto w = [&](double s) { return cfg.weighted ? std::pow(std::max(0.0, (u - s) / u), wexp) : 1.0; };
  auto f = [&](double t) { return (k - eval_profile(p, t)) / t; };
  const auto bp = p.breakpoints();

  if (j == 1) return integrate([&](double t) { return w(t) * f(t); }, 1.0, u, cuts_for(bp, u, u), tol);

  if (j == 2) {
    auto inner = [&](double t1) {
      double hi = u - t1;
      return f(t1) * integrate([&](double t2) { return f(t2) * w(t1 + t2); }, 1.0, hi,
                               cuts_for(bp, hi, hi), tol);
    };
    return integrate(inner, 1.0, u - 1.0, cuts_for(bp, u - 1.0, u), tol);
  }

  auto mid = [&](double t1) {
    double hi2 = u - t1 - 1.0;
    auto in = [&](double t2) {
      double hi3 = u - t1 - t2;
      return f(t2) * integrate([&](double t3) { return f(t3) * w(t1 + t2 + t3); }, 1.0, hi3,
                               cuts_for(bp, hi3, hi3), tol);
    };
    return f(t1) * integrate(in, 1.0, hi2, cuts_for(bp, hi2, hi2 + 1.0), tol);
  };
  auto outer = cuts_for(bp, u - 2.0, u - 1.0);
  for (double b : bp)
    for (double c : bp)
      if (double t = u - b - c; t > 1.0 && t < u - 2.0) outer.push_back(t);
  return integrate(mid, 1.0, u - 2.0, outer, tol);
}

std::pair<double, double> sigma_bracket(const Profile& p, double k, double u, int m,
                                        const IncExcConfig& cfg) {
  if (m < 0 || 2 * m > cfg.j_max + 1)
    throw std::invalid_argument("sigma_bracket: m too large for the supported j_max");
  double partial = 0.0, lower = 0.0;
  double fact = 1.0;
  for (int j = 0; j <= 2 * m; ++j) {
    if (j > 0) fact *= j;
    double I;
    if (j <= 3)
      I = eval_Ij(p, k, j, u, cfg);
    else if (u <= double(j))
      I = 0.0;
    else
      throw std::invalid_argument("sigma_bracket: I_4 needed for u > 4");
    partial += (j % 2 ? -1.0 : 1.0) * I / fact;
    if (j == 2 * m - 1) lower = partial;
  }
  double scale = std::pow(u, k - 1.0);
  return {scale * lower, scale * partial};
}

double eval_I3prime(double u, const IncExcConfig& cfg) {
  check(cfg);
  if (u <= 3.0) return 0.0;
  const double tol = cfg.quad_tolerance;
  auto mid = [&](double t1) {
    auto in = [&](double t2) {
      double hi = u - t1 - t2;
      // inner integral in closed form: int_1^hi (hi - t3)/t3 dt3 = hi log hi - hi + 1
      return (hi * std::log(hi) - hi + 1.0) / t2;
    };
    return integrate(in, 1.0, u - t1 - 1.0, {}, tol) / t1;
  };
  return integrate(mid, 1.0, u - 2.0, {}, tol) / u;
}

}  // namespace nonsplit
