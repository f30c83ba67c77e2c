#include "nonsplit/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nonsplit/profiles.hpp"

namespace nonsplit {

namespace {

const double kSqrtE = std::sqrt(std::exp(1.0));

std::vector<double> inside(std::initializer_list<double> pts, double lo, double hi) {
  std::vector<double> out;
  for (double p : pts)
    if (p > lo && p < hi) out.push_back(p);
  return out;
}

}  // namespace

CubicTerms cubic_terms(double A, const IncExcConfig& cfg, int m, double i3_coef) {
  if (!(A >= kSqrtE - 1e-12 && A <= 2.0)) throw std::invalid_argument("cubic_rhs: A outside [sqrt e, 2]");
  const auto env = make_envelope(A);
  const double u = 2.0 * A, tol = cfg.quad_tolerance;
  auto g = [u](double t) { return (u - t) / (t * u); };

  CubicTerms r{};
  r.I1_upper = 2.0 * integrate(g, 1.0, u, {}, tol) +
               integrate([&](double t) { return cubic_U(env, t, m) * g(t); }, A, u,
                         inside({2.0, 1.0 + A, 3.0}, A, u), tol) +
               0.5 * (std::log(A) - 1.0 + (1.0 + A - 2.0 * A / kSqrtE) / u + integrate(g, 1.0, A, {}, tol));

  auto w = [&](double t) { return (2.0 + cubic_L(env, t)) / t; };
  auto inner = [&](double t1) {
    double hi = u - t1;
    return w(t1) * integrate([&](double t2) { return w(t2) * (hi - t2) / u; }, 1.0, hi,
                             inside({A, 2.0, 1.0 + A}, 1.0, hi), tol);
  };
  r.I2_lower = integrate(inner, 1.0, u - 1.0, inside({A, 2.0, 1.0 + A, u - A, u - 2.0, u - 1.0 - A}, 1.0, u - 1.0), tol);
  r.I3prime = eval_I3prime(u, cfg);
  r.rhs = 1.0 - r.I1_upper + 0.5 * r.I2_lower - i3_coef * r.I3prime;
  return r;
}

double cubic_rhs(double A, const IncExcConfig& cfg, int m, double i3_coef) {
  return cubic_terms(A, cfg, m, i3_coef).rhs;
}

CubicReport cubic_critical_A(const IncExcConfig& cfg, int m, double i3_coef, double scan_step,
                             double a_tol, Exec exec) {
  constexpr double zero_tol = 1e-6;
  CubicReport rep;
  rep.m = m;
  rep.i3_coef = i3_coef;
  rep.baseline = 1.0 / (4.0 * kSqrtE);
  const long n = static_cast<long>(std::ceil((2.0 - kSqrtE) / scan_step));
  rep.curve.resize(n + 1);
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::parallel)
  for (long i = 0; i <= n; ++i) {
    double A = std::max(kSqrtE, 2.0 - double(i) * scan_step);
    rep.curve[i] = {A, cubic_rhs(A, cfg, m, i3_coef)};
  }
  if (rep.curve.front().second > zero_tol)
    throw std::runtime_error("cubic_critical_A: rhs positive at A = 2, inconsistent configuration");
  std::size_t i = 1;
  while (i < rep.curve.size() && rep.curve[i].second <= zero_tol) ++i;
  if (i == rep.curve.size()) throw std::runtime_error("cubic_critical_A: rhs never positive on [sqrt e, 2]");
  double lo = rep.curve[i].first, hi = rep.curve[i - 1].first;
  while (hi - lo > a_tol) {
    double mid = 0.5 * (lo + hi);
    (cubic_rhs(mid, cfg, m, i3_coef) > zero_tol ? lo : hi) = mid;
  }
  rep.A_star = lo;
  rep.exponent = 1.0 / (4.0 * lo);
  rep.rhs_at_16625 = cubic_rhs(1.6625, cfg, m, i3_coef);
  std::reverse(rep.curve.begin(), rep.curve.end());
  return rep;
}

double cubic_two_step_bound(double A) { return 2.0 * A / kSqrtE - 1.0 - A; }

}  // namespace nonsplit
