#include "nonsplit/biquad.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nonsplit/profiles.hpp"

namespace nonsplit {

namespace {

const double kSqrtE = std::sqrt(std::exp(1.0));
const double kE14 = std::exp(0.25);

}  // namespace

double biquad_first_piece(double tol) {
  return integrate([](double t) { return 8.0 * std::log(t - 1.0) / t; }, 2.0, 1.0 + kE14, {}, tol);
}

double biquad_integral_bound(double A, double delta, const IncExcConfig& cfg) {
  if (!(A >= kSqrtE - 1e-12 && A <= 2.0)) throw std::invalid_argument("biquad: A outside [sqrt e, 2]");
  if (!(delta >= 0.0 && delta <= 1.0)) throw std::invalid_argument("biquad: delta outside [0,1]");
  const double B = (2.0 - delta) * A;
  if (B <= 2.0) return 0.0;
  const auto env = make_envelope(A);
  const auto bp = biquad_breakpoints(env);
  std::vector<double> cuts;
  for (double c : {1.0 + kE14, bp.t0, 1.0 + A, bp.t1, 3.0, bp.t2})
    if (c > 2.0 && c < B) cuts.push_back(c);
  return integrate([&](double t) { return biquad_pointwise_upper(env, delta, t); }, 2.0, B, cuts,
                   cfg.quad_tolerance);
}

BiquadSolve biquad_solve_A(double delta, const IncExcConfig& cfg) {
  if (!(delta >= 0.0 && delta < 1.0)) throw std::invalid_argument("biquad_solve_A: delta outside [0,1)");
  auto f = [&](double A) { return 4.0 * std::log(A) + biquad_integral_bound(A, delta, cfg) - 3.0; };
  if (f(kSqrtE) >= 0.0) return {kSqrtE, true};
  if (f(2.0) < 0.0) return {2.0, false};
  return {bisect_root(f, kSqrtE, 2.0, 1e-10), true};
}

BiquadReport biquad_sweep(const IncExcConfig& cfg, double grid_step, double delta_max, Exec exec) {
  if (!(grid_step > 0.0 && grid_step <= 0.005)) throw std::invalid_argument("biquad_sweep: grid step must be in (0, 0.005]");
  if (!(delta_max > 0.0 && delta_max < 1.0)) throw std::invalid_argument("biquad_sweep: delta_max must be in (0,1)");
  const long n = std::lround(delta_max / grid_step);
  BiquadReport rep;
  rep.rows.resize(n + 1);
#pragma omp parallel for schedule(dynamic, 4) if (exec == Exec::parallel)
  for (long i = 0; i <= n; ++i) {
    double d = double(i) * grid_step;
    auto s = biquad_solve_A(d, cfg);
    BiquadRow r{d, s.A, s.feasible, 1.0 / (4.0 * s.A), (1.0 - d) / (4.0 * kSqrtE), 0.0, 0.0};
    r.exp_final = std::min(r.exp_interaction, r.exp_trivial);
    r.exp_q1q2 = r.exp_final / (2.0 - d);
    rep.rows[i] = r;
  }
  std::size_t worst = 0;
  for (std::size_t i = 1; i < rep.rows.size(); ++i)
    if (rep.rows[i].exp_q1q2 > rep.rows[worst].exp_q1q2) worst = i;
  rep.worst_delta = rep.rows[worst].delta;
  rep.worst_exponent_q = rep.rows[worst].exp_final;
  rep.worst_exponent_q1q2 = rep.rows[worst].exp_q1q2;
  rep.delta0_exponent_q1q2 = rep.rows[0].exp_q1q2;
  return rep;
}

}  // namespace nonsplit
