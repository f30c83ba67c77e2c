#include "nonsplit/sigma.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "nonsplit/kernels.hpp"

namespace nonsplit {

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::convolution: return "convolution";
    case Provenance::dde: return "dde";
    case Provenance::saddle: return "saddle";
  }
  return "?";
}

double SigmaSolution::sigma(std::size_t i) const {
  if (!normalized) return values[i];
  double x = u(i);
  return x <= 1.0 ? std::pow(x, k - 1.0) : values[i] * std::pow(x, k - 1.0);
}

double SigmaSolution::tau(std::size_t i) const {
  if (normalized) return values[i];
  double x = u(i);
  return x <= 1.0 ? 1.0 : values[i] * std::pow(x, 1.0 - k);
}

namespace {

std::size_t steps_per_unit(double step) {
  double m = 1.0 / step;
  double r = std::round(m);
  if (!(step > 0.0) || std::abs(m - r) > 1e-9 * r)
    throw std::invalid_argument("step must divide 1 exactly");
  return static_cast<std::size_t>(r);
}

}  // namespace

SigmaSolution solve_convolution(const Profile& p, double k, double u_max, double step, Exec exec) {
  if (!(k >= 1.0)) throw std::invalid_argument("solve_convolution: k must be >= 1");
  if (!(step <= 1e-3)) throw std::invalid_argument("solve_convolution: step must be <= 1e-3");
  if (!(u_max > 0.0 && u_max <= 50.0)) throw std::invalid_argument("solve_convolution: u_max must be in (0, 50]");
  if (p.t_min() > 1e-12 || p.t_max() < u_max - 1e-9)
    throw std::invalid_argument("solve_convolution: profile domain shorter than [0, u_max]");
  const std::size_t m = steps_per_unit(step);
  const std::size_t n_max = static_cast<std::size_t>(std::llround(u_max / step));
  const double h = 1.0 / double(m);

  // Nodes sitting on a jump of P get the mean of the one-sided values.
  // Breakpoints within 1e-6 h of a node are snapped onto it.
  std::vector<double> P(n_max + 1);
  for (std::size_t i = 0; i <= n_max; ++i) {
    double t = std::min(double(i) * h, p.t_max());
    P[i] = i == 0 ? eval_profile(p, 0.0) : 0.5 * (eval_profile(p, t) + eval_left(p, t));
  }
  for (double b : p.breakpoints()) {
    double x = b / h;
    auto j = static_cast<std::size_t>(std::llround(x));
    if (j == 0 || j > n_max || std::abs(x - double(j)) > 1e-6) continue;
    P[j] = 0.5 * (eval_profile(p, b) + eval_left(p, b));
  }

  SigmaSolution sol;
  sol.k = k;
  sol.step = h;
  sol.provenance = Provenance::convolution;
  sol.values.resize(n_max + 1);
  auto& s = sol.values;
  for (std::size_t i = 0; i <= std::min(m, n_max); ++i) s[i] = std::pow(double(i) * h, k - 1.0);
  if (k == 1.0) s[0] = 1.0;
  for (std::size_t n = m + 1; n <= n_max; ++n) {
    double mem = exec == Exec::serial ? memory_sum_serial(s.data(), P.data(), n)
                                      : memory_sum_parallel(s.data(), P.data(), n);
    double un = double(n) * h;
    s[n] = h * (0.5 * s[0] * P[n] + mem) / (un - 0.5 * h * P[0]);
  }
  return sol;
}

double default_step(double k) { return k <= 5.0 ? 1e-4 : 1e-3; }

namespace {

struct Dde {
  double k;
  double h;
  std::size_t m;
  const std::vector<double>& tau;
  std::vector<double> dtau;

  double F(double u) const { return (k + 1.0) / u * std::pow(1.0 - 1.0 / u, k - 1.0); }

  // tau at v in [0, u_max] by cubic Hermite on the grid.
  double tau_at(double v) const {
    if (v <= 1.0) return 1.0;
    double x = v / h;
    std::size_t j = static_cast<std::size_t>(x);
    if (j + 1 >= tau.size()) j = tau.size() - 2;
    double s = x - double(j);
    double h00 = (1 + 2 * s) * (1 - s) * (1 - s), h10 = s * (1 - s) * (1 - s);
    double h01 = s * s * (3 - 2 * s), h11 = s * s * (s - 1);
    return h00 * tau[j] + h10 * h * dtau[j] + h01 * tau[j + 1] + h11 * h * dtau[j + 1];
  }

  // Increment of tau over [a, a + len]. RK4 reduces to Simpson here because the
  // right side only sees the delayed value.
  double increment(double a, double len) const {
    double b = a + len, c = a + 0.5 * len;
    return -len / 6.0 * (F(a) * tau_at(a - 1.0) + 4.0 * F(c) * tau_at(c - 1.0) + F(b) * tau_at(b - 1.0));
  }
};

}  // namespace

SigmaSolution solve_extremal_dde(double k, double u_max, double step) {
  if (!(k >= 1.0)) throw std::invalid_argument("solve_extremal_dde: k must be >= 1");
  if (!(u_max > 0.0 && u_max <= 10.0 * k + 1e-9))
    throw std::invalid_argument("solve_extremal_dde: u_max must be in (0, 10k]");
  if (k * step > 0.1) throw std::invalid_argument("solve_extremal_dde: step too large to resolve k");
  const std::size_t m = steps_per_unit(step);
  const std::size_t n_max = static_cast<std::size_t>(std::llround(u_max / step));
  const double h = 1.0 / double(m);

  SigmaSolution sol;
  sol.k = k;
  sol.step = h;
  sol.provenance = Provenance::dde;
  sol.normalized = true;
  sol.under_resolved = k * h > 0.01;
  sol.values.assign(n_max + 1, 1.0);
  Dde d{k, h, m, sol.values, std::vector<double>(n_max + 1, 0.0)};
  auto& tau = sol.values;
  for (std::size_t n = m; n < n_max; ++n) {
    // The right derivative at u=1 is used, so the k=1 jump in tau' is respected.
    d.dtau[n] = -d.F(double(n) * h) * tau[n - m];
    tau[n + 1] = tau[n] + d.increment(double(n) * h, h);
  }
  if (n_max >= m) d.dtau[n_max] = -d.F(double(n_max) * h) * tau[n_max - m];
  return sol;
}

std::optional<double> first_zero(const SigmaSolution& sol) {
  const auto& v = sol.values;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    if (v[i] == 0.0) return sol.u(i);
    if ((v[i] > 0.0) == (v[i + 1] > 0.0) && v[i + 1] != 0.0) continue;
    if (v[i + 1] == 0.0) return sol.u(i + 1);
    if (sol.provenance != Provenance::dde) {
      return sol.u(i) + sol.step * v[i] / (v[i] - v[i + 1]);
    }
    // Re-integrate from the left grid point and bisect on the sub-step length.
    const double h = sol.step, k = sol.k;
    const std::size_t m = steps_per_unit(h);
    std::vector<double> dtau(v.size(), 0.0);
    for (std::size_t j = m; j < v.size(); ++j)
      dtau[j] = -(k + 1.0) / sol.u(j) * std::pow(1.0 - 1.0 / sol.u(j), k - 1.0) * v[j - m];
    Dde d{k, h, m, v, std::move(dtau)};
    const double a = sol.u(i);
    auto f = [&](double s) { return v[i] + d.increment(a, s); };
    return a + bisect_root(f, 0.0, h, 1e-14);
  }
  return std::nullopt;
}

OrderingReport compare_profiles(const Profile& p, const Profile& p_sharp, double k, double u_max,
                                double step, Exec exec) {
  for (double t = 0.0; t <= u_max; t += 1e-3) {
    double a = eval_profile(p, t), b = eval_profile(p_sharp, t);
    if (t < 1.0 && std::abs(a - b) > 1e-12)
      throw std::invalid_argument("compare_profiles: profiles differ on [0,1]");
    if (a > b + 1e-12) throw std::invalid_argument("compare_profiles: p exceeds p_sharp");
  }
  auto s = solve_convolution(p, k, u_max, step, exec);
  auto ss = solve_convolution(p_sharp, k, u_max, step, exec);
  OrderingReport r;
  r.u0 = first_zero(s);
  r.u_checked = r.u0 ? *r.u0 : u_max;
  for (std::size_t i = 0; i < s.size() && s.u(i) <= r.u_checked; ++i)
    r.max_violation = std::max(r.max_violation, s.sigma(i) - ss.sigma(i));
  r.holds = r.max_violation <= 1e-8;
  return r;
}

std::string to_csv(const SigmaSolution& sol, std::size_t stride) {
  std::string out = "u,sigma,tau\n";
  char buf[128];
  if (stride == 0) stride = 1;
  for (std::size_t i = 0; i < sol.size(); i += stride) {
    std::snprintf(buf, sizeof buf, "%.6f,%.12g,%.12g\n", sol.u(i), sol.sigma(i), sol.tau(i));
    out += buf;
  }
  return out;
}

}  // namespace nonsplit
