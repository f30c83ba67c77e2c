#include "nonsplit/dedekind.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nonsplit/numeric.hpp"
#include "nonsplit/specfun.hpp"

namespace nonsplit {

double FieldParams::D() const { return std::log(log_dK / l); }

CPolicy parse_c_policy(const std::string& name) {
  if (name == "stark_half") return CPolicy::stark_half;
  if (name == "quarter") return CPolicy::quarter;
  if (name == "stechkin") return CPolicy::stechkin;
  if (name == "quarter_plus_B") return CPolicy::quarter_plus_B;
  throw std::invalid_argument("unknown c policy '" + name + "'");
}

std::string c_policy_name(CPolicy c) {
  switch (c) {
    case CPolicy::stark_half: return "stark_half";
    case CPolicy::quarter: return "quarter";
    case CPolicy::stechkin: return "stechkin";
    case CPolicy::quarter_plus_B: return "quarter_plus_B";
  }
  return "?";
}

double B_term(const FieldParams& fp) {
  double x = fp.d();
  if (!(x >= std::exp(1.0))) throw std::domain_error("B undefined: need log d_K / l >= e");
  return 2.0 * std::log(x) / x;
}

double c_value(CPolicy c, const FieldParams& fp) {
  switch (c) {
    case CPolicy::stark_half: return 0.5;
    case CPolicy::quarter: return 0.25;
    case CPolicy::stechkin: return (1.0 - 1.0 / std::sqrt(5.0)) / 2.0;
    case CPolicy::quarter_plus_B: return 0.25 + B_term(fp);
  }
  return 0.0;
}

double a_lambda(int l, double lam) {
  if (l < 2) throw std::invalid_argument("a_lambda: l must be >= 2");
  if (!(lam > 0.0)) throw std::invalid_argument("a_lambda: lambda must be positive");
  return (1.0 - double(l) / (l - 1.0) * std::exp(-lam)) / lam;
}

SupA sup_a(int l) {
  if (l < 2) throw std::invalid_argument("sup_a: l must be >= 2");
  // a'(lam) = 0  <=>  r e^{-lam} (lam + 1) = 1 with r = l/(l-1); the root is
  // the unique interior maximum on (0, 50].
  const double r = double(l) / (l - 1.0);
  auto g = [r](double lam) { return r * std::exp(-lam) * (lam + 1.0) - 1.0; };
  boost::math::tools::eps_tolerance<double> tol(52);
  std::uintmax_t iters = 200;
  auto br = boost::math::tools::toms748_solve(g, 1e-12, 50.0, tol, iters);
  double lam = 0.5 * (br.first + br.second);
  return {a_lambda(l, lam), lam};
}

ExponentReport theorem1_exponent(const FieldParams& fp, CPolicy c) {
  auto s = sup_a(fp.l);
  ExponentReport r;
  r.method = "theorem1";
  r.A = s.A;
  r.argmax = s.argmax;
  r.c = c_value(c, fp);
  r.exponent = r.c / (s.A * (fp.l - 1));
  r.baseline = 1.0 / (2.0 * (fp.l - 1));
  r.beats_baseline = r.exponent < r.baseline;
  return r;
}

double invert_split_bound(const FieldParams& fp, CPolicy c) {
  return theorem1_exponent(fp, c).exponent * fp.log_dK;
}

PrimeSieve::PrimeSieve(std::uint64_t n) : n_(n) {
  if (n > cap) throw std::invalid_argument("PrimeSieve: limit beyond 1e8");
  composite_.assign(n + 1, false);
  for (std::uint64_t i = 2; i * i <= n; ++i)
    if (!composite_[i])
      for (std::uint64_t j = i * i; j <= n; j += i) composite_[j] = true;
  for (std::uint64_t i = 2; i <= n; ++i)
    if (!composite_[i]) primes_.push_back(static_cast<std::uint32_t>(i));
}

MangoldtSums mangoldt_sums(const PrimeSieve& sieve, std::uint64_t T, double sigma) {
  if (T > sieve.limit()) throw std::invalid_argument("mangoldt_sums: T beyond the sieve");
  MangoldtSums s;
  for (std::uint32_t p : sieve.primes()) {
    if (p > T) break;
    double lp = std::log(double(p));
    std::uint64_t q = p;
    for (int r = 1; q <= T; ++r, q *= p) {
      double qs = std::pow(double(q), sigma);
      s.s1 += lp / qs;
      s.s2 += 1.0 / (r * qs);
      if (q > T / p) break;
    }
  }
  return s;
}

MangoldtSums mangoldt_sums(double T, double sigma) {
  if (!(sigma >= 1.0)) throw std::invalid_argument("mangoldt_sums: sigma must be >= 1");
  if (T < 2.0) return {};
  if (T <= double(PrimeSieve::cap)) {
    PrimeSieve sieve(static_cast<std::uint64_t>(T));
    return mangoldt_sums(sieve, static_cast<std::uint64_t>(T), sigma);
  }
  return mangoldt_sums_log(std::log(T), sigma);
}

MangoldtSums mangoldt_sums_log(double lt, double sigma) {
  if (!(sigma >= 1.0)) throw std::invalid_argument("mangoldt_sums: sigma must be >= 1");
  if (lt <= std::log(double(PrimeSieve::cap))) return mangoldt_sums(std::floor(std::exp(lt) + 1e-9), sigma);
  // Beyond the sieve: s1 from int_1^T t^{-sigma} dt - gamma, s2 from
  // log log T + gamma + 2/log^2 T (the sigma = 1 majorant).
  double beta = sigma - 1.0;
  MangoldtSums s;
  s.s1 = (beta * lt < 1e-12 ? lt : -std::expm1(-beta * lt) / beta) - euler_gamma;
  s.s2 = std::log(lt) + euler_gamma + 2.0 / (lt * lt);
  s.asymptotic = true;
  return s;
}

FindTResult find_T(const FieldParams& fp, CPolicy c, double alpha, bool cross_check) {
  if (!(alpha > 0.0)) throw std::invalid_argument("find_T: alpha must be positive");
  const double cv = c_value(c, fp);
  FindTResult r;
  r.log_T = fp.d() * (cv + 1.0 / alpha);
  if (!cross_check) return r;
  const double sigma = 1.0 + alpha / fp.log_dK;
  const double target = cv * fp.log_dK + 1.0 / (sigma - 1.0);
  const std::uint64_t cap = 10'000'000;
  PrimeSieve sieve(cap);
  std::vector<std::pair<std::uint64_t, double>> powers;
  for (std::uint32_t p : sieve.primes()) {
    double lp = std::log(double(p));
    for (std::uint64_t q = p; q <= cap; q *= p) {
      powers.emplace_back(q, lp);
      if (q > cap / p) break;
    }
  }
  std::sort(powers.begin(), powers.end());
  double s1 = 0.0;
  for (auto [q, lp] : powers) {
    s1 += lp / std::pow(double(q), sigma);
    if (fp.l * s1 >= target) {
      r.log_T_sieve = std::log(double(q));
      r.sieve_feasible = true;
      break;
    }
  }
  return r;
}

ResidueBounds residue_bound(const FieldParams& fp, CPolicy c) {
  if (fp.l < 2) throw std::invalid_argument("residue_bound: l must be >= 2");
  ResidueBounds r;
  r.B = B_term(fp);
  r.c = c_value(c, fp);
  r.alpha = 4.0 * std::sqrt(double(fp.l));
  r.sigma = 1.0 + r.alpha / fp.log_dK;
  r.log_T = find_T(fp, c, r.alpha).log_T;
  auto sums = mangoldt_sums_log(r.log_T, r.sigma);
  r.s2 = sums.s2;
  r.s2_asymptotic = sums.asymptotic;
  r.log_greedy = r.c * r.alpha + fp.l * r.s2 + std::log(r.sigma - 1.0);
  const double cb = 0.25 + r.B;
  r.log_theorem2 = (fp.l - 1) * std::log(cb * std::exp(euler_gamma + std::sqrt(2.0 / fp.l)) * fp.d());
  r.log_louboutin = (fp.l - 1) * std::log(std::exp(1.0) * fp.log_dK / (2.0 * (fp.l - 1)));
  return r;
}

}  // namespace nonsplit
