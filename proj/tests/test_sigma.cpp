#include "doctest.h"

#include <cmath>
#include <random>

#include "nonsplit/sigma.hpp"

using namespace nonsplit;

namespace {

// sigma' = ((k-1) sigma - (k+1) sigma(u-1))/u integrated directly in sigma,
// classical RK4 with linear interpolation of the delayed value at midpoints.
std::vector<double> direct_sigma(double k, double u_max, double h) {
  const std::size_t m = std::size_t(std::llround(1.0 / h)), n = std::size_t(std::llround(u_max / h));
  std::vector<double> s(n + 1);
  for (std::size_t i = 0; i <= m && i <= n; ++i) s[i] = std::pow(i * h, k - 1.0);
  auto delayed = [&](double v) {
    if (v <= 1.0) return std::pow(v, k - 1.0);
    double x = v / h;
    std::size_t j = std::size_t(x);
    double f = x - j;
    // cubic Lagrange through j-1..j+2 to stay fourth order
    double y0 = s[j - 1], y1 = s[j], y2 = s[j + 1], y3 = s[j + 2];
    return y1 + f * (-(y0) / 3.0 - y1 / 2.0 + y2 - y3 / 6.0) + f * f * (y0 / 2.0 - y1 + y2 / 2.0) +
           f * f * f * (-y0 / 6.0 + y1 / 2.0 - y2 / 2.0 + y3 / 6.0);
  };
  auto rhs = [&](double u, double y) { return ((k - 1.0) * y - (k + 1.0) * delayed(u - 1.0)) / u; };
  for (std::size_t i = m; i < n; ++i) {
    double u = i * h, y = s[i];
    double k1 = rhs(u, y), k2 = rhs(u + h / 2, y + h / 2 * k1), k3 = rhs(u + h / 2, y + h / 2 * k2),
           k4 = rhs(u + h, y + h * k3);
    s[i + 1] = y + h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  return s;
}

Profile random_step_profile(std::mt19937_64& rng, double k, double t_max) {
  std::uniform_real_distribution<double> val(-1.0, k);
  std::uniform_int_distribution<int> len(2, 10);
  Profile p;
  p.k = k;
  p.segments.push_back({0.0, 1.0, {SegmentKind::constant, k}});
  double t = 1.0;
  while (t < t_max - 1e-9) {
    double e = std::min(t_max, t + 0.05 * len(rng));
    p.segments.push_back({t, e, {SegmentKind::constant, val(rng)}});
    t = e;
  }
  return p;
}

}  // namespace

TEST_CASE("convolution examples") {
  auto p = extremal_profile(1.0, 3.0);
  auto s = solve_convolution(p, 1.0, 3.0, 1e-4);
  CHECK(s.sigma(15000) == doctest::Approx(1.0 - 2.0 * std::log(1.5)).epsilon(1e-8));
  CHECK(s.sigma(15000) == doctest::Approx(0.18907).epsilon(1e-4));
  for (std::size_t i = 10000; i <= 20000; i += 500)
    CHECK(std::abs(s.sigma(i) - (1.0 - 2.0 * std::log(s.u(i)))) < 1e-8);

  auto s3 = solve_convolution(extremal_profile(3.0, 2.0), 3.0, 2.0, 1e-3);
  CHECK(s3.sigma(500) == doctest::Approx(0.25));

  Profile two;
  two.k = 2.0;
  two.segments.push_back({0.0, 6.0, {SegmentKind::constant, 2.0}});
  auto s2 = solve_convolution(two, 2.0, 6.0, 1e-3);
  for (std::size_t i = 0; i < s2.size(); i += 250) CHECK(s2.sigma(i) == doctest::Approx(s2.u(i)).epsilon(1e-6));
}

TEST_CASE("convolution input validation") {
  auto p = extremal_profile(1.0, 3.0);
  CHECK_THROWS_AS(solve_convolution(p, 1.0, 4.0, 1e-3), std::invalid_argument);
  CHECK_THROWS_AS(solve_convolution(p, 1.0, 3.0, 3e-4), std::invalid_argument);
  CHECK_THROWS_AS(solve_convolution(p, 1.0, 3.0, 1e-2), std::invalid_argument);
  CHECK_THROWS_AS(solve_convolution(p, 0.5, 3.0, 1e-3), std::invalid_argument);
}

TEST_CASE("serial and parallel convolution agree") {
  auto p = extremal_profile(3.0, 10.0);
  auto a = solve_convolution(p, 3.0, 10.0, 1e-3, Exec::serial);
  auto b = solve_convolution(p, 3.0, 10.0, 1e-3, Exec::parallel);
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(std::abs(a.values[i] - b.values[i]) <= 1e-12 * std::max(1.0, std::abs(a.values[i])));
}

TEST_CASE("DDE examples") {
  auto s = solve_extremal_dde(1.0, 3.0, 1e-4);
  auto z = first_zero(s);
  REQUIRE(z);
  CHECK(std::abs(*z - std::sqrt(std::exp(1.0))) < 1e-6);
  for (double k : {1.0, 4.0, 12.5})
    for (std::size_t i = 0; i <= 1000; i += 100) CHECK(solve_extremal_dde(k, 3.0, 1e-3).tau(i) == 1.0);

  auto s10 = solve_extremal_dde(10.0, 30.0, 1e-3);
  auto z10 = first_zero(s10);
  REQUIRE(z10);
  for (std::size_t i = 1001; s10.u(i) < *z10; ++i) {
    CHECK(s10.tau(i) > 0.0);
    CHECK(s10.tau(i) <= s10.tau(i - 1));
  }
}

TEST_CASE("DDE step rule") {
  CHECK_FALSE(solve_extremal_dde(5.0, 10.0, 1e-3).under_resolved);
  CHECK(solve_extremal_dde(30.0, 40.0, 1e-3).under_resolved);
  CHECK_THROWS_AS(solve_extremal_dde(30.0, 40.0, 1e-2), std::invalid_argument);
  CHECK_THROWS_AS(solve_extremal_dde(3.0, 40.0, 1e-3), std::invalid_argument);
}

TEST_CASE("first zero") {
  auto k5 = solve_extremal_dde(5.0, 10.0, 1e-3);
  auto z = first_zero(k5);
  REQUIRE(z);
  CHECK(*z > 5.0 / std::log(5.0));
  CHECK(*z < 10.0);
  Profile flat;
  flat.k = 2.0;
  flat.segments.push_back({0.0, 4.0, {SegmentKind::constant, 2.0}});
  CHECK_FALSE(first_zero(solve_convolution(flat, 2.0, 4.0, 1e-3)));
  auto c1 = solve_convolution(extremal_profile(1.0, 3.0), 1.0, 3.0, 1e-4);
  CHECK(std::abs(*first_zero(c1) - std::sqrt(std::exp(1.0))) < 1e-6);
}

TEST_CASE("DDE and convolution agree on the extremal profile") {
  for (double k : {1.0, 2.0, 3.0, 5.0}) {
    const double h = 1e-3, umax = std::max(3.0, 2.0 * k);
    auto d = solve_extremal_dde(k, umax, h);
    auto c = solve_convolution(extremal_profile(k, umax), k, umax, h);
    double u0 = first_zero(d).value_or(umax);
    double worst = 0.0;
    for (std::size_t i = 0; i < d.size() && d.u(i) <= std::min(u0, 2.0 * k); ++i)
      worst = std::max(worst, std::abs(d.tau(i) - c.tau(i)));
    CAPTURE(k);
    CHECK(worst <= 10.0 * h);
  }
}

TEST_CASE("normalized and direct integration agree") {
  for (double k : {1.0, 2.0, 3.0, 5.0}) {
    const double h = 1e-3, umax = 2.0 * k + 2.0;
    auto d = solve_extremal_dde(k, umax, h);
    auto s = direct_sigma(k, umax, h);
    for (std::size_t i = 0; i < d.size(); ++i) {
      double x = d.u(i), ref = std::max(1.0, std::pow(x, k - 1.0));
      CAPTURE(k);
      CAPTURE(x);
      CHECK(std::abs(d.sigma(i) - s[i]) <= 1e-6 * ref);
    }
  }
}

TEST_CASE("sigma stays below u^{k-1}") {
  for (double k : {1.0, 2.0, 4.0}) {
    const double h = 1e-3;
    auto s = solve_convolution(extremal_profile(k, 8.0), k, 8.0, h);
    // trapezoid error is O(h^2) relative
    for (std::size_t i = 0; i < s.size(); ++i)
      CHECK(s.sigma(i) <= std::pow(s.u(i), k - 1.0) * (1.0 + 4.0 * h * h) + 1e-12);
  }
}

TEST_CASE("compare_profiles") {
  auto p = extremal_profile(2.0, 6.0);
  auto same = compare_profiles(p, p, 2.0, 6.0);
  CHECK(same.holds);
  CHECK(same.max_violation == 0.0);

  Profile bump = p;
  bump.segments = {{0.0, 1.0, {SegmentKind::constant, 2.0}},
                   {1.0, 1.5, {SegmentKind::constant, -1.0}},
                   {1.5, 1.7, {SegmentKind::constant, 0.5}},
                   {1.7, 6.0, {SegmentKind::constant, -1.0}}};
  auto r = compare_profiles(p, bump, 2.0, 6.0);
  CHECK(r.holds);
  CHECK(r.u0);

  auto env = make_envelope(1.6625);
  auto lo = cubic_lower_profile(env), hi = cubic_upper_profile(env);
  auto rc = compare_profiles(lo, hi, 2.0, 3.3);
  CHECK(rc.holds);

  CHECK_THROWS_AS(compare_profiles(bump, p, 2.0, 6.0), std::invalid_argument);
}

TEST_CASE("monotonicity on random profile pairs") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> up(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    double k = trial % 2 ? 1.0 : 2.0;
    auto p = random_step_profile(rng, k, 5.0);
    Profile q = p;
    for (std::size_t i = 1; i < q.segments.size(); ++i)
      q.segments[i].form.a = std::min(k, q.segments[i].form.a + (k + 1.0) * up(rng) * up(rng));
    auto r = compare_profiles(p, q, k, 5.0);
    CAPTURE(trial);
    CHECK(r.holds);
  }
}

TEST_CASE("CSV export") {
  auto s = solve_extremal_dde(2.0, 2.0, 1e-3);
  auto csv = to_csv(s, 500);
  CHECK(csv.rfind("u,sigma,tau\n", 0) == 0);
  CHECK(csv.find("1.000000,") != std::string::npos);
  CHECK(provenance_name(s.provenance) == "dde");
}
