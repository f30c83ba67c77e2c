#include "doctest.h"

#include <cmath>

#include "nonsplit/cubic.hpp"
#include "nonsplit/numeric.hpp"
#include "nonsplit/profiles.hpp"

using namespace nonsplit;

namespace {

const double kSqrtE = std::sqrt(std::exp(1.0));

IncExcConfig cfg6() {
  IncExcConfig c;
  c.quad_tolerance = 1e-6;
  return c;
}

}  // namespace

TEST_CASE("cubic_rhs signs") {
  IncExcConfig cfg;
  CHECK(cubic_rhs(1.6625, cfg) > 0.0);
  CHECK(cubic_rhs(2.0, cfg) < 0.0);
  CHECK(cubic_rhs(kSqrtE, cfg) > 0.0);
  CHECK_THROWS_AS(cubic_rhs(1.6, cfg), std::invalid_argument);
  CHECK_THROWS_AS(cubic_rhs(2.01, cfg), std::invalid_argument);
}

TEST_CASE("cubic terms match an independent scipy evaluation") {
  // scipy quad for the single and double integrals, tplquad for I3' with no closed form.
  auto t = cubic_terms(1.6625, IncExcConfig{});
  CHECK(t.I1_upper == doctest::Approx(1.15198271).epsilon(1e-8));
  CHECK(t.I2_lower == doctest::Approx(0.3060550588).epsilon(1e-8));
  CHECK(t.I3prime == doctest::Approx(1.16366535e-4).epsilon(1e-7));
  CHECK(t.rhs == doctest::Approx(5.211703242e-4).epsilon(1e-5));
  CHECK(cubic_rhs(1.65, IncExcConfig{}) == doctest::Approx(0.01191451429).epsilon(1e-6));
  CHECK(cubic_rhs(1.7, IncExcConfig{}) == doctest::Approx(-0.03321477944).epsilon(1e-6));
  CHECK(cubic_rhs(2.0, IncExcConfig{}) == doctest::Approx(-0.2828764763).epsilon(1e-6));
}

TEST_CASE("kernel integrals against closed forms") {
  const double A = 1.7, u = 2.0 * A;
  auto g = [u](double t) { return (u - t) / (t * u); };
  auto G = [u](double a, double b) { return std::log(b / a) - (b - a) / u; };
  CHECK(integrate(g, 1.0, u) == doctest::Approx(G(1.0, u)).epsilon(1e-12));
  CHECK(integrate(g, 1.0, A) == doctest::Approx(G(1.0, A)).epsilon(1e-12));
}

TEST_CASE("cubic_rhs is continuous and decreasing near the critical point") {
  IncExcConfig cfg;
  double prev = cubic_rhs(1.65, cfg);
  for (double A = 1.655; A <= 1.70; A += 0.005) {
    double v = cubic_rhs(A, cfg);
    CHECK(v < prev);
    CHECK(std::abs(v - prev) < 0.01);
    prev = v;
  }
  // No jumps across the panel boundaries 2, 1+A, 3 as A moves through them.
  for (double A : {kSqrtE + 1e-6, 1.75, 1.9, 1.999}) {
    CHECK(std::abs(cubic_rhs(A, cfg) - cubic_rhs(A + 1e-6, cfg)) < 1e-4);
  }
}

TEST_CASE("critical A") {
  auto r = cubic_critical_A(cfg6(), 2);
  CHECK(r.A_star >= 1.6625);
  CHECK(r.A_star == doctest::Approx(1.6630737).epsilon(1e-5));
  CHECK(r.exponent <= 1.0 / 6.65);
  CHECK(r.exponent < r.baseline);
  CHECK(r.rhs_at_16625 > 0.0);
  CHECK(r.curve.front().first == doctest::Approx(kSqrtE));
  CHECK(r.curve.back().first == 2.0);

  auto r3 = cubic_critical_A(cfg6(), 3);
  CHECK(r3.A_star >= r.A_star);
  auto doubled = cubic_critical_A(cfg6(), 2, 9.0);
  CHECK(doubled.A_star < r.A_star);

  auto serial = cubic_critical_A(cfg6(), 2, 4.5, 0.01, 1e-6, Exec::serial);
  CHECK(serial.A_star == r.A_star);
}

TEST_CASE("an inconsistent configuration is reported") {
  CHECK_THROWS_AS(cubic_critical_A(cfg6(), 2, -50.0), std::runtime_error);
}

TEST_CASE("two-step sub-lemma") {
  CHECK(cubic_two_step_bound(kSqrtE) == doctest::Approx(1.0 - kSqrtE));
  CHECK(cubic_two_step_bound(kSqrtE) == doctest::Approx(-0.6487).epsilon(1e-4));
  // P' = 1 on [1, A/sqrt e], -1 after: carries int (1-P')/t = 1 and attains the bound.
  for (double A : {kSqrtE, 1.7, 1.9, 2.0}) {
    double c = A / kSqrtE;
    CHECK(2.0 * std::log(A / c) == doctest::Approx(1.0));
    CHECK((c - 1.0) - (A - c) == doctest::Approx(cubic_two_step_bound(A)));
  }
}

TEST_CASE("the cubic map keeps -P in [0, 1]") {
  for (int chi : {-1, 1}) {
    double minus_p = (chi + 1) / 2.0;
    CHECK(minus_p >= 0.0);
    CHECK(minus_p <= 1.0);
  }
  for (double A : {kSqrtE, 1.6625, 1.9}) {
    auto env = make_envelope(A);
    for (double t = A; t <= 2.0 * A; t += 0.01) {
      CHECK(cubic_U(env, t) <= 1.0);
      CHECK(cubic_L(env, t) <= cubic_U(env, t) + 1e-15);
    }
  }
}
