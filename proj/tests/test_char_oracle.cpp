#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "nonsplit/char_oracle.hpp"

using namespace nonsplit;

namespace {

long powmod(long b, long e, long m) {
  long r = 1 % m;
  b %= m;
  if (b < 0) b += m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

// Kronecker symbol from the factorization of q: Euler's criterion at odd
// primes, the mod-8 rule at 2.
int kronecker_oracle(long n, long q) {
  if (q == 1) return 1;
  int r = 1;
  long m = q;
  for (long p = 2; p <= m; ++p) {
    while (m % p == 0) {
      m /= p;
      int v;
      if (p == 2) {
        long a = ((n % 8) + 8) % 8;
        v = a % 2 == 0 ? 0 : (a == 1 || a == 7 ? 1 : -1);
      } else {
        long e = powmod(n, (p - 1) / 2, p);
        v = e == 0 ? 0 : (e == 1 ? 1 : -1);
      }
      r *= v;
    }
  }
  return r;
}

}  // namespace

TEST_CASE("kronecker examples") {
  for (long q = 1; q < 50; ++q) CHECK(kronecker(1, q) == 1);
  CHECK(kronecker(2, 7) == 1);
  CHECK(kronecker(3, 7) == -1);
  CHECK(kronecker(4, 7) == 1);
  CHECK(kronecker(5, 7) == -1);
  CHECK(kronecker(7, 7) == 0);
}

TEST_CASE("kronecker against the factorization oracle") {
  for (long q = 1; q <= 400; ++q)
    for (long n = -60; n <= 300; ++n) {
      CAPTURE(n);
      CAPTURE(q);
      REQUIRE(kronecker(n, q) == kronecker_oracle(n, q));
    }
}

TEST_CASE("kronecker multiplicativity, squares and period") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> nn(-100000, 100000), qq(1, 100000);
  for (int i = 0; i < 10000; ++i) {
    long a = nn(rng), b = nn(rng), q = qq(rng);
    CHECK(kronecker(a * b, q) == kronecker(a, q) * kronecker(b, q));
    CHECK(kronecker(a + 4 * q, q) == kronecker(a, q));
    int s = kronecker(a, q);
    if (std::gcd(a, q) == 1) CHECK(s * s == 1);
  }
}

TEST_CASE("least_nonresidue") {
  CHECK(least_nonresidue(3) == 2);
  CHECK(least_nonresidue(7) == 3);
  // squares mod 73 by enumeration
  std::vector<bool> sq(73, false);
  for (int x = 1; x < 73; ++x) sq[x * x % 73] = true;
  std::uint64_t brute = 0;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13})
    if (!sq[p % 73]) {
      brute = p;
      break;
    }
  CHECK(least_nonresidue(73) == brute);
  CHECK(verify_certificate(73, brute));
  CHECK_FALSE(verify_certificate(73, 2));
  CHECK_THROWS_AS(least_nonresidue(2), std::invalid_argument);
}

TEST_CASE("least_nonsplit_pair") {
  CHECK(least_nonsplit_pair(3, 5) == 2);
  for (long q = 3; q < 500; ++q) CHECK(least_nonsplit_pair(q, q) == least_nonresidue(q));
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> qq(3, 1000000);
  for (int i = 0; i < 1000; ++i) {
    long a = qq(rng), b = qq(rng);
    auto n = least_nonsplit_pair(a, b);
    CHECK(n <= least_nonresidue(a));
    CHECK(n <= least_nonresidue(b));
    CHECK(n == std::min(least_nonresidue(a), least_nonresidue(b)));
    CHECK(verify_pair_certificate(a, b, n));
  }
}

TEST_CASE("scan certificates against Euler's criterion") {
  auto r = scan(3, 100, ScanMode::quadratic, ScanFilter::all);
  CHECK(r.rows.size() == 98);
  CHECK(r.all_certified);
  auto primes = scan(3, 5000, ScanMode::quadratic, ScanFilter::prime);
  for (const auto& row : primes.rows) {
    long q = row.q1;
    for (long p = 2; p < long(row.n_star); ++p)
      if (is_prime_u64(p)) CHECK(powmod(p, (q - 1) / 2, q) == 1);
    CHECK(powmod(long(row.n_star), (q - 1) / 2, q) != 1);
  }
}

TEST_CASE("scan modes and output") {
  auto pr = scan(1000, 1100, ScanMode::pair, ScanFilter::prime);
  for (const auto& row : pr.rows) {
    CHECK(row.q2 == long(next_prime(row.q1)));
    CHECK(row.certified);
  }
  auto csv = to_csv(pr, ScanMode::pair);
  CHECK(csv.rfind("q1,q2,n_star,exponent_q1q2\n", 0) == 0);
  CHECK(csv.find("# max_exponent_q_gt_300=") != std::string::npos);
  auto q = scan(3, 10, ScanMode::quadratic, ScanFilter::all);
  CHECK(to_csv(q, ScanMode::quadratic).rfind("q,n_star,exponent\n3,2,", 0) == 0);
  auto serial = scan(3, 3000, ScanMode::quadratic, ScanFilter::all, Exec::serial);
  auto par = scan(3, 3000, ScanMode::quadratic, ScanFilter::all, Exec::parallel);
  CHECK(to_csv(serial, ScanMode::quadratic) == to_csv(par, ScanMode::quadratic));
  CHECK_THROWS_AS(scan(2, 10), std::invalid_argument);
  CHECK_THROWS_AS(scan(3, 20'000'000), std::invalid_argument);
}

TEST_CASE("fundamental discriminants") {
  for (long d : {5, 8, 12, 13, 17, 21, 24, 28, 29}) CHECK(is_fundamental_discriminant(d));
  for (long d : {4, 9, 16, 6, 7, 18, 20, 25, 45}) CHECK_FALSE(is_fundamental_discriminant(d));
  auto f = scan(3, 200, ScanMode::quadratic, ScanFilter::fundamental);
  for (const auto& row : f.rows) CHECK(is_fundamental_discriminant(row.q1));
}
