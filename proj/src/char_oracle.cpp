#include "nonsplit/char_oracle.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace nonsplit {

int kronecker(std::int64_t a, std::int64_t b) {
  if (b < 0) throw std::invalid_argument("kronecker: q must be >= 0");
  if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
  if (a % 2 == 0 && b % 2 == 0) return 0;
  int v = 0;
  while (b % 2 == 0) {
    ++v;
    b /= 2;
  }
  int k = 1;
  if (v % 2 == 1) {
    std::int64_t r = ((a % 8) + 8) % 8;
    if (r == 3 || r == 5) k = -k;
  }
  // b is odd and positive now.
  a %= b;
  if (a < 0) a += b;
  while (a != 0) {
    v = 0;
    while (a % 2 == 0) {
      ++v;
      a /= 2;
    }
    if (v % 2 == 1 && (b % 8 == 3 || b % 8 == 5)) k = -k;
    if (a % 4 == 3 && b % 4 == 3) k = -k;
    std::int64_t r = a;
    a = b % r;
    b = r;
  }
  return b == 1 ? k : 0;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  for (std::uint64_t d = 11; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime_u64(c)) ++c;
  return c;
}

bool is_fundamental_discriminant(std::int64_t d) {
  auto squarefree = [](std::int64_t x) {
    x = x < 0 ? -x : x;
    for (std::int64_t p = 2; p * p <= x; ++p)
      if (x % (p * p) == 0) return false;
    return true;
  };
  std::int64_t r = ((d % 4) + 4) % 4;
  if (d == 1 || d == 0) return false;
  if (r == 1) return squarefree(d);
  if (r == 0) {
    std::int64_t m = d / 4, rm = ((m % 4) + 4) % 4;
    return (rm == 2 || rm == 3) && squarefree(m);
  }
  return false;
}

std::uint64_t least_nonresidue(std::int64_t q) {
  if (q < 3) throw std::invalid_argument("least_nonresidue: q must be >= 3");
  for (std::uint64_t p = 2;; p = next_prime(p))
    if (kronecker(static_cast<std::int64_t>(p), q) != 1) return p;
}

std::uint64_t least_nonsplit_pair(std::int64_t q1, std::int64_t q2) {
  if (q1 < 3 || q2 < 3) throw std::invalid_argument("least_nonsplit_pair: moduli must be >= 3");
  for (std::uint64_t p = 2;; p = next_prime(p)) {
    auto sp = static_cast<std::int64_t>(p);
    if (kronecker(sp, q1) != 1 || kronecker(sp, q2) != 1) return p;
  }
}

bool verify_certificate(std::int64_t q, std::uint64_t n_star) {
  if (!is_prime_u64(n_star)) return false;
  for (std::uint64_t p = 2; p < n_star; p = next_prime(p))
    if (kronecker(static_cast<std::int64_t>(p), q) != 1) return false;
  return kronecker(static_cast<std::int64_t>(n_star), q) != 1;
}

bool verify_pair_certificate(std::int64_t q1, std::int64_t q2, std::uint64_t n_star) {
  if (!is_prime_u64(n_star)) return false;
  auto split = [&](std::uint64_t p) {
    auto sp = static_cast<std::int64_t>(p);
    return kronecker(sp, q1) == 1 && kronecker(sp, q2) == 1;
  };
  for (std::uint64_t p = 2; p < n_star; p = next_prime(p))
    if (!split(p)) return false;
  return !split(n_star);
}

ScanResult scan(std::int64_t lo, std::int64_t hi, ScanMode mode, ScanFilter filter, Exec exec) {
  if (lo < 3 || hi < lo) throw std::invalid_argument("scan: need 3 <= lo <= hi");
  if (hi > 10'000'000) throw std::invalid_argument("scan: upper end beyond 1e7");
  std::vector<std::int64_t> qs;
  for (std::int64_t q = lo; q <= hi; ++q) {
    if (filter == ScanFilter::prime && !is_prime_u64(static_cast<std::uint64_t>(q))) continue;
    if (filter == ScanFilter::fundamental && !is_fundamental_discriminant(q)) continue;
    qs.push_back(q);
  }
  ScanResult res;
  res.rows.resize(qs.size());
  const long n = static_cast<long>(qs.size());
#pragma omp parallel for schedule(dynamic, 256) if (exec == Exec::parallel)
  for (long i = 0; i < n; ++i) {
    ScanRow r;
    r.q1 = qs[i];
    if (mode == ScanMode::quadratic) {
      r.n_star = least_nonresidue(r.q1);
      r.exponent = std::log(double(r.n_star)) / std::log(double(r.q1));
      r.certified = verify_certificate(r.q1, r.n_star);
    } else {
      r.q2 = static_cast<std::int64_t>(next_prime(static_cast<std::uint64_t>(r.q1)));
      r.n_star = least_nonsplit_pair(r.q1, r.q2);
      r.exponent = std::log(double(r.n_star)) / std::log(double(r.q1) * double(r.q2));
      r.certified = verify_pair_certificate(r.q1, r.q2, r.n_star);
    }
    res.rows[i] = r;
  }
  for (const auto& r : res.rows) {
    res.all_certified = res.all_certified && r.certified;
    if (r.q1 > 300 && r.exponent > res.max_exponent_above_300) {
      res.max_exponent_above_300 = r.exponent;
      res.argmax_q = r.q1;
    }
  }
  return res;
}

std::string to_csv(const ScanResult& r, ScanMode mode) {
  std::string out = mode == ScanMode::quadratic ? "q,n_star,exponent\n" : "q1,q2,n_star,exponent_q1q2\n";
  char buf[128];
  for (const auto& row : r.rows) {
    if (mode == ScanMode::quadratic)
      std::snprintf(buf, sizeof buf, "%lld,%llu,%.6f\n", (long long)row.q1,
                    (unsigned long long)row.n_star, row.exponent);
    else
      std::snprintf(buf, sizeof buf, "%lld,%lld,%llu,%.6f\n", (long long)row.q1, (long long)row.q2,
                    (unsigned long long)row.n_star, row.exponent);
    out += buf;
  }
  std::snprintf(buf, sizeof buf, "# max_exponent_q_gt_300=%.6f at q=%lld, all_certified=%d\n",
                r.max_exponent_above_300, (long long)r.argmax_q, r.all_certified ? 1 : 0);
  out += buf;
  return out;
}

}  // namespace nonsplit
