#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nonsplit/numeric.hpp"

namespace nonsplit {

// Kronecker symbol (n/q).
int kronecker(std::int64_t n, std::int64_t q);

bool is_prime_u64(std::uint64_t n);
std::uint64_t next_prime(std::uint64_t n);  // smallest prime > n
bool is_fundamental_discriminant(std::int64_t d);

// Smallest prime p with (p/q) != 1.
std::uint64_t least_nonresidue(std::int64_t q);
// Smallest prime p with (p/q1) != 1 or (p/q2) != 1.
std::uint64_t least_nonsplit_pair(std::int64_t q1, std::int64_t q2);

// (p/q) = 1 for all primes p < n_star and != 1 at n_star.
bool verify_certificate(std::int64_t q, std::uint64_t n_star);
bool verify_pair_certificate(std::int64_t q1, std::int64_t q2, std::uint64_t n_star);

enum class ScanFilter { all, prime, fundamental };
enum class ScanMode { quadratic, pair };

struct ScanRow {
  std::int64_t q1 = 0, q2 = 0;  // q2 = 0 in quadratic mode
  std::uint64_t n_star = 0;
  double exponent = 0.0;        // log n_star / log q  (or / log q1 q2)
  bool certified = false;
};

struct ScanResult {
  std::vector<ScanRow> rows;
  double max_exponent_above_300 = 0.0;
  std::int64_t argmax_q = 0;
  bool all_certified = true;
};

ScanResult scan(std::int64_t lo, std::int64_t hi, ScanMode mode = ScanMode::quadratic,
                ScanFilter filter = ScanFilter::prime, Exec exec = Exec::parallel);

std::string to_csv(const ScanResult& r, ScanMode mode);

}  // namespace nonsplit
