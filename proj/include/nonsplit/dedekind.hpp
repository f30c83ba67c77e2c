#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nonsplit {

struct FieldParams {
  int l = 2;
  double log_dK = 0.0;

  int k() const { return l - 1; }
  double d() const { return log_dK / l; }
  double D() const;  // log(log_dK / l)
};

enum class CPolicy { stark_half, quarter, stechkin, quarter_plus_B };

CPolicy parse_c_policy(const std::string& name);
std::string c_policy_name(CPolicy c);

// B = 2 log x / x with x = log d_K / l; requires x >= e.
double B_term(const FieldParams& fp);
double c_value(CPolicy c, const FieldParams& fp);

double a_lambda(int l, double lam);

struct SupA {
  double A, argmax;
};

SupA sup_a(int l);

struct ExponentReport {
  std::string method;
  double exponent = 0.0;
  double A = 0.0, argmax = 0.0, c = 0.0;
  double baseline = 0.0;
  bool beats_baseline = false;
};

ExponentReport theorem1_exponent(const FieldParams& fp, CPolicy c);
double invert_split_bound(const FieldParams& fp, CPolicy c);

class PrimeSieve {
 public:
  static constexpr std::uint64_t cap = 100'000'000;
  explicit PrimeSieve(std::uint64_t n);
  std::uint64_t limit() const { return n_; }
  bool is_prime(std::uint64_t x) const { return x >= 2 && x <= n_ && !composite_[x]; }
  const std::vector<std::uint32_t>& primes() const { return primes_; }

 private:
  std::uint64_t n_;
  std::vector<bool> composite_;
  std::vector<std::uint32_t> primes_;
};

struct MangoldtSums {
  double s1 = 0.0, s2 = 0.0;
  bool asymptotic = false;
};

// sum_{n<=T} Lambda(n)/n^sigma and sum_{n<=T} Lambda(n)/(n^sigma log n).
MangoldtSums mangoldt_sums(double T, double sigma);
MangoldtSums mangoldt_sums(const PrimeSieve& sieve, std::uint64_t T, double sigma);
// Same sums from log T, for thresholds too large to hold in a double.
MangoldtSums mangoldt_sums_log(double log_T, double sigma);

struct FindTResult {
  double log_T = 0.0;                    // (log d_K / l)(c + 1/alpha)
  std::optional<double> log_T_sieve;     // minimal T from the sums, when in sieve range
  bool sieve_feasible = false;
};

FindTResult find_T(const FieldParams& fp, CPolicy c, double alpha, bool cross_check = false);

struct ResidueBounds {
  double log_greedy = 0.0;
  double log_theorem2 = 0.0;
  double log_louboutin = 0.0;
  double alpha = 0.0, sigma = 0.0, log_T = 0.0, s2 = 0.0, c = 0.0, B = 0.0;
  bool s2_asymptotic = false;
};

ResidueBounds residue_bound(const FieldParams& fp, CPolicy c = CPolicy::quarter_plus_B);

}  // namespace nonsplit
