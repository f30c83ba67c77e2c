#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nonsplit/numeric.hpp"
#include "nonsplit/profiles.hpp"

namespace nonsplit {

enum class Provenance { convolution, dde, saddle };

std::string provenance_name(Provenance p);

struct SigmaSolution {
  double k = 1.0;
  double step = 1e-4;
  std::vector<double> values;  // sigma, or tau = sigma u^{1-k} when normalized
  Provenance provenance = Provenance::convolution;
  bool normalized = false;
  bool under_resolved = false;

  std::size_t size() const { return values.size(); }
  double u(std::size_t i) const { return double(i) * step; }
  double sigma(std::size_t i) const;
  double tau(std::size_t i) const;
  double u_max() const { return u(values.size() - 1); }
};

// u sigma(u) = int_0^u sigma(u-t) P(t) dt with sigma = u^{k-1} on [0,1],
// trapezoid rule in the memory term.
SigmaSolution solve_convolution(const Profile& p, double k, double u_max, double step,
                                Exec exec = Exec::parallel);

// u sigma' + (1-k) sigma + (k+1) sigma(u-1) = 0, integrated for tau = sigma u^{1-k}:
// tau'(u) = -((k+1)/u) (1-1/u)^{k-1} tau(u-1).
SigmaSolution solve_extremal_dde(double k, double u_max, double step);

double default_step(double k);

std::optional<double> first_zero(const SigmaSolution& sol);

struct OrderingReport {
  bool holds = true;
  double max_violation = 0.0;  // max of sigma - sigma_sharp over [0, u0]
  std::optional<double> u0;
  double u_checked = 0.0;
};

OrderingReport compare_profiles(const Profile& p, const Profile& p_sharp, double k,
                                double u_max, double step = 1e-3, Exec exec = Exec::parallel);

std::string to_csv(const SigmaSolution& sol, std::size_t stride = 1);

}  // namespace nonsplit
