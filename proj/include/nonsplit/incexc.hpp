#pragma once

#include <optional>
#include <utility>

#include "nonsplit/profiles.hpp"

namespace nonsplit {

struct IncExcConfig {
  bool weighted = true;
  std::optional<double> weight_exponent;  // defaults to k-1
  int j_max = 3;
  double quad_tolerance = 1e-9;
};

// I_j(u) = int_{t_1+..+t_j <= u, t_i >= 1} w(t_1+..+t_j) prod (k - P(t_i))/t_i,
// w(s) = ((u-s)/u)^{k-1} when weighted.
double eval_Ij(const Profile& p, double k, int j, double u, const IncExcConfig& cfg = {});

// u^{k-1} sum_{j<=2m-1} (-1)^j I_j/j!  and  u^{k-1} sum_{j<=2m} (-1)^j I_j/j!.
std::pair<double, double> sigma_bracket(const Profile& p, double k, double u, int m,
                                        const IncExcConfig& cfg = {});

// int_{t_1+t_2+t_3 <= u, t_i >= 1} (u - t_1 - t_2 - t_3)/(u t_1 t_2 t_3).
double eval_I3prime(double u, const IncExcConfig& cfg = {});

}  // namespace nonsplit
