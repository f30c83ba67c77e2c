#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

namespace nonsplit {

enum class Exec { serial, parallel };

// Adaptive Gauss-Kronrod on [a, b], with panels split at the interior cuts.
// tol is relative to the L1 norm of each panel.
template <class F>
double integrate(F&& f, double a, double b, std::vector<double> cuts = {},
                 double tol = 1e-10) {
  if (!(b > a)) return 0.0;
  cuts.push_back(a);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  double sum = 0.0;
  double lo = a;
  for (double c : cuts) {
    if (c <= lo) continue;
    double hi = std::min(c, b);
    if (hi - lo > 1e-14 * (1.0 + std::abs(lo)))
      sum += boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, lo, hi, 15, tol);
    lo = hi;
    if (lo >= b) break;
  }
  return sum;
}

// Bisection for a sign change of f on [lo, hi]; returns the bracket midpoint.
template <class F>
double bisect_root(F&& f, double lo, double hi, double xtol) {
  auto done = [xtol](double x, double y) { return std::abs(y - x) <= xtol; };
  auto r = boost::math::tools::bisect(f, lo, hi, done);
  return 0.5 * (r.first + r.second);
}

}  // namespace nonsplit
