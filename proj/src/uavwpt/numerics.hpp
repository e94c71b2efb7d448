// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace uavwpt::numerics {

/// Evenly spaced points on [lo, hi], endpoints included.
inline double grid_point(double lo, double hi, std::size_t i, std::size_t n) {
  if (n < 2) return lo;
  if (i + 1 == n) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

/// Zeros of f on [lo, hi]: sign-change scan over `samples` uniform points,
/// then bisection of every bracket to width `tol`. Roots are ascending.
template <typename F>
std::vector<double> scan_roots(F&& f, double lo, double hi, std::size_t samples, double tol) {
  std::vector<double> roots;
  if (!(hi > lo)) {
    if (hi == lo && f(lo) == 0.0) roots.push_back(lo);
    return roots;
  }
  double x_prev = lo;
  double f_prev = f(lo);
  if (f_prev == 0.0) roots.push_back(lo);
  for (std::size_t i = 1; i < samples; ++i) {
    const double x = grid_point(lo, hi, i, samples);
    const double fx = f(x);
    if (fx == 0.0) {
      roots.push_back(x);
    } else if (f_prev != 0.0 && std::signbit(fx) != std::signbit(f_prev)) {
      double a = x_prev;
      double b = x;
      double fa = f_prev;
      while (b - a > tol) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) {
          a = b = m;
          break;
        }
        if (std::signbit(fm) == std::signbit(fa)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    x_prev = x;
    f_prev = fx;
  }
  return roots;
}

/// Golden-section maximization of a unimodal f on [lo, hi] down to `tol`.
/// Returns the abscissa of the final bracket midpoint.
template <typename F>
double golden_section_max(F&& f, double lo, double hi, double tol) {
  constexpr double kInvPhi = 0.6180339887498948482;
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace uavwpt::numerics
