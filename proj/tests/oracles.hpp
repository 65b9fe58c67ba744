#pragma once

// Test-only reference computations, independent of the library code paths.

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

// Counts Dyck paths of semilength r by number of peaks; result[k-1] is the
// number of paths with k peaks. This is a combinatorial definition of N(r, k)
// that never touches binomial coefficients. Exponential in r, keep r <= 11.
inline std::vector<std::int64_t> narayana_row_by_dyck_paths(unsigned r) {
  std::vector<std::int64_t> by_peaks(r, 0);
  const unsigned steps = 2 * r;
  for (std::uint32_t mask = 0; mask < (1u << steps); ++mask) {
    int height = 0;
    unsigned ups = 0, peaks = 0;
    bool ok = true;
    for (unsigned i = 0; i < steps && ok; ++i) {
      const bool up = (mask >> i) & 1u;
      if (up) {
        ++height;
        ++ups;
      } else {
        if (i > 0 && ((mask >> (i - 1)) & 1u)) ++peaks;
        --height;
      }
      ok = height >= 0;
    }
    if (ok && ups == r && height == 0) ++by_peaks[peaks - 1];
  }
  return by_peaks;
}

// Adaptive Simpson quadrature.
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                               int depth = 50) {
  const auto simpson = [&](double lo, double hi, double flo, double fmid, double fhi) {
    return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
  };
  std::function<double(double, double, double, double, double, double, double, int)> recurse =
      [&](double lo, double hi, double flo, double fmid, double fhi, double whole, double eps, int d) {
        const double mid = 0.5 * (lo + hi);
        const double lm = 0.5 * (lo + mid), rm = 0.5 * (mid + hi);
        const double flm = f(lm), frm = f(rm);
        const double left = simpson(lo, mid, flo, flm, fmid);
        const double right = simpson(mid, hi, fmid, frm, fhi);
        if (d <= 0 || std::abs(left + right - whole) <= 15.0 * eps) return left + right + (left + right - whole) / 15.0;
        return recurse(lo, mid, flo, flm, fmid, left, eps / 2, d - 1) +
               recurse(mid, hi, fmid, frm, fhi, right, eps / 2, d - 1);
      };
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  return recurse(a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), tol, depth);
}

// E[X^n] under the density (2/pi) sqrt(1 - x^2) on [-1, 1], integrated numerically.
inline double semicircle_moment_by_quadrature(unsigned n) {
  const auto integrand = [n](double x) {
    return 2.0 / std::numbers::pi * std::pow(x, static_cast<int>(n)) * std::sqrt(std::max(0.0, 1.0 - x * x));
  };
  return adaptive_simpson(integrand, -1.0, 1.0, 1e-13);
}

// Lassalle numbers by plain 64-bit evaluation of the defining recurrence
// (valid while values fit; n <= 6).
inline std::vector<std::int64_t> lassalle_int64(unsigned n_max) {
  const auto binom = [](std::int64_t n, std::int64_t k) {
    std::int64_t b = 1;
    for (std::int64_t i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
  };
  const auto catalan = [&](std::int64_t n) { return binom(2 * n, n) / (n + 1); };
  std::vector<std::int64_t> a{1};
  for (std::int64_t n = 2; n <= static_cast<std::int64_t>(n_max); ++n) {
    std::int64_t rhs = catalan(n);
    for (std::int64_t j = 1; j < n; ++j) {
      const std::int64_t sign = (j % 2 == 0) ? 1 : -1;
      rhs += sign * binom(2 * n - 1, 2 * j - 1) * a[static_cast<std::size_t>(j - 1)] * catalan(n - j);
    }
    a.push_back((n % 2 == 1) ? rhs : -rhs);
  }
  return a;
}

}  // namespace oracle
