#pragma once

// Test-side numeric oracles, deliberately independent of the library's
// integration and sampling code paths.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

// Composite 16-point Gauss-Legendre with panel doubling until two successive
// refinements agree to abs_tol.
inline double gauss_legendre(const std::function<double(double)>& f, double a, double b,
                             double abs_tol = 1e-13) {
  static const std::array<double, 8> xs = {
      0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
      0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
      0.9445750230732326, 0.9894009349916499};
  static const std::array<double, 8> ws = {
      0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
      0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
      0.0622535239386479, 0.0271524594117541};
  auto panel = [&](double lo, double hi) {
    const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    double s = 0.0;
    for (int i = 0; i < 8; ++i)
      s += ws[i] * (f(c - h * xs[i]) + f(c + h * xs[i]));
    return s * h;
  };
  double prev = panel(a, b);
  for (int n = 2; n <= 1 << 14; n *= 2) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
      sum += panel(a + (b - a) * i / n, a + (b - a) * (i + 1) / n);
    if (std::abs(sum - prev) < abs_tol) return sum;
    prev = sum;
  }
  return prev;
}

// Central finite difference derivative.
inline double fd_derivative(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Two-sample chi-square statistic p-value on pooled bins (counts per bin per
// sample). Wilson-Hilferty approximation of the chi-square tail is plenty for
// the p > 0.01 checks here.
inline double chi2_tail(double stat, int dof) {
  if (dof <= 0) return 1.0;
  const double z = (std::pow(stat / dof, 1.0 / 3.0) - (1.0 - 2.0 / (9.0 * dof))) /
                   std::sqrt(2.0 / (9.0 * dof));
  return 0.5 * std::erfc(z / std::sqrt(2.0));
}

inline double two_sample_chi2_pvalue(const std::vector<double>& counts_a,
                                     const std::vector<double>& counts_b) {
  double na = 0.0, nb = 0.0;
  for (double c : counts_a) na += c;
  for (double c : counts_b) nb += c;
  double stat = 0.0;
  int dof = -1;
  for (std::size_t i = 0; i < counts_a.size(); ++i) {
    const double tot = counts_a[i] + counts_b[i];
    if (tot == 0.0) continue;
    const double ea = tot * na / (na + nb);
    const double eb = tot * nb / (na + nb);
    stat += (counts_a[i] - ea) * (counts_a[i] - ea) / ea +
            (counts_b[i] - eb) * (counts_b[i] - eb) / eb;
    ++dof;
  }
  return chi2_tail(stat, dof);
}

// Kolmogorov-Smirnov distance of sorted samples against a CDF.
inline double ks_distance(std::vector<double> samples,
                          const std::function<double(double)>& cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double c = cdf(samples[i]);
    d = std::max(d, std::abs(c - (i + 1) / n));
    d = std::max(d, std::abs(c - i / n));
  }
  return d;
}

// splitmix64 — small deterministic generator for test parameter draws,
// unrelated to the library RNG.
struct SplitMix {
  std::uint64_t s;
  explicit SplitMix(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    s += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  double uniform() { return (next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

}  // namespace oracle
