#include "imrel/steady_state.hpp"

#include <algorithm>
#include <cmath>

#include "imrel/hazard.hpp"
#include "imrel/quadrature.hpp"

namespace imrel {

namespace {

struct AgeWindow {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
};

// Averaging window in age coordinates. PAS: the stationary sweep of one
// period (length M after the change of variables). PAR: the linear
// approximation sweep over (0, RP), length RP(1-eps); degenerates to a
// point at eps = 1.
AgeWindow age_window(const SteadyFunctions& sf, double M) {
  const double eps = sf.params.epsilon;
  if (sf.spec.im == ImModel::PAS) {
    if (eps < kPasEpsilonMin)
      throw EpsilonZero("PAS averaging needs epsilon >= 1e-3 (no stationary age at BAO)");
    return {M * (1.0 - eps) / eps, M / eps};
  }
  const double half = 0.5 * M * eps;
  return {half, sf.rp_hours * (1.0 - eps) + half};
}

void check_interval(const SteadyFunctions& sf, double M) {
  if (!(M > 0.0) || !(M <= sf.rp_hours))
    throw Error("maintenance interval must lie in (0, RP]");
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Integral over [lo, hi] of H(omega)^n d omega, divided by the window
// length: closed form for both hazard families.
double mean_cum_hazard_power(const SteadyFunctions& sf, const AgeWindow& w, int n) {
  if (n == 0) return 1.0;
  const ModelParams& p = sf.params;
  if (sf.spec.hazard == HazardFamily::Linear) {
    const double c = std::pow(0.5 * p.alpha, n);
    const int k = 2 * n + 1;
    return c * (std::pow(w.hi, k) - std::pow(w.lo, k)) / (k * w.length());
  }
  const double nb = n * p.beta;
  const double c = p.eta / ((nb + 1.0) * w.length());
  return c * (std::pow(w.hi / p.eta, nb + 1.0) - std::pow(w.lo / p.eta, nb + 1.0));
}

// Cancellation guard: the alternating series loses about 2*Hmax digits of
// precision; past this the quadrature fallback is more accurate than the
// requested bound anyway.
constexpr double kSeriesHmax = 7.0;

}  // namespace

double stationary_age_pas(double M, double epsilon, double t, int m) {
  if (epsilon < kPasEpsilonMin)
    throw EpsilonZero("stationary PAS age undefined for epsilon < 1e-3");
  return t - m * M + M / epsilon;
}

double approx_age_par(double M, double epsilon, double t) {
  return t * (1.0 - epsilon) + 0.5 * M * epsilon;
}

double avg_hazard(const SteadyFunctions& sf, double M) {
  check_interval(sf, M);
  const ModelParams& p = sf.params;
  const double eps = p.epsilon;
  const double rp = sf.rp_hours;
  if (sf.spec.im == ImModel::PAS) {
    if (eps < kPasEpsilonMin)
      throw EpsilonZero("PAS average hazard needs epsilon >= 1e-3");
    if (sf.spec.hazard == HazardFamily::Linear)
      return M * p.alpha * (2.0 - eps) / (2.0 * eps);
    return std::pow(M, p.beta - 1.0) / std::pow(eps * p.eta, p.beta) *
           (1.0 - std::pow(1.0 - eps, p.beta));
  }
  if (sf.spec.hazard == HazardFamily::Linear)
    return 0.5 * p.alpha * (eps * M + rp * (1.0 - eps));
  if (1.0 - eps < 1e-9)  // removable singularity of the closed form at GAN
    return p.beta / p.eta * std::pow(0.5 * M / p.eta, p.beta - 1.0);
  return (std::pow(M * eps + 2.0 * rp * (1.0 - eps), p.beta) - std::pow(M * eps, p.beta)) /
         (rp * (1.0 - eps) * std::pow(2.0 * p.eta, p.beta));
}

double avg_reliability_series(const SteadyFunctions& sf, double M, int n_terms) {
  check_interval(sf, M);
  if (n_terms < 1) throw Error("series needs at least one term");
  const AgeWindow w = age_window(sf, M);
  if (w.length() <= 0.0)  // PAR at eps = 1: constant age M/2
    return std::exp(-cum_hazard_at_age(sf.spec, sf.params, w.lo));
  double sum = 0.0;
  for (int n = 0; n < n_terms; ++n) {
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    sum += sign * mean_cum_hazard_power(sf, w, n) / factorial(n);
  }
  return std::clamp(sum, 0.0, 1.0);
}

ReliabilityResult avg_reliability_detail(const SteadyFunctions& sf, double M,
                                         double accuracy) {
  check_interval(sf, M);
  if (!(accuracy > 0.0)) throw Error("accuracy must be positive");
  const AgeWindow w = age_window(sf, M);
  ReliabilityResult res;

  if (w.length() <= 0.0) {
    res.value = std::exp(-cum_hazard_at_age(sf.spec, sf.params, w.lo));
    res.path = ReliabilityPath::Exact;
    return res;
  }

  const double h_max = cum_hazard_at_age(sf.spec, sf.params, w.hi);
  if (h_max <= kSeriesHmax) {
    // exp(-H) Taylor remainder after N terms is bounded by H^N/N!; the
    // averaged bound is the next term's mean integral.
    double sum = 0.0;
    for (int n = 0; n < sf.series_terms; ++n) {
      const double term = mean_cum_hazard_power(sf, w, n) / factorial(n);
      if (!std::isfinite(term)) break;
      sum += (n % 2 == 0 ? term : -term);
      const double bound = mean_cum_hazard_power(sf, w, n + 1) / factorial(n + 1);
      if (bound < accuracy) {
        res.value = std::clamp(sum, 0.0, 1.0);
        res.path = ReliabilityPath::Series;
        res.terms_used = n + 1;
        res.error_bound = bound;
        return res;
      }
    }
  }

  const auto f = [&](double omega) {
    return std::exp(-cum_hazard_at_age(sf.spec, sf.params, omega));
  };
  const double tol = 0.25 * accuracy * w.length();
  res.value = std::clamp(integrate_adaptive(f, w.lo, w.hi, tol) / w.length(), 0.0, 1.0);
  res.path = ReliabilityPath::Quadrature;
  res.error_bound = accuracy;
  return res;
}

double avg_reliability(const SteadyFunctions& sf, double M, double accuracy) {
  return avg_reliability_detail(sf, M, accuracy).value;
}

double closed_form_ra(const ModelParams& p, double epsilon, double M) {
  const double b = p.beta;
  return 1.0 + std::pow(M / (epsilon * p.eta), b) *
                   (std::pow(1.0 - epsilon, b + 1.0) - 1.0) / (epsilon * (b + 1.0));
}

std::string to_string(ReliabilityPath p) {
  switch (p) {
    case ReliabilityPath::Series: return "series";
    case ReliabilityPath::Quadrature: return "quadrature";
    default: return "exact";
  }
}

}  // namespace imrel
