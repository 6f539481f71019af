#pragma once

#include <string>

#include "imrel/types.hpp"

namespace imrel {

// Long-run per-component evaluators: average hazard h*(M) and average
// reliability R*(M) as functions of a constant maintenance interval M.
// PAS models average over one stationary period, PAR models over the
// replacement period using the linear age approximation.
struct SteadyFunctions {
  ModelSpec spec{};
  ModelParams params{};
  double rp_hours = 0.0;      // replacement period
  int series_terms = 64;      // max Taylor terms before quadrature fallback
  double series_accuracy = 1e-9;
};

// Minimum effectiveness for the PAS stationary regime; below it the
// stationary age M/eps stops being meaningful.
inline constexpr double kPasEpsilonMin = 1e-3;

// Stationary PAS age omega = t - m*M + M/eps; sweeps [M(1-eps)/eps, M/eps]
// over one period.
double stationary_age_pas(double M, double epsilon, double t, int m);

// PAR linear age approximation omega(t) = t(1-eps) + M*eps/2 on (0, RP).
double approx_age_par(double M, double epsilon, double t);

// Closed-form averaged hazard over the model's averaging window.
double avg_hazard(const SteadyFunctions& sf, double M);

enum class ReliabilityPath { Series, Quadrature, Exact };

struct ReliabilityResult {
  double value = 0.0;
  ReliabilityPath path = ReliabilityPath::Series;
  int terms_used = 0;      // Taylor terms when path == Series
  double error_bound = 0.0;
};

// Average reliability by termwise integration of the exp(-H) Taylor series,
// truncated once the next-term remainder bound drops below `accuracy`;
// falls back to adaptive quadrature when the series cannot deliver the
// requested accuracy within sf.series_terms terms.
ReliabilityResult avg_reliability_detail(const SteadyFunctions& sf, double M,
                                         double accuracy);
double avg_reliability(const SteadyFunctions& sf, double M, double accuracy);
inline double avg_reliability(const SteadyFunctions& sf, double M) {
  return avg_reliability(sf, M, sf.series_accuracy);
}

// Fixed-N series evaluation (no adaptivity, no fallback); N >= 1 terms.
double avg_reliability_series(const SteadyFunctions& sf, double M, int n_terms);

// Two-term PAS-Weibull closed form
// R*(M) = 1 + (M/(eps*eta))^beta ((1-eps)^(beta+1) - 1) / (eps (beta+1)).
double closed_form_ra(const ModelParams& weibull_params, double epsilon, double M);

std::string to_string(ReliabilityPath p);

}  // namespace imrel
