#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "imrel/history.hpp"
#include "imrel/types.hpp"

namespace imrel {

struct FitOptions {
  int max_iters = 5000;
  double simplex_tol_x = 1e-8;   // simplex diameter, transformed coordinates
  double simplex_tol_f = 1e-10;  // spread of vertex values
  int restarts = 8;              // jittered extra starts in fit(); simplex
                                 // rebuilds in nelder_mead()
  std::optional<ModelParams> initial_guess;
};

struct FitResult {
  ModelSpec spec{};
  ModelParams params{};
  double log_likelihood = 0.0;
  int k = 0;  // free parameters: 2 linear, 3 Weibull
  bool converged = false;
  int n_events = 0;  // failure rows + one censoring record per unit
  std::vector<std::string> notes;  // boundary / shape diagnostics
};

// Joint log likelihood of the fleet under one model: sum over units of
// sum_m sum_j log h_m(t_mj) - sum_m H_m(tau_m) - H_{K+1}(censor).
// Returns -infinity instead of throwing when a hazard argument is invalid,
// so a maximizer can retreat.
double log_likelihood(const ModelSpec& spec, const ModelParams& params,
                      const std::vector<ComponentHistory>& fleet);

struct SimplexResult {
  std::vector<double> x;
  double f = 0.0;
  bool converged = false;
  int iterations = 0;
};

// Downhill simplex (reflection 1, expansion 2, contraction 0.5, shrink 0.5).
// f may return +infinity for penalized regions; f(x0) must be finite.
SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          const std::vector<double>& x0, const FitOptions& opts);

// Maximum-likelihood fit of one spec on the fleet. Works on the transformed
// coordinates (log alpha | log beta, log eta, logit epsilon with epsilon
// clamped to [1e-6, 1-1e-6]) with a multi-start over jittered initial points.
FitResult fit(const ModelSpec& spec, const std::vector<ComponentHistory>& fleet,
              const FitOptions& opts = {});

// Transform helpers (exposed for tests and the leave-one-out refits).
std::vector<double> to_unconstrained(const ModelSpec& spec, const ModelParams& p);
ModelParams from_unconstrained(const ModelSpec& spec, const std::vector<double>& x);

// Moment-based default starting point (BAO alpha, beta 1.5, eta from the
// mean observed failure age, epsilon 0.5).
ModelParams default_initial_guess(const ModelSpec& spec,
                                  const std::vector<ComponentHistory>& fleet);

}  // namespace imrel
