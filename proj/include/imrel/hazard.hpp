#pragma once

#include <span>
#include <vector>

#include "imrel/types.hpp"

namespace imrel {

// Age-offset of period m (1-based): the virtual age at chronological time t
// inside period m is t - offset. PAS cascades all prior maintenances,
// PAR only discounts the latest one. maintenance_times must be the strictly
// increasing tau_1..tau_K; only tau_1..tau_{m-1} are used.
double age_offset(ImModel im, double epsilon,
                  std::span<const double> maintenance_times, int m);

// Offsets for every period 1..K+1 in one pass (PAS uses the recurrence
// o_{m+1} = (1-eps)*o_m + eps*tau_m).
std::vector<double> age_offsets(ImModel im, double epsilon,
                                std::span<const double> maintenance_times);

// Virtual age at time t of period m. Slightly negative ages from boundary
// roundoff (>= -1e-9 of the time scale) clamp to zero; worse is an error.
double virtual_age(ImModel im, double epsilon,
                   std::span<const double> maintenance_times, int m, double t);

// Instantaneous failure rate at time t of period m:
// linear alpha*omega, Weibull (beta/eta^beta)*omega^(beta-1).
double hazard(const ModelSpec& spec, const ModelParams& params,
              std::span<const double> maintenance_times, int m, double t);

// Cumulative hazard at time t of period m:
// linear (alpha/2)*omega^2, Weibull (omega/eta)^beta.
double cum_hazard(const ModelSpec& spec, const ModelParams& params,
                  std::span<const double> maintenance_times, int m, double t);

// Same functions on a precomputed virtual age omega.
double hazard_at_age(const ModelSpec& spec, const ModelParams& params, double omega);
double cum_hazard_at_age(const ModelSpec& spec, const ModelParams& params, double omega);

}  // namespace imrel
