#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "imrel/history.hpp"
#include "imrel/types.hpp"

namespace imrel {

// xoshiro256++ with splitmix64 state expansion; fixed algorithm so any
// implementation reproduces the same event streams from the same seed.
// Unit p of a simulation draws from a generator seeded with seed + p.
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed);
  std::uint64_t next_u64();
  // uniform on (0, 1]: (next_u64() >> 11 + 1) * 2^-53, so -log stays finite
  double next_unit();
  double next_exponential();  // rate 1

 private:
  std::uint64_t s_[4];
};

struct SimConfig {
  ModelSpec spec{};
  ModelParams params{};
  double interval_hours = 0.0;   // constant maintenance interval M
  double horizon_hours = 0.0;    // censoring time
  int n_units = 1;
  std::uint64_t seed = 0;
  std::string component_id = "c1";
};

// Failure times of one maintenance period of the minimal-repair process:
// conditional on the history, events follow the non-homogeneous process with
// intensity h_m(t). Inversion sampling: starting from the period-start
// cumulative-hazard level, each -log(u) increment maps back through the
// closed-form inverse of H_m. Failures do not alter the age process.
std::vector<double> sample_period_failures(const ModelSpec& spec,
                                           const ModelParams& params,
                                           std::span<const double> maintenance_times,
                                           int m, double period_start, double period_end,
                                           Xoshiro256pp& rng);

// n_units independent histories, maintenances at M, 2M, ... strictly below
// the horizon (a maintenance coinciding with the horizon is dropped),
// censoring at the horizon. Reproducible from cfg.seed.
FleetHistory simulate_fleet(const SimConfig& cfg);

}  // namespace imrel
