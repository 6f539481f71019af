#pragma once

#include <vector>

#include "imrel/steady_state.hpp"

namespace imrel {

struct CostParams {
  double rho = 0.0;     // per-demand failure probability
  double c_c = 0.0;     // cost per corrective maintenance
  double c_m = 0.0;     // cost per preventive maintenance
  double c_o = 0.0;     // replacement cost
  double rp_hours = 0.0;
};

inline constexpr double kHoursPerYear = 8760.0;

// Yearly cost of one component at interval M:
// 8760 * (c_m + c_c*(rho + h*(M)*M)) / M + 8760 * c_o / RP.
// Expected corrective events h*(M)*M add cost.
double component_cost(const CostParams& cp, const SteadyFunctions& sf, double M);

struct Component {
  CostParams costs;
  SteadyFunctions steady;
};

// Equipment-level objectives: costs add, reliabilities multiply.
double equipment_cost(const std::vector<Component>& components,
                      const std::vector<double>& intervals);
double equipment_reliability(const std::vector<Component>& components,
                             const std::vector<double>& intervals);

}  // namespace imrel
