#include "imrel/economics.hpp"

namespace imrel {

double component_cost(const CostParams& cp, const SteadyFunctions& sf, double M) {
  const double corrective_events = avg_hazard(sf, M) * M;
  return kHoursPerYear * (cp.c_m + cp.c_c * (cp.rho + corrective_events)) / M +
         kHoursPerYear * cp.c_o / cp.rp_hours;
}

double equipment_cost(const std::vector<Component>& components,
                      const std::vector<double>& intervals) {
  if (components.size() != intervals.size())
    throw Error("one interval per component required");
  double total = 0.0;
  for (std::size_t i = 0; i < components.size(); ++i)
    total += component_cost(components[i].costs, components[i].steady, intervals[i]);
  return total;
}

double equipment_reliability(const std::vector<Component>& components,
                             const std::vector<double>& intervals) {
  if (components.size() != intervals.size())
    throw Error("one interval per component required");
  double product = 1.0;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const SteadyFunctions& sf = components[i].steady;
    product *= avg_reliability(sf, intervals[i], sf.series_accuracy);
  }
  return product;
}

}  // namespace imrel
