#include <cmath>

#include "doctest.h"
#include "imrel/economics.hpp"
#include "support/oracles.hpp"

using namespace imrel;

namespace {

// NPP case study fixtures: actuator PAS-Weibull, valve PAR-linear
Component actuator() {
  Component c;
  c.costs = {9.1e-4, 3120.0, 300.0, 1900.0, 87600.0};
  c.steady.spec = {ImModel::PAS, HazardFamily::Weibull};
  c.steady.params = ModelParams::weibull(7.4708, 15397.0, 0.8482);
  c.steady.rp_hours = 87600.0;
  return c;
}

Component valve() {
  Component c;
  c.costs = {9.1e-4, 3120.0, 800.0, 3600.0, 87600.0};
  c.steady.spec = {ImModel::PAR, HazardFamily::Linear};
  c.steady.params = ModelParams::linear(1.73e-9, 0.7584);
  c.steady.rp_hours = 87600.0;
  return c;
}

}  // namespace

TEST_CASE("component_cost: preventive and replacement terms only when h*=0") {
  Component c = valve();
  c.steady.params.alpha = 1e-300;
  c.costs.rho = 0.0;
  const double M = 4000.0;
  CHECK(component_cost(c.costs, c.steady, M) ==
        doctest::Approx(8760.0 * c.costs.c_m / M + 8760.0 * c.costs.c_o / 87600.0));
}

TEST_CASE("component_cost reproduces the worked per-component figures") {
  // actuator at 180 days: ~ 615.7 + 190.0
  Component a = actuator();
  CHECK(component_cost(a.costs, a.steady, 4320.0) == doctest::Approx(805.7).epsilon(2e-3));
  // valve at 180 days: ~ 2205.8 + 360.0
  Component v = valve();
  CHECK(component_cost(v.costs, v.steady, 4320.0) == doctest::Approx(2565.8).epsilon(2e-3));
}

TEST_CASE("equipment cost and reliability at the operating point") {
  const std::vector<Component> comps = {actuator(), valve()};
  const std::vector<double> M = {4320.0, 4320.0};
  CHECK(equipment_cost(comps, M) == doctest::Approx(3372.94).epsilon(5e-3));
  CHECK(equipment_reliability(comps, M) == doctest::Approx(0.857848).epsilon(1.2e-3));

  // single component degenerates to the component quantities
  const std::vector<Component> one = {valve()};
  CHECK(equipment_cost(one, {4320.0}) ==
        doctest::Approx(component_cost(one[0].costs, one[0].steady, 4320.0)));
  CHECK(equipment_reliability(one, {4320.0}) ==
        doctest::Approx(avg_reliability(one[0].steady, 4320.0, 1e-9)));
}

TEST_CASE("opt(C) point from the trade-off table evaluates as printed") {
  const std::vector<Component> comps = {actuator(), valve()};
  const std::vector<double> M = {270 * 24.0, 176 * 24.0};
  CHECK(equipment_cost(comps, M) == doctest::Approx(3224.35).epsilon(0.01));
  CHECK(equipment_reliability(comps, M) == doctest::Approx(0.8579).epsilon(1e-3));
}

TEST_CASE("cost diverges as M -> 0+ and eventually increases for Weibull aging") {
  Component a = actuator();
  CHECK(component_cost(a.costs, a.steady, 1.0) > 1e6);
  // beyond the sweet spot the corrective term dominates: positive slope
  const double M1 = 30000.0, M2 = 40000.0;
  CHECK(component_cost(a.costs, a.steady, M2) > component_cost(a.costs, a.steady, M1));
}

TEST_CASE("equipment objectives: permutation invariance and currency scaling") {
  const std::vector<Component> ab = {actuator(), valve()};
  const std::vector<Component> ba = {valve(), actuator()};
  const std::vector<double> mab = {5000.0, 7000.0}, mba = {7000.0, 5000.0};
  CHECK(equipment_cost(ab, mab) == doctest::Approx(equipment_cost(ba, mba)));
  CHECK(equipment_reliability(ab, mab) == doctest::Approx(equipment_reliability(ba, mba)));

  const double lambda = 3.7;
  std::vector<Component> scaled = ab;
  for (Component& c : scaled) {
    c.costs.c_m *= lambda;
    c.costs.c_c *= lambda;
    c.costs.c_o *= lambda;
  }
  // rho rides inside the c_c term, so scaling all unit costs scales the total
  CHECK(equipment_cost(scaled, mab) == doctest::Approx(lambda * equipment_cost(ab, mab)));
}

TEST_CASE("length mismatch is rejected") {
  const std::vector<Component> comps = {actuator(), valve()};
  CHECK_THROWS_AS(equipment_cost(comps, {4320.0}), Error);
  CHECK_THROWS_AS(equipment_reliability(comps, {1.0, 2.0, 3.0}), Error);
}
