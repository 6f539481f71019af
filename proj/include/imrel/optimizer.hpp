#pragma once

#include <functional>
#include <vector>

#include "imrel/types.hpp"

namespace imrel {

using ObjectiveFn = std::function<double(const std::vector<double>&)>;

struct OptimBounds {
  std::vector<double> lower;  // hours per decision variable
  std::vector<double> upper;
};

// Reference objective values framing the trade-off study:
// (C_i, R_i) current point, (C_o, R_r) from the cost subproblem,
// (C_r, R_o) from the reliability subproblem.
struct Anchors {
  double C_i = 0.0, R_i = 0.0;
  double C_o = 0.0, R_r = 0.0;  // min cost achieved / reliability there
  double C_r = 0.0, R_o = 0.0;  // cost at the reliability optimum / max reliability
  std::vector<double> x_cost;   // intervals of the cost-optimal solution
  std::vector<double> x_rel;    // intervals of the reliability-optimal solution
};

struct ParetoPoint {
  std::vector<double> intervals;  // hours per component
  double cost = 0.0;              // currency per year
  double reliability = 0.0;
  double weight = 0.0;            // generating weight
};

struct MinimizeResult {
  std::vector<double> x;
  double f = 0.0;
  bool feasible = false;
  double max_violation = 0.0;       // scaled constraint violation
  bool stationary = false;          // projected FD gradient test passed
  bool grid_certified = false;      // 1-day lattice polish found no descent
};

struct MinimizeOptions {
  int multistarts = 12;      // deterministic lattice starts in addition to x0
  int outer_iters = 8;       // augmented-Lagrangian updates
  int inner_max_iters = 800;
  double feas_tol = 1e-8;    // scaled violation accepted as feasible
  double polish_step_hours = 24.0;
};

// Minimize objective over the box subject to ineq(x) <= 0 (each scaled so a
// unit is "all of the constraint"): augmented Lagrangian outer loop, Nelder-
// Mead inner solves, multistart, then a 1-day coordinate lattice polish.
MinimizeResult constrained_minimize(const ObjectiveFn& objective,
                                    const std::vector<ObjectiveFn>& ineq_constraints,
                                    const OptimBounds& bounds,
                                    const std::vector<double>& x0,
                                    const MinimizeOptions& opts = {});

// The two single-objective subproblems: min C s.t. R >= R_i and
// max R s.t. C <= C_i, both over the box. Returns the assembled anchors.
Anchors solve_sops(const ObjectiveFn& cost_fn, const ObjectiveFn& rel_fn, double C_i,
                   double R_i, const OptimBounds& bounds, const std::vector<double>& x0,
                   const MinimizeOptions& opts = {});

// Opposite relative improvements e(C) = (C - C_r)/(C_r - C_o),
// e(R) = (R_r - R)/(R_o - R_r); both in [-1, 0] on the anchor rectangle.
std::pair<double, double> effectiveness(double C, double R, const Anchors& anchors);

// Weighted-sum scalarization over the given weights; each subproblem is
// min w*e(C) + (1-w)*e(R) s.t. C <= C_r, R >= R_r and the box. The returned
// points are the non-dominated subset, sorted by weight.
std::vector<ParetoPoint> pareto_front(const ObjectiveFn& cost_fn,
                                      const ObjectiveFn& rel_fn, const Anchors& anchors,
                                      const OptimBounds& bounds,
                                      const std::vector<double>& weights,
                                      const MinimizeOptions& opts = {});

std::vector<double> uniform_weights(int n);

}  // namespace imrel
