#include "imrel/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "imrel/estimation.hpp"

namespace imrel {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool in_box(const std::vector<double>& x, const OptimBounds& b) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < b.lower[i] || x[i] > b.upper[i]) return false;
  return true;
}

std::vector<double> clip_to_box(std::vector<double> x, const OptimBounds& b) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::clamp(x[i], b.lower[i], b.upper[i]);
  return x;
}

double max_violation(const std::vector<ObjectiveFn>& cons, const std::vector<double>& x) {
  double v = 0.0;
  for (const auto& g : cons) v = std::max(v, g(x));
  return v;
}

// Deterministic interior lattice over the box (plus midpoint) for multistart.
std::vector<std::vector<double>> lattice_starts(const OptimBounds& b, int count) {
  const std::size_t d = b.lower.size();
  std::vector<std::vector<double>> starts;
  const int per_axis = std::max(2, static_cast<int>(std::round(std::pow(
                                       static_cast<double>(count), 1.0 / d))));
  std::vector<int> idx(d, 0);
  while (true) {
    std::vector<double> x(d);
    for (std::size_t i = 0; i < d; ++i) {
      const double frac = (idx[i] + 1.0) / (per_axis + 1.0);
      x[i] = b.lower[i] + frac * (b.upper[i] - b.lower[i]);
    }
    starts.push_back(std::move(x));
    std::size_t i = 0;
    for (; i < d; ++i) {
      if (++idx[i] < per_axis) break;
      idx[i] = 0;
    }
    if (i == d) break;
  }
  return starts;
}

}  // namespace

MinimizeResult constrained_minimize(const ObjectiveFn& objective,
                                    const std::vector<ObjectiveFn>& cons,
                                    const OptimBounds& bounds,
                                    const std::vector<double>& x0,
                                    const MinimizeOptions& opts) {
  const std::size_t d = bounds.lower.size();
  if (bounds.upper.size() != d || x0.size() != d)
    throw Error("bounds/start dimension mismatch");
  for (std::size_t i = 0; i < d; ++i)
    if (!(bounds.lower[i] < bounds.upper[i])) throw Error("empty box");

  // objective scale for the penalty normalization
  const double f0 = objective(clip_to_box(x0, bounds));
  const double f_scale = std::isfinite(f0) ? std::max(1.0, std::abs(f0)) : 1.0;

  auto solve_from = [&](std::vector<double> x) {
    std::vector<double> lambda(cons.size(), 0.0);
    double mu = 10.0 * f_scale;
    FitOptions nm;
    nm.max_iters = opts.inner_max_iters;
    nm.restarts = 1;
    nm.simplex_tol_x = 1e-7 * (bounds.upper[0] - bounds.lower[0]);
    nm.simplex_tol_f = 1e-12 * f_scale;
    for (int outer = 0; outer < opts.outer_iters; ++outer) {
      auto penalized = [&](const std::vector<double>& p) {
        if (!in_box(p, bounds)) return kInf;
        double val = objective(p);
        if (!std::isfinite(val)) return kInf;
        for (std::size_t j = 0; j < cons.size(); ++j) {
          const double t = std::max(0.0, lambda[j] + mu * cons[j](p));
          val += (t * t - lambda[j] * lambda[j]) / (2.0 * mu);
        }
        return val;
      };
      if (!std::isfinite(penalized(x))) break;
      x = nelder_mead(penalized, x, nm).x;
      bool feasible_now = true;
      for (std::size_t j = 0; j < cons.size(); ++j) {
        const double gj = cons[j](x);
        lambda[j] = std::max(0.0, lambda[j] + mu * gj);
        feasible_now = feasible_now && gj <= opts.feas_tol;
      }
      if (feasible_now && outer >= 2) break;
      mu *= 4.0;
    }
    return x;
  };

  auto better = [&](const std::vector<double>& a, const std::vector<double>& b) {
    // feasible-first comparison
    const double va = max_violation(cons, a), vb = max_violation(cons, b);
    const bool fa = va <= opts.feas_tol, fb = vb <= opts.feas_tol;
    if (fa != fb) return fa;
    if (!fa) return va < vb;
    return objective(a) < objective(b);
  };

  std::vector<std::vector<double>> starts = {clip_to_box(x0, bounds)};
  for (auto& s : lattice_starts(bounds, opts.multistarts)) starts.push_back(std::move(s));

  std::vector<double> best;
  for (auto& s : starts) {
    if (!std::isfinite(objective(s))) continue;
    std::vector<double> cand = solve_from(s);
    if (best.empty() || better(cand, best)) best = std::move(cand);
  }
  if (best.empty() || max_violation(cons, best) > 1e-3)
    throw Infeasible("no feasible point found from multistart");

  // nudge onto the feasible side of any marginally violated constraint
  for (int pass = 0; pass < 40 && max_violation(cons, best) > 0.0; ++pass) {
    for (std::size_t j = 0; j < cons.size(); ++j) {
      double g = cons[j](best);
      if (g <= 0.0) continue;
      std::vector<double> grad(d, 0.0);
      double norm2 = 0.0;
      for (std::size_t i = 0; i < d; ++i) {
        const double h = 1e-3 * (bounds.upper[i] - bounds.lower[i]) * 1e-3;
        std::vector<double> xp = best, xm = best;
        xp[i] = std::min(xp[i] + h, bounds.upper[i]);
        xm[i] = std::max(xm[i] - h, bounds.lower[i]);
        grad[i] = (cons[j](xp) - cons[j](xm)) / (xp[i] - xm[i]);
        norm2 += grad[i] * grad[i];
      }
      if (norm2 == 0.0) break;
      for (std::size_t i = 0; i < d; ++i) best[i] -= 1.05 * g * grad[i] / norm2;
      best = clip_to_box(best, bounds);
    }
  }

  // 1-day coordinate lattice polish
  const double step = opts.polish_step_hours;
  bool improved = true;
  int polish_rounds = 0;
  while (improved && polish_rounds++ < 400) {
    improved = false;
    for (std::size_t i = 0; i < d; ++i) {
      for (double delta : {-step, step}) {
        std::vector<double> cand = best;
        cand[i] = std::clamp(cand[i] + delta, bounds.lower[i], bounds.upper[i]);
        if (cand[i] == best[i]) continue;
        if (max_violation(cons, cand) <= opts.feas_tol && better(cand, best)) {
          best = std::move(cand);
          improved = true;
        }
      }
    }
  }

  MinimizeResult res;
  res.x = best;
  res.f = objective(best);
  res.max_violation = max_violation(cons, best);
  res.feasible = res.max_violation <= opts.feas_tol;
  res.grid_certified = !improved;

  // projected finite-difference stationarity check, scaled by a 1-day step
  double proj_norm = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    const double h = 0.5;  // hours
    std::vector<double> xp = best, xm = best;
    xp[i] = std::min(xp[i] + h, bounds.upper[i]);
    xm[i] = std::max(xm[i] - h, bounds.lower[i]);
    double g = (objective(xp) - objective(xm)) / (xp[i] - xm[i]);
    const bool at_lower = best[i] - bounds.lower[i] < 1e-9;
    const bool at_upper = bounds.upper[i] - best[i] < 1e-9;
    if ((at_lower && g > 0.0) || (at_upper && g < 0.0)) g = 0.0;  // pushes outward
    proj_norm = std::max(proj_norm, std::abs(g) * step / std::max(1.0, std::abs(res.f)));
  }
  res.stationary = proj_norm < 1e-5;
  return res;
}

Anchors solve_sops(const ObjectiveFn& cost_fn, const ObjectiveFn& rel_fn, double C_i,
                   double R_i, const OptimBounds& bounds, const std::vector<double>& x0,
                   const MinimizeOptions& opts) {
  Anchors a;
  a.C_i = C_i;
  a.R_i = R_i;

  const double c_scale = std::max(1.0, std::abs(C_i));
  std::vector<ObjectiveFn> rel_floor = {
      [&, R_i](const std::vector<double>& x) { return R_i - rel_fn(x); }};
  MinimizeResult cost_sop = constrained_minimize(cost_fn, rel_floor, bounds, x0, opts);
  if (!cost_sop.feasible) throw Infeasible("cost subproblem ended infeasible");
  a.x_cost = cost_sop.x;
  a.C_o = cost_fn(cost_sop.x);
  a.R_r = rel_fn(cost_sop.x);

  std::vector<ObjectiveFn> cost_cap = {
      [&, C_i, c_scale](const std::vector<double>& x) {
        return (cost_fn(x) - C_i) / c_scale;
      }};
  auto neg_rel = [&](const std::vector<double>& x) { return -rel_fn(x); };
  MinimizeResult rel_sop = constrained_minimize(neg_rel, cost_cap, bounds, x0, opts);
  if (!rel_sop.feasible) throw Infeasible("reliability subproblem ended infeasible");
  a.x_rel = rel_sop.x;
  a.C_r = cost_fn(rel_sop.x);
  a.R_o = rel_fn(rel_sop.x);
  return a;
}

std::pair<double, double> effectiveness(double C, double R, const Anchors& a) {
  const double dc = a.C_r - a.C_o;
  const double dr = a.R_o - a.R_r;
  if (!(dc > 0.0) || !(dr > 0.0))
    throw DegenerateAnchors("anchor spans are not positive; effectiveness undefined");
  return {(C - a.C_r) / dc, (a.R_r - R) / dr};
}

std::vector<ParetoPoint> pareto_front(const ObjectiveFn& cost_fn, const ObjectiveFn& rel_fn,
                                      const Anchors& anchors, const OptimBounds& bounds,
                                      const std::vector<double>& weights,
                                      const MinimizeOptions& opts) {
  const double dc = anchors.C_r - anchors.C_o;
  const double dr = anchors.R_o - anchors.R_r;
  if (!(dc > 0.0) || !(dr > 0.0))
    throw EmptyFront("degenerate anchors: the SOPs left no trade-off region");

  std::vector<double> ws = weights;
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  if (ws.empty()) throw EmptyFront("no weights given");

  const double c_scale = std::max(1.0, std::abs(anchors.C_r));
  std::vector<ObjectiveFn> cons = {
      [&, c_scale](const std::vector<double>& x) {
        return (cost_fn(x) - anchors.C_r) / c_scale;
      },
      [&](const std::vector<double>& x) { return anchors.R_r - rel_fn(x); }};

  MinimizeOptions per_weight = opts;
  per_weight.multistarts = 4;  // warm starts carry most of the work

  std::vector<ParetoPoint> raw;
  std::vector<double> warm = anchors.x_rel.empty()
                                 ? std::vector<double>(bounds.lower.size(), 0.0)
                                 : anchors.x_rel;
  for (double w : ws) {
    auto scalarized = [&, w](const std::vector<double>& x) {
      const double C = cost_fn(x);
      const double R = rel_fn(x);
      return w * (C - anchors.C_r) / dc + (1.0 - w) * (anchors.R_r - R) / dr;
    };
    std::vector<double> x0 = warm;
    if (w > 0.5 && !anchors.x_cost.empty()) {
      // blend toward the cost anchor so the chain cannot stall on a plateau
      for (std::size_t i = 0; i < x0.size(); ++i)
        x0[i] = 0.5 * (x0[i] + anchors.x_cost[i]);
    }
    MinimizeResult res = constrained_minimize(scalarized, cons, bounds, x0, per_weight);
    warm = res.x;
    ParetoPoint pt;
    pt.intervals = res.x;
    pt.cost = cost_fn(res.x);
    pt.reliability = rel_fn(res.x);
    pt.weight = w;
    raw.push_back(std::move(pt));
  }

  // non-dominated filter (smaller cost, larger reliability); differences
  // below 1e-4 of the anchor spans are solver noise, treated as ties
  const double tol_c = 1e-4 * dc;
  const double tol_r = 1e-4 * dr;
  std::vector<ParetoPoint> front;
  for (const ParetoPoint& p : raw) {
    bool dominated = false;
    for (const ParetoPoint& q : raw) {
      if (&p == &q) continue;
      const bool no_worse =
          q.cost <= p.cost + tol_c && q.reliability >= p.reliability - tol_r;
      const bool strictly =
          q.cost < p.cost - tol_c || q.reliability > p.reliability + tol_r;
      if (no_worse && strictly) {
        dominated = true;
        break;
      }
    }
    if (!dominated) front.push_back(p);
  }
  if (front.empty()) throw EmptyFront("all scalarized solutions were dominated");
  return front;
}

std::vector<double> uniform_weights(int n) {
  if (n < 2) throw Error("need at least two weights");
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = static_cast<double>(i) / (n - 1);
  return w;
}

}  // namespace imrel
