#include "imrel/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "imrel/hazard.hpp"

namespace imrel {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEpsClampLo = 1e-6;
constexpr double kEpsClampHi = 1.0 - 1e-6;

double logit(double e) { return std::log(e / (1.0 - e)); }
double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

}  // namespace

double log_likelihood(const ModelSpec& spec, const ModelParams& p,
                      const std::vector<ComponentHistory>& fleet) {
  const bool linear = spec.hazard == HazardFamily::Linear;
  const double log_rate = linear ? std::log(p.alpha)
                                 : std::log(p.beta) - p.beta * std::log(p.eta);
  double ll = 0.0;
  for (const ComponentHistory& h : fleet) {
    const auto offs = age_offsets(spec.im, p.epsilon, h.maintenance_times);
    for (int m = 1; m <= h.n_periods(); ++m) {
      const double off = offs[m - 1];
      for (double t : h.failures_by_period[m - 1]) {
        const double w = t - off;
        if (!(w > 0.0)) return -kInf;
        ll += log_rate + (linear ? std::log(w) : (p.beta - 1.0) * std::log(w));
      }
      const double w_end = h.period_end(m) - off;
      if (!(w_end >= 0.0)) return -kInf;
      ll -= linear ? 0.5 * p.alpha * w_end * w_end : std::pow(w_end / p.eta, p.beta);
    }
  }
  return ll;
}

SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          const std::vector<double>& x0, const FitOptions& opts) {
  const int d = static_cast<int>(x0.size());
  if (d < 1) throw Error("nelder_mead needs at least one dimension");
  if (!std::isfinite(f(x0)))
    throw NonFiniteStart("objective is not finite at the starting point");

  using Vec = std::vector<double>;
  auto run = [&](Vec start, int budget, int& used) {
    std::vector<Vec> xs(d + 1, start);
    std::vector<double> fs(d + 1);
    for (int i = 0; i < d; ++i)
      xs[i + 1][i] += xs[i + 1][i] != 0.0 ? 0.05 * xs[i + 1][i] : 0.00025;
    for (int i = 0; i <= d; ++i) fs[i] = f(xs[i]);

    auto order = [&] {
      std::vector<int> idx(d + 1);
      for (int i = 0; i <= d; ++i) idx[i] = i;
      std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fs[a] < fs[b]; });
      std::vector<Vec> xs2(d + 1);
      std::vector<double> fs2(d + 1);
      for (int i = 0; i <= d; ++i) {
        xs2[i] = std::move(xs[idx[i]]);
        fs2[i] = fs[idx[i]];
      }
      xs = std::move(xs2);
      fs = std::move(fs2);
    };

    int it = 0;
    for (; it < budget; ++it) {
      order();
      double diam = 0.0;
      for (int i = 1; i <= d; ++i)
        for (int j = 0; j < d; ++j) diam = std::max(diam, std::abs(xs[i][j] - xs[0][j]));
      const double spread = std::abs(fs[d] - fs[0]);
      if (diam < opts.simplex_tol_x || spread < opts.simplex_tol_f) break;

      Vec centroid(d, 0.0);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) centroid[j] += xs[i][j] / d;
      auto blend = [&](double coef) {
        Vec x(d);
        for (int j = 0; j < d; ++j) x[j] = centroid[j] + coef * (xs[d][j] - centroid[j]);
        return x;
      };

      Vec xr = blend(-1.0);
      double fr = f(xr);
      if (fr < fs[0]) {
        Vec xe = blend(-2.0);
        double fe = f(xe);
        if (fe < fr) {
          xs[d] = std::move(xe);
          fs[d] = fe;
        } else {
          xs[d] = std::move(xr);
          fs[d] = fr;
        }
      } else if (fr < fs[d - 1]) {
        xs[d] = std::move(xr);
        fs[d] = fr;
      } else {
        const bool outside = fr < fs[d];
        Vec xc = blend(outside ? -0.5 : 0.5);
        double fc = f(xc);
        if (fc < (outside ? fr : fs[d])) {
          xs[d] = std::move(xc);
          fs[d] = fc;
        } else {
          for (int i = 1; i <= d; ++i) {
            for (int j = 0; j < d; ++j) xs[i][j] = xs[0][j] + 0.5 * (xs[i][j] - xs[0][j]);
            fs[i] = f(xs[i]);
          }
        }
      }
    }
    order();
    used = it;
    return std::pair<Vec, double>{xs[0], fs[0]};
  };

  SimplexResult res;
  int used = 0;
  auto [x, fx] = run(x0, opts.max_iters, used);
  res.converged = used < opts.max_iters;
  res.iterations = used;
  for (int r = 0; r < std::max(opts.restarts, 0); ++r) {
    int used2 = 0;
    auto [x2, fx2] = run(x, opts.max_iters, used2);
    res.iterations += used2;
    if (fx2 < fx) {
      x = std::move(x2);
      fx = fx2;
    }
    res.converged = used2 < opts.max_iters;
  }
  res.x = std::move(x);
  res.f = fx;
  return res;
}

std::vector<double> to_unconstrained(const ModelSpec& spec, const ModelParams& p) {
  const double e = std::clamp(p.epsilon, kEpsClampLo, kEpsClampHi);
  if (spec.hazard == HazardFamily::Linear) return {std::log(p.alpha), logit(e)};
  return {std::log(p.beta), std::log(p.eta), logit(e)};
}

ModelParams from_unconstrained(const ModelSpec& spec, const std::vector<double>& x) {
  ModelParams p;
  if (spec.hazard == HazardFamily::Linear) {
    p.alpha = std::exp(x[0]);
    p.epsilon = std::clamp(sigmoid(x[1]), kEpsClampLo, kEpsClampHi);
  } else {
    p.beta = std::exp(x[0]);
    p.eta = std::exp(x[1]);
    p.epsilon = std::clamp(sigmoid(x[2]), kEpsClampLo, kEpsClampHi);
  }
  return p;
}

ModelParams default_initial_guess(const ModelSpec& spec,
                                  const std::vector<ComponentHistory>& fleet) {
  double n_fail = 0.0, sum_sq_censor = 0.0, sum_fail_t = 0.0, max_censor = 0.0;
  for (const ComponentHistory& h : fleet) {
    n_fail += h.n_failures();
    sum_sq_censor += h.censor_time * h.censor_time;
    max_censor = std::max(max_censor, h.censor_time);
    for (const auto& period : h.failures_by_period)
      for (double t : period) sum_fail_t += t;
  }
  // BAO method of moments: E[failures per unit] = (alpha/2) censor^2
  const double alpha0 = std::max(2.0 * std::max(n_fail, 0.5) / sum_sq_censor, 1e-300);
  if (spec.hazard == HazardFamily::Linear) return ModelParams::linear(alpha0, 0.5);
  const double eta0 = n_fail > 0 ? std::max(sum_fail_t / n_fail, 1e-6) : 0.5 * max_censor;
  return ModelParams::weibull(1.5, eta0, 0.5);
}

FitResult fit(const ModelSpec& spec, const std::vector<ComponentHistory>& fleet,
              const FitOptions& opts) {
  if (fleet.empty()) throw Error("fit requires a nonempty fleet");

  auto objective = [&](const std::vector<double>& x) {
    const double ll = log_likelihood(spec, from_unconstrained(spec, x), fleet);
    return std::isfinite(ll) ? -ll : kInf;
  };

  const ModelParams guess = opts.initial_guess ? *opts.initial_guess
                                               : default_initial_guess(spec, fleet);
  const std::vector<double> x0 = to_unconstrained(spec, guess);

  // deterministic jitter sequence for the multi-start
  std::uint64_t s = 0x9e3779b97f4a7c15ull;
  auto next_jitter = [&s]() {
    s += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z ^= z >> 31;
    return 3.0 * (static_cast<double>(z >> 11) * 0x1.0p-53 - 0.5);  // U(-1.5, 1.5)
  };

  bool any_start = false;
  SimplexResult best;
  best.f = kInf;
  FitOptions inner = opts;
  inner.restarts = 1;  // one simplex rebuild per start
  for (int r = 0; r <= std::max(opts.restarts, 0); ++r) {
    std::vector<double> xs = x0;
    if (r > 0)
      for (double& v : xs) v += next_jitter();
    if (!std::isfinite(objective(xs))) continue;
    SimplexResult cand = nelder_mead(objective, xs, inner);
    any_start = true;
    if (cand.f < best.f) best = std::move(cand);
  }
  if (!any_start) throw AllStartsFailed("no finite starting point for " + spec_name(spec));

  FitResult out;
  out.spec = spec;
  out.params = from_unconstrained(spec, best.x);
  out.log_likelihood = -best.f;
  out.k = param_count(spec);
  out.converged = best.converged && std::isfinite(out.log_likelihood);
  int n_fail = 0;
  for (const ComponentHistory& h : fleet) n_fail += h.n_failures();
  out.n_events = n_fail + static_cast<int>(fleet.size());

  if (out.params.epsilon <= kEpsClampLo || out.params.epsilon >= kEpsClampHi)
    out.notes.push_back("epsilon at clamp boundary");
  if (spec.hazard == HazardFamily::Linear && out.params.alpha < 1e-30)
    out.notes.push_back("alpha at lower boundary (no-failure fleet?)");
  if (spec.hazard == HazardFamily::Weibull && out.params.beta < 1.0)
    out.notes.push_back("beta < 1: decreasing hazard, unusual for aging equipment");
  if (spec.hazard == HazardFamily::Weibull && 1.0 / out.params.eta < 1e-30)
    out.notes.push_back("eta at upper boundary (no-failure fleet?)");
  return out;
}

}  // namespace imrel
