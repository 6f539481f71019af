#include "imrel/selection.hpp"

#include <algorithm>
#include <cmath>

#include "imrel/hazard.hpp"

namespace imrel {

double aic(const FitResult& fit) { return 2.0 * fit.k - 2.0 * fit.log_likelihood; }

double bic(const FitResult& fit) {
  if (fit.n_events < 1) throw Error("BIC needs at least one event");
  return fit.k * std::log(static_cast<double>(fit.n_events)) - 2.0 * fit.log_likelihood;
}

double lcv(const ModelSpec& spec, const std::vector<ComponentHistory>& fleet,
           const FitOptions& opts, double* log_out) {
  int total_failures = 0;
  for (const ComponentHistory& h : fleet) total_failures += h.n_failures();
  if (total_failures < 2) throw Error("LCV needs at least two failure events");

  double log_prod = 0.0;
  for (std::size_t u = 0; u < fleet.size(); ++u) {
    for (int m = 1; m <= fleet[u].n_periods(); ++m) {
      const auto& fails = fleet[u].failures_by_period[m - 1];
      for (std::size_t j = 0; j < fails.size(); ++j) {
        std::vector<ComponentHistory> reduced = fleet;
        auto& per = reduced[u].failures_by_period[m - 1];
        per.erase(per.begin() + static_cast<long>(j));
        FitResult refit = fit(spec, reduced, opts);
        if (!refit.converged)
          throw RefitFailed("leave-one-out refit diverged for " + spec_name(spec));
        const double t = fails[j];
        const double w =
            virtual_age(spec.im, refit.params.epsilon, fleet[u].maintenance_times, m, t);
        const double h = hazard_at_age(spec, refit.params, w);
        const double H = cum_hazard_at_age(spec, refit.params, w);
        if (!(h > 0.0)) throw RefitFailed("zero predictive density in LCV");
        log_prod += std::log(h) - H;
      }
    }
  }
  if (log_out) *log_out = log_prod;
  return std::exp(log_prod);
}

namespace {

// fewer parameters first, then PAR before PAS
bool tie_break_before(const ModelSpec& a, const ModelSpec& b) {
  if (param_count(a) != param_count(b)) return param_count(a) < param_count(b);
  return a.im == ImModel::PAR && b.im == ImModel::PAS;
}

}  // namespace

SelectionReport select(const std::vector<ComponentHistory>& fleet,
                       const std::vector<Criterion>& criteria, const FitOptions& opts,
                       const std::vector<ModelSpec>& candidates) {
  if (candidates.empty()) throw Error("select needs at least one candidate spec");
  const bool want_lcv =
      std::find(criteria.begin(), criteria.end(), Criterion::LCV) != criteria.end();

  SelectionReport report;
  for (const ModelSpec& spec : candidates) {
    SelectionEntry e;
    e.fit = fit(spec, fleet, opts);
    e.aic = aic(e.fit);
    e.bic = bic(e.fit);
    if (want_lcv) {
      double lg = 0.0;
      e.lcv = lcv(spec, fleet, opts, &lg);
      e.log_lcv = lg;
    }
    report.entries.push_back(std::move(e));
  }

  constexpr double kTieTol = 1e-4;  // differences this small are numerical, not evidence
  for (Criterion c : criteria) {
    const SelectionEntry* best = nullptr;
    for (const SelectionEntry& e : report.entries) {
      auto score = [&](const SelectionEntry& s) {
        switch (c) {
          case Criterion::AIC: return s.aic;
          case Criterion::BIC: return s.bic;
          default: return -(s.log_lcv ? *s.log_lcv : std::log(*s.lcv));
        }
      };
      if (!best || score(e) < score(*best) - kTieTol ||
          (std::abs(score(e) - score(*best)) <= kTieTol &&
           tie_break_before(e.fit.spec, best->fit.spec)))
        best = &e;
    }
    report.winner_by[c] = best->fit.spec;
  }
  return report;
}

std::string to_string(Criterion c) {
  switch (c) {
    case Criterion::AIC: return "aic";
    case Criterion::BIC: return "bic";
    default: return "lcv";
  }
}

}  // namespace imrel
