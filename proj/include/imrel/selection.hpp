#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "imrel/estimation.hpp"

namespace imrel {

enum class Criterion { AIC, BIC, LCV };

struct SelectionEntry {
  FitResult fit;
  double aic = 0.0;
  double bic = 0.0;
  std::optional<double> lcv;      // raw product, larger is better
  std::optional<double> log_lcv;  // log of the product, safe against underflow
};

struct SelectionReport {
  std::vector<SelectionEntry> entries;          // one per candidate spec
  std::map<Criterion, ModelSpec> winner_by;
};

double aic(const FitResult& fit);
// BIC with n = failure events + censoring records (fit.n_events).
double bic(const FitResult& fit);

// Leave-one-failure-out cross validation: the raw product over failures j of
// the predictive density h_m(t_j) exp(-H_m(t_j)) under parameters refit on
// the fleet with failure j removed (maintenances and censoring retained).
// log_out receives the log product when given.
double lcv(const ModelSpec& spec, const std::vector<ComponentHistory>& fleet,
           const FitOptions& opts, double* log_out = nullptr);

// Fit every candidate spec and pick the winner per criterion (AIC/BIC
// minimize, LCV maximizes). Ties break toward fewer parameters, then PAR.
SelectionReport select(const std::vector<ComponentHistory>& fleet,
                       const std::vector<Criterion>& criteria,
                       const FitOptions& opts = {},
                       const std::vector<ModelSpec>& candidates = {kAllSpecs[0],
                                                                   kAllSpecs[1],
                                                                   kAllSpecs[2],
                                                                   kAllSpecs[3]});

std::string to_string(Criterion c);

}  // namespace imrel
