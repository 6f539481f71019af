#pragma once

#include <string>

#include "imrel/errors.hpp"

namespace imrel {

enum class ImModel { PAS, PAR };
enum class HazardFamily { Linear, Weibull };

// One of the four candidate models: {PAS,PAR} x {Linear,Weibull}.
struct ModelSpec {
  ImModel im;
  HazardFamily hazard;

  bool operator==(const ModelSpec&) const = default;
};

inline constexpr ModelSpec kAllSpecs[4] = {
    {ImModel::PAS, HazardFamily::Linear},
    {ImModel::PAR, HazardFamily::Linear},
    {ImModel::PAS, HazardFamily::Weibull},
    {ImModel::PAR, HazardFamily::Weibull},
};

// Parameter vector. Linear uses (alpha, epsilon); Weibull uses
// (beta, eta, epsilon). Unused fields stay zero.
struct ModelParams {
  double alpha = 0.0;    // linear aging rate, 1/h^2
  double beta = 0.0;     // Weibull shape
  double eta = 0.0;      // Weibull scale, h
  double epsilon = 0.0;  // maintenance effectiveness, in [0,1]

  static ModelParams linear(double alpha, double eps) {
    ModelParams p;
    p.alpha = alpha;
    p.epsilon = eps;
    return p;
  }
  static ModelParams weibull(double beta, double eta, double eps) {
    ModelParams p;
    p.beta = beta;
    p.eta = eta;
    p.epsilon = eps;
    return p;
  }
};

// Number of free parameters of a spec (2 linear, 3 Weibull).
inline int param_count(const ModelSpec& spec) {
  return spec.hazard == HazardFamily::Linear ? 2 : 3;
}

inline void validate_params(const ModelSpec& spec, const ModelParams& p) {
  if (p.epsilon < 0.0 || p.epsilon > 1.0)
    throw Error("epsilon must lie in [0,1]");
  if (spec.hazard == HazardFamily::Linear) {
    if (!(p.alpha > 0.0)) throw Error("alpha must be positive");
  } else {
    if (!(p.beta > 0.0)) throw Error("beta must be positive");
    if (!(p.eta > 0.0)) throw Error("eta must be positive");
  }
}

inline std::string to_string(ImModel im) {
  return im == ImModel::PAS ? "PAS" : "PAR";
}
inline std::string to_string(HazardFamily f) {
  return f == HazardFamily::Linear ? "linear" : "weibull";
}
// Canonical spec name, e.g. "pas-weibull" (used by the CLI and reports).
inline std::string spec_name(const ModelSpec& spec) {
  std::string s = spec.im == ImModel::PAS ? "pas-" : "par-";
  return s + (spec.hazard == HazardFamily::Linear ? "linear" : "weibull");
}
bool parse_spec_name(const std::string& name, ModelSpec& out);

}  // namespace imrel
