#include "imrel/hazard.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace imrel {

namespace {

double clamp_age(double omega, double scale) {
  if (omega >= 0.0) return omega;
  if (omega >= -1e-9 * std::max(scale, 1.0)) return 0.0;
  throw NegativeAge("virtual age " + std::to_string(omega) +
                    " is negative beyond roundoff tolerance");
}

}  // namespace

double age_offset(ImModel im, double epsilon,
                  std::span<const double> maintenance_times, int m) {
  if (m < 1) throw Error("period index must be >= 1");
  if (m == 1) return 0.0;
  const int last = m - 1;  // uses tau_1..tau_{m-1}
  if (static_cast<std::size_t>(last) > maintenance_times.size())
    throw Error("period index exceeds maintenance history");
  if (im == ImModel::PAR) return epsilon * maintenance_times[last - 1];
  double off = 0.0;
  for (int j = 1; j <= last; ++j)
    off = (1.0 - epsilon) * off + epsilon * maintenance_times[j - 1];
  return off;
}

std::vector<double> age_offsets(ImModel im, double epsilon,
                                std::span<const double> maintenance_times) {
  std::vector<double> offs(maintenance_times.size() + 1);
  offs[0] = 0.0;
  for (std::size_t m = 1; m < offs.size(); ++m) {
    offs[m] = im == ImModel::PAR
                  ? epsilon * maintenance_times[m - 1]
                  : (1.0 - epsilon) * offs[m - 1] + epsilon * maintenance_times[m - 1];
  }
  return offs;
}

double virtual_age(ImModel im, double epsilon,
                   std::span<const double> maintenance_times, int m, double t) {
  const double off = age_offset(im, epsilon, maintenance_times, m);
  return clamp_age(t - off, t);
}

double hazard_at_age(const ModelSpec& spec, const ModelParams& p, double omega) {
  if (spec.hazard == HazardFamily::Linear) return p.alpha * omega;
  if (omega == 0.0) {
    if (p.beta < 1.0)
      throw SingularHazard("Weibull hazard with beta < 1 diverges at age 0");
    if (p.beta == 1.0) return 1.0 / p.eta;
    return 0.0;
  }
  return p.beta / p.eta * std::pow(omega / p.eta, p.beta - 1.0);
}

double cum_hazard_at_age(const ModelSpec& spec, const ModelParams& p, double omega) {
  if (spec.hazard == HazardFamily::Linear) return 0.5 * p.alpha * omega * omega;
  return std::pow(omega / p.eta, p.beta);
}

double hazard(const ModelSpec& spec, const ModelParams& p,
              std::span<const double> maintenance_times, int m, double t) {
  return hazard_at_age(spec, p, virtual_age(spec.im, p.epsilon, maintenance_times, m, t));
}

double cum_hazard(const ModelSpec& spec, const ModelParams& p,
                  std::span<const double> maintenance_times, int m, double t) {
  return cum_hazard_at_age(spec, p, virtual_age(spec.im, p.epsilon, maintenance_times, m, t));
}

bool parse_spec_name(const std::string& name, ModelSpec& out) {
  std::string s;
  s.reserve(name.size());
  for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (const ModelSpec& spec : kAllSpecs) {
    if (s == spec_name(spec)) {
      out = spec;
      return true;
    }
  }
  return false;
}

}  // namespace imrel
