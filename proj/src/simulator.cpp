#include "imrel/simulator.hpp"

#include <cmath>

#include "imrel/hazard.hpp"

namespace imrel {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

// inverse of the cumulative hazard: linear sqrt(2L/alpha), Weibull eta*L^(1/beta)
double inv_cum_hazard(const ModelSpec& spec, const ModelParams& p, double level) {
  if (spec.hazard == HazardFamily::Linear) return std::sqrt(2.0 * level / p.alpha);
  return p.eta * std::pow(level, 1.0 / p.beta);
}

}  // namespace

Xoshiro256pp::Xoshiro256pp(std::uint64_t seed) {
  std::uint64_t sm = seed;
  for (auto& word : s_) word = splitmix64(sm);
}

std::uint64_t Xoshiro256pp::next_u64() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Xoshiro256pp::next_unit() {
  return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

double Xoshiro256pp::next_exponential() { return -std::log(next_unit()); }

std::vector<double> sample_period_failures(const ModelSpec& spec, const ModelParams& p,
                                           std::span<const double> maintenance_times,
                                           int m, double period_start, double period_end,
                                           Xoshiro256pp& rng) {
  if (!(period_end >= period_start)) throw Error("invalid period bounds");
  const double offset = age_offset(spec.im, p.epsilon, maintenance_times, m);
  const double age_start = std::max(period_start - offset, 0.0);
  double level = cum_hazard_at_age(spec, p, age_start);
  std::vector<double> failures;
  while (true) {
    level += rng.next_exponential();
    const double t = inv_cum_hazard(spec, p, level) + offset;
    if (!(t <= period_end)) break;
    failures.push_back(t);
  }
  return failures;
}

FleetHistory simulate_fleet(const SimConfig& cfg) {
  if (!(cfg.interval_hours > 0.0)) throw Error("interval must be positive");
  if (!(cfg.horizon_hours >= cfg.interval_hours))
    throw Error("horizon must cover at least one interval");
  if (cfg.n_units < 1) throw Error("need at least one unit");
  validate_params(cfg.spec, cfg.params);

  std::vector<double> taus;
  for (int k = 1;; ++k) {
    const double t = k * cfg.interval_hours;
    if (t >= cfg.horizon_hours * (1.0 - 1e-12)) break;  // drop a coinciding epoch
    taus.push_back(t);
  }

  int digits = 1;
  for (int n = cfg.n_units; n >= 10; n /= 10) ++digits;

  FleetHistory fleet;
  auto& histories = fleet.components[cfg.component_id];
  histories.reserve(cfg.n_units);
  for (int u = 0; u < cfg.n_units; ++u) {
    Xoshiro256pp rng(cfg.seed + static_cast<std::uint64_t>(u));
    std::vector<double> failures;
    for (int m = 1; m <= static_cast<int>(taus.size()) + 1; ++m) {
      const double a = m == 1 ? 0.0 : taus[m - 2];
      const double b = m == static_cast<int>(taus.size()) + 1 ? cfg.horizon_hours
                                                              : taus[m - 1];
      auto f = sample_period_failures(cfg.spec, cfg.params, taus, m, a, b, rng);
      failures.insert(failures.end(), f.begin(), f.end());
    }
    std::string id = std::to_string(u + 1);
    id.insert(0, static_cast<std::size_t>(digits) - id.size(), '0');
    histories.push_back(make_history("u" + id, taus, failures, cfg.horizon_hours));
  }
  return fleet;
}

}  // namespace imrel
