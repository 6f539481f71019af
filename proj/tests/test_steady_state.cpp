#include <cmath>

#include "doctest.h"
#include "imrel/hazard.hpp"
#include "imrel/steady_state.hpp"
#include "support/oracles.hpp"

using namespace imrel;

namespace {

const ModelSpec kPasLin{ImModel::PAS, HazardFamily::Linear};
const ModelSpec kParLin{ImModel::PAR, HazardFamily::Linear};
const ModelSpec kPasWei{ImModel::PAS, HazardFamily::Weibull};
const ModelSpec kParWei{ImModel::PAR, HazardFamily::Weibull};

SteadyFunctions make_sf(const ModelSpec& spec, const ModelParams& p, double rp = 87600.0) {
  SteadyFunctions sf;
  sf.spec = spec;
  sf.params = p;
  sf.rp_hours = rp;
  return sf;
}

// quadrature oracle of the averaged hazard: mean of h over the model's own
// age sweep (PAS stationary period; PAR linear-approximation ages over RP)
double avg_hazard_oracle(const SteadyFunctions& sf, double M) {
  if (sf.spec.im == ImModel::PAS) {
    const double eps = sf.params.epsilon;
    const double lo = M * (1.0 - eps) / eps, hi = M / eps;
    return oracle::gauss_legendre(
               [&](double w) { return hazard_at_age(sf.spec, sf.params, w); }, lo, hi,
               1e-14 * std::max(1.0, hi)) /
           M;
  }
  return oracle::gauss_legendre(
             [&](double t) {
               return hazard_at_age(sf.spec, sf.params,
                                    approx_age_par(M, sf.params.epsilon, t));
             },
             0.0, sf.rp_hours, 1e-16 * sf.rp_hours) /
         sf.rp_hours;
}

double avg_reliability_oracle(const SteadyFunctions& sf, double M) {
  if (sf.spec.im == ImModel::PAS) {
    const double eps = sf.params.epsilon;
    const double lo = M * (1.0 - eps) / eps, hi = M / eps;
    return oracle::gauss_legendre(
               [&](double w) {
                 return std::exp(-cum_hazard_at_age(sf.spec, sf.params, w));
               },
               lo, hi, 1e-13 * M) /
           M;
  }
  return oracle::gauss_legendre(
             [&](double t) {
               return std::exp(-cum_hazard_at_age(
                   sf.spec, sf.params, approx_age_par(M, sf.params.epsilon, t)));
             },
             0.0, sf.rp_hours, 1e-13 * sf.rp_hours) /
         sf.rp_hours;
}

ModelParams random_params(const ModelSpec& spec, oracle::SplitMix& rng,
                          double eps_lo = 0.05, double eps_hi = 0.98) {
  const double eps = rng.uniform(eps_lo, eps_hi);
  if (spec.hazard == HazardFamily::Linear)
    return ModelParams::linear(std::exp(rng.uniform(std::log(1e-10), std::log(1e-7))),
                               eps);
  return ModelParams::weibull(rng.uniform(1.1, 8.0), rng.uniform(8000.0, 60000.0), eps);
}

}  // namespace

TEST_CASE("stationary PAS age: sweep endpoints and GAN case") {
  // GAN: age at the end of a period is exactly M
  CHECK(stationary_age_pas(1000.0, 1.0, 5 * 1000.0, 5) == doctest::Approx(1000.0));
  // start-of-period age M(1-eps)/eps
  CHECK(stationary_age_pas(1000.0, 0.5, 4 * 1000.0, 5) == doctest::Approx(1000.0));
  CHECK_THROWS_AS(stationary_age_pas(1000.0, 1e-5, 100.0, 1), EpsilonZero);

  // matches the exact cascading age within 1% after 20 periods at eps=0.3
  const double M = 1000.0, eps = 0.3;
  std::vector<double> taus;
  for (int k = 1; k <= 25; ++k) taus.push_back(k * M);
  const double t = 20.5 * M;
  CHECK(stationary_age_pas(M, eps, t, 21) ==
        doctest::Approx(virtual_age(ImModel::PAS, eps, taus, 21, t)).epsilon(0.01));
}

TEST_CASE("PAR age approximation: BAO, GAN, and the midpoint identity") {
  CHECK(approx_age_par(4000.0, 0.0, 1234.5) == doctest::Approx(1234.5));
  CHECK(approx_age_par(4000.0, 1.0, 1234.5) == doctest::Approx(2000.0));
  // at mid-period times the approximation equals the exact PAR age
  const double M = 4000.0, eps = 0.63;
  std::vector<double> taus;
  for (int k = 1; k <= 10; ++k) taus.push_back(k * M);
  for (int m = 1; m <= 10; ++m) {
    const double t = (m - 0.5) * M;
    CHECK(approx_age_par(M, eps, t) ==
          doctest::Approx(virtual_age(ImModel::PAR, eps, taus, m, t)).epsilon(1e-12));
  }
}

TEST_CASE("avg_hazard closed forms match the spec'd worked values") {
  // PAS-linear: M alpha (2-eps) / (2 eps)
  auto sf = make_sf(kPasLin, ModelParams::linear(1e-6, 0.5));
  CHECK(avg_hazard(sf, 1000.0) == doctest::Approx(1.5e-3));

  // PAS-Weibull actuator: h* M ~ 2.57e-4
  sf = make_sf(kPasWei, ModelParams::weibull(7.4708, 15397.0, 0.8482));
  CHECK(avg_hazard(sf, 4320.0) * 4320.0 == doctest::Approx(2.57e-4).epsilon(2e-3));

  // PAR-linear valve: 8.65e-10 * (3276.3 + 21164.2) ~ 2.114e-5
  sf = make_sf(kParLin, ModelParams::linear(1.73e-9, 0.7584));
  CHECK(avg_hazard(sf, 4320.0) == doctest::Approx(2.114e-5).epsilon(1e-3));
}

TEST_CASE("avg_hazard equals the quadrature oracle to 1e-8 (random draws)") {
  oracle::SplitMix rng(20240809);
  for (const ModelSpec& spec : kAllSpecs) {
    for (int draw = 0; draw < 50; ++draw) {
      SteadyFunctions sf = make_sf(spec, random_params(spec, rng));
      const double M = rng.uniform(500.0, sf.rp_hours);
      const double closed = avg_hazard(sf, M);
      const double quad = avg_hazard_oracle(sf, M);
      CHECK(closed == doctest::Approx(quad).epsilon(1e-8));
    }
  }
}

TEST_CASE("PAS avg_hazard at GAN reduces to the single-period average") {
  oracle::SplitMix rng(5);
  for (int draw = 0; draw < 10; ++draw) {
    const double M = rng.uniform(1000.0, 20000.0);
    ModelParams lin = ModelParams::linear(rng.uniform(1e-9, 1e-7), 1.0);
    CHECK(avg_hazard(make_sf(kPasLin, lin), M) == doctest::Approx(M * lin.alpha / 2.0));
    ModelParams wei = ModelParams::weibull(rng.uniform(1.5, 6.0),
                                           rng.uniform(5000.0, 30000.0), 1.0);
    CHECK(avg_hazard(make_sf(kPasWei, wei), M) ==
          doctest::Approx(std::pow(M, wei.beta - 1.0) / std::pow(wei.eta, wei.beta)));
  }
}

TEST_CASE("PAR-Weibull avg_hazard: the eps->1 branch is the formula's limit") {
  ModelParams p = ModelParams::weibull(3.3, 21000.0, 1.0);
  auto sf = make_sf(kParWei, p);
  const double M = 4320.0;
  const double at_gan = avg_hazard(sf, M);
  // closed form slightly below the singular point
  sf.params.epsilon = 1.0 - 1e-7;
  CHECK(avg_hazard(sf, M) == doctest::Approx(at_gan).epsilon(1e-5));
  // and equal to the quadrature of the GAN hazard profile
  sf.params.epsilon = 1.0;
  CHECK(at_gan == doctest::Approx(avg_hazard_oracle(sf, M)).epsilon(1e-10));
}

TEST_CASE("avg_reliability: degenerate and small-hazard cases") {
  // vanishing aging rate: perfect reliability
  auto sf = make_sf(kParLin, ModelParams::linear(1e-300, 0.4));
  CHECK(avg_reliability(sf, 4320.0, 1e-9) == doctest::Approx(1.0));

  // PAS-Weibull actuator two-term value ~ 0.999964
  sf = make_sf(kPasWei, ModelParams::weibull(7.4708, 15397.0, 0.8482));
  CHECK(avg_reliability(sf, 4320.0, 1e-9) == doctest::Approx(0.999964).epsilon(1e-6));
}

TEST_CASE("PAR-linear valve reliability matches quadrature and the spec value") {
  auto sf = make_sf(kParLin, ModelParams::linear(1.73e-9, 0.7584));
  ReliabilityResult r = avg_reliability_detail(sf, 4320.0, 1e-7);
  CHECK(r.path == ReliabilityPath::Series);
  CHECK(r.value == doctest::Approx(avg_reliability_oracle(sf, 4320.0)).epsilon(1e-6));
  CHECK(r.value == doctest::Approx(0.8582).epsilon(1e-3));
}

TEST_CASE("series equals quadrature within the requested accuracy") {
  oracle::SplitMix rng(77);
  int series_hits = 0;
  for (const ModelSpec& spec : kAllSpecs) {
    for (int draw = 0; draw < 25; ++draw) {
      SteadyFunctions sf = make_sf(spec, random_params(spec, rng));
      const double M = rng.uniform(500.0, 0.5 * sf.rp_hours);
      const double accuracy = spec.im == ImModel::PAS ? 1e-9 : 1e-7;
      ReliabilityResult r = avg_reliability_detail(sf, M, accuracy);
      const double quad = avg_reliability_oracle(sf, M);
      CHECK(std::abs(r.value - quad) < 2.0 * accuracy + 1e-11);
      series_hits += r.path == ReliabilityPath::Series;
    }
  }
  CHECK(series_hits > 40);  // the series path genuinely exercises
}

TEST_CASE("series truncation bound honored whenever the adaptive rule accepts") {
  oracle::SplitMix rng(88);
  for (int draw = 0; draw < 40; ++draw) {
    const ModelSpec spec = kAllSpecs[draw % 4];
    SteadyFunctions sf = make_sf(spec, random_params(spec, rng));
    const double M = rng.uniform(500.0, 0.4 * sf.rp_hours);
    ReliabilityResult r = avg_reliability_detail(sf, M, 1e-8);
    if (r.path != ReliabilityPath::Series) continue;
    const double quad = avg_reliability_oracle(sf, M);
    CHECK(std::abs(r.value - quad) <= r.error_bound + 1e-12);
  }
}

TEST_CASE("huge cumulative hazard falls back to quadrature") {
  auto sf = make_sf(kPasWei, ModelParams::weibull(7.4708, 15397.0, 0.8482));
  ReliabilityResult r = avg_reliability_detail(sf, 87600.0, 1e-9);
  CHECK(r.path == ReliabilityPath::Quadrature);
  CHECK(r.value >= 0.0);
  CHECK(r.value < 0.01);
}

TEST_CASE("avg_reliability is nonincreasing in M for eps < 1") {
  oracle::SplitMix rng(6);
  for (const ModelSpec& spec : kAllSpecs) {
    SteadyFunctions sf = make_sf(spec, random_params(spec, rng, 0.1, 0.9));
    double prev = 1.1;
    for (int i = 1; i <= 20; ++i) {
      const double M = i * sf.rp_hours / 20.0;
      const double r = avg_reliability(sf, M, 1e-9);
      CHECK(r <= prev + 1e-9);
      prev = r;
    }
  }
}

TEST_CASE("avg_reliability stays in (0,1] and the PAR M->0 limit matches") {
  oracle::SplitMix rng(9);
  for (int draw = 0; draw < 10; ++draw) {
    const ModelSpec spec = draw % 2 ? kParLin : kParWei;
    SteadyFunctions sf = make_sf(spec, random_params(spec, rng, 0.2, 0.95));
    // independent M->0 limit: ages collapse to t(1-eps)
    const double limit = oracle::gauss_legendre(
                             [&](double t) {
                               return std::exp(-cum_hazard_at_age(
                                   sf.spec, sf.params, t * (1.0 - sf.params.epsilon)));
                             },
                             0.0, sf.rp_hours, 1e-12 * sf.rp_hours) /
                         sf.rp_hours;
    const double near_zero = avg_reliability(sf, 1e-3, 1e-10);
    CHECK(near_zero > 0.0);
    CHECK(near_zero <= 1.0);
    CHECK(near_zero == doctest::Approx(limit).epsilon(1e-6));
  }
  // at GAN the limit is exp(0) = 1
  auto sf = make_sf(kParWei, ModelParams::weibull(4.0, 9000.0, 1.0));
  CHECK(avg_reliability(sf, 1e-3, 1e-10) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("closed_form_ra equals the two-term series to 1e-12") {
  oracle::SplitMix rng(314159);
  for (int draw = 0; draw < 100; ++draw) {
    ModelParams p = ModelParams::weibull(rng.uniform(1.5, 9.0),
                                         rng.uniform(10000.0, 50000.0),
                                         rng.uniform(0.3, 1.0));
    auto sf = make_sf(kPasWei, p);
    // keep the two-term regime meaningful: small end-of-sweep hazard
    const double M = rng.uniform(500.0, 0.35 * p.eta * p.epsilon);
    const double closed = closed_form_ra(p, p.epsilon, M);
    const double series2 = avg_reliability_series(sf, M, 2);
    CHECK(std::abs(closed - series2) < 1e-12);
  }
}

TEST_CASE("closed_form_ra GAN special case") {
  ModelParams p = ModelParams::weibull(3.0, 20000.0, 1.0);
  const double M = 5000.0;
  CHECK(closed_form_ra(p, 1.0, M) ==
        doctest::Approx(1.0 - std::pow(M / p.eta, 3.0) / 4.0).epsilon(1e-14));
  // actuator spot value
  ModelParams a = ModelParams::weibull(7.4708, 15397.0, 0.8482);
  CHECK(closed_form_ra(a, a.epsilon, 4320.0) == doctest::Approx(0.999964).epsilon(1e-6));
}

TEST_CASE("interval preconditions") {
  auto sf = make_sf(kParLin, ModelParams::linear(1e-9, 0.5));
  CHECK_THROWS_AS(avg_hazard(sf, 0.0), Error);
  CHECK_THROWS_AS(avg_hazard(sf, 2.0 * sf.rp_hours), Error);
  auto pas = make_sf(kPasLin, ModelParams::linear(1e-9, 1e-6));
  CHECK_THROWS_AS(avg_hazard(pas, 1000.0), EpsilonZero);
  CHECK_THROWS_AS(avg_reliability(pas, 1000.0, 1e-9), EpsilonZero);
}
