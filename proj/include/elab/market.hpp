#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "elab/series.hpp"

namespace elab {

// Full parameterization of the hourly market data-generating process.
// Demand: d_t = demand_intercept + demand_slope * p_t
//               + sum_l demand_ar[l-1] * d_{t-l} + eps_d.
// Supply: s_t = supply_intercept + supply_slope * p_t
//               + wind_effect * w_t + eps_s.
struct MarketParams {
  double demand_intercept = 0.0;    // MWh
  double demand_slope = -0.4;      // MWh per EUR/MWh, <= 0
  std::vector<double> demand_ar;   // 0..2 lag coefficients
  double demand_noise_var = 0.0;   // Var(eps_d)
  double supply_intercept = 0.0;   // MWh
  double supply_slope = 4.0;       // MWh per EUR/MWh, > 0
  double wind_effect = 16.0;       // MWh per m/s
  double supply_noise_var = 0.01;  // Var(eps_s)

  std::size_t demand_order() const { return demand_ar.size(); }
  double slope_gap() const { return supply_slope - demand_slope; }

  // Checks the structural requirements (slope orientation, slope gap,
  // noise variances). `relax_orientation` lifts the economic sign
  // constraints for test scenarios.
  void validate(bool relax_orientation = false) const;
};

// Deterministic joint steady state of demand and price for a given mean
// wind level (noise set to zero, lags at their fixed point).
struct SteadyState {
  double demand = 0.0;
  double price = 0.0;
};

SteadyState steady_state(const MarketParams& params, double mean_wind);

// Market-clearing price given current wind, the last L simulated demands
// (most recent first) and the two noise draws:
//   p_t = (d_b0 - s_b0 ... ) solved from demand = supply.
double equilibrium_price(const MarketParams& params, double wind_t,
                         std::span<const double> demand_lags, double eps_d,
                         double eps_s);

// Demand curve evaluated at a price with the same lag convention.
double demand_response(const MarketParams& params, double price_t,
                       std::span<const double> demand_lags, double eps_d);

// Demand intercept that makes (target_mean_demand, implied price) the joint
// deterministic steady state:
//   b0 = mu_d * (1 - sum ar) - demand_slope * mu_p,
//   mu_p = (mu_d - wind_effect * mu_w - supply_intercept) / supply_slope.
double calibrate_intercept(double target_mean_demand, double mean_wind,
                           const MarketParams& params);

// Aligned (wind, price, demand) triples after burn-in, plus the generating
// parameters for provenance.
struct EquilibriumPanel {
  TimeSeries wind;
  TimeSeries price;
  TimeSeries demand;
  MarketParams params;
  std::size_t burn_in_dropped = 0;

  std::size_t size() const { return demand.size(); }
};

inline constexpr std::size_t kDefaultBurnIn = 672;  // 28 days
inline constexpr double kDemandInstabilityLimit = 1e6;

// Sequentially simulates the equilibrium over the wind series, drawing
// demand and supply innovations from independent streams derived from
// `seed`. Initial demand lags sit at the deterministic steady state; the
// first `burn_in` observations are dropped from all three series. Market
// clearing is asserted at every step; |d_t| beyond the instability limit
// aborts with an error.
EquilibriumPanel simulate_market(const MarketParams& params,
                                 const TimeSeries& wind, std::uint64_t seed,
                                 std::size_t burn_in = kDefaultBurnIn);

}  // namespace elab
