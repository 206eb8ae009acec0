#pragma once

#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "elab/market.hpp"

namespace elab {

// Named regressor columns. Rows are observations; the intercept column is
// added by the regression routines, never stored here.
struct Dataset {
  std::vector<std::string> names;
  Eigen::MatrixXd columns;  // rows x names.size()

  Dataset() : columns(0, 0) {}
  Dataset(std::vector<std::string> n, Eigen::MatrixXd c);

  std::size_t cols() const { return names.size(); }
  std::size_t rows() const { return static_cast<std::size_t>(columns.rows()); }
  void append(const std::string& name, const Eigen::VectorXd& column);
};

struct RegressionFit {
  std::vector<std::string> names;   // includes "const" first
  Eigen::VectorXd coefficients;
  Eigen::VectorXd residuals;
  Eigen::MatrixXd covariance;       // HAC sandwich over `names`
  std::size_t nobs = 0;
  std::size_t bandwidth = 0;        // bandwidth actually used

  // 2SLS only:
  std::shared_ptr<const RegressionFit> first_stage;
  double first_stage_f = std::numeric_limits<double>::quiet_NaN();
  bool weak_instruments = false;

  double coefficient(const std::string& name) const;
  double std_error(const std::string& name) const;
};

// floor(4 * (T/100)^(2/9)) — rule-of-thumb Bartlett bandwidth.
std::size_t auto_bandwidth(std::size_t nobs);

// Bartlett-kernel HAC sandwich: (X'X)^-1 S (X'X)^-1 with
// S = G_0 + sum_{j=1..bw} (1 - j/(bw+1)) (G_j + G_j'),
// G_j = sum_t g_t g_{t-j}', g_t = x_t e_t. Bandwidth 0 is the White
// covariance.
Eigen::MatrixXd hac_covariance(const Eigen::MatrixXd& regressors,
                               const Eigen::VectorXd& residuals,
                               std::size_t bandwidth);

// OLS with an intercept always included. `bandwidth` empty means `auto`.
RegressionFit ols(const Eigen::VectorXd& y, const Dataset& regressors,
                  std::optional<std::size_t> bandwidth = std::nullopt);

// Two-stage least squares. Stage 1 regresses the endogenous column on
// intercept + instruments + exogenous; stage 2 regresses y on intercept +
// fitted endogenous + exogenous. The covariance is HAC over the stage-2
// design with structural residuals (y - X beta at the original endogenous
// column). The first stage is retained with its instrument F statistic.
RegressionFit tsls(const Eigen::VectorXd& y, const std::string& endogenous_name,
                   const Eigen::VectorXd& endogenous, const Dataset& instruments,
                   const Dataset& exogenous,
                   std::optional<std::size_t> bandwidth = std::nullopt);

enum class StrategyKind {
  Ols,
  LagpriceIv,
  RegularIv,
  RegularIvDiff,
  ConditionalIv,
  NuisanceIv,
};

struct StrategySpec {
  StrategyKind kind = StrategyKind::RegularIv;
  std::size_t wind_lags = 26;   // conditional IV: M >= 1
  std::size_t demand_lags = 2;  // nuisance IV: L >= 1
  std::optional<std::size_t> hac_bandwidth;  // empty = auto

  static StrategyKind parse_kind(const std::string& name);
  std::string name() const;
  void validate() const;
};

struct EstimationResult {
  StrategySpec strategy;
  double slope = 0.0;      // coefficient on price (MWh per EUR/MWh)
  double std_error = 0.0;  // HAC
  double ci_low = 0.0;     // 95% two-sided, normal critical value
  double ci_high = 0.0;
  double first_stage_f = std::numeric_limits<double>::quiet_NaN();
  std::size_t nobs = 0;
  bool weak_instruments = false;

  static std::string csv_header();
  std::string csv_row() const;
};

inline constexpr double kNormal975 = 1.959964;

// Assembles the strategy's columns from a panel (rows with unavailable lags
// dropped from the front) and runs the matching regression.
EstimationResult estimate(const StrategySpec& strategy,
                          const EquilibriumPanel& panel);

}  // namespace elab
