#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "elab/error.hpp"

namespace elab {

// Hour-resolution timestamp, stored as hours since 1970-01-01T00:00.
// Parsing accepts "YYYY-MM-DDTHH:MM" (also a space separator, optional
// ":SS", or a bare hour); formatting always emits "YYYY-MM-DDTHH:MM".
struct HourStamp {
  std::int64_t hours = 0;

  static HourStamp parse(const std::string& text);
  std::string to_string() const;

  HourStamp plus_hours(std::int64_t n) const { return HourStamp{hours + n}; }
  friend auto operator<=>(const HourStamp&, const HourStamp&) = default;
};

// Ordered hourly observations. Construction rejects NaN/infinite entries and
// empty value lists, so a TimeSeries always holds finite data.
class TimeSeries {
 public:
  explicit TimeSeries(std::vector<double> values,
                      std::optional<HourStamp> start = std::nullopt,
                      std::string label = "");

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::optional<HourStamp>& start() const { return start_; }
  const std::string& label() const { return label_; }

  double mean() const;
  double variance() const;  // unbiased (n-1); 0 for length-1 series
  double stddev() const;
  double min() const;
  double max() const;

  // Copy of the tail [first, size), keeping the label and shifting the
  // start stamp accordingly.
  TimeSeries drop_front(std::size_t first) const;

  TimeSeries with_label(std::string label) const;
  TimeSeries with_start(std::optional<HourStamp> start) const;

 private:
  std::vector<double> values_;
  std::optional<HourStamp> start_;
  std::string label_;
};

// Autoregressive model x_t = intercept + sum_l coefficients[l-1] * x_{t-l} + eps,
// eps ~ N(0, innovation_variance).
struct ArModel {
  double intercept = 0.0;
  std::vector<double> coefficients;
  double innovation_variance = 0.0;

  std::size_t order() const { return coefficients.size(); }

  // True when all roots of the characteristic polynomial lie outside the
  // unit circle (checked via companion-matrix eigenvalues).
  bool stationary() const;

  // intercept / (1 - sum of coefficients); requires the sum != 1.
  double unconditional_mean() const;

  // Stationary (unconditional) variance of the process.
  double stationary_variance() const;
};

// Sample autocorrelations for lags 1..max_lag. Deviations are taken from the
// sample mean and the denominator is the lag-0 sum of squares.
std::vector<double> acf(const TimeSeries& series, std::size_t max_lag);

// Partial autocorrelations for lags 1..max_lag via the Durbin-Levinson
// recursion on the sample ACF: pacf(k) is the lag-k coefficient of the
// order-k AR fit, and pacf(1) == acf(1) exactly.
std::vector<double> pacf(const TimeSeries& series, std::size_t max_lag);

// Conditional least squares: regress x_t on an intercept and lags 1..order
// over t = order+1..T. Order 0 returns the sample mean and sample variance.
ArModel fit_ar(const TimeSeries& series, std::size_t order);

// Simulates the model for `length` steps. Initial lags default to the
// unconditional mean; `initial` overrides them (most recent value first).
TimeSeries simulate_ar(const ArModel& model, std::size_t length,
                       std::uint64_t seed,
                       const std::vector<double>& initial = {});

// First differences: out_t = in_{t+1} - in_t, length n-1.
TimeSeries difference(const TimeSeries& series);

// Uniformly random permutation of the values (Fisher-Yates, seeded).
TimeSeries shuffle(const TimeSeries& series, std::uint64_t seed);

// Design-matrix builder: row t (for t = max(lags)..T-1) holds the series at
// t - l for each requested lag, in the order given. An empty lag set yields
// a zero-column matrix with T rows.
Eigen::MatrixXd lag_matrix(const TimeSeries& series,
                           const std::vector<std::size_t>& lags);

}  // namespace elab
