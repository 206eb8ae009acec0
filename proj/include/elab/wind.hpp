#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "elab/series.hpp"

namespace elab {

// AR(2) surrogate targets for hourly Danish wind speed: mean 7.6 m/s,
// std 2.4 m/s, range [2.2, 18.3] m/s, lag coefficients (1.84, -0.85).
struct SurrogateCalibration {
  double target_mean = 7.6;
  double target_std = 2.4;
  std::array<double, 2> ar_coefficients{1.84, -0.85};
  double clip_low = 2.2;
  double clip_high = 18.3;

  void validate() const;
};

// Reads a wind-speed file in the series text format and validates it:
// speeds must be finite and non-negative, timestamps strictly increasing.
TimeSeries load_wind(const std::string& path);

// AR(2) process whose unclipped stationary mean/std match the calibration
// targets, then hard-clamped into [clip_low, clip_high].
TimeSeries surrogate_wind(const SurrogateCalibration& cal, std::size_t length,
                          std::uint64_t seed);

// The same draw without the clamp (the clip step is the only difference);
// used to check the AR structure against the calibration.
TimeSeries surrogate_wind_unclipped(const SurrogateCalibration& cal,
                                    std::size_t length, std::uint64_t seed);

// Stationary AR(1) with the given lag-1 coefficient and unconditional
// mean/std. No clipping.
TimeSeries synthetic_ar1_wind(double alpha, double mean, double stddev,
                              std::size_t length, std::uint64_t seed);

// Wind provider selector. The string syntax (used by the CLI and the C API)
// is: "empirical:PATH", "surrogate", "ar1:ALPHA", or "shuffled:<inner>".
struct WindSpec {
  enum class Kind { Empirical, Surrogate, SyntheticAr1 };

  Kind kind = Kind::Surrogate;
  bool shuffled = false;
  std::string path;            // Empirical
  double alpha = 0.95;         // SyntheticAr1; not reported by any source,
  double ar1_mean = 7.6;       // see README ("synthetic wind defaults")
  double ar1_std = 1.6;
  SurrogateCalibration calibration{};

  static WindSpec parse(const std::string& text);
  std::string to_string() const;
  void validate() const;
};

// Generates (or loads) the wind series a spec describes. Empirical series
// are truncated to `length`; shuffling draws from a seed derived from
// `seed` so the underlying series is reproducible on its own.
TimeSeries make_wind(const WindSpec& spec, std::size_t length,
                     std::uint64_t seed);

}  // namespace elab
