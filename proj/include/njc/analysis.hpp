#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace njc {

/// Evenly spaced samples t_start, …, t_end (a single sample gives t_start).
std::vector<double> linspace(double t_start, double t_end, std::size_t samples);

/// Centered moving root-mean-square over ±half_width samples, clipped at the
/// ends of the series. Used as the smoothed envelope of an oscillating signal.
std::vector<double> moving_rms(std::span<const double> values, std::size_t half_width);

/// Index of the revival peak of a smoothed envelope: the largest local maximum
/// after the envelope first falls below 1/e of its initial value. Empty if the
/// envelope never collapses or has no later local maximum.
std::optional<std::size_t> revival_peak_index(std::span<const double> envelope);

/// Pearson correlation between x[0..N−lag) and x[lag..N).
double lagged_correlation(std::span<const double> values, std::size_t lag);

struct CorrelationPeak {
  std::size_t lag = 0;
  double value = 0.0;
};

/// Largest lagged correlation beyond its first non-positive value, scanning
/// lags stride, 2·stride, … up to max_lag.
std::optional<CorrelationPeak> secondary_correlation_peak(std::span<const double> values,
                                                          std::size_t max_lag,
                                                          std::size_t stride);

}  // namespace njc
