#include "njc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "njc/error.hpp"

namespace njc {

std::vector<double> linspace(double t_start, double t_end, std::size_t samples) {
  if (samples == 0) throw EmptyGrid("grid needs at least one sample");
  std::vector<double> out(samples);
  if (samples == 1) {
    out[0] = t_start;
    return out;
  }
  const double step = (t_end - t_start) / static_cast<double>(samples - 1);
  for (std::size_t i = 0; i < samples; ++i) out[i] = t_start + step * static_cast<double>(i);
  out.back() = t_end;
  return out;
}

std::vector<double> moving_rms(std::span<const double> values, std::size_t half_width) {
  const std::size_t n = values.size();
  std::vector<double> prefix(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + values[i] * values[i];
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i > half_width ? i - half_width : 0;
    const std::size_t hi = std::min(n, i + half_width + 1);
    out[i] = std::sqrt(std::max(0.0, prefix[hi] - prefix[lo]) / static_cast<double>(hi - lo));
  }
  return out;
}

std::optional<std::size_t> revival_peak_index(std::span<const double> envelope) {
  if (envelope.size() < 3) return std::nullopt;
  const double threshold = envelope[0] / std::numbers::e;
  std::size_t start = 0;
  while (start < envelope.size() && envelope[start] >= threshold) ++start;
  if (start >= envelope.size()) return std::nullopt;

  std::optional<std::size_t> best;
  for (std::size_t i = std::max<std::size_t>(start, 1); i + 1 < envelope.size(); ++i) {
    const bool local_max = envelope[i] >= envelope[i - 1] && envelope[i] > envelope[i + 1];
    if (local_max && (!best || envelope[i] > envelope[*best])) best = i;
  }
  return best;
}

double lagged_correlation(std::span<const double> values, std::size_t lag) {
  if (lag + 2 > values.size()) throw InvalidArgument("lag leaves fewer than two overlapping samples");
  const std::size_t m = values.size() - lag;
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    mx += values[i];
    my += values[i + lag];
  }
  mx /= static_cast<double>(m);
  my /= static_cast<double>(m);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double dx = values[i] - mx;
    const double dy = values[i + lag] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

std::optional<CorrelationPeak> secondary_correlation_peak(std::span<const double> values,
                                                          std::size_t max_lag,
                                                          std::size_t stride) {
  if (stride == 0) throw InvalidArgument("stride must be positive");
  max_lag = std::min(max_lag, values.size() >= 2 ? values.size() - 2 : 0);
  bool crossed = false;
  std::optional<CorrelationPeak> best;
  for (std::size_t lag = stride; lag <= max_lag; lag += stride) {
    const double r = lagged_correlation(values, lag);
    if (!crossed) {
      crossed = r <= 0.0;
      continue;
    }
    if (!best || r > best->value) best = CorrelationPeak{lag, r};
  }
  return best;
}

}  // namespace njc
