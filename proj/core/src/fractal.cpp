#include "gaugelat/fractal.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "gaugelat/errors.hpp"

namespace gaugelat {

DimensionFit box_counting_dimension(std::vector<double> points, const BoxCountingOptions& options) {
  if (points.empty()) throw Error(ErrorKind::invalid_parameter, "box counting needs at least one point");
  if (options.k_min < 0 || options.k_max < options.k_min || options.offsets < 1)
    throw Error(ErrorKind::invalid_parameter, "bad box counting scale range");
  for (double x : points)
    if (!std::isfinite(x)) throw Error(ErrorKind::invalid_parameter, "box counting input is not finite");
  std::sort(points.begin(), points.end());
  DimensionFit fit;
  const double lo = points.front();
  const double span = points.back() - lo;
  if (!(span > 0.0)) {
    fit.degenerate = true;
    return fit;
  }
  for (double& x : points) x = (x - lo) / span;
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const double floor_scale = options.min_scale_factor / static_cast<double>(std::max<std::size_t>(points.size() - 1, 1));

  std::unordered_set<long long> boxes;
  for (int k = options.k_min; k <= options.k_max; ++k) {
    const double s = std::ldexp(1.0, -k);
    if (s < floor_scale) break;
    double total = 0;
    for (int j = 0; j < options.offsets; ++j) {
      const double shift = s * j / options.offsets;
      boxes.clear();
      for (double x : points) boxes.insert(static_cast<long long>(std::floor((x + shift) / s)));
      total += static_cast<double>(boxes.size());
    }
    fit.scales.push_back(s);
    fit.counts.push_back(total / options.offsets);
  }
  if (fit.scales.size() < 2)
    throw Error(ErrorKind::fit_failure, "fewer than two usable box-counting scales");

  const std::size_t n = fit.scales.size();
  double mx = 0, my = 0;
  std::vector<double> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = -std::log(fit.scales[i]);
    ys[i] = std::log(fit.counts[i]);
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  fit.D = sxy / sxx;
  fit.intercept = my - fit.D * mx;
  double ss = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ys[i] - (fit.intercept + fit.D * xs[i]);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / static_cast<double>(n));
  return fit;
}

DimensionFit spectrum_dimension(const SpectrumSweep& sweep, double param, const BoxCountingOptions& options) {
  return box_counting_dimension(sweep.at(param).eigenvalues, options);
}

double default_gap_threshold(const std::vector<double>& sorted) {
  if (sorted.size() < 2) return 0.0;
  // Degenerate levels (e.g. +-k pairs on a ring) would drag the median to zero.
  const double eps = 1e-10 * (sorted.back() - sorted.front());
  std::vector<double> gaps;
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
    if (sorted[i + 1] - sorted[i] > eps) gaps.push_back(sorted[i + 1] - sorted[i]);
  if (gaps.empty()) return 0.0;
  auto mid = gaps.begin() + static_cast<std::ptrdiff_t>(gaps.size() / 2);
  std::nth_element(gaps.begin(), mid, gaps.end());
  double median = *mid;
  if (gaps.size() % 2 == 0) median = 0.5 * (median + *std::max_element(gaps.begin(), mid));
  return 3.0 * median;
}

double bandwidth_measure(const std::vector<double>& sorted, double threshold) {
  double total = 0;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= sorted.size(); ++i) {
    if (i == sorted.size() || !(sorted[i] - sorted[i - 1] < threshold)) {
      total += sorted[i - 1] - sorted[start];
      start = i;
    }
  }
  return total;
}

double bandwidth_measure(const std::vector<double>& sorted) {
  return bandwidth_measure(sorted, default_gap_threshold(sorted));
}

}  // namespace gaugelat
