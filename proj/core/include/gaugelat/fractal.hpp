#pragma once

#include <vector>

#include "gaugelat/spectral.hpp"

namespace gaugelat {

struct BoxCountingOptions {
  int k_min = 3;   // largest box 2^-k_min of the normalized support
  int k_max = 10;  // smallest box 2^-k_max
  int offsets = 8; // grid shifts averaged per scale
  // Scales below min_scale_factor / (M - 1) are dropped (M = point count).
  double min_scale_factor = 1.0;
};

struct DimensionFit {
  std::vector<double> scales;  // strictly decreasing
  std::vector<double> counts;  // mean occupied boxes per scale
  double D = 0;
  double intercept = 0;
  double residual = 0;  // RMS of the log-log fit
  bool degenerate = false;
};

DimensionFit box_counting_dimension(std::vector<double> points, const BoxCountingOptions& options = {});

// Raises lookup_error when no record has this parameter.
DimensionFit spectrum_dimension(const SpectrumSweep& sweep, double param,
                                const BoxCountingOptions& options = {});

// 3x the median consecutive gap between distinct levels.
double default_gap_threshold(const std::vector<double>& sorted);
// Total length of the maximal runs whose consecutive gaps are below threshold.
double bandwidth_measure(const std::vector<double>& sorted, double threshold);
double bandwidth_measure(const std::vector<double>& sorted);

}  // namespace gaugelat
