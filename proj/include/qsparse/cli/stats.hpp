#pragma once

#include <vector>

namespace qsparse::cli {

/// Linear-interpolation quantile of sorted data (p in [0, 1]).
double quantile(const std::vector<double>& sorted, double p);

struct MeanStderr {
  double mean;
  double stderr_;
};
MeanStderr mean_stderr(const std::vector<double>& v);

/// Ordinary least-squares slope of y against x.
double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace qsparse::cli
