#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace scenval::stats {

/// Neumaier-compensated sum; deterministic for a fixed element order.
double compensated_sum(std::span<const double> values);

double mean(std::span<const double> values);

/// Sample standard deviation (n-1 denominator); 0 for a single value.
double sample_stddev(std::span<const double> values);

/// stddev / sqrt(n)
double standard_error(std::span<const double> values);

/// Ranks with average ranks assigned to ties (1-based).
std::vector<double> average_ranks(std::span<const double> values);

/// Spearman rank correlation with average-rank tie handling.
/// Returns 0 when either side is constant.
double spearman(std::span<const double> x, std::span<const double> y);

/// Pearson correlation; returns 0 when either side is constant.
double pearson(std::span<const double> x, std::span<const double> y);

}  // namespace scenval::stats
