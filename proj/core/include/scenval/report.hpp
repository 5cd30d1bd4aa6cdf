#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "scenval/measures.hpp"
#include "scenval/point_set.hpp"

namespace scenval {

/// Everything a validation run reports about one (empirical, generated)
/// pair: both statistics with the parameters that produced them, their
/// reference values and the tie diagnostics of the neighbor search.
struct ValidationReport {
    double nnc = 0.0;
    double t1 = 0.0;
    double t2 = 0.0;
    double expected_t = 0.0;
    ExpectationMode mode = ExpectationMode::Exact;

    double mr = 0.0;
    double mr_limit = 0.0;
    std::size_t memorized_count = 0;

    std::size_t m = 0;
    std::size_t d = 0;
    int k = 0;
    double rho = 0.0;
    std::size_t tie_count = 0;

    std::vector<std::string> methodology;
};

/// Computes both statistics and assembles the report.
ValidationReport validate_pair(const PointSet& e, const PointSet& g,
                               const MeasureParams& params, ExpectationMode mode,
                               unsigned threads = 0);

}  // namespace scenval
