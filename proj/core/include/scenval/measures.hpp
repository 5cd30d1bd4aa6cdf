#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "scenval/nn_engine.hpp"
#include "scenval/point_set.hpp"

namespace scenval {

/// Which expectation to center the coincidence statistic on: the exact
/// finite-sample value (m-1)/(2m-1) or its large-m limit 1/2.
enum class ExpectationMode { Exact, AsymptoticHalf };

std::string to_string(ExpectationMode mode);

/// Result of the nearest-neighbor coincidence statistic.
///
/// t1 is the fraction of the pooled k-nearest neighbors of empirical
/// points that are themselves empirical; t2 the generated analogue. The
/// statistic is nnc = |t1 - expected_t|/2 + |t2 - expected_t|/2; it is
/// close to 0 when both samples share one continuous distribution and
/// grows toward its maximum when each sample clusters with itself.
struct NncResult {
    double t1 = 0.0;
    double t2 = 0.0;
    double expected_t = 0.0;
    double nnc = 0.0;
    ExpectationMode mode = ExpectationMode::Exact;
    std::size_t tie_count = 0;  // neighbor candidates dropped by the tie rule
};

/// Result of the memorizing ratio.
///
/// memorized_flags[i] is true when some generated point lies strictly
/// inside the ball of radius rho * R1 around empirical point i, where R1
/// is that point's nearest-neighbor distance within the empirical set.
/// mr is the fraction of flagged points; mr_limit the large-m reference
/// rho^d / (rho^d + 1) under identical continuous distributions.
struct MrResult {
    double mr = 0.0;
    std::vector<bool> memorized_flags;
    double mr_limit = 0.0;
};

/// Nearest-neighbor coincidence of an (empirical, generated) pair.
/// Requires equal sizes, equal dimensions and k <= 2m-1.
NncResult nnc(const PointSet& e, const PointSet& g, int k,
              ExpectationMode mode = ExpectationMode::Exact,
              unsigned threads = 0);

/// Computes t1/t2 and the statistic from an existing pooled neighbor
/// table (the table must come from equally sized sets).
NncResult nnc_from_table(const NeighborTable& table, ExpectationMode mode);

/// Memorizing ratio for one rho in (0, 1].
MrResult memorizing_ratio(const PointSet& e, const PointSet& g, double rho,
                          unsigned threads = 0);

/// Memorizing ratio over several rho values sharing one distance pass.
/// Element r matches memorizing_ratio(e, g, rhos[r]) exactly.
std::vector<MrResult> mr_curve(const PointSet& e, const PointSet& g,
                               std::span<const double> rhos,
                               unsigned threads = 0);

}  // namespace scenval
