#include "scenval/measures.hpp"

#include <cmath>

#include "scenval/theory.hpp"

namespace scenval {

std::string to_string(ExpectationMode mode) {
    return mode == ExpectationMode::Exact ? "exact" : "asymptotic";
}

namespace {

void require_two_sample(const PointSet& e, const PointSet& g) {
    if (e.dim() != g.dim()) {
        throw DimensionMismatch("point sets have dimensions " +
                                std::to_string(e.dim()) + " and " +
                                std::to_string(g.dim()));
    }
    if (e.size() != g.size()) {
        throw UnequalSampleSizes("the two-sample statistics need equal sizes, got " +
                                 std::to_string(e.size()) + " and " +
                                 std::to_string(g.size()));
    }
}

}  // namespace

NncResult nnc_from_table(const NeighborTable& table, ExpectationMode mode) {
    const std::size_t m = table.empirical_count();
    if (m != table.generated_count()) {
        throw UnequalSampleSizes("the coincidence statistic needs equal sizes, got " +
                                 std::to_string(m) + " and " +
                                 std::to_string(table.generated_count()));
    }

    std::size_t own_e = 0;
    std::size_t own_g = 0;
    const std::size_t n = table.query_count();
    for (std::size_t q = 0; q < n; ++q) {
        const SourceLabel qlabel = table.query_label(q);
        std::size_t own = 0;
        for (const Neighbor& nb : table.neighbors(q)) {
            if (nb.label == qlabel) {
                ++own;
            }
        }
        if (qlabel == SourceLabel::Empirical) {
            own_e += own;
        } else {
            own_g += own;
        }
    }

    const double denom =
        static_cast<double>(m) * static_cast<double>(table.k());
    NncResult result;
    result.t1 = static_cast<double>(own_e) / denom;
    result.t2 = static_cast<double>(own_g) / denom;
    result.mode = mode;
    result.expected_t =
        mode == ExpectationMode::Exact
            ? static_cast<double>(m - 1) / static_cast<double>(2 * m - 1)
            : 0.5;
    result.nnc = 0.5 * std::abs(result.t1 - result.expected_t) +
                 0.5 * std::abs(result.t2 - result.expected_t);
    result.tie_count = table.total_ties_at_cutoff();
    return result;
}

NncResult nnc(const PointSet& e, const PointSet& g, int k, ExpectationMode mode,
              unsigned threads) {
    require_two_sample(e, g);
    detail::check_k(k, 2 * e.size() - 1);
    return nnc_from_table(knn_pooled(e, g, k, threads), mode);
}

std::vector<MrResult> mr_curve(const PointSet& e, const PointSet& g,
                               std::span<const double> rhos, unsigned threads) {
    require_two_sample(e, g);
    for (double rho : rhos) {
        detail::check_rho(rho);
    }

    const std::vector<double> r1 = within_set_nn_distance(e, threads);
    const std::vector<double> cross = min_cross_distance(e, g, threads);
    const std::size_t m = e.size();

    std::vector<MrResult> results;
    results.reserve(rhos.size());
    for (double rho : rhos) {
        MrResult res;
        res.memorized_flags.resize(m);
        std::size_t memorized = 0;
        for (std::size_t i = 0; i < m; ++i) {
            // Half-open interval [0, rho * R1): a duplicate empirical point
            // (R1 = 0) can never be memorized.
            const bool flag = cross[i] < rho * r1[i];
            res.memorized_flags[i] = flag;
            memorized += flag ? 1 : 0;
        }
        res.mr = static_cast<double>(memorized) / static_cast<double>(m);
        res.mr_limit = theory::mr_limit(rho, static_cast<int>(e.dim()));
        results.push_back(std::move(res));
    }
    return results;
}

MrResult memorizing_ratio(const PointSet& e, const PointSet& g, double rho,
                          unsigned threads) {
    const double rhos[1] = {rho};
    return mr_curve(e, g, rhos, threads)[0];
}

}  // namespace scenval
