#pragma once

// Shared test helpers: an independent all-pairs reference for the
// neighbor engine, plus small statistical utilities. The reference
// implementations here are deliberately written as plain full scans and
// must stay independent of the production code paths they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "scenval/nn_engine.hpp"
#include "scenval/point_set.hpp"

namespace scenval::testsupport {

struct RefNeighbor {
    std::size_t index;
    double distance;
    SourceLabel label;
};

struct RefTable {
    std::vector<std::vector<RefNeighbor>> neighbors;  // per query
    std::vector<std::size_t> ties_at_cutoff;          // per query
};

inline double ref_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double sum = 0.0;
    for (std::size_t c = 0; c < a.size(); ++c) {
        const double diff = a[c] - b[c];
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

inline std::vector<std::vector<double>> rows_of(const PointSet& s) {
    std::vector<std::vector<double>> rows(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto p = s.point(i);
        rows[i].assign(p.begin(), p.end());
    }
    return rows;
}

// All-pairs O(n^2) pooled k-NN: sort every candidate list, take the first
// k, count the equal-distance leftovers at the cutoff.
inline RefTable ref_knn_pooled(const PointSet& e, const PointSet& g, int k) {
    auto pool = rows_of(e);
    const auto grows = rows_of(g);
    pool.insert(pool.end(), grows.begin(), grows.end());
    const std::size_t n = pool.size();
    const std::size_t m_e = e.size();

    RefTable table;
    table.neighbors.resize(n);
    table.ties_at_cutoff.resize(n);
    for (std::size_t q = 0; q < n; ++q) {
        std::vector<std::pair<double, std::size_t>> cand;
        cand.reserve(n - 1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == q) {
                continue;
            }
            // compare on squared distance like the engine does
            double sum = 0.0;
            for (std::size_t c = 0; c < pool[q].size(); ++c) {
                const double diff = pool[q][c] - pool[j][c];
                sum += diff * diff;
            }
            cand.emplace_back(sum, j);
        }
        std::sort(cand.begin(), cand.end());
        const auto uk = static_cast<std::size_t>(k);
        for (std::size_t r = 0; r < uk; ++r) {
            table.neighbors[q].push_back(
                RefNeighbor{cand[r].second, std::sqrt(cand[r].first),
                            cand[r].second < m_e ? SourceLabel::Empirical
                                                 : SourceLabel::Generated});
        }
        std::size_t ties = 0;
        for (std::size_t r = uk; r < cand.size(); ++r) {
            if (cand[r].first == cand[uk - 1].first) {
                ++ties;
            }
        }
        table.ties_at_cutoff[q] = ties;
    }
    return table;
}

inline std::vector<double> ref_within_set(const PointSet& s) {
    const auto rows = rows_of(s);
    std::vector<double> out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (i != j) {
                best = std::min(best, ref_distance(rows[i], rows[j]));
            }
        }
        out[i] = best;
    }
    return out;
}

inline std::vector<double> ref_min_cross(const PointSet& from, const PointSet& to) {
    const auto f = rows_of(from);
    const auto t = rows_of(to);
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& q : t) {
            best = std::min(best, ref_distance(f[i], q));
        }
        out[i] = best;
    }
    return out;
}

// Uniformly random points; when grid > 0 the coordinates are drawn from
// {0, 1, ..., grid-1}, which makes exact ties and duplicates common.
inline PointSet random_points(std::uint32_t seed, std::size_t m, std::size_t d,
                              SourceLabel label, int grid = 0) {
    std::mt19937 rng(seed);
    std::vector<double> coords(m * d);
    if (grid > 0) {
        std::uniform_int_distribution<int> dist(0, grid - 1);
        for (double& c : coords) {
            c = static_cast<double>(dist(rng));
        }
    } else {
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        for (double& c : coords) {
            c = dist(rng);
        }
    }
    return PointSet(std::move(coords), d, label);
}

// Kolmogorov-Smirnov distance between a sample and an analytic cdf.
template <typename Cdf>
double ks_distance(std::vector<double> sample, Cdf&& cdf) {
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = cdf(sample[i]);
        d = std::max(d, std::abs(f - static_cast<double>(i + 1) / n));
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    }
    return d;
}

}  // namespace scenval::testsupport
