#include "scenval/nn_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "scenval/parallel.hpp"

namespace scenval {

NeighborTable::NeighborTable(std::size_t empirical_count, std::size_t generated_count,
                             int k, std::vector<Neighbor> entries,
                             std::vector<std::uint32_t> ties)
    : empirical_count_(empirical_count),
      generated_count_(generated_count),
      k_(k),
      entries_(std::move(entries)),
      ties_(std::move(ties)) {}

std::size_t NeighborTable::total_ties_at_cutoff() const {
    std::size_t total = 0;
    for (auto t : ties_) {
        total += t;
    }
    return total;
}

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
    double sum = 0.0;
    for (std::size_t c = 0; c < a.size(); ++c) {
        const double diff = a[c] - b[c];
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

namespace {

// Squared distance between rows i and j of a flat row-major block.
inline double dist2(const double* coords, std::size_t dim, std::size_t i,
                    std::size_t j) {
    const double* a = coords + i * dim;
    const double* b = coords + j * dim;
    double sum = 0.0;
    for (std::size_t c = 0; c < dim; ++c) {
        const double diff = a[c] - b[c];
        sum += diff * diff;
    }
    return sum;
}

struct Candidate {
    double d2;
    std::size_t index;

    // Lexicographic (distance, index): the index part is the tie-break rule.
    bool operator<(const Candidate& other) const {
        if (d2 != other.d2) {
            return d2 < other.d2;
        }
        return index < other.index;
    }
};

// Fills buf[j] with the squared distance from query q to point j, with
// the self entry forced to infinity so it can never be selected.
void fill_distance_row(const double* coords, std::size_t dim, std::size_t n,
                       std::size_t q, double* buf) {
    const double* p = coords + q * dim;
    if (dim == 1) {
        const double px = p[0];
        for (std::size_t j = 0; j < n; ++j) {
            const double dx = px - coords[j];
            buf[j] = dx * dx;
        }
    } else if (dim == 2) {
        const double px = p[0];
        const double py = p[1];
        for (std::size_t j = 0; j < n; ++j) {
            const double dx = px - coords[2 * j];
            const double dy = py - coords[2 * j + 1];
            buf[j] = dx * dx + dy * dy;
        }
    } else {
        for (std::size_t j = 0; j < n; ++j) {
            buf[j] = dist2(coords, dim, q, j);
        }
    }
    buf[q] = std::numeric_limits<double>::infinity();
}

// Selects the k lexicographically smallest (distance, index) pairs from a
// distance row by insertion; indices arrive in ascending order, so a
// candidate tying the current worst always loses and can be skipped.
void select_k_smallest(const double* buf, std::size_t n, std::size_t k,
                       Candidate* best) {
    std::size_t filled = 0;
    for (std::size_t j = 0; j < n; ++j) {
        const double d2v = buf[j];
        if (filled == k) {
            if (d2v >= best[k - 1].d2) {
                continue;
            }
        }
        std::size_t pos = filled < k ? filled : k - 1;
        while (pos > 0 && d2v < best[pos - 1].d2) {
            best[pos] = best[pos - 1];
            --pos;
        }
        best[pos] = Candidate{d2v, j};
        if (filled < k) {
            ++filled;
        }
    }
}

void require_same_dim(const PointSet& a, const PointSet& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("point sets have dimensions " +
                                std::to_string(a.dim()) + " and " +
                                std::to_string(b.dim()));
    }
}

}  // namespace

NeighborTable knn_pooled(const PointSet& e, const PointSet& g, int k,
                         unsigned threads) {
    require_same_dim(e, g);
    const std::size_t m_e = e.size();
    const std::size_t m_g = g.size();
    const std::size_t n = m_e + m_g;
    detail::check_k(k, n - 1);

    const std::size_t dim = e.dim();
    std::vector<double> pool(n * dim);
    std::copy(e.coords().begin(), e.coords().end(), pool.begin());
    std::copy(g.coords().begin(), g.coords().end(), pool.begin() + m_e * dim);

    const auto uk = static_cast<std::size_t>(k);
    std::vector<Neighbor> entries(n * uk);
    std::vector<std::uint32_t> ties(n, 0);

    const unsigned nthreads = resolve_threads(threads);
    const std::size_t block = (n + nthreads - 1) / nthreads;

    // One scratch candidate buffer per worker block; queries inside a block
    // run sequentially.
    parallel_for(nthreads, nthreads, [&](std::size_t w) {
        const std::size_t q_begin = w * block;
        const std::size_t q_end = std::min(n, q_begin + block);
        if (q_begin >= q_end) {
            return;
        }
        std::vector<double> row_d2(n);
        std::vector<Candidate> best(uk);
        for (std::size_t q = q_begin; q < q_end; ++q) {
            fill_distance_row(pool.data(), dim, n, q, row_d2.data());
            select_k_smallest(row_d2.data(), n, uk, best.data());

            // Candidates beyond the cutoff that tie it were excluded purely
            // by the index rule; count them for the diagnostics.
            const double cutoff = best[uk - 1].d2;
            std::size_t total_at_cutoff = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (row_d2[j] == cutoff) {
                    ++total_at_cutoff;
                }
            }
            std::size_t selected_at_cutoff = 0;
            for (std::size_t r = 0; r < uk; ++r) {
                if (best[r].d2 == cutoff) {
                    ++selected_at_cutoff;
                }
            }
            ties[q] = static_cast<std::uint32_t>(total_at_cutoff - selected_at_cutoff);

            Neighbor* row = entries.data() + q * uk;
            for (std::size_t r = 0; r < uk; ++r) {
                const std::size_t idx = best[r].index;
                row[r] = Neighbor{idx, std::sqrt(best[r].d2),
                                  idx < m_e ? SourceLabel::Empirical
                                            : SourceLabel::Generated};
            }
        }
    });

    return NeighborTable(m_e, m_g, k, std::move(entries), std::move(ties));
}

std::vector<double> within_set_nn_distance(const PointSet& s, unsigned threads) {
    const std::size_t m = s.size();
    if (m < 2) {
        throw TooSmall("within-set nearest neighbor needs at least 2 points");
    }
    const std::size_t dim = s.dim();
    const double* coords = s.coords().data();

    std::vector<double> result(m);
    parallel_for(m, threads, [&](std::size_t i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) {
                continue;
            }
            const double d = dist2(coords, dim, i, j);
            if (d < best) {
                best = d;
            }
        }
        result[i] = std::sqrt(best);
    });
    return result;
}

std::vector<double> min_cross_distance(const PointSet& from, const PointSet& to,
                                       unsigned threads) {
    require_same_dim(from, to);
    const std::size_t dim = from.dim();
    const std::size_t m_from = from.size();
    const std::size_t m_to = to.size();
    const double* fc = from.coords().data();
    const double* tc = to.coords().data();

    std::vector<double> result(m_from);
    parallel_for(m_from, threads, [&](std::size_t i) {
        const double* p = fc + i * dim;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < m_to; ++j) {
            const double* q = tc + j * dim;
            double sum = 0.0;
            for (std::size_t c = 0; c < dim; ++c) {
                const double diff = p[c] - q[c];
                sum += diff * diff;
            }
            if (sum < best) {
                best = sum;
            }
        }
        result[i] = std::sqrt(best);
    });
    return result;
}

}  // namespace scenval
