#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "scenval/point_set.hpp"

namespace scenval {

/// One entry of a neighbor list: the neighbor's index in the pooled set
/// (empirical points first, then generated), its true Euclidean distance
/// to the query, and which sample it came from.
struct Neighbor {
    std::size_t index;
    double distance;
    SourceLabel label;
};

/// k-nearest-neighbor lists for every point of a pooled two-sample set.
///
/// Queries are indexed like the pool: 0..m_e-1 are the empirical points,
/// m_e..m_e+m_g-1 the generated ones. A point is never its own neighbor.
/// ties_at_cutoff(q) counts candidates whose distance equals the k-th
/// distance of query q but which lost the deterministic index tie-break
/// and were excluded; a nonzero total flags results that a different tie
/// rule could have changed.
class NeighborTable {
public:
    NeighborTable(std::size_t empirical_count, std::size_t generated_count, int k,
                  std::vector<Neighbor> entries, std::vector<std::uint32_t> ties);

    std::size_t query_count() const { return empirical_count_ + generated_count_; }
    std::size_t empirical_count() const { return empirical_count_; }
    std::size_t generated_count() const { return generated_count_; }
    int k() const { return k_; }

    SourceLabel query_label(std::size_t q) const {
        return q < empirical_count_ ? SourceLabel::Empirical : SourceLabel::Generated;
    }

    std::span<const Neighbor> neighbors(std::size_t q) const {
        return {entries_.data() + q * static_cast<std::size_t>(k_),
                static_cast<std::size_t>(k_)};
    }

    std::size_t ties_at_cutoff(std::size_t q) const { return ties_[q]; }
    std::size_t total_ties_at_cutoff() const;

private:
    std::size_t empirical_count_;
    std::size_t generated_count_;
    int k_;
    std::vector<Neighbor> entries_;       // query-major, k per query
    std::vector<std::uint32_t> ties_;     // per query
};

/// Euclidean distance between two points of equal dimension. Coordinates
/// are accumulated in index order so results are reproducible bit for bit.
double euclidean_distance(std::span<const double> a, std::span<const double> b);

/// Exact k-nearest neighbors of every point in the pooled set E u G,
/// excluding the query point itself. Equal distances are broken toward
/// the smaller pooled index (empirical 0..m_e-1, generated m_e..).
/// Throws DimensionMismatch and KTooLarge.
NeighborTable knn_pooled(const PointSet& e, const PointSet& g, int k,
                         unsigned threads = 0);

/// Distance from each point to its nearest other point in the same set
/// (0 when an exact duplicate exists). Throws TooSmall.
std::vector<double> within_set_nn_distance(const PointSet& s, unsigned threads = 0);

/// Element i is the distance from from[i] to the closest point of `to`.
/// Throws DimensionMismatch.
std::vector<double> min_cross_distance(const PointSet& from, const PointSet& to,
                                       unsigned threads = 0);

}  // namespace scenval
