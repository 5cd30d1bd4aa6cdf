#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "scenval/errors.hpp"

namespace scenval {

/// Which of the two samples a point belongs to.
enum class SourceLabel { Empirical, Generated };

std::string to_string(SourceLabel label);

/// An immutable ordered collection of m points in R^d.
///
/// Invariants enforced at construction: d >= 1, m >= 2, all coordinates
/// finite, all points of identical dimension. Points keep their input
/// order; the statistics built on top are permutation invariant, so the
/// order is only an I/O concern.
class PointSet {
public:
    /// Validates and adopts a flat row-major coordinate block (m x d).
    PointSet(std::vector<double> coords, std::size_t dim, SourceLabel label);

    /// Builds a PointSet from one row per point. The dimension is inferred
    /// from the first row.
    static PointSet from_rows(const std::vector<std::vector<double>>& rows,
                              SourceLabel label);

    std::size_t size() const { return size_; }
    std::size_t dim() const { return dim_; }
    SourceLabel label() const { return label_; }

    std::span<const double> point(std::size_t i) const {
        return {coords_.data() + i * dim_, dim_};
    }

    std::span<const double> coords() const { return coords_; }

    /// Copy with a different label; coordinates are shared verbatim.
    PointSet relabeled(SourceLabel label) const;

private:
    std::vector<double> coords_;  // row-major, size_ * dim_
    std::size_t size_;
    std::size_t dim_;
    SourceLabel label_;
};

/// Parameters of the two validation statistics: neighbor depth k for the
/// coincidence measure and neighborhood fraction rho for the memorizing
/// ratio.
struct MeasureParams {
    int k = 3;
    double rho = 0.5;

    /// Throws KTooLarge / InvalidRho unless 1 <= k <= 2m-1 and rho in (0,1].
    void validate_for(std::size_t m) const;
};

namespace detail {
void check_rho(double rho);
void check_k(int k, std::size_t candidate_count);
}  // namespace detail

}  // namespace scenval
