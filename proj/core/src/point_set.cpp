#include "scenval/point_set.hpp"

#include <cmath>
#include <utility>

namespace scenval {

std::string to_string(SourceLabel label) {
    return label == SourceLabel::Empirical ? "empirical" : "generated";
}

namespace {

void check_coords(const std::vector<double>& coords) {
    for (double c : coords) {
        if (!std::isfinite(c)) {
            throw NonFinite("point set contains a NaN or infinite coordinate");
        }
    }
}

}  // namespace

PointSet::PointSet(std::vector<double> coords, std::size_t dim, SourceLabel label)
    : coords_(std::move(coords)), dim_(dim), label_(label) {
    if (dim_ < 1) {
        throw DimensionMismatch("point dimension must be at least 1");
    }
    if (coords_.size() % dim_ != 0) {
        throw DimensionMismatch("coordinate block is not a multiple of the dimension");
    }
    size_ = coords_.size() / dim_;
    if (size_ < 2) {
        throw TooSmall("a point set needs at least 2 points, got " +
                       std::to_string(size_));
    }
    check_coords(coords_);
}

PointSet PointSet::from_rows(const std::vector<std::vector<double>>& rows,
                             SourceLabel label) {
    if (rows.size() < 2) {
        throw TooSmall("a point set needs at least 2 points, got " +
                       std::to_string(rows.size()));
    }
    const std::size_t dim = rows.front().size();
    if (dim < 1) {
        throw DimensionMismatch("point dimension must be at least 1");
    }
    std::vector<double> coords;
    coords.reserve(rows.size() * dim);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != dim) {
            throw DimensionMismatch("row " + std::to_string(i) + " has dimension " +
                                    std::to_string(rows[i].size()) + ", expected " +
                                    std::to_string(dim));
        }
        coords.insert(coords.end(), rows[i].begin(), rows[i].end());
    }
    return PointSet(std::move(coords), dim, label);
}

PointSet PointSet::relabeled(SourceLabel label) const {
    PointSet copy = *this;
    copy.label_ = label;
    return copy;
}

namespace detail {

void check_rho(double rho) {
    if (!(rho > 0.0) || !(rho <= 1.0)) {
        throw InvalidRho("rho must lie in (0, 1], got " + std::to_string(rho));
    }
}

void check_k(int k, std::size_t candidate_count) {
    if (k < 1) {
        throw InvalidParameter("k must be positive, got " + std::to_string(k));
    }
    if (static_cast<std::size_t>(k) > candidate_count) {
        throw KTooLarge("k = " + std::to_string(k) + " exceeds the " +
                        std::to_string(candidate_count) + " available neighbors");
    }
}

}  // namespace detail

void MeasureParams::validate_for(std::size_t m) const {
    detail::check_k(k, 2 * m - 1);
    detail::check_rho(rho);
}

}  // namespace scenval
