#include <doctest.h>

#include <cmath>
#include <limits>

#include "scenval/point_set.hpp"

using namespace scenval;

TEST_SUITE("point_set") {

TEST_CASE("minimal valid input round-trips losslessly") {
    const auto ps = PointSet::from_rows({{0.0}, {1.0}}, SourceLabel::Empirical);
    CHECK(ps.size() == 2);
    CHECK(ps.dim() == 1);
    CHECK(ps.label() == SourceLabel::Empirical);
    CHECK(ps.point(0)[0] == 0.0);
    CHECK(ps.point(1)[0] == 1.0);
}

TEST_CASE("coordinates survive construction bit for bit") {
    const std::vector<std::vector<double>> rows = {
        {0.1, -1.0 / 3.0, 1e-300},
        {2.5e17, std::nextafter(1.0, 2.0), -0.0},
    };
    const auto ps = PointSet::from_rows(rows, SourceLabel::Generated);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t c = 0; c < rows[i].size(); ++c) {
            CHECK(ps.point(i)[c] == rows[i][c]);
        }
    }
}

TEST_CASE("ragged rows are rejected") {
    CHECK_THROWS_AS(PointSet::from_rows({{0.0, 1.0}, {2.0}}, SourceLabel::Empirical),
                    DimensionMismatch);
    // regardless of which row is short
    CHECK_THROWS_AS(PointSet::from_rows({{2.0}, {0.0, 1.0}}, SourceLabel::Empirical),
                    DimensionMismatch);
}

TEST_CASE("non-finite coordinates are rejected") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(PointSet::from_rows({{0.0, nan}, {1.0, 2.0}}, SourceLabel::Empirical),
                    NonFinite);
    CHECK_THROWS_AS(PointSet::from_rows({{0.0, 1.0}, {inf, 2.0}}, SourceLabel::Empirical),
                    NonFinite);
    CHECK_THROWS_AS(PointSet::from_rows({{-inf}, {0.0}}, SourceLabel::Empirical),
                    NonFinite);
}

TEST_CASE("fewer than two points is rejected") {
    CHECK_THROWS_AS(PointSet::from_rows({}, SourceLabel::Empirical), TooSmall);
    CHECK_THROWS_AS(PointSet::from_rows({{0.0, 1.0}}, SourceLabel::Empirical), TooSmall);
}

TEST_CASE("zero-dimensional points are rejected") {
    CHECK_THROWS_AS(PointSet::from_rows({{}, {}}, SourceLabel::Empirical),
                    DimensionMismatch);
}

TEST_CASE("duplicate points are allowed at construction") {
    const auto ps = PointSet::from_rows({{1.0, 2.0}, {1.0, 2.0}}, SourceLabel::Generated);
    CHECK(ps.size() == 2);
}

TEST_CASE("flat constructor validates block shape") {
    CHECK_THROWS_AS(PointSet({1.0, 2.0, 3.0}, 2, SourceLabel::Empirical),
                    DimensionMismatch);
    CHECK_THROWS_AS(PointSet({1.0, 2.0, 3.0}, 0, SourceLabel::Empirical),
                    DimensionMismatch);
    CHECK_THROWS_AS(PointSet({1.0, 2.0}, 2, SourceLabel::Empirical), TooSmall);
}

TEST_CASE("measure params validate k and rho") {
    MeasureParams params;
    params.k = 3;
    params.rho = 0.5;
    CHECK_NOTHROW(params.validate_for(2));  // k = 3 == 2m-1
    params.k = 4;
    CHECK_THROWS_AS(params.validate_for(2), KTooLarge);
    params.k = 0;
    CHECK_THROWS_AS(params.validate_for(2), InvalidParameter);
    params.k = 1;
    params.rho = 0.0;
    CHECK_THROWS_AS(params.validate_for(2), InvalidRho);
    params.rho = 1.0000001;
    CHECK_THROWS_AS(params.validate_for(2), InvalidRho);
    params.rho = 1.0;
    CHECK_NOTHROW(params.validate_for(2));
}

}  // TEST_SUITE
