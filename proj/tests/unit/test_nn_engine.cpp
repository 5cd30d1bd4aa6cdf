#include <doctest.h>

#include <algorithm>
#include <random>

#include "scenval/nn_engine.hpp"
#include "support.hpp"

using namespace scenval;
using namespace scenval::testsupport;

namespace {

PointSet make(std::vector<std::vector<double>> rows, SourceLabel label) {
    return PointSet::from_rows(rows, label);
}

void check_against_reference(const PointSet& e, const PointSet& g, int k) {
    const NeighborTable table = knn_pooled(e, g, k);
    const RefTable ref = ref_knn_pooled(e, g, k);
    REQUIRE(table.query_count() == ref.neighbors.size());
    for (std::size_t q = 0; q < table.query_count(); ++q) {
        const auto got = table.neighbors(q);
        const auto& want = ref.neighbors[q];
        REQUIRE(got.size() == want.size());
        for (std::size_t r = 0; r < want.size(); ++r) {
            CHECK(got[r].index == want[r].index);
            CHECK(got[r].distance == want[r].distance);  // bitwise
            CHECK(got[r].label == want[r].label);
        }
        CHECK(table.ties_at_cutoff(q) == ref.ties_at_cutoff[q]);
    }
}

}  // namespace

TEST_SUITE("nn_engine") {

TEST_CASE("two separated clusters, k=1") {
    const auto e = make({{0.0}, {1.0}}, SourceLabel::Empirical);
    const auto g = make({{100.0}, {101.0}}, SourceLabel::Generated);
    const auto table = knn_pooled(e, g, 1);

    CHECK(table.neighbors(0)[0].index == 1);
    CHECK(table.neighbors(0)[0].label == SourceLabel::Empirical);
    CHECK(table.neighbors(1)[0].index == 0);
    CHECK(table.neighbors(2)[0].index == 3);
    CHECK(table.neighbors(2)[0].label == SourceLabel::Generated);
    CHECK(table.neighbors(3)[0].index == 2);
    CHECK(table.total_ties_at_cutoff() == 0);
}

TEST_CASE("interleaved points break ties toward the smaller index") {
    const auto e = make({{0.0}, {2.0}}, SourceLabel::Empirical);
    const auto g = make({{1.0}, {3.0}}, SourceLabel::Generated);
    const auto table = knn_pooled(e, g, 1);

    // query 1 (the point at 2) ties between pooled indices 2 and 3
    CHECK(table.neighbors(1)[0].index == 2);
    CHECK(table.neighbors(1)[0].label == SourceLabel::Generated);
    CHECK(table.ties_at_cutoff(1) == 1);
    // query 2 (the point at 1) ties between indices 0 and 1
    CHECK(table.neighbors(2)[0].index == 0);
    CHECK(table.neighbors(2)[0].label == SourceLabel::Empirical);
    CHECK(table.ties_at_cutoff(2) == 1);
    CHECK(table.total_ties_at_cutoff() == 2);
}

TEST_CASE("k = 2m-1 lists every other point") {
    const auto e = make({{0.0}, {1.0}}, SourceLabel::Empirical);
    const auto g = make({{10.0}, {11.0}}, SourceLabel::Generated);
    const auto table = knn_pooled(e, g, 3);
    for (std::size_t q = 0; q < 4; ++q) {
        std::vector<std::size_t> seen;
        for (const auto& nb : table.neighbors(q)) {
            seen.push_back(nb.index);
        }
        std::sort(seen.begin(), seen.end());
        std::vector<std::size_t> expected;
        for (std::size_t j = 0; j < 4; ++j) {
            if (j != q) {
                expected.push_back(j);
            }
        }
        CHECK(seen == expected);
    }
    CHECK_THROWS_AS(knn_pooled(e, g, 4), KTooLarge);
}

TEST_CASE("self is never its own neighbor and distances are sorted") {
    const auto e = random_points(11, 20, 3, SourceLabel::Empirical);
    const auto g = random_points(12, 20, 3, SourceLabel::Generated);
    const auto table = knn_pooled(e, g, 7);
    for (std::size_t q = 0; q < table.query_count(); ++q) {
        double prev = -1.0;
        for (const auto& nb : table.neighbors(q)) {
            CHECK(nb.index != q);
            CHECK(nb.distance >= prev);
            prev = nb.distance;
        }
    }
}

TEST_CASE("matches the all-pairs reference exactly") {
    // continuous coordinates: ties next to impossible
    check_against_reference(random_points(1, 50, 2, SourceLabel::Empirical),
                            random_points(2, 50, 2, SourceLabel::Generated), 5);
    check_against_reference(random_points(3, 37, 1, SourceLabel::Empirical),
                            random_points(4, 37, 1, SourceLabel::Generated), 3);
    check_against_reference(random_points(5, 24, 4, SourceLabel::Empirical),
                            random_points(6, 24, 4, SourceLabel::Generated), 11);
    // grid coordinates: duplicates and exact ties everywhere
    for (std::uint32_t seed = 10; seed < 18; ++seed) {
        check_against_reference(
            random_points(seed, 30, 2, SourceLabel::Empirical, 4),
            random_points(seed + 100, 30, 2, SourceLabel::Generated, 4), 4);
    }
    // k at the pool boundary
    check_against_reference(random_points(21, 8, 2, SourceLabel::Empirical, 3),
                            random_points(22, 8, 2, SourceLabel::Generated, 3), 15);
}

TEST_CASE("identical results for any thread count") {
    const auto e = random_points(31, 40, 2, SourceLabel::Empirical, 5);
    const auto g = random_points(32, 40, 2, SourceLabel::Generated, 5);
    const auto t1 = knn_pooled(e, g, 4, 1);
    const auto t4 = knn_pooled(e, g, 4, 4);
    for (std::size_t q = 0; q < t1.query_count(); ++q) {
        CHECK(t1.ties_at_cutoff(q) == t4.ties_at_cutoff(q));
        for (std::size_t r = 0; r < 4; ++r) {
            CHECK(t1.neighbors(q)[r].index == t4.neighbors(q)[r].index);
            CHECK(t1.neighbors(q)[r].distance == t4.neighbors(q)[r].distance);
        }
    }
    CHECK(within_set_nn_distance(e, 1) == within_set_nn_distance(e, 3));
    CHECK(min_cross_distance(e, g, 1) == min_cross_distance(e, g, 3));
}

TEST_CASE("within-set distances: hand examples") {
    const auto two = within_set_nn_distance(make({{0.0}, {10.0}}, SourceLabel::Empirical));
    CHECK(two == std::vector<double>{10.0, 10.0});

    const auto dup =
        within_set_nn_distance(make({{0.0}, {0.0}, {5.0}}, SourceLabel::Empirical));
    CHECK(dup == std::vector<double>{0.0, 0.0, 5.0});

    const auto triangles = within_set_nn_distance(
        make({{0.0, 0.0}, {3.0, 4.0}, {6.0, 8.0}}, SourceLabel::Empirical));
    REQUIRE(triangles.size() == 3);
    for (double d : triangles) {
        CHECK(d == doctest::Approx(5.0).epsilon(1e-12));
    }
}

TEST_CASE("cross distances: hand examples") {
    const auto a = min_cross_distance(make({{0.0}, {10.0}}, SourceLabel::Empirical),
                                      make({{0.4}, {100.0}}, SourceLabel::Generated));
    REQUIRE(a.size() == 2);
    CHECK(a[0] == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(a[1] == doctest::Approx(9.6).epsilon(1e-12));

    const auto same = make({{1.0, 2.0}, {3.0, 4.0}}, SourceLabel::Empirical);
    const auto zeros = min_cross_distance(same, same.relabeled(SourceLabel::Generated));
    CHECK(zeros == std::vector<double>{0.0, 0.0});

    const auto triangle =
        min_cross_distance(make({{0.0, 0.0}, {9.0, 9.0}}, SourceLabel::Empirical),
                           make({{3.0, 4.0}, {30.0, 40.0}}, SourceLabel::Generated));
    CHECK(triangle[0] == 5.0);
}

TEST_CASE("within-set and cross distances match the reference") {
    for (std::uint32_t seed = 41; seed < 45; ++seed) {
        const auto e = random_points(seed, 33, 2, SourceLabel::Empirical, 6);
        const auto g = random_points(seed + 50, 29, 2, SourceLabel::Generated, 6);
        CHECK(within_set_nn_distance(e) == ref_within_set(e));
        CHECK(min_cross_distance(e, g) == ref_min_cross(e, g));
    }
}

TEST_CASE("distance is symmetric") {
    const auto e = random_points(51, 12, 3, SourceLabel::Empirical);
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = 0; j < e.size(); ++j) {
            CHECK(euclidean_distance(e.point(i), e.point(j)) ==
                  euclidean_distance(e.point(j), e.point(i)));
        }
    }
}

TEST_CASE("permutation invariance of the distance multisets") {
    const auto e = random_points(61, 25, 2, SourceLabel::Empirical);
    auto rows = rows_of(e);
    std::mt19937 rng(7);
    std::shuffle(rows.begin(), rows.end(), rng);
    const auto shuffled = PointSet::from_rows(rows, SourceLabel::Empirical);

    auto a = within_set_nn_distance(e);
    auto b = within_set_nn_distance(shuffled);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
}

TEST_CASE("permutation invariance of per-query label counts") {
    const auto e = random_points(63, 20, 2, SourceLabel::Empirical);
    const auto g = random_points(64, 20, 2, SourceLabel::Generated);
    auto grows = rows_of(g);
    std::mt19937 rng(8);
    std::shuffle(grows.begin(), grows.end(), rng);
    const auto pg = PointSet::from_rows(grows, SourceLabel::Generated);

    // the empirical queries see the same candidate set either way, so
    // their own-label counts are identical query by query
    const auto base = knn_pooled(e, g, 4);
    const auto perm = knn_pooled(e, pg, 4);
    auto own_count = [](const NeighborTable& t, std::size_t q) {
        std::size_t own = 0;
        for (const auto& nb : t.neighbors(q)) {
            own += nb.label == t.query_label(q) ? 1 : 0;
        }
        return own;
    };
    for (std::size_t q = 0; q < e.size(); ++q) {
        CHECK(own_count(base, q) == own_count(perm, q));
    }
    // the generated queries keep the same multiset of own-label counts
    std::vector<std::size_t> base_counts, perm_counts;
    for (std::size_t q = e.size(); q < base.query_count(); ++q) {
        base_counts.push_back(own_count(base, q));
        perm_counts.push_back(own_count(perm, q));
    }
    std::sort(base_counts.begin(), base_counts.end());
    std::sort(perm_counts.begin(), perm_counts.end());
    CHECK(base_counts == perm_counts);
}

TEST_CASE("translation invariance within 1e-12 relative") {
    const auto e = random_points(71, 30, 2, SourceLabel::Empirical);
    const auto g = random_points(72, 30, 2, SourceLabel::Generated);
    const double shift[2] = {1234.5, -987.25};

    auto translate = [&](const PointSet& s) {
        auto rows = rows_of(s);
        for (auto& row : rows) {
            row[0] += shift[0];
            row[1] += shift[1];
        }
        return PointSet::from_rows(rows, s.label());
    };
    const auto te = translate(e);
    const auto tg = translate(g);

    const auto table = knn_pooled(e, g, 3);
    const auto ttable = knn_pooled(te, tg, 3);
    for (std::size_t q = 0; q < table.query_count(); ++q) {
        for (std::size_t r = 0; r < 3; ++r) {
            CHECK(ttable.neighbors(q)[r].index == table.neighbors(q)[r].index);
            CHECK(ttable.neighbors(q)[r].distance ==
                  doctest::Approx(table.neighbors(q)[r].distance).epsilon(1e-12));
        }
    }
}

TEST_CASE("dimension mismatch is rejected") {
    const auto e = make({{0.0, 1.0}, {2.0, 3.0}}, SourceLabel::Empirical);
    const auto g = make({{0.0}, {1.0}}, SourceLabel::Generated);
    CHECK_THROWS_AS(knn_pooled(e, g, 1), DimensionMismatch);
    CHECK_THROWS_AS(min_cross_distance(e, g), DimensionMismatch);
}

}  // TEST_SUITE
