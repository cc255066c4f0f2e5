#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "moead/archive.hpp"
#include "moead/rng.hpp"

using namespace moead;

namespace {

Solution sol(ObjectiveVector f, std::uint64_t idx = 0) { return Solution{{}, std::move(f), idx}; }

// reference filter: nondominated, duplicates collapsed, first-seen order
std::vector<ObjectiveVector> brute_force_front(const std::vector<ObjectiveVector>& pts) {
    std::vector<ObjectiveVector> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool drop = false;
        for (std::size_t j = 0; j < pts.size() && !drop; ++j) {
            if (j != i && dominates(pts[j], pts[i])) drop = true;
            if (j < i && pts[j] == pts[i]) drop = true;
        }
        if (!drop) out.push_back(pts[i]);
    }
    return out;
}

std::multiset<ObjectiveVector> as_set(const std::vector<ObjectiveVector>& pts) {
    return {pts.begin(), pts.end()};
}

}  // namespace

TEST_CASE("dominance relation") {
    CHECK(dominates({1.0, 2.0}, {2.0, 2.0}));
    CHECK(dominates({1.0, 2.0}, {1.5, 2.5}));
    CHECK_FALSE(dominates({1.0, 2.0}, {1.0, 2.0}));  // equality is not dominance
    CHECK_FALSE(dominates({1.0, 3.0}, {2.0, 2.0}));  // incomparable
    CHECK_FALSE(dominates({2.0, 2.0}, {1.0, 2.0}));
    CHECK_THROWS_AS(dominates({1.0}, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("archive keeps exactly the nondominated, deduplicated set") {
    Archive a;
    CHECK(a.insert(sol({1.0, 2.0})));
    CHECK(a.insert(sol({2.0, 1.0})));
    CHECK(a.insert(sol({1.5, 1.5})));
    CHECK(a.size() == 3);
    CHECK_FALSE(a.insert(sol({1.0, 2.0})));  // duplicate objectives
    CHECK_FALSE(a.insert(sol({3.0, 3.0})));  // dominated
    CHECK(a.size() == 3);
    CHECK(a.insert(sol({0.5, 0.5})));  // wipes out everything else
    CHECK(a.size() == 1);
    CHECK(a.objectives() == std::vector<ObjectiveVector>{{0.5, 0.5}});
}

TEST_CASE("archive matches a brute-force filter on random streams") {
    Rng rng(123);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<ObjectiveVector> pts;
        for (int i = 0; i < 300; ++i) {
            ObjectiveVector f(3);
            // coarse grid so duplicates and dominance both occur
            for (auto& v : f) v = std::floor(rng.uniform(0.0, 6.0)) / 5.0;
            pts.push_back(f);
        }
        Archive a;
        for (std::size_t i = 0; i < pts.size(); ++i) a.insert(sol(pts[i], i + 1));
        CHECK(as_set(a.objectives()) == as_set(brute_force_front(pts)));
    }
}

TEST_CASE("archive contents do not depend on insertion order") {
    Rng rng(7);
    std::vector<ObjectiveVector> pts;
    for (int i = 0; i < 250; ++i) {
        ObjectiveVector f(3);
        for (auto& v : f) v = std::floor(rng.uniform(0.0, 8.0));
        pts.push_back(f);
    }
    Archive fwd, rev;
    for (const auto& p : pts) fwd.insert(sol(p));
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) rev.insert(sol(*it));
    CHECK(as_set(fwd.objectives()) == as_set(rev.objectives()));
}

TEST_CASE("survivors iterate in insertion order") {
    Archive a;
    a.insert(sol({5.0, 0.0}, 1));
    a.insert(sol({0.0, 5.0}, 2));
    a.insert(sol({3.0, 3.0}, 3));
    a.insert(sol({2.0, 2.0}, 4));  // kills (3,3)
    const auto members = a.members();
    REQUIRE(members.size() == 3);
    CHECK(members[0].eval_index == 1);
    CHECK(members[1].eval_index == 2);
    CHECK(members[2].eval_index == 4);
}

TEST_CASE("archive stays consistent through heavy tombstoning") {
    // descending staircase: every insert kills the previous point
    Archive a;
    for (int i = 0; i < 3000; ++i) {
        const double v = 3000.0 - i;
        CHECK(a.insert(sol({v, v})));
        CHECK(a.size() == 1);
    }
    CHECK(a.objectives() == std::vector<ObjectiveVector>{{1.0, 1.0}});
}

TEST_CASE("mismatched objective dimensions are rejected") {
    Archive a;
    a.insert(sol({1.0, 2.0}));
    CHECK_THROWS_AS(a.insert(sol({1.0, 2.0, 3.0})), std::invalid_argument);
    CHECK_THROWS_AS(a.insert(sol({})), std::invalid_argument);
}

TEST_CASE("nondominated_indices keeps first duplicates") {
    const std::vector<ObjectiveVector> pts{{1.0, 1.0}, {0.5, 2.0}, {1.0, 1.0}, {2.0, 0.1}};
    CHECK(nondominated_indices(pts) == std::vector<std::size_t>{0, 1, 3});
}

TEST_CASE("default reduction sizes") {
    CHECK(default_reduction_size(2) == 200);
    CHECK(default_reduction_size(3) == 210);
    CHECK(default_reduction_size(4) == 220);
    CHECK(default_reduction_size(5) == 210);
    CHECK_THROWS_AS(default_reduction_size(6), std::invalid_argument);
}

TEST_CASE("reduction") {
    const ObjectiveVector ideal{0.0, 0.0}, nadir{1.0, 1.0};

    SUBCASE("small archives are returned whole") {
        Archive a;
        a.insert(sol({0.2, 0.8}));
        a.insert(sol({0.8, 0.2}));
        const auto r = reduce(a, ReductionConfig{5}, ideal, nadir);
        CHECK(r.size() == 2);
    }
    SUBCASE("extremes survive, then the farthest point fills in") {
        Archive a;
        a.insert(sol({0.0, 1.0}, 1));
        a.insert(sol({1.0, 0.0}, 2));
        a.insert(sol({0.5, 0.5}, 3));
        a.insert(sol({0.4, 0.6}, 4));
        a.insert(sol({0.6, 0.4}, 5));
        const auto r = reduce(a, ReductionConfig{3}, ideal, nadir);
        REQUIRE(r.size() == 3);
        std::multiset<ObjectiveVector> got;
        for (const auto& s : r) got.insert(s.f);
        CHECK(got == std::multiset<ObjectiveVector>{{0.0, 1.0}, {0.5, 0.5}, {1.0, 0.0}});
    }
    SUBCASE("exactly b points come back") {
        Rng rng(99);
        Archive a;
        std::uint64_t idx = 0;
        while (a.size() < 400) {
            const double x = rng.uniform();
            a.insert(sol({x, 1.0 - x}, ++idx));
        }
        const auto r = reduce(a, ReductionConfig{37}, ideal, nadir);
        CHECK(r.size() == 37);
        // selection is deterministic
        const auto r2 = reduce(a, ReductionConfig{37}, ideal, nadir);
        REQUIRE(r2.size() == r.size());
        for (std::size_t i = 0; i < r.size(); ++i) CHECK(r[i].f == r2[i].f);
    }
    SUBCASE("empty archive is rejected") {
        Archive a;
        CHECK_THROWS_AS(reduce(a, ReductionConfig{10}, ideal, nadir), std::invalid_argument);
    }
}
