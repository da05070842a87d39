#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "slicekit/rng.hpp"

using namespace slicekit;

TEST_CASE("identical seeds give identical streams") {
    Rng a(42), b(42);
    for (int i = 0; i < 1000; ++i) CHECK(a.next() == b.next());
}

TEST_CASE("substreams differ by tag and key") {
    Rng a = Rng::substream(1, kNodeStream, 7);
    Rng b = Rng::substream(1, kNodeStream, 8);
    Rng c = Rng::substream(1, kEngineStream, 7);
    int equal_ab = 0, equal_ac = 0;
    for (int i = 0; i < 64; ++i) {
        const auto va = a.next();
        if (va == b.next()) ++equal_ab;
        if (va == c.next()) ++equal_ac;
    }
    CHECK(equal_ab == 0);
    CHECK(equal_ac == 0);
}

TEST_CASE("uniform01 stays in (0,1]") {
    Rng rng(7);
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.uniform01();
        REQUIRE(u > 0.0);
        REQUIRE(u <= 1.0);
    }
}

TEST_CASE("below respects the bound and covers it") {
    Rng rng(9);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 2000; ++i) {
        const auto v = rng.below(7);
        REQUIRE(v < 7);
        seen.insert(v);
    }
    CHECK(seen.size() == 7);
}

TEST_CASE("shuffle is a deterministic permutation") {
    std::vector<int> v1{1, 2, 3, 4, 5, 6, 7, 8};
    std::vector<int> v2 = v1;
    Rng a(5), b(5);
    a.shuffle(v1);
    b.shuffle(v2);
    CHECK(v1 == v2);
    std::sort(v1.begin(), v1.end());
    CHECK(v1 == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});
}
