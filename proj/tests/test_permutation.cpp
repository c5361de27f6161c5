#include <doctest.h>

#include "support/generators.hpp"
#include "tangles/permutation.hpp"

using namespace tangles;

namespace {
Permutation perm(const char* display) { return Permutation::parse_display(display); }
}

TEST_CASE("display convention writes wires by position") {
    // pos(1)=3, pos(2)=4, pos(3)=2, pos(4)=1 reads as 4312.
    const Permutation p = Permutation::from_positions({3, 4, 2, 1});
    CHECK(p.display_string() == "4 3 1 2");
    CHECK(perm("4312").pos(1) == 3);
    CHECK(perm("4312").pos(4) == 1);
}

TEST_CASE("adjacency checks positions shift by at most one") {
    CHECK(are_adjacent(perm("1234"), perm("2134")));
    CHECK(are_adjacent(perm("1234"), perm("1234")));
    CHECK_FALSE(are_adjacent(perm("1234"), perm("3214")));
    CHECK_THROWS_AS(are_adjacent(perm("123"), perm("1234")), InvalidInputError);
}

TEST_CASE("swap_diff lists the exchanged pairs") {
    CHECK(swap_diff(perm("1234"), perm("2143")) == SwapSet{{1, 2}, {3, 4}});
    CHECK(swap_diff(perm("1234"), perm("1234")).empty());
    CHECK(swap_diff(perm("2134"), perm("2314")) == SwapSet{{1, 3}});
    CHECK_THROWS_AS(swap_diff(perm("1234"), perm("3214")), InvalidInputError);
}

TEST_CASE("swap_diff is symmetric with disjoint pairs") {
    testsupport::Rng rng(7001);
    for (int round = 0; round < 200; ++round) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Permutation p = testsupport::random_permutation(rng, n);
        const Permutation q = p.with_mask(disjoint_swap_masks(n)[rng() % (disjoint_swap_masks(n).size())]);
        const SwapSet forward = swap_diff(p, q);
        CHECK(forward == swap_diff(q, p));
        std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
        for (const WirePair& pair : forward) {
            CHECK_FALSE(used[static_cast<std::size_t>(pair.first)]);
            CHECK_FALSE(used[static_cast<std::size_t>(pair.second)]);
            used[static_cast<std::size_t>(pair.first)] = 1;
            used[static_cast<std::size_t>(pair.second)] = 1;
        }
    }
}

TEST_CASE("neighbors enumerates by ascending swap mask") {
    CHECK(neighbors(Permutation::identity(1)).empty());
    const auto around_id4 = neighbors(perm("1234"));
    REQUIRE(around_id4.size() == 4);
    CHECK(around_id4[0] == perm("2134"));
    CHECK(around_id4[1] == perm("1324"));
    CHECK(around_id4[2] == perm("1243"));
    CHECK(around_id4[3] == perm("2143"));
    CHECK(neighbors(Permutation::identity(10)).size() == 88);
}

TEST_CASE("neighbor count is Fibonacci-like for any base permutation") {
    const std::size_t expected[] = {0, 1, 2, 4, 7, 12, 20, 33, 54, 88, 143, 232};
    testsupport::Rng rng(7002);
    for (int n = 1; n <= 12; ++n) {
        const Permutation p = testsupport::random_permutation(rng, n);
        const auto list = neighbors(p);
        CHECK(list.size() == expected[n - 1]);
        for (const Permutation& q : list) {
            CHECK(are_adjacent(p, q));
            CHECK_FALSE(q == p);
        }
    }
}

TEST_CASE("pack round-trips through unpack") {
    testsupport::Rng rng(7003);
    for (int round = 0; round < 100; ++round) {
        const int n = 1 + static_cast<int>(rng() % 16);
        const Permutation p = testsupport::random_permutation(rng, n);
        CHECK(Permutation::unpack(p.pack(), n) == p);
    }
}

TEST_CASE("malformed display sequences are rejected") {
    CHECK_THROWS_AS(Permutation::from_display({1, 1, 3}), InvalidInputError);
    CHECK_THROWS_AS(Permutation::from_display({0, 1}), InvalidInputError);
    CHECK_THROWS_AS(Permutation::from_display({}), InvalidInputError);
}
