#include <doctest.h>

#include "support/generators.hpp"
#include "tangles/tangle.hpp"

using namespace tangles;

namespace {
Permutation perm(const char* display) { return Permutation::parse_display(display); }
}

TEST_CASE("construction rejects broken layer sequences") {
    CHECK_THROWS_AS(Tangle({}), InvalidInputError);
    CHECK_THROWS_AS(Tangle({perm("1234"), perm("3214")}), InvalidInputError);
    CHECK_THROWS_AS(Tangle({perm("1234"), perm("213")}), InvalidInputError);
    CHECK(Tangle::single(perm("21")).height() == 1);
}

TEST_CASE("tangle_list counts the performed swaps") {
    CHECK(tangle_list(Tangle::single(perm("1234"))).length() == 0);
    const Tangle t({perm("1234"), perm("2134"), perm("2314")});
    const SwapList list = tangle_list(t);
    CHECK(list.get(1, 2) == 1);
    CHECK(list.get(1, 3) == 1);
    CHECK(list.length() == 2);
}

TEST_CASE("the final layer follows from the first layer and the swap multiset") {
    testsupport::Rng rng(7201);
    for (int round = 0; round < 300; ++round) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const Tangle t = testsupport::random_tangle(rng, n, static_cast<int>(rng() % 10));
        const auto fp = final_positions(t.first(), tangle_list(t));
        for (int wire = 1; wire <= n; ++wire) CHECK(fp[wire] == t.last().pos(wire));
    }
}

TEST_CASE("validation reports the first violated condition") {
    const Permutation id4 = Permutation::identity(4);
    SwapList one(4);
    one.set(1, 2, 1);

    CHECK(validate_tangle(Tangle({id4, perm("2134")}), one, id4).ok);

    SwapList other(4);
    other.set(1, 3, 1);
    const auto mismatch = validate_tangle(Tangle({id4, perm("2134")}), other, id4);
    CHECK_FALSE(mismatch.ok);
    CHECK(mismatch.reason == TangleValidation::Reason::list_mismatch);
    CHECK(to_string(mismatch.reason) == "list-mismatch");

    const auto wrong_start = validate_tangle(Tangle({perm("2134"), perm("1234")}), one, id4);
    CHECK(wrong_start.reason == TangleValidation::Reason::start_mismatch);

    const auto wrong_size = validate_tangle(Tangle::single(perm("123")), one, id4);
    CHECK(wrong_size.reason == TangleValidation::Reason::size_mismatch);
}

TEST_CASE("a four-layer tangle realizes the four-swap example list") {
    SwapList list(4);
    list.set(1, 2, 1);
    list.set(1, 3, 1);
    list.set(1, 4, 1);
    list.set(2, 3, 1);
    const Tangle t({perm("1234"), perm("2134"), perm("2314"), perm("3241")});
    CHECK(validate_tangle(t, list, Permutation::identity(4)).ok);
}

TEST_CASE("subtangle slices layers inclusively") {
    const Tangle t({perm("1234"), perm("2134"), perm("2314")});
    const Tangle middle = t.subtangle(2, 3);
    CHECK(middle.height() == 2);
    CHECK(middle.first() == perm("2134"));
    CHECK_THROWS_AS(t.subtangle(0, 2), InvalidInputError);
    CHECK_THROWS_AS(t.subtangle(3, 2), InvalidInputError);
}
