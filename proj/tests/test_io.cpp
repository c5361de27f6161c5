#include <doctest.h>

#include <sstream>

#include "support/generators.hpp"
#include "tangles/list_io.hpp"

using namespace tangles;

namespace {

SwapList parse(const std::string& text) {
    std::istringstream in(text);
    return parse_list(in);
}

Tangle parse_t(const std::string& text) {
    std::istringstream in(text);
    return parse_tangle(in);
}

} // namespace

TEST_CASE("list files parse with comments and sparse pairs") {
    const SwapList list = parse("tanglelist 1\n"
                                "n 4\n"
                                "# the four-swap example\n"
                                "1 2 1\n1 3 1\n1 4 1\n2 3 1\n");
    CHECK(list.order() == 4);
    CHECK(list.get(1, 4) == 1);
    CHECK(list.get(2, 4) == 0);
    CHECK(list.length() == 4);

    CHECK(parse("tanglelist 1\nn 3\n").length() == 0);
}

TEST_CASE("list parse errors carry line numbers") {
    const auto error_line = [](const std::string& text) {
        try {
            parse(text);
        } catch (const ParseError& error) {
            return error.line();
        }
        return -1;
    };
    CHECK(error_line("tanglelist 2\nn 3\n") == 1);
    CHECK(error_line("tanglelist 1\nn 0\n") == 2);
    CHECK(error_line("tanglelist 1\nn 3\n2 2 1\n") == 3);      // diagonal
    CHECK(error_line("tanglelist 1\nn 3\n2 1 1\n") == 3);      // i >= j
    CHECK(error_line("tanglelist 1\nn 3\n1 2 0\n") == 3);      // zero multiplicity
    CHECK(error_line("tanglelist 1\nn 3\n1 2 1\n1 2 2\n") == 4); // duplicate
    CHECK(error_line("tanglelist 1\nn 3\n1 4 1\n") == 3);      // out of range
    CHECK(error_line("tanglelist 1\nn 3\n1 2 1 9\n") == 3);    // trailing junk
}

TEST_CASE("list files round-trip through their canonical form") {
    testsupport::Rng rng(7701);
    for (int round = 0; round < 100; ++round) {
        const SwapList list = testsupport::random_list(rng, 1 + static_cast<int>(rng() % 8), 5);
        const std::string text = write_list(list);
        CHECK(parse(text) == list);
        CHECK(write_list(parse(text)) == text);
    }
}

TEST_CASE("tangle files parse and enforce adjacency") {
    const Tangle t = parse_t("tangle 1\nn 4\n1 2 3 4\n2 1 3 4\n2 3 1 4\n");
    CHECK(t.height() == 3);
    CHECK(t.last().display_string() == "2 3 1 4");

    CHECK_THROWS_AS(parse_t("tangle 1\nn 4\n1 2 3 4\n3 2 1 4\n"), ParseError);
    CHECK_THROWS_AS(parse_t("tangle 1\nn 4\n2 1 3 4\n"), ParseError); // must start at identity
    CHECK_THROWS_AS(parse_t("tangle 1\nn 4\n"), ParseError);          // no layers
    CHECK_THROWS_AS(parse_t("tangle 1\nn 4\n1 2 3\n"), ParseError);   // short layer
}

TEST_CASE("a start line overrides the identity start") {
    const Tangle t = parse_t("tangle 1\nn 3\nstart 2 1 3\n2 1 3\n2 3 1\n");
    CHECK(t.first().display_string() == "2 1 3");
    CHECK_THROWS_AS(parse_t("tangle 1\nn 3\nstart 2 1 3\n1 2 3\n"), ParseError);
}

TEST_CASE("tangle files round-trip including non-identity starts") {
    testsupport::Rng rng(7702);
    for (int round = 0; round < 60; ++round) {
        const int n = 2 + static_cast<int>(rng() % 5);
        Tangle t = testsupport::random_tangle(rng, n, static_cast<int>(rng() % 8));
        const std::string text = write_tangle(t);
        const Tangle back = parse_t(text);
        CHECK(back.layers() == t.layers());
        CHECK(write_tangle(back) == text);
    }
    // Shifted start: rebuild a tangle so it begins off the identity.
    const Tangle shifted = parse_t("tangle 1\nn 3\nstart 3 1 2\n3 1 2\n1 3 2\n");
    CHECK(parse_t(write_tangle(shifted)).layers() == shifted.layers());
}
