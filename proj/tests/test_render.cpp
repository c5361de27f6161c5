#include <doctest.h>

#include <algorithm>

#include "tangles/heightmin.hpp"
#include "tangles/render.hpp"

using namespace tangles;

namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t at = text.find(needle); at != std::string::npos;
         at = text.find(needle, at + needle.size()))
        ++count;
    return count;
}

SwapList fig1_list() {
    SwapList list(4);
    list.set(1, 2, 1);
    list.set(1, 3, 1);
    list.set(1, 4, 1);
    list.set(2, 3, 1);
    return list;
}

} // namespace

TEST_CASE("single layer renders as straight wires") {
    const Tangle flat = Tangle::single(Permutation::identity(3));
    CHECK(render_ascii(flat) == "1 2 3\n");
    const std::string svg = render_svg(flat);
    CHECK(count_of(svg, "<polyline") == 3);
    CHECK(svg.find("<svg") != std::string::npos);
}

TEST_CASE("crossing marks count the swaps") {
    const MinHeightResult result = min_height_dp(fig1_list());
    REQUIRE(result.feasible());
    const std::string art = render_ascii(*result.witness);
    CHECK(count_of(art, "X") == 4);
    // 4 layer rows plus 3 marker rows.
    CHECK(count_of(art, "\n") == 7);
}

TEST_CASE("golden two-layer picture") {
    const Tangle swap12({Permutation::parse_display("12"), Permutation::parse_display("21")});
    CHECK(render_ascii(swap12) == "1 2\n X \n2 1\n");
}

TEST_CASE("wide wire counts use padded columns") {
    std::vector<int> wires(12);
    for (int i = 0; i < 12; ++i) wires[static_cast<std::size_t>(i)] = i + 1;
    const Tangle flat = Tangle::single(Permutation::from_display(wires));
    const std::string art = render_ascii(flat);
    CHECK(art.find("11 12") != std::string::npos);
    CHECK(art.find(" 1  2") == 0);
}

TEST_CASE("rendering is deterministic across solver reruns") {
    const MinHeightResult first = min_height_dp(fig1_list());
    const MinHeightResult second = min_height_dp(fig1_list());
    CHECK(render_svg(*first.witness) == render_svg(*second.witness));
    CHECK(render_ascii(*first.witness) == render_ascii(*second.witness));
    const std::string svg = render_svg(*first.witness);
    CHECK(count_of(svg, "<polyline") == 4);
    CHECK(count_of(svg, "timestamp") == 0);
}
