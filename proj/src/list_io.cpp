#include "tangles/list_io.hpp"

#include <istream>
#include <sstream>

#include "tangles/errors.hpp"

namespace tangles {

namespace {

// Significant lines of the stream with their 1-based numbers.
struct LineReader {
    std::istream& in;
    int line_no = 0;

    bool next(std::string& out) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            const std::size_t first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            out = line;
            return true;
        }
        return false;
    }
};

void expect_no_trailing(std::istringstream& fields, int line_no) {
    std::string extra;
    if (fields >> extra) throw ParseError("unexpected trailing '" + extra + "'", line_no);
}

int parse_wire_count(LineReader& reader) {
    std::string line;
    if (!reader.next(line)) throw ParseError("missing 'n <wires>' line", reader.line_no);
    std::istringstream fields(line);
    std::string tag;
    int n = 0;
    if (!(fields >> tag >> n) || tag != "n" || n < 1)
        throw ParseError("expected 'n <wires>'", reader.line_no);
    expect_no_trailing(fields, reader.line_no);
    return n;
}

std::vector<int> parse_layer_line(const std::string& line, int n, int line_no) {
    std::istringstream fields(line);
    std::vector<int> wires;
    int w = 0;
    while (fields >> w) wires.push_back(w);
    if (!fields.eof()) throw ParseError("expected wire numbers", line_no);
    if (static_cast<int>(wires.size()) != n)
        throw ParseError("expected " + std::to_string(n) + " wires, got " +
                         std::to_string(wires.size()), line_no);
    return wires;
}

} // namespace

SwapList parse_list(std::istream& in) {
    LineReader reader{in};
    std::string line;
    if (!reader.next(line)) throw ParseError("empty list file");
    {
        std::istringstream fields(line);
        std::string tag;
        int version = 0;
        if (!(fields >> tag >> version) || tag != "tanglelist" || version != 1)
            throw ParseError("expected header 'tanglelist 1'", reader.line_no);
        expect_no_trailing(fields, reader.line_no);
    }
    SwapList list(parse_wire_count(reader));

    while (reader.next(line)) {
        std::istringstream fields(line);
        int i = 0, j = 0;
        long long mult = 0;
        if (!(fields >> i >> j >> mult)) throw ParseError("expected '<i> <j> <mult>'", reader.line_no);
        expect_no_trailing(fields, reader.line_no);
        if (i < 1 || j > list.order() || i >= j)
            throw ParseError("need 1 <= i < j <= n, got i=" + std::to_string(i) +
                             " j=" + std::to_string(j), reader.line_no);
        if (mult < 1) throw ParseError("multiplicity must be at least 1", reader.line_no);
        if (mult > UINT32_MAX) throw ParseError("multiplicity too large", reader.line_no);
        if (list.get(i, j) != 0)
            throw ParseError("duplicate pair (" + std::to_string(i) + "," + std::to_string(j) + ")",
                             reader.line_no);
        list.set(i, j, static_cast<std::uint32_t>(mult));
    }
    return list;
}

std::string write_list(const SwapList& list) {
    std::string out = "tanglelist 1\nn " + std::to_string(list.order()) + "\n";
    for (const WirePair& pair : list.support())
        out += std::to_string(pair.first) + " " + std::to_string(pair.second) + " " +
               std::to_string(list.get(pair.first, pair.second)) + "\n";
    return out;
}

Tangle parse_tangle(std::istream& in) {
    LineReader reader{in};
    std::string line;
    if (!reader.next(line)) throw ParseError("empty tangle file");
    {
        std::istringstream fields(line);
        std::string tag;
        int version = 0;
        if (!(fields >> tag >> version) || tag != "tangle" || version != 1)
            throw ParseError("expected header 'tangle 1'", reader.line_no);
        expect_no_trailing(fields, reader.line_no);
    }
    const int n = parse_wire_count(reader);

    Permutation start = Permutation::identity(n);
    std::vector<Permutation> layers;
    bool first_line = true;
    while (reader.next(line)) {
        if (first_line) {
            std::istringstream fields(line);
            std::string tag;
            fields >> tag;
            if (tag == "start") {
                std::vector<int> wires;
                int w = 0;
                while (fields >> w) wires.push_back(w);
                if (static_cast<int>(wires.size()) != n)
                    throw ParseError("start line needs " + std::to_string(n) + " wires",
                                     reader.line_no);
                try {
                    start = Permutation::from_display(wires);
                } catch (const InvalidInputError& error) {
                    throw ParseError(error.what(), reader.line_no);
                }
                first_line = false;
                continue;
            }
        }
        try {
            layers.push_back(Permutation::from_display(parse_layer_line(line, n, reader.line_no)));
        } catch (const InvalidInputError& error) {
            throw ParseError(error.what(), reader.line_no);
        }
        if (layers.size() >= 2 && !are_adjacent(layers[layers.size() - 2], layers.back()))
            throw ParseError("layer is not adjacent to the previous one", reader.line_no);
        first_line = false;
    }
    if (layers.empty()) throw ParseError("tangle file has no layers", reader.line_no);
    if (!(layers.front() == start))
        throw ParseError(std::string("first layer must be the ") +
                         (start == Permutation::identity(n) ? "identity" : "declared start"));
    return Tangle(std::move(layers));
}

std::string write_tangle(const Tangle& t) {
    std::string out = "tangle 1\nn " + std::to_string(t.wires()) + "\n";
    if (!(t.first() == Permutation::identity(t.wires())))
        out += "start " + t.first().display_string() + "\n";
    for (int i = 1; i <= t.height(); ++i) out += t.layer(i).display_string() + "\n";
    return out;
}

} // namespace tangles
