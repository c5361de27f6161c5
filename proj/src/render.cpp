#include "tangles/render.hpp"

namespace tangles {

std::string render_ascii(const Tangle& t) {
    const int n = t.wires();
    int cell = 1;
    for (int v = n; v >= 10; v /= 10) ++cell;

    const auto layer_row = [&](const Permutation& layer) {
        std::string row;
        for (int p = 1; p <= n; ++p) {
            if (p > 1) row += ' ';
            std::string label = std::to_string(layer.wire_at(p));
            row += std::string(static_cast<std::size_t>(cell) - label.size(), ' ') + label;
        }
        return row;
    };

    std::string out = layer_row(t.layer(1)) + "\n";
    for (int step = 1; step < t.height(); ++step) {
        std::string marks(static_cast<std::size_t>(n * cell + n - 1), ' ');
        for (const WirePair& swap : swap_diff(t.layer(step), t.layer(step + 1))) {
            const int p = std::min(t.layer(step).pos(swap.first), t.layer(step).pos(swap.second));
            marks[static_cast<std::size_t>(p * (cell + 1) - 1)] = 'X';
        }
        out += marks + "\n" + layer_row(t.layer(step + 1)) + "\n";
    }
    return out;
}

std::string render_svg(const Tangle& t) {
    const int n = t.wires();
    const int h = t.height();
    const int margin = 30;
    const int col = 40;
    const int row = 40;
    const int width = 2 * margin + (n - 1) * col;
    const int height = 2 * margin + (h - 1) * row;

    const auto x_of = [&](int position) { return margin + (position - 1) * col; };
    const auto y_of = [&](int layer) { return margin + (layer - 1) * row; };

    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                    "#17becf", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22"};
    constexpr int palette_size = 10;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
           std::to_string(width) + " " + std::to_string(height) + "\">\n";

    // Layer guide bars behind the wires.
    for (int layer = 1; layer <= h; ++layer) {
        out += "  <line x1=\"" + std::to_string(margin - 12) + "\" y1=\"" +
               std::to_string(y_of(layer)) + "\" x2=\"" + std::to_string(width - margin + 12) +
               "\" y2=\"" + std::to_string(y_of(layer)) +
               "\" stroke=\"#d0d0d0\" stroke-width=\"7\" stroke-linecap=\"round\"/>\n";
    }

    for (int wire = 1; wire <= n; ++wire) {
        out += "  <polyline fill=\"none\" stroke=\"";
        out += palette[(wire - 1) % palette_size];
        out += "\" stroke-width=\"2\" points=\"";
        for (int layer = 1; layer <= h; ++layer) {
            if (layer > 1) out += ' ';
            out += std::to_string(x_of(t.layer(layer).pos(wire))) + "," +
                   std::to_string(y_of(layer));
        }
        out += "\"/>\n";
    }

    // Wire numbers above the first and below the last layer.
    for (int wire = 1; wire <= n; ++wire) {
        out += "  <text x=\"" + std::to_string(x_of(t.first().pos(wire))) + "\" y=\"" +
               std::to_string(margin - 16) +
               "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" +
               std::to_string(wire) + "</text>\n";
        out += "  <text x=\"" + std::to_string(x_of(t.last().pos(wire))) + "\" y=\"" +
               std::to_string(height - margin + 24) +
               "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" +
               std::to_string(wire) + "</text>\n";
    }

    out += "</svg>\n";
    return out;
}

} // namespace tangles
