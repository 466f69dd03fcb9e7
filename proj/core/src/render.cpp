#include "orbitatlas/render.hpp"

#include <algorithm>
#include <sstream>

namespace orbitatlas {

namespace {

struct Layout {
    std::vector<std::pair<int, int>> arcs; // tallest first
    std::vector<int> heights;              // aligned with arcs
    std::vector<int> halflines;
    int max_height = 0;
};

Layout plan(const Involution& w, const std::optional<Coloring>& coloring) {
    if (coloring && coloring->size() != w.size()) {
        throw InputError("coloring size does not match involution size");
    }
    if (coloring && !is_consistent(w, *coloring)) {
        throw InputError("involution " + w.cycles() +
                         " is not consistent with coloring " + coloring->to_string());
    }
    Layout layout;
    std::vector<std::pair<int, int>> arcs = w.arcs();
    std::sort(arcs.begin(), arcs.end(), [](const auto& a, const auto& b) {
        const int la = a.second - a.first;
        const int lb = b.second - b.first;
        return la != lb ? la < lb : a < b;
    });
    std::vector<int> heights(arcs.size(), 1);
    for (size_t a = 0; a < arcs.size(); ++a) {
        for (size_t b = 0; b < a; ++b) {
            const bool overlap =
                arcs[b].first < arcs[a].second && arcs[a].first < arcs[b].second;
            if (overlap) {
                heights[a] = std::max(heights[a], heights[b] + 1);
            }
        }
        layout.max_height = std::max(layout.max_height, heights[a]);
    }
    for (int i : w.fixed_points()) {
        if (!coloring || coloring->color(i) != Color::Grey) {
            layout.halflines.push_back(i);
        }
    }
    // Tallest first so arc bodies never overwrite the verticals they cross.
    std::vector<size_t> order(arcs.size());
    for (size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&heights, &arcs](size_t a, size_t b) {
        return heights[a] != heights[b] ? heights[a] > heights[b] : arcs[a] < arcs[b];
    });
    for (size_t i : order) {
        layout.arcs.push_back(arcs[i]);
        layout.heights.push_back(heights[i]);
    }
    return layout;
}

char node_glyph(int i, const std::optional<Coloring>& coloring) {
    if (!coloring) {
        return '*';
    }
    switch (coloring->color(i)) {
    case Color::Black:
        return '*';
    case Color::Grey:
        return '.';
    case Color::White:
        return 'o';
    }
    return '?';
}

} // namespace

std::string render_ascii(const Involution& w, const std::optional<Coloring>& coloring) {
    const Layout layout = plan(w, coloring);
    const int n = w.size();
    const auto col = [](int i) { return 3 * (i - 1); };
    const int width = col(n) + 1;
    const int rows_above =
        layout.halflines.empty() ? layout.max_height : layout.max_height + 1;

    std::vector<std::string> canvas(static_cast<size_t>(rows_above),
                                    std::string(static_cast<size_t>(width), ' '));
    auto put = [&canvas](int row, int c, char ch, bool only_blank) {
        char& cell = canvas[static_cast<size_t>(row)][static_cast<size_t>(c)];
        if (!only_blank || cell == ' ') {
            cell = ch;
        }
    };

    for (size_t a = 0; a < layout.arcs.size(); ++a) {
        const auto [i, j] = layout.arcs[a];
        const int top = rows_above - layout.heights[a];
        put(top, col(i), '/', false);
        put(top, col(j), '\\', false);
        for (int c = col(i) + 1; c < col(j); ++c) {
            put(top, c, '-', true);
        }
        for (int row = top + 1; row < rows_above; ++row) {
            put(row, col(i), '|', true);
            put(row, col(j), '|', true);
        }
    }
    for (int h : layout.halflines) {
        for (int row = 0; row < rows_above; ++row) {
            char& cell = canvas[static_cast<size_t>(row)][static_cast<size_t>(col(h))];
            if (cell == ' ') {
                cell = '|';
            } else if (cell == '-') {
                cell = '+';
            }
        }
    }

    std::string nodes(static_cast<size_t>(width), ' ');
    for (int i = 1; i <= n; ++i) {
        nodes[static_cast<size_t>(col(i))] = node_glyph(i, coloring);
    }
    std::string indices;
    for (int i = 1; i <= n; ++i) {
        const std::string text = std::to_string(i);
        while (static_cast<int>(indices.size()) < col(i)) {
            indices.push_back(' ');
        }
        indices += text;
    }

    std::ostringstream out;
    for (std::string& row : canvas) {
        while (!row.empty() && row.back() == ' ') {
            row.pop_back();
        }
        out << row << '\n';
    }
    while (!nodes.empty() && nodes.back() == ' ') {
        nodes.pop_back();
    }
    out << nodes << '\n' << indices << '\n';
    return out.str();
}

std::string render_svg(const Involution& w, const std::optional<Coloring>& coloring) {
    const Layout layout = plan(w, coloring);
    const int n = w.size();
    const auto x = [](int i) { return 30 + 40 * (i - 1); };
    const int baseline = 20 * (n - 1) + 30;
    const int width = 40 * (n - 1) + 60;
    const int height = baseline + 40;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
        << "\">\n";
    out << "  <line x1=\"" << x(1) - 20 << "\" y1=\"" << baseline << "\" x2=\""
        << x(n) + 20 << "\" y2=\"" << baseline << "\" stroke=\"black\"/>\n";
    for (size_t a = 0; a < layout.arcs.size(); ++a) {
        const auto [i, j] = layout.arcs[a];
        const int r = 20 * (j - i);
        out << "  <path d=\"M " << x(i) << " " << baseline << " A " << r << " " << r
            << " 0 0 1 " << x(j) << " " << baseline
            << "\" fill=\"none\" stroke=\"black\"/>\n";
    }
    for (int h : layout.halflines) {
        out << "  <line x1=\"" << x(h) << "\" y1=\"" << baseline << "\" x2=\"" << x(h)
            << "\" y2=\"" << baseline - 40 << "\" stroke=\"black\"/>\n";
    }
    for (int i = 1; i <= n; ++i) {
        const char* fill = "#000000";
        if (coloring) {
            switch (coloring->color(i)) {
            case Color::Black:
                fill = "#000000";
                break;
            case Color::Grey:
                fill = "#aaaaaa";
                break;
            case Color::White:
                fill = "#ffffff";
                break;
            }
        }
        out << "  <circle cx=\"" << x(i) << "\" cy=\"" << baseline
            << "\" r=\"4\" fill=\"" << fill << "\" stroke=\"black\"/>\n";
        out << "  <text x=\"" << x(i) << "\" y=\"" << baseline + 16
            << "\" text-anchor=\"middle\" font-size=\"10\">" << i << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace orbitatlas
