#include "kdyck/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace kdyck {

std::string render_path_ascii(const StepSequence& steps) {
    require_valid(steps);
    const auto levels = ranks(steps);
    Rank height = 0;
    for (std::size_t i = 0; i < steps.size(); ++i)
        height = std::max(height, levels[i] + std::max<Rise>(steps[i], 0));

    std::vector<std::string> grid(static_cast<std::size_t>(height), std::string(steps.size(), ' '));
    auto put = [&](Rank row, std::size_t col, char ch) { grid[static_cast<std::size_t>(row)][col] = ch; };
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const Rank from = levels[i];
        if (steps[i] > 0) {
            const Rank top = from + steps[i] - 1;
            for (Rank row = from; row < top; ++row) put(row, i, '|');
            put(top, i, '/');
        } else {
            const Rank top = from - 1;
            for (Rank row = from + steps[i]; row < top; ++row) put(row, i, '|');
            put(top, i, '\\');
        }
    }
    std::string out;
    for (auto row = grid.rbegin(); row != grid.rend(); ++row) {
        auto line = *row;
        line.erase(line.find_last_not_of(' ') + 1);
        out += line;
        out += '\n';
    }
    return out;
}

std::string render_path_svg(const StepSequence& steps) {
    require_valid(steps);
    constexpr int unit = 20;
    constexpr int margin = 10;
    const auto levels = ranks(steps);
    Rank height = 0;
    for (Rank r : levels) height = std::max(height, r);
    for (std::size_t i = 0; i < steps.size(); ++i) height = std::max(height, levels[i] + steps[i]);

    const auto width = static_cast<long long>(steps.size()) * unit + 2 * margin;
    const auto total_height = static_cast<long long>(height) * unit + 2 * margin;
    auto y_of = [&](Rank level) { return margin + (height - level) * unit; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << total_height << "\" viewBox=\"0 0 " << width << ' ' << total_height << "\">\n";
    os << "  <line x1=\"" << margin << "\" y1=\"" << y_of(0) << "\" x2=\"" << width - margin
       << "\" y2=\"" << y_of(0) << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    os << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
    Rank level = 0;
    for (std::size_t i = 0; i <= steps.size(); ++i) {
        if (i) os << ' ';
        os << margin + static_cast<long long>(i) * unit << ',' << y_of(level);
        if (i < steps.size()) level += steps[i];
    }
    os << "\"/>\n</svg>\n";
    return os.str();
}

namespace {

std::string cell_label(const Tableau& t, const std::optional<RankTableau>& r, std::size_t c,
                       std::size_t row) {
    std::string s = std::to_string(t.column(c)[row]);
    if (r) s += ":" + std::to_string(r->columns.at(c).at(row));
    return s;
}

}  // namespace

std::string render_tableau_ascii(const Tableau& tableau, const std::optional<RankTableau>& ranks) {
    std::size_t rows = 0;
    std::size_t width = 1;
    for (std::size_t c = 0; c < tableau.column_count(); ++c) {
        rows = std::max(rows, tableau.column(c).size());
        for (std::size_t row = 0; row < tableau.column(c).size(); ++row)
            width = std::max(width, cell_label(tableau, ranks, c, row).size());
    }
    std::string out;
    for (std::size_t row = 0; row < rows; ++row) {
        std::string line;
        for (std::size_t c = 0; c < tableau.column_count(); ++c) {
            if (c) line += ' ';
            std::string label =
                row < tableau.column(c).size() ? cell_label(tableau, ranks, c, row) : std::string();
            line += std::string(width - label.size(), ' ') + label;
        }
        line.erase(line.find_last_not_of(' ') + 1);
        out += line + '\n';
    }
    return out;
}

std::string render_tableau_svg(const Tableau& tableau, const std::optional<RankTableau>& ranks) {
    constexpr int box = 40;
    constexpr int margin = 10;
    std::size_t rows = 0;
    for (const auto& col : tableau.columns()) rows = std::max(rows, col.size());
    const auto width = static_cast<long long>(tableau.column_count()) * box + 2 * margin;
    const auto height = static_cast<long long>(rows) * box + 2 * margin;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    for (std::size_t c = 0; c < tableau.column_count(); ++c) {
        for (std::size_t row = 0; row < tableau.column(c).size(); ++row) {
            const auto x = margin + static_cast<long long>(c) * box;
            const auto y = margin + static_cast<long long>(row) * box;
            os << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << box << "\" height=\""
               << box << "\" fill=\"none\" stroke=\"black\"/>\n";
            os << "  <text x=\"" << x + box / 2 << "\" y=\"" << y + box / 2 + 5
               << "\" text-anchor=\"middle\" font-size=\"12\">" << cell_label(tableau, ranks, c, row)
               << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace kdyck
