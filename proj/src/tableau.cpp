#include "kdyck/tableau.hpp"

#include <deque>
#include <string>

namespace kdyck {

Tableau::Tableau(std::vector<std::vector<Index>> columns) : columns_(std::move(columns)) {
    for (const auto& c : columns_) entry_count_ += c.size();
    cells_.assign(entry_count_ + 1, std::nullopt);
    for (std::size_t ci = 0; ci < columns_.size(); ++ci)
        for (std::size_t row = 0; row < columns_[ci].size(); ++row) {
            const Index e = columns_[ci][row];
            if (e >= 1 && e <= entry_count_ && !cells_[e]) cells_[e] = Cell{ci, row};
        }
}

std::vector<Rise> Tableau::k() const {
    std::vector<Rise> out;
    out.reserve(columns_.size());
    for (std::size_t i = 0; i < columns_.size(); ++i) out.push_back(k(i));
    return out;
}

std::vector<Index> Tableau::top_row() const {
    std::vector<Index> out;
    for (const auto& c : columns_) out.push_back(c.front());
    return out;
}

std::vector<Index> Tableau::bottom_row() const {
    std::vector<Index> out;
    for (const auto& c : columns_) out.push_back(c.back());
    return out;
}

std::optional<Cell> Tableau::locate(Index entry) const {
    if (entry == 0 || entry >= cells_.size()) return std::nullopt;
    return cells_[entry];
}

bool Tableau::in_top_row(Index entry) const {
    const auto cell = locate(entry);
    return cell && cell->row == 0;
}

std::size_t TableauPlus::column_height(std::size_t column) const {
    return base.column(column).size() + (column == extended_column ? 1 : 0);
}

Index TableauPlus::at(Cell cell) const {
    const auto& c = base.column(cell.column);
    return cell.row < c.size() ? c[cell.row] : extra_entry();
}

std::optional<Cell> TableauPlus::locate(Index entry) const {
    if (entry == extra_entry()) return Cell{extended_column, base.column(extended_column).size()};
    return base.locate(entry);
}

Tableau fill(const SWWord& word) {
    std::vector<std::vector<Index>> columns;
    std::vector<std::size_t> capacity;
    // Columns that still have room, ordered by their bottom entry. The entry just
    // placed is always the largest bottom, so this stays a FIFO.
    std::deque<std::size_t> active;

    for (std::size_t p = 0; p < word.letters.size(); ++p) {
        const Index entry = p + 1;
        const auto& letter = word.letters[p];
        if (letter.is_s()) {
            if (letter.exponent <= 0) throw InvalidInput("S exponent must be positive");
            columns.push_back({entry});
            capacity.push_back(static_cast<std::size_t>(letter.exponent) + 1);
            active.push_back(columns.size() - 1);
            continue;
        }
        if (active.empty())
            throw InvalidInput("not a Dyck word: no active entry for the W at position " +
                               std::to_string(entry));
        const std::size_t c = active.front();
        active.pop_front();
        columns[c].push_back(entry);
        if (columns[c].size() < capacity[c]) active.push_back(c);
    }
    if (!active.empty()) throw InvalidInput("not a Dyck word: the word ends above the axis");
    if (columns.empty()) throw InvalidInput("empty word");
    return Tableau(std::move(columns));
}

Tableau fill(const StepSequence& steps) {
    require_valid(steps);
    const auto word = to_sw(steps);
    if (word.down != 1) throw InvalidInput("filling needs unit down steps");
    return fill(word);
}

Diagnostic check_structure(const Tableau& tableau) {
    if (tableau.column_count() == 0) return Diagnostic::fail("tableau has no columns");
    const std::size_t total = tableau.entry_count();
    std::vector<bool> seen(total + 1, false);
    for (std::size_t ci = 0; ci < tableau.column_count(); ++ci) {
        const auto& col = tableau.column(ci);
        if (col.size() < 2)
            return Diagnostic::fail("column " + std::to_string(ci + 1) + " needs at least 2 entries");
        for (std::size_t r = 0; r < col.size(); ++r) {
            const Index e = col[r];
            if (e < 1 || e > total)
                return Diagnostic::fail("entry " + std::to_string(e) + " outside 1.." +
                                        std::to_string(total), e);
            if (seen[e]) return Diagnostic::fail("entry " + std::to_string(e) + " repeated", e);
            seen[e] = true;
            if (r > 0 && col[r - 1] >= e)
                return Diagnostic::fail("column " + std::to_string(ci + 1) + " is not increasing", e);
        }
    }
    return Diagnostic::pass();
}

Diagnostic validate_tableau(const Tableau& tableau) {
    if (auto d = check_structure(tableau); !d) return d;

    Rise bound = 0;
    for (std::size_t i = 0; i < tableau.column_count(); ++i) {
        const Index t = tableau.top(i);
        if (i > 0 && tableau.top(i - 1) >= t)
            return Diagnostic::fail("top row is not increasing at column " + std::to_string(i + 1), t);
        if (static_cast<Rise>(t) > bound + static_cast<Rise>(i) + 1)
            return Diagnostic::fail("top entry " + std::to_string(t) + " of column " +
                                        std::to_string(i + 1) + " exceeds " +
                                        std::to_string(bound + static_cast<Rise>(i) + 1),
                                    t);
        bound += tableau.k(i);
    }

    // Brute-force abcd scan: for each vertical pair a over d, no column may hold
    // two of the entries strictly between them.
    const std::size_t columns = tableau.column_count();
    std::vector<std::size_t> hits(columns, 0);
    std::vector<Index> first_hit(columns, 0);
    for (std::size_t ci = 0; ci < columns; ++ci) {
        const auto& col = tableau.column(ci);
        for (std::size_t r = 0; r + 1 < col.size(); ++r) {
            const Index a = col[r];
            const Index d = col[r + 1];
            std::fill(hits.begin(), hits.end(), 0);
            for (Index b = a + 1; b < d; ++b) {
                const auto cell = tableau.locate(b);
                if (hits[cell->column]++ == 0) {
                    first_hit[cell->column] = b;
                    continue;
                }
                return Diagnostic::fail("abcd violation: a=" + std::to_string(a) +
                                            " b=" + std::to_string(first_hit[cell->column]) +
                                            " c=" + std::to_string(b) + " d=" + std::to_string(d),
                                        a);
            }
        }
    }
    return Diagnostic::pass();
}

Tableau from_top_row(const std::vector<Index>& top, const std::vector<Rise>& k) {
    if (top.size() != k.size()) throw InvalidInput("top row and k have different lengths");
    if (top.empty()) throw InvalidInput("empty top row");
    Rise total = 0;
    for (Rise x : k) {
        if (x <= 0) throw InvalidInput("k entries must be positive");
        total += x;
    }
    const auto entries = static_cast<std::size_t>(total) + k.size();
    Rise bound = 0;
    for (std::size_t i = 0; i < top.size(); ++i) {
        if (i > 0 && top[i] <= top[i - 1]) throw InvalidInput("top row must be strictly increasing");
        const Rise limit = bound + static_cast<Rise>(i) + 1;
        if (static_cast<Rise>(top[i]) > limit || top[i] < 1)
            throw InvalidInput("top entry t_" + std::to_string(i + 1) + " = " +
                               std::to_string(top[i]) + " violates t_i <= " + std::to_string(limit));
        bound += k[i];
    }
    SWWord word;
    word.letters.assign(entries, Letter::w());
    for (std::size_t i = 0; i < top.size(); ++i) word.letters[top[i] - 1] = Letter::s(k[i]);
    return fill(word);
}

SWWord tableau_to_word(const Tableau& tableau) {
    if (auto d = check_structure(tableau); !d) throw InvalidInput("invalid tableau: " + d.message);
    SWWord word;
    word.letters.assign(tableau.entry_count(), Letter::w());
    for (std::size_t i = 0; i < tableau.column_count(); ++i)
        word.letters[tableau.top(i) - 1] = Letter::s(tableau.k(i));
    return word;
}

TableauPlus extend_plus(const Tableau& tableau) {
    if (auto d = check_structure(tableau); !d) throw InvalidInput("invalid tableau: " + d.message);
    const auto last = tableau.locate(tableau.entry_count());
    if (last->row + 1 != tableau.column(last->column).size())
        throw InvalidInput("entry n+|k| must be a bottom entry");
    return {tableau, last->column};
}

bool is_minus_admissible(const Tableau& tableau) {
    Rise bound = tableau.column_count() ? tableau.k(0) : 0;
    for (std::size_t i = 1; i < tableau.column_count(); ++i) {
        if (!(static_cast<Rise>(tableau.top(i)) < bound + static_cast<Rise>(i) + 1)) return false;
        bound += tableau.k(i);
    }
    return true;
}

nlohmann::json tableau_to_json(const Tableau& tableau) {
    return {{"k", tableau.k()}, {"columns", tableau.columns()}};
}

nlohmann::json tableau_to_json(const TableauPlus& tableau) {
    auto j = tableau_to_json(tableau.base);
    j["columns"][tableau.extended_column].push_back(tableau.extra_entry());
    j["extended_column"] = tableau.extended_column + 1;
    return j;
}

Tableau tableau_from_json(const nlohmann::json& j) {
    try {
        Tableau t(j.at("columns").get<std::vector<std::vector<Index>>>());
        if (j.contains("k") && j["k"].get<std::vector<Rise>>() != t.k())
            throw InvalidInput("tableau \"k\" does not match its column heights");
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("bad tableau JSON: ") + e.what());
    }
}

}  // namespace kdyck
