#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <json.hpp>

#include "kdyck/path.hpp"
#include "kdyck/text_format.hpp"

namespace kdyck {

struct Cell {
    std::size_t column = 0;  // 0-based
    std::size_t row = 0;     // 0-based, row 0 is the top row

    friend bool operator==(const Cell&, const Cell&) = default;
};

// A filling of columns of heights k_i + 1 by the indices 1..n+|k|.
//
// Construction does not validate. Algorithms check the cheap structural part
// (partition, increasing columns) themselves; validate_tableau() runs the full
// scan including the abcd condition.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<Index>> columns);

    std::size_t column_count() const { return columns_.size(); }
    const std::vector<Index>& column(std::size_t i) const { return columns_[i]; }
    const std::vector<std::vector<Index>>& columns() const { return columns_; }

    std::vector<Rise> k() const;
    Rise k(std::size_t column) const { return static_cast<Rise>(columns_[column].size()) - 1; }
    std::size_t entry_count() const { return entry_count_; }

    Index top(std::size_t column) const { return columns_[column].front(); }
    Index bottom(std::size_t column) const { return columns_[column].back(); }
    std::vector<Index> top_row() const;
    std::vector<Index> bottom_row() const;

    // Cell holding `entry`, if present.
    std::optional<Cell> locate(Index entry) const;
    bool in_top_row(Index entry) const;

    friend bool operator==(const Tableau& a, const Tableau& b) { return a.columns_ == b.columns_; }

private:
    std::vector<std::vector<Index>> columns_;
    std::size_t entry_count_ = 0;
    std::vector<std::optional<Cell>> cells_;  // by entry, slot 0 unused
};

// T+ : T with n+|k|+1 placed below the entry n+|k|. The bottom entry of every
// column is still its (k_i+1)-st entry, also in the extended column.
struct TableauPlus {
    Tableau base;
    std::size_t extended_column = 0;  // 0-based

    std::size_t entry_count() const { return base.entry_count() + 1; }
    Index extra_entry() const { return base.entry_count() + 1; }
    std::size_t column_height(std::size_t column) const;
    Index at(Cell cell) const;
    std::optional<Cell> locate(Index entry) const;
};

// Filling Algorithm. The column heights come from the S exponents of `word` in order.
Tableau fill(const SWWord& word);
Tableau fill(const StepSequence& steps);

// Partition, column order, top-row bound and the abcd condition.
Diagnostic validate_tableau(const Tableau& tableau);

// Partition of 1..N and strictly increasing columns; O(N).
Diagnostic check_structure(const Tableau& tableau);

// The unique tableau with top row `top` and column heights k_i + 1.
Tableau from_top_row(const std::vector<Index>& top, const std::vector<Rise>& k);

// S^{k_i} at the top-row positions, W elsewhere.
SWWord tableau_to_word(const Tableau& tableau);

TableauPlus extend_plus(const Tableau& tableau);

// t_i < k_1 + ... + k_{i-1} + i for i >= 2.
bool is_minus_admissible(const Tableau& tableau);

nlohmann::json tableau_to_json(const Tableau& tableau);
nlohmann::json tableau_to_json(const TableauPlus& tableau);
Tableau tableau_from_json(const nlohmann::json& j);

}  // namespace kdyck
