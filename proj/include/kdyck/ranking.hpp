#pragma once

#include <vector>

#include <json.hpp>

#include "kdyck/tableau.hpp"

namespace kdyck {

// Rank of every box of a tableau, in the tableau's shape and by index.
struct RankTableau {
    std::vector<std::vector<Rank>> columns;
    std::vector<Rank> by_index;  // by_index[i - 1] is the rank of index i

    Rank rank_of(Index entry) const { return by_index.at(entry - 1); }
    Rank max_rank() const;

    friend bool operator==(const RankTableau&, const RankTableau&) = default;
};

// Ranking Algorithm: column 1 reads 0..k_1; column i starts at the rank of
// (top index - 1) and counts up by one per row.
RankTableau rank(const Tableau& tableau);

// Rank multiplicities split by position. All accessors return 0 outside the
// range of ranks present.
class RankCounts {
public:
    explicit RankCounts(const RankTableau& ranks);

    std::size_t total(Rank r) const { return get(total_, r); }         // n(r)
    std::size_t top(Rank r) const { return get(top_, r); }             // in row 1
    std::size_t below_top(Rank r) const { return get(below_top_, r); } // below row 1
    std::size_t bottom(Rank r) const { return get(bottom_, r); }       // in the bottom row
    std::size_t above_bottom(Rank r) const { return get(above_bottom_, r); }
    Rank max_rank() const { return static_cast<Rank>(total_.size()) - 1; }

private:
    static std::size_t get(const std::vector<std::size_t>& v, Rank r) {
        return r < 0 || r >= static_cast<Rank>(v.size()) ? 0 : v[static_cast<std::size_t>(r)];
    }
    std::vector<std::size_t> total_, top_, below_top_, bottom_, above_bottom_;
};

RankCounts rank_counts(const RankTableau& ranks);

nlohmann::json rank_tableau_to_json(const Tableau& tableau, const RankTableau& ranks);

}  // namespace kdyck
