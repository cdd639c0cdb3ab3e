#include "kdyck/ranking.hpp"

#include <algorithm>
#include <string>

namespace kdyck {

Rank RankTableau::max_rank() const {
    return by_index.empty() ? 0 : *std::max_element(by_index.begin(), by_index.end());
}

RankTableau rank(const Tableau& tableau) {
    if (auto d = check_structure(tableau); !d) throw InvalidInput("invalid tableau: " + d.message);
    constexpr Rank unassigned = -1;
    RankTableau out;
    out.by_index.assign(tableau.entry_count(), unassigned);
    out.columns.resize(tableau.column_count());
    for (std::size_t ci = 0; ci < tableau.column_count(); ++ci) {
        const Index top = tableau.top(ci);
        Rank start = 0;
        if (ci > 0) {
            if (top < 2 || out.by_index[top - 2] == unassigned)
                throw InvalidInput("invalid tableau: top index " + std::to_string(top) +
                                   " of column " + std::to_string(ci + 1) +
                                   " has no ranked predecessor");
            start = out.by_index[top - 2];
        }
        const auto& col = tableau.column(ci);
        auto& ranks = out.columns[ci];
        ranks.reserve(col.size());
        for (std::size_t row = 0; row < col.size(); ++row) {
            const Rank r = start + static_cast<Rank>(row);
            ranks.push_back(r);
            out.by_index[col[row] - 1] = r;
        }
    }
    return out;
}

RankCounts::RankCounts(const RankTableau& ranks) {
    const auto size = static_cast<std::size_t>(ranks.max_rank()) + 1;
    for (auto* v : {&total_, &top_, &below_top_, &bottom_, &above_bottom_}) v->assign(size, 0);
    for (const auto& col : ranks.columns) {
        for (std::size_t row = 0; row < col.size(); ++row) {
            const auto r = static_cast<std::size_t>(col[row]);
            ++total_[r];
            ++(row == 0 ? top_ : below_top_)[r];
            ++(row + 1 == col.size() ? bottom_ : above_bottom_)[r];
        }
    }
}

RankCounts rank_counts(const RankTableau& ranks) {
    return RankCounts(ranks);
}

nlohmann::json rank_tableau_to_json(const Tableau& tableau, const RankTableau& ranks) {
    return {{"k", tableau.k()}, {"ranks", ranks.columns}, {"by_index", ranks.by_index}};
}

}  // namespace kdyck
