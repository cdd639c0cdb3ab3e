#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "kdyck/oracle.hpp"
#include "kdyck/ranking.hpp"
#include "kdyck/sweep.hpp"
#include "kdyck/tableau.hpp"
#include "kdyck/text_format.hpp"
#include "kdyck/walking.hpp"

namespace kdyck::testing {

// Structural invariants of fill/rank/walk on one k-Dyck path D. Returns a
// description of the first broken one.
inline std::optional<std::string> check_invariants(const StepSequence& d) {
    auto fail = [&](const std::string& what) {
        return std::optional<std::string>(what + " on " + emit_steps(d));
    };
    const std::size_t total = d.size();
    const Tableau t = fill(d);
    if (t.entry_count() != total || !check_structure(t).ok) return fail("fill is incomplete");
    if (!validate_tableau(t).ok) return fail("fill violates the tableau conditions");

    const RankTableau r = rank(t);
    if (r.by_index.size() != total || r.by_index.front() != 0) return fail("ranking is not total");
    for (std::size_t i = 1; i < total; ++i) {
        const Rank step = r.by_index[i] - r.by_index[i - 1];
        if (step != 0 && step != 1) return fail("rank increment outside {0,1}");
    }

    const SweepPermutation sigma = walk(t, r);
    if (sigma.size() != total) return fail("plain walk has the wrong length");
    const RankDigraph g = build_digraph(t, r);
    if (!check_balanced(g).ok) return fail("rank digraph is unbalanced");
    if (walk_graph(g).sigma != sigma.sigma) return fail("walk and walk_graph disagree");

    // Letter j of the preimage is letter sigma_j of D and keeps its rank; equal
    // ranks are written in decreasing index order.
    const StepSequence pre = sigma_to_preimage(sigma, t, FamilySpec::k_dyck(t.k()));
    auto pre_ranks = ranks(pre).values();
    std::vector<Index> last_of_rank(total + 1, total + 1);
    for (std::size_t j = 0; j < total; ++j) {
        const Index i = sigma.sigma[j];
        if (r.rank_of(i) != pre_ranks[j]) return fail("sigma does not carry ranks to the preimage");
        Index& last = last_of_rank[static_cast<std::size_t>(pre_ranks[j])];
        if (i >= last) return fail("equal ranks are not written in decreasing index order");
        last = i;
    }
    auto tab_ranks = r.by_index;
    std::sort(pre_ranks.begin(), pre_ranks.end());
    std::sort(tab_ranks.begin(), tab_ranks.end());
    if (pre_ranks != tab_ranks) return fail("rank multisets of R and the preimage differ");

    if (walk_plus(extend_plus(t)).size() != total + 1) return fail("plus walk has the wrong length");
    const auto& k = t.k();
    const bool has_minus = !(k.size() == 1 && k.front() == 1);
    if (has_minus && is_minus_admissible(t) && walk_minus(t).size() != total - 1)
        return fail("minus walk has the wrong length");
    if (std::all_of(k.begin(), k.end(), [&](Rise x) { return x == k.front(); })) {
        const Rise kk = k.front();
        const auto counts = rank_counts(r);
        for (Rank a = 0; a <= counts.max_rank() + 1; ++a) {
            if (counts.total(a) != counts.top(a - kk) + counts.below_top(a + 1))
                return fail("n(r) = n-(r-k) + n^(r+1) fails at r=" + std::to_string(a));
            if (counts.total(a) > k.size()) return fail("a rank appears more than n times");
        }
        if (counts.total(0) != counts.below_top(1)) return fail("n(0) = n^(1) fails");
        Index smallest_rank_one = total + 1;
        for (Index i = 1; i <= total; ++i)
            if (r.rank_of(i) == 1) smallest_rank_one = std::min(smallest_rank_one, i);
        if (sigma.sigma.back() != smallest_rank_one)
            return fail("walk does not end at the smallest rank-1 entry");
    }
    return std::nullopt;
}

// The family of the given kind over k.
inline FamilySpec family_of(FamilyKind kind, const std::vector<Rise>& k) {
    switch (kind) {
        case FamilyKind::KPlus: return FamilySpec::k_plus(k);
        case FamilyKind::KMinus: return FamilySpec::k_minus(k);
        default: return FamilySpec::k_dyck(k);
    }
}

// k = (1) has no minus family: its only up step would rise n*1 - 1 = 0.
inline bool has_family(FamilyKind kind, const std::vector<Rise>& k) {
    return !(kind == FamilyKind::KMinus && k.size() == 1 && k.front() == 1);
}

// Walking inversion against the exhaustive preimage table of the closure.
// Returns the mismatch count and the number of paths checked.
inline std::pair<std::size_t, std::size_t> oracle_mismatches(FamilyKind kind,
                                                             const std::vector<Rise>& k,
                                                             std::string* first = nullptr) {
    const auto family = family_of(kind, k);
    const auto domain = enumerate(family, {.permute_k = true});
    const PreimageIndex index(domain);
    std::size_t bad = 0;
    for (const auto& p : domain.paths) {
        bool ok = false;
        try {
            ok = invert(p, family) == index.invert(p) && invert(sweep(p), family) == p;
        } catch (const std::exception& e) {
            if (first && first->empty()) *first = e.what();
        }
        if (!ok) {
            if (first && first->empty()) *first = to_string(kind) + " " + emit_steps(p);
            ++bad;
        }
    }
    return {bad, domain.paths.size()};
}

}  // namespace kdyck::testing
