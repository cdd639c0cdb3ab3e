#include "kdyck/walking.hpp"

#include <algorithm>
#include <string>

namespace kdyck {

std::string to_string(WalkVariant variant) {
    switch (variant) {
        case WalkVariant::Plain: return "plain";
        case WalkVariant::Plus: return "plus";
        case WalkVariant::Minus: return "minus";
        case WalkVariant::Graph: return "graph";
    }
    return "?";
}

WalkVariant parse_walk_variant(const std::string& name) {
    if (name == "plain") return WalkVariant::Plain;
    if (name == "plus") return WalkVariant::Plus;
    if (name == "minus") return WalkVariant::Minus;
    if (name == "graph") return WalkVariant::Graph;
    throw InvalidInput("unknown walk variant '" + name + "'");
}

namespace {

void require_structure(const Tableau& tableau) {
    if (auto d = check_structure(tableau); !d) throw InvalidInput("invalid tableau: " + d.message);
}

void require_shape(const Tableau& tableau, const RankTableau& ranks) {
    bool ok = ranks.columns.size() == tableau.column_count() &&
              ranks.by_index.size() == tableau.entry_count();
    for (std::size_t i = 0; ok && i < tableau.column_count(); ++i)
        ok = ranks.columns[i].size() == tableau.column(i).size();
    if (!ok) throw InvalidInput("rank tableau does not have the shape of the tableau");
}

// Indices grouped by rank, ascending inside each group. take() pops the
// largest unmarked index of a rank in O(1).
class RankBuckets {
public:
    explicit RankBuckets(const std::vector<Rank>& by_index) {
        Rank max_rank = 0;
        for (Rank r : by_index) {
            if (r < 0) throw InvalidInput("negative rank in rank tableau");
            max_rank = std::max(max_rank, r);
        }
        const auto ranks = static_cast<std::size_t>(max_rank) + 1;
        start_.assign(ranks + 1, 0);
        for (Rank r : by_index) ++start_[static_cast<std::size_t>(r) + 1];
        for (std::size_t r = 0; r < ranks; ++r) start_[r + 1] += start_[r];
        next_.assign(start_.begin(), start_.end() - 1);
        slots_.resize(by_index.size());
        for (std::size_t i = 0; i < by_index.size(); ++i)
            slots_[next_[static_cast<std::size_t>(by_index[i])]++] = i + 1;
        // next_ now points one past each bucket.
    }

    std::optional<Index> take(Rank r) {
        if (r < 0 || static_cast<std::size_t>(r) + 1 >= start_.size()) return std::nullopt;
        auto& top = next_[static_cast<std::size_t>(r)];
        if (top == start_[static_cast<std::size_t>(r)]) return std::nullopt;
        return slots_[--top];
    }

private:
    std::vector<std::size_t> start_;
    std::vector<std::size_t> next_;
    std::vector<Index> slots_;
};

[[noreturn]] void early_stop(std::size_t written, std::size_t expected) {
    throw InvalidInput("walk stopped after " + std::to_string(written) + " of " +
                       std::to_string(expected) + " entries; the tableau is not a filling");
}

}  // namespace

SweepPermutation walk(const Tableau& tableau, const RankTableau& ranks) {
    require_structure(tableau);
    require_shape(tableau, ranks);
    const std::size_t total = tableau.entry_count();

    RankBuckets buckets(ranks.by_index);
    SweepPermutation out{WalkVariant::Plain, {}};
    out.sigma.reserve(total);

    auto current = buckets.take(0);
    if (!current) early_stop(0, total);
    while (current) {
        out.sigma.push_back(*current);
        if (out.sigma.size() > total) early_stop(out.sigma.size(), total);
        const Cell cell = *tableau.locate(*current);
        const auto& col = ranks.columns[cell.column];
        const Rank next_rank = cell.row == 0 ? col.back() : col[cell.row - 1];
        current = buckets.take(next_rank);
    }
    if (out.sigma.size() != total) early_stop(out.sigma.size(), total);
    return out;
}

SweepPermutation walk_plus(const TableauPlus& tableau) {
    require_structure(tableau.base);
    const std::size_t total = tableau.entry_count();  // n + |k| + 1
    const Tableau& base = tableau.base;

    std::vector<bool> bold(total + 2, false);
    for (std::size_t c = 0; c < base.column_count(); ++c)
        if (base.bottom(c) + 1 <= total) bold[base.bottom(c) + 1] = true;

    std::vector<bool> written(total + 1, false);
    SweepPermutation out{WalkVariant::Plus, {}};
    out.sigma.reserve(total);

    Index current = 1;
    while (!written[current]) {
        written[current] = true;
        out.sigma.push_back(current);
        const Cell cell = *tableau.locate(current);
        if (cell.row == 0) {
            current = base.bottom(cell.column) + 1;
            continue;
        }
        Index next = tableau.at({cell.column, cell.row - 1});
        while (bold[next]) {
            if (next == 1) throw InvalidInput("bold skip ran past entry 1");
            --next;
        }
        current = next;
    }
    if (out.sigma.size() != total) early_stop(out.sigma.size(), total);
    return out;
}

SweepPermutation walk_minus(const Tableau& tableau) {
    require_structure(tableau);
    if (!is_minus_admissible(tableau))
        throw InvalidInput("tableau is not minus-admissible (t_i < k_1+...+k_{i-1}+i fails)");
    const std::size_t total = tableau.entry_count();  // n + |k|

    std::vector<bool> bold(total + 2, false);
    for (std::size_t c = 0; c < tableau.column_count(); ++c)
        if (tableau.bottom(c) >= 2) bold[tableau.bottom(c) - 1] = true;

    std::vector<bool> written(total + 1, false);
    SweepPermutation out{WalkVariant::Minus, {}};
    out.sigma.reserve(total - 1);

    Index current = 1;
    while (!written[current]) {
        written[current] = true;
        out.sigma.push_back(current);
        const Cell cell = *tableau.locate(current);
        if (cell.row == 0) {
            current = tableau.bottom(cell.column) - 1;
            continue;
        }
        Index next = tableau.column(cell.column)[cell.row - 1];
        while (bold[next]) {
            if (next == total) throw InvalidInput("bold skip ran past the last entry");
            ++next;
        }
        current = next;
    }
    if (out.sigma.size() + 1 != total) early_stop(out.sigma.size(), total - 1);
    return out;
}

std::size_t RankDigraph::in_degree(Rank a) const {
    return static_cast<std::size_t>(
        std::count_if(edges.begin(), edges.end(), [a](const Edge& e) { return e.to == a; }));
}

std::size_t RankDigraph::out_degree(Rank a) const {
    return static_cast<std::size_t>(
        std::count_if(edges.begin(), edges.end(), [a](const Edge& e) { return e.from == a; }));
}

RankDigraph build_digraph(const Tableau& tableau, const RankTableau& ranks) {
    require_structure(tableau);
    require_shape(tableau, ranks);
    RankDigraph g;
    g.max_rank = ranks.max_rank();
    g.edges.resize(tableau.entry_count());
    g.members.resize(static_cast<std::size_t>(g.max_rank) + 1);
    for (std::size_t c = 0; c < tableau.column_count(); ++c) {
        const auto& col = tableau.column(c);
        for (std::size_t row = 0; row < col.size(); ++row) {
            const Rank r = ranks.columns[c][row];
            auto& edge = g.edges[col[row] - 1];
            edge.from = r;
            edge.from_top_row = row == 0;
            edge.to = row == 0 ? r + tableau.k(c) : r - 1;
        }
    }
    for (Index i = 1; i <= tableau.entry_count(); ++i)
        g.members[static_cast<std::size_t>(ranks.rank_of(i))].push_back(i);
    return g;
}

Diagnostic check_balanced(const RankDigraph& graph) {
    const auto vertices = graph.members.size();
    std::vector<std::size_t> in(vertices, 0), out(vertices, 0);
    for (const auto& e : graph.edges) {
        if (e.from < 0 || e.to < 0 || static_cast<std::size_t>(e.from) >= vertices ||
            static_cast<std::size_t>(e.to) >= vertices)
            return Diagnostic::fail("edge " + std::to_string(e.from) + " -> " +
                                    std::to_string(e.to) + " leaves the vertex set");
        ++out[static_cast<std::size_t>(e.from)];
        ++in[static_cast<std::size_t>(e.to)];
    }
    for (std::size_t a = 0; a < vertices; ++a) {
        const auto size = graph.members[a].size();
        if (in[a] != size || out[a] != size)
            return Diagnostic::fail("rank " + std::to_string(a) + ": in " + std::to_string(in[a]) +
                                    ", out " + std::to_string(out[a]) + ", |S| " +
                                    std::to_string(size));
    }
    return Diagnostic::pass();
}

SweepPermutation walk_graph(const RankDigraph& graph) {
    const std::size_t total = graph.edges.size();
    std::vector<std::size_t> unmarked(graph.members.size());
    for (std::size_t a = 0; a < graph.members.size(); ++a) unmarked[a] = graph.members[a].size();

    auto take = [&](Rank r) -> std::optional<Index> {
        if (r < 0 || static_cast<std::size_t>(r) >= unmarked.size()) return std::nullopt;
        auto& left = unmarked[static_cast<std::size_t>(r)];
        if (left == 0) return std::nullopt;
        return graph.members[static_cast<std::size_t>(r)][--left];
    };

    SweepPermutation out{WalkVariant::Graph, {}};
    out.sigma.reserve(total);
    auto current = take(0);
    if (!current) early_stop(0, total);
    while (current) {
        out.sigma.push_back(*current);
        if (out.sigma.size() > total) early_stop(out.sigma.size(), total);
        current = take(graph.edges[*current - 1].to);
    }
    if (out.sigma.size() != total) early_stop(out.sigma.size(), total);
    return out;
}

StepSequence sigma_to_preimage(const SweepPermutation& sigma, const Tableau& tableau,
                               const FamilySpec& family) {
    require_structure(tableau);
    const std::size_t total = tableau.entry_count();
    const auto n = static_cast<Rise>(tableau.column_count());

    std::size_t expected = total;
    Rise offset = 0;
    Rise scale = 1;
    switch (sigma.variant) {
        case WalkVariant::Plain:
        case WalkVariant::Graph:
            if (family.kind != FamilyKind::K)
                throw InvalidInput("plain walk needs a k-Dyck family");
            break;
        case WalkVariant::Plus:
            if (family.kind != FamilyKind::KPlus)
                throw InvalidInput("plus walk needs a k-plus family");
            expected = total + 1;
            offset = 1;
            scale = n;
            break;
        case WalkVariant::Minus:
            if (family.kind != FamilyKind::KMinus)
                throw InvalidInput("minus walk needs a k-minus family");
            expected = total - 1;
            offset = -1;
            scale = n;
            break;
    }
    if (family.kind != FamilyKind::K && family.scale != n)
        throw InvalidInput("family scale " + std::to_string(family.scale) +
                           " does not match the tableau's " + std::to_string(n) + " columns");
    if (sigma.size() != expected)
        throw InvalidInput("sigma has length " + std::to_string(sigma.size()) + ", expected " +
                           std::to_string(expected));

    std::vector<bool> seen(expected + 1, false);
    std::vector<Rise> out;
    out.reserve(expected);
    for (Index e : sigma.sigma) {
        if (e < 1 || e > expected || seen[e])
            throw InvalidInput("sigma is not a permutation of 1.." + std::to_string(expected));
        seen[e] = true;
        if (e <= total && tableau.in_top_row(e)) {
            const Rise k = tableau.k(tableau.locate(e)->column);
            out.push_back(scale * k + offset);
        } else {
            out.push_back(-scale);
        }
    }
    StepSequence result(std::move(out));
    if (auto d = validate(result); !d)
        throw InvalidInput("sigma and tableau do not pair to a Dyck path: " + d.message);
    return result;
}

StepSequence invert(const StepSequence& steps, const FamilySpec& family) {
    require_valid(steps, family, {.permute_k = true});
    switch (family.kind) {
        case FamilyKind::K: {
            const Tableau t = fill(steps);
            return sigma_to_preimage(walk(t, rank(t)), t, family);
        }
        case FamilyKind::KPlus: {
            const Tableau t = fill(from_plus(steps));
            return sigma_to_preimage(walk_plus(extend_plus(t)), t, family);
        }
        case FamilyKind::KMinus: {
            const Tableau t = fill(from_minus(steps));
            return sigma_to_preimage(walk_minus(t), t, family);
        }
        case FamilyKind::Rational:
            break;
    }
    throw InvalidInput("inversion is implemented for k, kplus and kminus families only");
}

StepSequence invert(const StepSequence& steps, FamilyKind kind) {
    require_valid(steps);
    return invert(steps, infer_family(kind, steps));
}

WalkVariant default_variant(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::KPlus: return WalkVariant::Plus;
        case FamilyKind::KMinus: return WalkVariant::Minus;
        default: return WalkVariant::Plain;
    }
}

SweepPermutation sweep_permutation(const StepSequence& steps, FamilyKind kind,
                                   WalkVariant variant) {
    require_valid(steps);
    const FamilySpec family = infer_family(kind, steps);
    require_valid(steps, family);
    const bool matches =
        (kind == FamilyKind::K && (variant == WalkVariant::Plain || variant == WalkVariant::Graph)) ||
        (kind == FamilyKind::KPlus && variant == WalkVariant::Plus) ||
        (kind == FamilyKind::KMinus && variant == WalkVariant::Minus);
    if (!matches)
        throw InvalidInput("walk variant " + to_string(variant) + " does not apply to family " +
                           to_string(kind));
    switch (variant) {
        case WalkVariant::Plain: {
            const Tableau t = fill(steps);
            return walk(t, rank(t));
        }
        case WalkVariant::Graph: {
            const Tableau t = fill(steps);
            return walk_graph(build_digraph(t, rank(t)));
        }
        case WalkVariant::Plus:
            return walk_plus(extend_plus(fill(from_plus(steps))));
        case WalkVariant::Minus:
            return walk_minus(fill(from_minus(steps)));
    }
    throw InvalidInput("unknown walk variant");
}

nlohmann::json sigma_to_json(const SweepPermutation& sigma) {
    return {{"variant", to_string(sigma.variant)}, {"sigma", sigma.sigma}};
}

}  // namespace kdyck
