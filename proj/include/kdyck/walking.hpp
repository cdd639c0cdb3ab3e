#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "kdyck/path.hpp"
#include "kdyck/ranking.hpp"
#include "kdyck/tableau.hpp"

namespace kdyck {

enum class WalkVariant { Plain, Plus, Minus, Graph };

std::string to_string(WalkVariant variant);
WalkVariant parse_walk_variant(const std::string& name);

// The order sigma in which the letters of SW(D) are read to produce the
// sweep preimage of D.
struct SweepPermutation {
    WalkVariant variant = WalkVariant::Plain;
    std::vector<Index> sigma;

    std::size_t size() const { return sigma.size(); }
    friend bool operator==(const SweepPermutation&, const SweepPermutation&) = default;
};

// Walking Algorithm on the index-rank tableau (T, R). Linear in the entry count.
SweepPermutation walk(const Tableau& tableau, const RankTableau& ranks);

// Walking Algorithm for T+. Bold entries are those one more than a bottom
// entry. A row-1 box jumps to (bottom + 1), written even when it is bold; a
// lower box steps up and skips downward past bold entries. The walk stops when
// the next entry to write has already been written.
SweepPermutation walk_plus(const TableauPlus& tableau);

// Mirror image of walk_plus for minus-admissible T: bold entries are one less
// than a bottom entry, a row-1 box jumps to (bottom - 1), skips go upward.
// Leaves exactly one entry unwritten.
SweepPermutation walk_minus(const Tableau& tableau);

// Rank digraph G_R: one edge per index. A top-row index of rank a in column i
// gives a -> a + k_i, every other index of rank b gives b -> b - 1.
struct RankDigraph {
    struct Edge {
        Rank from = 0;
        Rank to = 0;
        bool from_top_row = false;
    };
    std::vector<Edge> edges;                   // edges[i - 1] belongs to index i
    std::vector<std::vector<Index>> members;   // S(a), ascending, members[a]
    Rank max_rank = 0;

    std::size_t in_degree(Rank a) const;
    std::size_t out_degree(Rank a) const;
};

RankDigraph build_digraph(const Tableau& tableau, const RankTableau& ranks);

// in-degree(a) = out-degree(a) = |S(a)| for every rank a.
Diagnostic check_balanced(const RankDigraph& graph);

// The walk restated on G_R: from rank 0 take the largest member, then follow
// the edge of the index just marked to the largest unmarked member there.
SweepPermutation walk_graph(const RankDigraph& graph);

// Reads the letters of the matching SW-word in sigma order. For the plain and
// graph variants the letters come from T; for plus and minus they are the
// scaled letters of D+ / D- (up rise scale*k_i +- 1, down -scale).
StepSequence sigma_to_preimage(const SweepPermutation& sigma, const Tableau& tableau,
                               const FamilySpec& family);

// Sweep preimage of `steps` within the permutation closure of `family`.
// Rational families are rejected.
StepSequence invert(const StepSequence& steps, const FamilySpec& family);
// Same, with the family parameters read off the path.
StepSequence invert(const StepSequence& steps, FamilyKind kind);

// sigma for a path of the given kind, choosing the walk that matches the kind
// (graph selects walk_graph for k-Dyck paths).
SweepPermutation sweep_permutation(const StepSequence& steps, FamilyKind kind,
                                   WalkVariant variant);
WalkVariant default_variant(FamilyKind kind);

nlohmann::json sigma_to_json(const SweepPermutation& sigma);

}  // namespace kdyck
