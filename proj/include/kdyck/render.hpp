#pragma once

#include <optional>
#include <string>

#include "kdyck/path.hpp"
#include "kdyck/ranking.hpp"
#include "kdyck/tableau.hpp"

namespace kdyck {

// One character column per step. An up step of rise a draws '|' up to its top
// cell and '/' there; a down step draws '\' in its top cell. Lines end in '\n'.
std::string render_path_ascii(const StepSequence& steps);

// Standalone SVG: a polyline through (i, level_i) for i = 0..N, y pointing up.
std::string render_path_svg(const StepSequence& steps);

// Columns drawn top to bottom, optionally with each box's rank as "index:rank".
std::string render_tableau_ascii(const Tableau& tableau,
                                 const std::optional<RankTableau>& ranks = std::nullopt);
std::string render_tableau_svg(const Tableau& tableau,
                               const std::optional<RankTableau>& ranks = std::nullopt);

}  // namespace kdyck
