#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kdyck/path.hpp"

namespace kdyck {

// One letter of an SW-word: S^a (up step of rise a) or W (a down step).
struct Letter {
    enum class Kind { S, W };
    Kind kind = Kind::W;
    Rise exponent = 0;  // meaningful for S only

    static Letter s(Rise a) { return {Kind::S, a}; }
    static Letter w() { return {Kind::W, 0}; }
    bool is_s() const { return kind == Kind::S; }

    friend bool operator==(const Letter&, const Letter&) = default;
};

// SW-word together with the rise a W stands for (1 for k-Dyck paths, n for the
// scaled plus/minus families, n for rational (m,n) paths).
struct SWWord {
    std::vector<Letter> letters;
    Rise down = 1;

    std::size_t size() const { return letters.size(); }
    std::size_t s_count() const;

    friend bool operator==(const SWWord&, const SWWord&) = default;
};

// Fails when down steps are not all of the same size.
SWWord to_sw(const StepSequence& steps);
StepSequence to_steps(const SWWord& word);

// "2,-1,-1" <-> StepSequence. Whitespace around entries is ignored.
StepSequence parse_steps(std::string_view text);
std::string emit_steps(const StepSequence& steps);

// "S2 W W" <-> SWWord. Exponents are mandatory ("S1" for a unit up step).
SWWord parse_sw(std::string_view text, Rise down = 1);
std::string emit_sw(const SWWord& word);

// Pretty form for scaled plus/minus words: S^(n*a+1) prints as "S<a>+1/<n>".
std::string emit_sw_rational(const SWWord& word, const FamilySpec& family);

nlohmann::json family_to_json(const FamilySpec& family);
FamilySpec family_from_json(const nlohmann::json& j);

// {"family": {...}, "steps": [...]}
nlohmann::json path_to_json(const StepSequence& steps, const FamilySpec& family);
struct FamilyPath {
    FamilySpec family;
    StepSequence steps;
};
FamilyPath path_from_json(const nlohmann::json& j);

}  // namespace kdyck
