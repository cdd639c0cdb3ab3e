#include "kdyck/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace kdyck {

std::size_t SWWord::s_count() const {
    return static_cast<std::size_t>(
        std::count_if(letters.begin(), letters.end(), [](const Letter& l) { return l.is_s(); }));
}

SWWord to_sw(const StepSequence& steps) {
    SWWord word;
    bool have_down = false;
    word.letters.reserve(steps.size());
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const Rise a = steps[i];
        if (a == 0) throw InvalidInput("zero rise at index " + std::to_string(i + 1));
        if (a > 0) {
            word.letters.push_back(Letter::s(a));
            continue;
        }
        if (!have_down) {
            word.down = -a;
            have_down = true;
        } else if (-a != word.down) {
            throw InvalidInput("down steps of different sizes cannot be written as an SW-word");
        }
        word.letters.push_back(Letter::w());
    }
    return word;
}

StepSequence to_steps(const SWWord& word) {
    std::vector<Rise> out;
    out.reserve(word.size());
    for (const auto& l : word.letters) out.push_back(l.is_s() ? l.exponent : -word.down);
    return StepSequence(std::move(out));
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Rise parse_int(std::string_view token, std::string_view what) {
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    Rise value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range)
        throw InvalidInput(std::string(what) + " overflows: '" + std::string(token) + "'");
    if (ec != std::errc() || ptr != last || token.empty())
        throw InvalidInput("malformed " + std::string(what) + ": '" + std::string(token) + "'");
    return value;
}

}  // namespace

StepSequence parse_steps(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw InvalidInput("empty step list");
    std::vector<Rise> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto token = trim(text.substr(start, comma == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : comma - start));
        const Rise a = parse_int(token, "step");
        if (a == 0) throw InvalidInput("zero rise at index " + std::to_string(out.size() + 1));
        out.push_back(a);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return StepSequence(std::move(out));
}

std::string emit_steps(const StepSequence& steps) {
    std::string out;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(steps[i]);
    }
    return out;
}

SWWord parse_sw(std::string_view text, Rise down) {
    SWWord word;
    word.down = down;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        const auto token = text.substr(i, j - i);
        if (token == "W") {
            word.letters.push_back(Letter::w());
        } else if (token.size() >= 2 && token.front() == 'S' &&
                   std::isdigit(static_cast<unsigned char>(token[1]))) {
            const Rise a = parse_int(token.substr(1), "exponent");
            if (a <= 0) throw InvalidInput("S exponent must be positive: '" + std::string(token) + "'");
            word.letters.push_back(Letter::s(a));
        } else {
            throw InvalidInput("malformed SW token '" + std::string(token) + "'");
        }
        i = j;
    }
    if (word.letters.empty()) throw InvalidInput("empty SW-word");
    return word;
}

std::string emit_sw(const SWWord& word) {
    std::string out;
    for (std::size_t i = 0; i < word.letters.size(); ++i) {
        if (i) out += ' ';
        const auto& l = word.letters[i];
        out += l.is_s() ? "S" + std::to_string(l.exponent) : std::string("W");
    }
    return out;
}

std::string emit_sw_rational(const SWWord& word, const FamilySpec& family) {
    if (family.kind != FamilyKind::KPlus && family.kind != FamilyKind::KMinus) return emit_sw(word);
    const Rise n = family.scale;
    const Rise offset = family.kind == FamilyKind::KPlus ? 1 : -1;
    const char sign = family.kind == FamilyKind::KPlus ? '+' : '-';
    std::string out;
    for (std::size_t i = 0; i < word.letters.size(); ++i) {
        if (i) out += ' ';
        const auto& l = word.letters[i];
        if (!l.is_s()) {
            out += 'W';
            continue;
        }
        const Rise whole = (l.exponent - offset) / n;
        out += "S" + std::to_string(whole) + sign + "1/" + std::to_string(n);
    }
    return out;
}

nlohmann::json family_to_json(const FamilySpec& family) {
    nlohmann::json j;
    j["kind"] = to_string(family.kind);
    if (family.kind == FamilyKind::Rational) {
        j["m"] = family.m;
        j["n"] = family.n;
    } else {
        j["k"] = family.k;
    }
    j["scale"] = family.scale;
    return j;
}

FamilySpec family_from_json(const nlohmann::json& j) {
    try {
        const auto kind = parse_family_kind(j.at("kind").get<std::string>());
        FamilySpec spec;
        switch (kind) {
            case FamilyKind::K: spec = FamilySpec::k_dyck(j.at("k").get<std::vector<Rise>>()); break;
            case FamilyKind::KPlus: spec = FamilySpec::k_plus(j.at("k").get<std::vector<Rise>>()); break;
            case FamilyKind::KMinus: spec = FamilySpec::k_minus(j.at("k").get<std::vector<Rise>>()); break;
            case FamilyKind::Rational:
                spec = FamilySpec::rational(j.at("m").get<Rise>(), j.at("n").get<Rise>());
                break;
        }
        if (j.contains("scale") && j["scale"].get<Rise>() != spec.scale)
            throw InvalidInput("family scale " + std::to_string(j["scale"].get<Rise>()) +
                               " does not match " + std::to_string(spec.scale));
        return spec;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("bad family JSON: ") + e.what());
    }
}

nlohmann::json path_to_json(const StepSequence& steps, const FamilySpec& family) {
    return {{"family", family_to_json(family)}, {"steps", steps.values()}};
}

FamilyPath path_from_json(const nlohmann::json& j) {
    try {
        FamilyPath out{family_from_json(j.at("family")),
                       StepSequence(j.at("steps").get<std::vector<Rise>>())};
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("bad path JSON: ") + e.what());
    }
}

}  // namespace kdyck
