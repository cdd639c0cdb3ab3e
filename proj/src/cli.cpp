#include "kdyck/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "kdyck/oracle.hpp"
#include "kdyck/path.hpp"
#include "kdyck/ranking.hpp"
#include "kdyck/render.hpp"
#include "kdyck/sweep.hpp"
#include "kdyck/tableau.hpp"
#include "kdyck/text_format.hpp"
#include "kdyck/walking.hpp"

namespace kdyck::cli {

namespace {

struct Options {
    std::string command;
    std::optional<std::string> steps;
    std::optional<std::string> sw;
    std::optional<std::string> file;
    std::optional<std::string> family;
    std::vector<Rise> k;
    Rise m = 0;
    Rise n = 0;
    std::optional<std::string> variant;
    bool permute = false;
    std::string format = "text";
    std::optional<std::string> out;
    bool rational = false;
    bool tableau = false;
    bool show_ranks = false;
    std::size_t max_n = EnumerationBounds{}.max_n;
    Rise max_k = EnumerationBounds{}.max_k;
};

enum class Form { Steps, Sw, Json };

struct Input {
    StepSequence steps;
    Form form = Form::Steps;
    std::optional<FamilySpec> family;  // from a JSON object
};

struct Outcome {
    std::string text;  // without trailing newline for single-line output
    int code = exit_ok;
    bool error = false;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

FamilyKind kind_of(const Options& o) {
    return o.family ? parse_family_kind(*o.family) : FamilyKind::K;
}

Input parse_object(const std::string& raw, Form hint, const Options& o) {
    const std::string text = trim(raw);
    if (hint == Form::Json || (!text.empty() && text.front() == '{')) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw InvalidInput(std::string("malformed JSON: ") + e.what());
        }
        if (j.is_object() && !j.contains("family")) {
            try {
                return {StepSequence(j.at("steps").get<std::vector<Rise>>()), Form::Json, std::nullopt};
            } catch (const nlohmann::json::exception& e) {
                throw InvalidInput(std::string("bad path JSON: ") + e.what());
            }
        }
        auto fp = path_from_json(j);
        return {std::move(fp.steps), Form::Json, std::move(fp.family)};
    }
    const bool looks_sw = text.find_first_of("SW") != std::string::npos;
    if (hint == Form::Sw || looks_sw) {
        SWWord word = parse_sw(text);
        // A W stands for -1 in k-Dyck words and for -n (n = number of up steps)
        // in the scaled plus/minus and rational words.
        if (kind_of(o) != FamilyKind::K) word.down = static_cast<Rise>(word.s_count());
        return {to_steps(word), Form::Sw, std::nullopt};
    }
    return {parse_steps(text), Form::Steps, std::nullopt};
}

// Family of an input path: an explicit JSON family wins, then --k / --m --n,
// otherwise the parameters are read off the path.
FamilySpec resolve_family(const Input& input, const Options& o) {
    if (input.family) return *input.family;
    const FamilyKind kind = kind_of(o);
    switch (kind) {
        case FamilyKind::K:
            return o.k.empty() ? infer_family(kind, input.steps) : FamilySpec::k_dyck(o.k);
        case FamilyKind::KPlus:
            return o.k.empty() ? infer_family(kind, input.steps) : FamilySpec::k_plus(o.k);
        case FamilyKind::KMinus:
            return o.k.empty() ? infer_family(kind, input.steps) : FamilySpec::k_minus(o.k);
        case FamilyKind::Rational:
            return o.m > 0 && o.n > 0 ? FamilySpec::rational(o.m, o.n)
                                      : infer_family(kind, input.steps);
    }
    throw InvalidInput("unknown family");
}

FamilySpec family_for_enumeration(const Options& o) {
    switch (kind_of(o)) {
        case FamilyKind::K: return FamilySpec::k_dyck(o.k);
        case FamilyKind::KPlus: return FamilySpec::k_plus(o.k);
        case FamilyKind::KMinus: return FamilySpec::k_minus(o.k);
        case FamilyKind::Rational: return FamilySpec::rational(o.m, o.n);
    }
    throw InvalidInput("unknown family");
}

std::string emit_path(const StepSequence& steps, Form form, FamilyKind kind, const Options& o) {
    if (o.rational && (kind == FamilyKind::KPlus || kind == FamilyKind::KMinus))
        return emit_sw_rational(to_sw(steps), infer_family(kind, steps));
    if (form == Form::Sw) return emit_sw(to_sw(steps));
    return emit_steps(steps);
}

// Text output mirrors the input form, so a JSON object answers a JSON object.
bool wants_json(Form form, const Options& o) {
    return o.format == "json" || (o.format == "text" && form == Form::Json);
}

std::string path_output(const StepSequence& steps, Form form, FamilyKind kind, const Options& o) {
    if (wants_json(form, o)) return path_to_json(steps, infer_family(kind, steps)).dump();
    if (o.format == "ascii") return render_path_ascii(steps);
    if (o.format == "svg") return render_path_svg(steps);
    return emit_path(steps, form, kind, o);
}

std::string join_columns(const std::vector<std::vector<Rank>>& cols) {
    std::string s;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (c) s += " | ";
        for (std::size_t r = 0; r < cols[c].size(); ++r) {
            if (r) s += ' ';
            s += std::to_string(cols[c][r]);
        }
    }
    return s;
}

std::vector<std::vector<Rank>> as_ranks(const std::vector<std::vector<Index>>& cols) {
    std::vector<std::vector<Rank>> out;
    for (const auto& c : cols) out.emplace_back(c.begin(), c.end());
    return out;
}

// The k-Dyck skeleton a tableau is built from, plus the kind of the input.
StepSequence skeleton(const StepSequence& steps, FamilyKind kind) {
    switch (kind) {
        case FamilyKind::KPlus: return from_plus(steps);
        case FamilyKind::KMinus: return from_minus(steps);
        case FamilyKind::Rational: throw InvalidInput("tableaux are defined for k families only");
        default: return steps;
    }
}

Outcome handle_path(const Input& input, const Options& o) {
    const StepSequence& d = input.steps;
    require_valid(d);
    const FamilyKind kind = input.family ? input.family->kind : kind_of(o);
    const bool family_known = o.family.has_value() || input.family.has_value();

    if (o.command == "sweep") {
        if (family_known) require_valid(d, resolve_family(input, o), {.permute_k = true});
        const StepSequence image = sweep(d);
        if (wants_json(input.form, o)) {
            nlohmann::json j{{"steps", image.values()}, {"family", nullptr}};
            try {
                const FamilySpec fam = infer_family(kind, image);
                if (validate(image, fam).ok) j["family"] = family_to_json(fam);
            } catch (const InvalidInput&) {
                if (family_known) throw;
            }
            return {j.dump()};
        }
        return {path_output(image, input.form, kind, o)};
    }
    if (o.command == "invert") {
        const FamilySpec family = resolve_family(input, o);
        return {path_output(invert(d, family), input.form, kind, o)};
    }
    if (o.command == "fill" || o.command == "rank") {
        const FamilySpec family = resolve_family(input, o);
        require_valid(d, family, {.permute_k = true});
        const Tableau t = fill(skeleton(d, family.kind));
        if (o.command == "fill") {
            if (o.format == "json")
                return {family.kind == FamilyKind::KPlus ? tableau_to_json(extend_plus(t)).dump()
                                                         : tableau_to_json(t).dump()};
            if (o.format == "ascii") return {render_tableau_ascii(t)};
            if (o.format == "svg") return {render_tableau_svg(t)};
            return {join_columns(as_ranks(t.columns()))};
        }
        const RankTableau r = rank(t);
        if (o.format == "json") return {rank_tableau_to_json(t, r).dump()};
        if (o.format == "ascii") return {render_tableau_ascii(t, r)};
        if (o.format == "svg") return {render_tableau_svg(t, r)};
        return {join_columns(r.columns)};
    }
    if (o.command == "walk") {
        const FamilySpec family = resolve_family(input, o);
        require_valid(d, family, {.permute_k = true});
        const WalkVariant variant = o.variant ? parse_walk_variant(*o.variant) : default_variant(family.kind);
        const SweepPermutation sigma = sweep_permutation(d, family.kind, variant);
        if (o.format == "json") return {sigma_to_json(sigma).dump()};
        std::vector<Rise> values(sigma.sigma.begin(), sigma.sigma.end());
        return {emit_steps(StepSequence(std::move(values)))};
    }
    if (o.command == "render") {
        if (o.tableau) {
            const FamilySpec family = resolve_family(input, o);
            const Tableau t = fill(skeleton(d, family.kind));
            std::optional<RankTableau> r;
            if (o.show_ranks) r = rank(t);
            return {o.format == "svg" ? render_tableau_svg(t, r) : render_tableau_ascii(t, r)};
        }
        if (o.format == "svg") return {render_path_svg(d)};
        if (o.format == "json") return {path_output(d, input.form, kind, o)};
        return {render_path_ascii(d)};
    }
    if (o.command == "verify") {
        const FamilySpec family = resolve_family(input, o);
        const StepSequence pre = invert(d, family);
        const StepSequence image = sweep(d);
        const bool forward = sweep(pre) == d;
        const bool backward = invert(image, family) == d;
        const bool ok = forward && backward;
        nlohmann::json j{{"steps", d.values()},
                         {"preimage", pre.values()},
                         {"sweep_of_preimage", forward},
                         {"preimage_of_sweep", backward},
                         {"round_trip", ok}};
        return {j.dump(), ok ? exit_ok : exit_verification_failed};
    }
    throw InvalidInput("unknown command " + o.command);
}

Outcome run_one(const std::string& raw, Form hint, const Options& o) {
    try {
        return handle_path(parse_object(raw, hint, o), o);
    } catch (const VerificationFailure& e) {
        return {std::string("error: ") + e.what(), exit_verification_failed, true};
    } catch (const InvalidInput& e) {
        return {std::string("error: ") + e.what(), exit_invalid_input, true};
    }
}

void write(std::ostream& os, const std::string& text) {
    os << text;
    if (text.empty() || text.back() != '\n') os << '\n';
}

int run_command(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    if (o.command == "enumerate") {
        const auto e = enumerate(family_for_enumeration(o),
                                 {.permute_k = o.permute, .single_zero_rank = false,
                                  .bounds = {o.max_n, o.max_k}});
        if (o.format == "json") {
            nlohmann::json paths = nlohmann::json::array();
            for (const auto& p : e.paths) paths.push_back(p.values());
            nlohmann::json j{{"family", family_to_json(e.family)},
                             {"permute", e.permuted},
                             {"count", e.paths.size()},
                             {"paths", paths}};
            write(out, j.dump());
        } else {
            for (const auto& p : e.paths) write(out, emit_path(p, Form::Steps, e.family.kind, o));
        }
        return exit_ok;
    }
    const bool has_path = o.steps || o.sw || o.file;
    if (o.command == "verify" && !has_path) {
        const auto report = certify_bijection(family_for_enumeration(o),
                                              {.permute_k = o.permute, .single_zero_rank = false,
                                               .bounds = {o.max_n, o.max_k}});
        write(out, report_to_json(report).dump());
        return report.bijection ? exit_ok : exit_verification_failed;
    }

    if (o.steps || o.sw) {
        const auto outcome = run_one(o.steps ? *o.steps : *o.sw, o.steps ? Form::Steps : Form::Sw, o);
        write(outcome.error ? err : out, outcome.text);
        return outcome.code;
    }

    std::ifstream file_stream;
    std::istream* source = &in;
    if (o.file) {
        file_stream.open(*o.file);
        if (!file_stream) throw InvalidInput("cannot open " + *o.file);
        source = &file_stream;
    }
    int code = exit_ok;
    std::string line;
    while (std::getline(*source, line)) {
        if (trim(line).empty()) continue;
        const auto outcome = run_one(line, Form::Steps, o);
        write(out, outcome.text);
        code = std::max(code, outcome.code);
    }
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Sweep map and its inverse on k-Dyck, k-plus and k-minus paths", "kdyck"};
    app.require_subcommand(1);
    Options o;

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"sweep", "apply the sweep map"},
        {"invert", "sweep preimage via the walking algorithms"},
        {"fill", "filling tableau T(D)"},
        {"rank", "rank tableau R(D)"},
        {"walk", "the walk permutation sigma(D)"},
        {"enumerate", "list every path of a family"},
        {"verify", "certify bijectivity of a family, or round-trip given paths"},
        {"render", "draw a path or its tableau as ASCII or SVG"},
    };
    const std::vector<std::string> families = {"k", "kplus", "kminus", "rational"};
    for (const auto& [name, description] : commands) {
        auto* sub = app.add_subcommand(name, description);
        sub->callback([&o, name = name] { o.command = name; });
        sub->add_option("--steps", o.steps, "comma-separated rises, e.g. 2,-1,-1");
        sub->add_option("--sw", o.sw, "SW-word, e.g. \"S2 W W\"");
        sub->add_option("--file", o.file, "batch input, one object per line");
        sub->add_option("--family", o.family, "path family")->check(CLI::IsMember(families));
        sub->add_option("--k", o.k, "k vector, e.g. 2,1,3")->delimiter(',');
        sub->add_option("--m", o.m, "rational family m");
        sub->add_option("--n", o.n, "rational family n");
        sub->add_option("--variant", o.variant, "walk variant")
            ->check(CLI::IsMember({"plain", "plus", "minus", "graph"}));
        sub->add_flag("--permute", o.permute, "close the family under permutations of k");
        sub->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"text", "json", "ascii", "svg"}));
        sub->add_option("--out", o.out, "write output to FILE");
        sub->add_flag("--rational", o.rational, "print plus/minus exponents as a+-1/n");
        sub->add_flag("--tableau", o.tableau, "render: draw T(D) instead of the path");
        sub->add_flag("--ranks", o.show_ranks, "render: overlay ranks on the tableau");
        sub->add_option("--max-n", o.max_n, "enumeration bound on n");
        sub->add_option("--max-k", o.max_k, "enumeration bound on k_i");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return exit_usage;
    }

    if ((o.command == "invert" || o.command == "enumerate" || o.command == "verify") && !o.family) {
        err << o.command << " needs --family\n" << app.help();
        return exit_usage;
    }
    if ((o.command == "enumerate" || (o.command == "verify" && !(o.steps || o.sw || o.file))) &&
        o.k.empty() && kind_of(o) != FamilyKind::Rational) {
        err << o.command << " needs --k\n";
        return exit_usage;
    }

    std::ofstream file_out;
    std::ostream* sink = &out;
    if (o.out) {
        file_out.open(*o.out);
        if (!file_out) {
            err << "cannot write " << *o.out << "\n";
            return exit_invalid_input;
        }
        sink = &file_out;
    }
    try {
        return run_command(o, in, *sink, err);
    } catch (const VerificationFailure& e) {
        err << "error: " << e.what() << "\n";
        return exit_verification_failed;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid_input;
    }
}

}  // namespace kdyck::cli
