#include "kdyck/path.hpp"

#include <algorithm>
#include <numeric>

namespace kdyck {

std::size_t StepSequence::up_count() const {
    return static_cast<std::size_t>(
        std::count_if(steps_.begin(), steps_.end(), [](Rise a) { return a > 0; }));
}

std::vector<Rise> StepSequence::up_rises() const {
    std::vector<Rise> out;
    for (Rise a : steps_)
        if (a > 0) out.push_back(a);
    return out;
}

std::vector<Rise> StepSequence::down_rises() const {
    std::vector<Rise> out;
    for (Rise a : steps_)
        if (a < 0) out.push_back(-a);
    return out;
}

std::size_t RankSequence::zero_count() const {
    return static_cast<std::size_t>(std::count(ranks_.begin(), ranks_.end(), Rank{0}));
}

std::string to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::K: return "k";
        case FamilyKind::KPlus: return "kplus";
        case FamilyKind::KMinus: return "kminus";
        case FamilyKind::Rational: return "rational";
    }
    return "?";
}

FamilyKind parse_family_kind(const std::string& name) {
    if (name == "k") return FamilyKind::K;
    if (name == "kplus") return FamilyKind::KPlus;
    if (name == "kminus") return FamilyKind::KMinus;
    if (name == "rational") return FamilyKind::Rational;
    throw InvalidInput("unknown family kind '" + name + "'");
}

namespace {

void check_k(const std::vector<Rise>& k) {
    if (k.empty()) throw InvalidInput("k must have at least one entry");
    for (Rise x : k)
        if (x <= 0) throw InvalidInput("k entries must be positive");
}

}  // namespace

FamilySpec FamilySpec::k_dyck(std::vector<Rise> k) {
    check_k(k);
    return {FamilyKind::K, std::move(k), 0, 0, 1};
}

FamilySpec FamilySpec::k_plus(std::vector<Rise> k) {
    check_k(k);
    const auto n = static_cast<Rise>(k.size());
    return {FamilyKind::KPlus, std::move(k), 0, 0, n};
}

FamilySpec FamilySpec::k_minus(std::vector<Rise> k) {
    check_k(k);
    const auto n = static_cast<Rise>(k.size());
    for (Rise x : k)
        if (n * x - 1 <= 0)
            throw InvalidInput("k-minus family needs n*k_i > 1 (no zero-length up steps)");
    return {FamilyKind::KMinus, std::move(k), 0, 0, n};
}

FamilySpec FamilySpec::rational(Rise m, Rise n) {
    if (m <= 0 || n <= 0) throw InvalidInput("rational family needs positive m and n");
    return {FamilyKind::Rational, {}, m, n, 1};
}

std::size_t FamilySpec::up_count() const {
    return kind == FamilyKind::Rational ? static_cast<std::size_t>(n) : k.size();
}

std::vector<Rise> FamilySpec::up_rises() const {
    if (kind == FamilyKind::Rational) return std::vector<Rise>(static_cast<std::size_t>(n), m);
    std::vector<Rise> out;
    out.reserve(k.size());
    for (Rise x : k) {
        switch (kind) {
            case FamilyKind::KPlus: out.push_back(scale * x + 1); break;
            case FamilyKind::KMinus: out.push_back(scale * x - 1); break;
            default: out.push_back(x); break;
        }
    }
    return out;
}

Rise FamilySpec::down_rise() const {
    switch (kind) {
        case FamilyKind::K: return 1;
        case FamilyKind::Rational: return n;
        default: return scale;
    }
}

FamilySpec FamilySpec::with_k(std::vector<Rise> other) const {
    FamilySpec out = *this;
    if (kind != FamilyKind::Rational) out.k = std::move(other);
    return out;
}

FamilySpec infer_family(FamilyKind kind, const StepSequence& steps) {
    const auto ups = steps.up_rises();
    if (ups.empty()) throw InvalidInput("path has no up steps");
    const auto n = static_cast<Rise>(ups.size());
    std::vector<Rise> k;
    k.reserve(ups.size());
    switch (kind) {
        case FamilyKind::K:
            return FamilySpec::k_dyck(ups);
        case FamilyKind::KPlus:
            for (Rise a : ups) {
                if ((a - 1) % n != 0 || a - 1 <= 0)
                    throw InvalidInput("up rise " + std::to_string(a) + " is not n*k+1 with n=" +
                                       std::to_string(n));
                k.push_back((a - 1) / n);
            }
            return FamilySpec::k_plus(std::move(k));
        case FamilyKind::KMinus:
            for (Rise a : ups) {
                if ((a + 1) % n != 0)
                    throw InvalidInput("up rise " + std::to_string(a) + " is not n*k-1 with n=" +
                                       std::to_string(n));
                k.push_back((a + 1) / n);
            }
            return FamilySpec::k_minus(std::move(k));
        case FamilyKind::Rational: {
            const Rise m = ups.front();
            if (std::any_of(ups.begin(), ups.end(), [m](Rise a) { return a != m; }))
                throw InvalidInput("rational path needs equal up rises");
            return FamilySpec::rational(m, n);
        }
    }
    throw InvalidInput("unknown family kind");
}

Diagnostic validate(const StepSequence& steps) {
    if (steps.empty()) return Diagnostic::fail("empty path");
    Rise level = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i] == 0) return Diagnostic::fail("zero rise", i + 1);
        level += steps[i];
        if (level < 0)
            return Diagnostic::fail("path goes below the axis (prefix sum " +
                                        std::to_string(level) + ")",
                                    i + 1);
    }
    if (level != 0)
        return Diagnostic::fail("path ends at level " + std::to_string(level), steps.size());
    return Diagnostic::pass();
}

Diagnostic validate(const StepSequence& steps, const FamilySpec& family,
                    ValidateOptions options) {
    if (auto d = validate(steps); !d) return d;

    const Rise down = family.down_rise();
    std::vector<Rise> expected = family.up_rises();
    std::size_t up_seen = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const Rise a = steps[i];
        if (a < 0) {
            if (a != -down)
                return Diagnostic::fail("down rise " + std::to_string(a) + ", expected " +
                                            std::to_string(-down),
                                        i + 1);
            continue;
        }
        if (up_seen >= expected.size())
            return Diagnostic::fail("too many up steps", i + 1);
        if (!options.permute_k && a != expected[up_seen])
            return Diagnostic::fail("up rise " + std::to_string(a) + ", expected " +
                                        std::to_string(expected[up_seen]),
                                    i + 1);
        ++up_seen;
    }
    if (up_seen != expected.size())
        return Diagnostic::fail("expected " + std::to_string(expected.size()) +
                                " up steps, found " + std::to_string(up_seen));
    if (options.permute_k) {
        auto got = steps.up_rises();
        std::sort(got.begin(), got.end());
        std::sort(expected.begin(), expected.end());
        if (got != expected) return Diagnostic::fail("up rises are not a permutation of the family's");
    }
    return Diagnostic::pass();
}

namespace {

[[noreturn]] void raise(const Diagnostic& d) {
    std::string msg = "invalid path";
    if (d.index) msg += " at index " + std::to_string(*d.index);
    msg += ": " + d.message;
    throw InvalidInput(msg);
}

}  // namespace

void require_valid(const StepSequence& steps) {
    if (auto d = validate(steps); !d) raise(d);
}

void require_valid(const StepSequence& steps, const FamilySpec& family, ValidateOptions options) {
    if (auto d = validate(steps, family, options); !d) raise(d);
}

RankSequence ranks(const StepSequence& steps) {
    std::vector<Rank> out(steps.size());
    Rank level = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        out[i] = level;
        level += steps[i];
    }
    return RankSequence(std::move(out));
}

namespace {

void require_unit_downs(const StepSequence& steps) {
    require_valid(steps);
    for (std::size_t i = 0; i < steps.size(); ++i)
        if (steps[i] < -1) throw InvalidInput("expected unit down steps at index " + std::to_string(i + 1));
}

}  // namespace

StepSequence to_plus(const StepSequence& steps) {
    require_unit_downs(steps);
    const auto n = static_cast<Rise>(steps.up_count());
    std::vector<Rise> out;
    out.reserve(steps.size() + 1);
    for (Rise a : steps) out.push_back(a > 0 ? n * a + 1 : -n);
    out.push_back(-n);
    return StepSequence(std::move(out));
}

StepSequence to_minus(const StepSequence& steps) {
    require_unit_downs(steps);
    const auto r = ranks(steps);
    for (std::size_t i = 1; i < r.size(); ++i)
        if (r[i] == 0)
            throw InvalidInput("path has a second zero rank at index " + std::to_string(i + 1) +
                               "; D -> D- needs a single zero rank");
    const auto n = static_cast<Rise>(steps.up_count());
    std::vector<Rise> out;
    out.reserve(steps.size() - 1);
    for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
        const Rise a = steps[i];
        out.push_back(a > 0 ? n * a - 1 : -n);
    }
    if (std::any_of(out.begin(), out.end(), [](Rise a) { return a == 0; }))
        throw InvalidInput("D -> D- would create a zero-length up step (n = k_i = 1)");
    return StepSequence(std::move(out));
}

StepSequence from_plus(const StepSequence& plus_steps) {
    require_valid(plus_steps, infer_family(FamilyKind::KPlus, plus_steps));
    const auto n = static_cast<Rise>(plus_steps.up_count());
    std::vector<Rise> out;
    out.reserve(plus_steps.size() - 1);
    for (std::size_t i = 0; i + 1 < plus_steps.size(); ++i) {
        const Rise a = plus_steps[i];
        out.push_back(a > 0 ? (a - 1) / n : -1);
    }
    return StepSequence(std::move(out));
}

StepSequence from_minus(const StepSequence& minus_steps) {
    require_valid(minus_steps, infer_family(FamilyKind::KMinus, minus_steps));
    const auto n = static_cast<Rise>(minus_steps.up_count());
    std::vector<Rise> out;
    out.reserve(minus_steps.size() + 1);
    for (Rise a : minus_steps) out.push_back(a > 0 ? (a + 1) / n : -1);
    out.push_back(-1);
    return StepSequence(std::move(out));
}

}  // namespace kdyck
