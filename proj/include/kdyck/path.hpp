#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kdyck {

using Rise = std::int64_t;
using Rank = std::int64_t;
// Step positions and tableau entries are 1-based everywhere in the public API.
using Index = std::size_t;

// Input that fails a validator. The CLI maps this to exit code 1.
class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A structural check that should never fail (bijection, round trip). Exit code 2.
class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Diagnostic {
    bool ok = true;
    std::optional<Index> index;  // first offending position, 1-based
    std::string message;

    explicit operator bool() const { return ok; }

    static Diagnostic pass() { return {}; }
    static Diagnostic fail(std::string msg, std::optional<Index> at = std::nullopt) {
        return {false, at, std::move(msg)};
    }
};

// A general Dyck path written as the rise of each step in order.
class StepSequence {
public:
    StepSequence() = default;
    explicit StepSequence(std::vector<Rise> steps) : steps_(std::move(steps)) {}
    StepSequence(std::initializer_list<Rise> steps) : steps_(steps) {}

    std::size_t size() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }
    Rise operator[](std::size_t i) const { return steps_[i]; }
    // 1-based accessor matching the serialized convention.
    Rise at(Index position) const { return steps_.at(position - 1); }

    auto begin() const { return steps_.begin(); }
    auto end() const { return steps_.end(); }
    std::span<const Rise> view() const { return steps_; }
    const std::vector<Rise>& values() const { return steps_; }

    std::size_t up_count() const;
    std::size_t down_count() const { return size() - up_count(); }
    std::vector<Rise> up_rises() const;
    std::vector<Rise> down_rises() const;

    friend bool operator==(const StepSequence&, const StepSequence&) = default;
    friend auto operator<=>(const StepSequence&, const StepSequence&) = default;

private:
    std::vector<Rise> steps_;
};

class RankSequence {
public:
    RankSequence() = default;
    explicit RankSequence(std::vector<Rank> ranks) : ranks_(std::move(ranks)) {}

    std::size_t size() const { return ranks_.size(); }
    Rank operator[](std::size_t i) const { return ranks_[i]; }
    auto begin() const { return ranks_.begin(); }
    auto end() const { return ranks_.end(); }
    const std::vector<Rank>& values() const { return ranks_; }

    // Number of positions at rank 0.
    std::size_t zero_count() const;

    friend bool operator==(const RankSequence&, const RankSequence&) = default;

private:
    std::vector<Rank> ranks_;
};

enum class FamilyKind { K, KPlus, KMinus, Rational };

std::string to_string(FamilyKind kind);
FamilyKind parse_family_kind(const std::string& name);

// Describes which general Dyck paths are admissible.
//
// The plus/minus families have fractional up steps k_i +- 1/n. They are stored
// scaled by `scale` (= n), so up rises are scale*k_i +- 1 and every down step is
// -scale. Sweeping only compares ranks, so the scaling does not change the map.
struct FamilySpec {
    FamilyKind kind = FamilyKind::K;
    std::vector<Rise> k;  // K / KPlus / KMinus
    Rise m = 0;           // Rational
    Rise n = 0;           // Rational
    Rise scale = 1;

    static FamilySpec k_dyck(std::vector<Rise> k);
    static FamilySpec k_plus(std::vector<Rise> k);
    static FamilySpec k_minus(std::vector<Rise> k);
    static FamilySpec rational(Rise m, Rise n);

    std::size_t up_count() const;
    // Up rises in the order the family prescribes.
    std::vector<Rise> up_rises() const;
    Rise down_rise() const;  // magnitude of every down step

    // Same family kind with a reordered k vector (unchanged for Rational).
    FamilySpec with_k(std::vector<Rise> k) const;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// Recovers the family parameters of `kind` from the rises of a path. Throws
// InvalidInput when the rises do not fit the kind.
FamilySpec infer_family(FamilyKind kind, const StepSequence& steps);

// Dyck condition only: nonzero steps, nonnegative prefix sums, zero total.
Diagnostic validate(const StepSequence& steps);

struct ValidateOptions {
    // Accept any ordering of the family's up rises (the permutation closure).
    bool permute_k = false;
};

Diagnostic validate(const StepSequence& steps, const FamilySpec& family,
                    ValidateOptions options = {});

// Throws InvalidInput carrying the diagnostic if validation fails.
void require_valid(const StepSequence& steps);
void require_valid(const StepSequence& steps, const FamilySpec& family,
                   ValidateOptions options = {});

// Starting level of every step.
RankSequence ranks(const StepSequence& steps);

// D -> D+ : every up rise a becomes n*a+1, every down step -n, one down step appended.
StepSequence to_plus(const StepSequence& steps);

// D -> D- : defined on paths whose only zero rank is at position 1. Drops the final
// down step, up rises become n*a-1, down steps -n.
StepSequence to_minus(const StepSequence& steps);

// Inverse correspondences: the k-Dyck skeleton D of a scaled D+ or D- path.
StepSequence from_plus(const StepSequence& plus_steps);
StepSequence from_minus(const StepSequence& minus_steps);

}  // namespace kdyck
