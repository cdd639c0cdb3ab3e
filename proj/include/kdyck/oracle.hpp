#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kdyck/path.hpp"

namespace kdyck {

struct EnumerationBounds {
    std::size_t max_n = 5;
    Rise max_k = 4;
};

struct EnumerateOptions {
    // Union over every distinct reordering of k.
    bool permute_k = false;
    // Keep only paths whose rank sequence has a single zero (at position 1).
    bool single_zero_rank = false;
    EnumerationBounds bounds{};
};

struct FamilyEnumeration {
    FamilySpec family;
    bool permuted = false;
    std::vector<StepSequence> paths;
    // Number of paths contributed by each ordering of k, in enumeration order.
    std::vector<std::pair<std::vector<Rise>, std::size_t>> counts;
};

// Every path in the family, generated depth first with an up step tried
// before a down step and prefix sums pruned at zero.
FamilyEnumeration enumerate(const FamilySpec& family, EnumerateOptions options = {});

// Exhaustive sweep inverse over a finished enumeration.
class PreimageIndex {
public:
    explicit PreimageIndex(const FamilyEnumeration& domain);

    // Throws VerificationFailure on zero or several preimages.
    const StepSequence& invert(const StepSequence& image) const;
    std::size_t image_size() const { return preimages_.size(); }

private:
    std::map<StepSequence, std::vector<StepSequence>> preimages_;
};

// The unique preimage of `steps` under the sweep in the permutation closure of
// `family`, by enumerating the closure.
StepSequence brute_invert(const StepSequence& steps, const FamilySpec& family,
                          EnumerationBounds bounds = {});

struct Counterexample {
    std::string reason;
    StepSequence path;
    std::optional<StepSequence> other;  // second path with the same image
    std::optional<StepSequence> image;
};

struct CertificationReport {
    FamilySpec family;
    bool permuted = false;
    std::size_t count = 0;
    bool bijection = false;
    std::optional<Counterexample> counterexample;
};

// Checks that the sweep maps the enumerated family injectively into itself,
// which on a finite set means image = domain. Failures go into the report.
CertificationReport certify_bijection(const FamilySpec& family, EnumerateOptions options = {});

nlohmann::json report_to_json(const CertificationReport& report);

}  // namespace kdyck
