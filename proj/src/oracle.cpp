#include "kdyck/oracle.hpp"

#include <algorithm>
#include <set>

#include "kdyck/sweep.hpp"
#include "kdyck/text_format.hpp"

namespace kdyck {

namespace {

void check_bounds(const FamilySpec& family, const EnumerationBounds& bounds) {
    const std::size_t n = family.up_count();
    if (n > bounds.max_n)
        throw InvalidInput("enumeration bound exceeded: n = " + std::to_string(n) + " > " +
                           std::to_string(bounds.max_n));
    if (family.kind == FamilyKind::Rational) {
        if (family.m > bounds.max_k * static_cast<Rise>(bounds.max_n))
            throw InvalidInput("enumeration bound exceeded: m = " + std::to_string(family.m));
        return;
    }
    for (Rise k : family.k)
        if (k > bounds.max_k)
            throw InvalidInput("enumeration bound exceeded: k_i = " + std::to_string(k) + " > " +
                               std::to_string(bounds.max_k));
}

// Appends every Dyck path with the given up rises (in order) and `downs` down
// steps of size `down`.
void interleave(const std::vector<Rise>& ups, std::size_t downs, Rise down,
                bool single_zero_rank, std::vector<StepSequence>& out) {
    std::vector<Rise> current;
    current.reserve(ups.size() + downs);
    auto rec = [&](auto&& self, std::size_t up_used, std::size_t down_used, Rise level) -> void {
        if (up_used == ups.size() && down_used == downs) {
            out.emplace_back(current);
            return;
        }
        if (up_used < ups.size()) {
            current.push_back(ups[up_used]);
            self(self, up_used + 1, down_used, level + ups[up_used]);
            current.pop_back();
        }
        // A later step starting at level 0 would be a second zero rank.
        const bool last = up_used == ups.size() && down_used + 1 == downs;
        const bool allowed = single_zero_rank ? level - down > 0 || (last && level == down)
                                              : level - down >= 0;
        if (down_used < downs && allowed) {
            current.push_back(-down);
            self(self, up_used, down_used + 1, level - down);
            current.pop_back();
        }
    };
    rec(rec, 0, 0, 0);
}

std::vector<std::vector<Rise>> orderings(const std::vector<Rise>& k, bool permute) {
    if (!permute) return {k};
    std::vector<Rise> sorted = k;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::vector<Rise>> out;
    do {
        out.push_back(sorted);
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    return out;
}

}  // namespace

FamilyEnumeration enumerate(const FamilySpec& family, EnumerateOptions options) {
    check_bounds(family, options.bounds);
    FamilyEnumeration result{family, options.permute_k && family.kind != FamilyKind::Rational, {}, {}};

    const Rise down = family.down_rise();
    const auto ks = family.kind == FamilyKind::Rational ? std::vector<std::vector<Rise>>{{}}
                                                        : orderings(family.k, result.permuted);
    for (const auto& k : ks) {
        const FamilySpec spec = family.with_k(k);
        const auto ups = spec.up_rises();
        Rise total = 0;
        for (Rise a : ups) total += a;
        if (total % down != 0) throw InvalidInput("family rises do not balance");
        const auto before = result.paths.size();
        interleave(ups, static_cast<std::size_t>(total / down), down, options.single_zero_rank,
                   result.paths);
        result.counts.emplace_back(k, result.paths.size() - before);
    }
    return result;
}

PreimageIndex::PreimageIndex(const FamilyEnumeration& domain) {
    for (const auto& p : domain.paths) preimages_[sweep(p)].push_back(p);
}

const StepSequence& PreimageIndex::invert(const StepSequence& image) const {
    const auto it = preimages_.find(image);
    if (it == preimages_.end())
        throw VerificationFailure("no preimage for " + emit_steps(image));
    if (it->second.size() != 1)
        throw VerificationFailure("multiple preimages for " + emit_steps(image));
    return it->second.front();
}

StepSequence brute_invert(const StepSequence& steps, const FamilySpec& family,
                          EnumerationBounds bounds) {
    require_valid(steps, family, {.permute_k = true});
    const auto domain = enumerate(family, {.permute_k = true, .single_zero_rank = false, .bounds = bounds});
    return PreimageIndex(domain).invert(steps);
}

CertificationReport certify_bijection(const FamilySpec& family, EnumerateOptions options) {
    const auto domain = enumerate(family, options);
    CertificationReport report{family, domain.permuted, domain.paths.size(), true, std::nullopt};

    const std::set<StepSequence> members(domain.paths.begin(), domain.paths.end());
    std::map<StepSequence, const StepSequence*> seen;
    for (const auto& p : domain.paths) {
        const StepSequence image = sweep(p);
        if (!validate(image)) {
            report.counterexample = Counterexample{"image is not a Dyck path", p, std::nullopt, image};
            break;
        }
        if (!members.contains(image)) {
            report.counterexample = Counterexample{"image outside the family", p, std::nullopt, image};
            break;
        }
        const auto [it, inserted] = seen.emplace(image, &p);
        if (!inserted) {
            report.counterexample = Counterexample{"two paths share an image", p, *it->second, image};
            break;
        }
    }
    report.bijection = !report.counterexample && seen.size() == members.size();
    return report;
}

nlohmann::json report_to_json(const CertificationReport& report) {
    nlohmann::json j;
    j["family"] = family_to_json(report.family);
    j["permute"] = report.permuted;
    j["count"] = report.count;
    j["bijection"] = report.bijection;
    if (report.counterexample) {
        const auto& c = *report.counterexample;
        nlohmann::json cj{{"reason", c.reason}, {"path", c.path.values()}};
        cj["other"] = c.other ? nlohmann::json(c.other->values()) : nlohmann::json(nullptr);
        cj["image"] = c.image ? nlohmann::json(c.image->values()) : nlohmann::json(nullptr);
        j["counterexample"] = cj;
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

}  // namespace kdyck
