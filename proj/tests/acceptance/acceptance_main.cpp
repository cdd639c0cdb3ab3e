// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "invariants.hpp"

namespace {

using namespace kdyck;
using Clock = std::chrono::steady_clock;

struct Verdict {
    bool pass = false;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <class F>
double median_seconds(int reps, F&& f) {
    std::vector<double> t;
    for (int i = 0; i < reps; ++i) {
        const auto start = Clock::now();
        f();
        t.push_back(seconds_since(start));
    }
    std::nth_element(t.begin(), t.begin() + reps / 2, t.end());
    return t[reps / 2];
}

std::string ms(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f ms", s * 1e3);
    return buf;
}

Verdict golden_running_example() {
    const auto image = testing::running_image();
    const auto t = fill(image);
    const auto r = rank(t);
    const bool ok = invert(image, FamilyKind::K) == testing::running_preimage() &&
                    t.top_row() == std::vector<Index>{1, 2, 8, 10} &&
                    t.bottom_row() == std::vector<Index>{9, 6, 18, 16} &&
                    walk(t, r).sigma == testing::running_sigma() &&
                    ranks(invert(image, FamilyKind::K)).values() == testing::running_preimage_ranks();
    StepSequence sink;
    const double time = median_seconds(101, [&] { sink = invert(image, FamilyKind::K); });
    return {ok && time < 1e-3, "exact match " + std::string(ok ? "yes" : "no") + ", invert " + ms(time)};
}

Verdict golden_plus_example() {
    const auto t = testing::running_tableau();
    const bool full = walk_plus(extend_plus(t)).sigma == testing::running_sigma_plus();

    // Drop column 2, relabel 1..N', walk, and map the labels back.
    std::vector<Index> kept;
    std::vector<std::vector<Index>> cols;
    for (std::size_t c = 0; c < t.column_count(); ++c)
        if (c != 1) kept.insert(kept.end(), t.column(c).begin(), t.column(c).end());
    std::sort(kept.begin(), kept.end());
    for (std::size_t c = 0; c < t.column_count(); ++c) {
        if (c == 1) continue;
        std::vector<Index> col;
        for (Index v : t.column(c))
            col.push_back(static_cast<Index>(std::lower_bound(kept.begin(), kept.end(), v) - kept.begin()) + 1);
        cols.push_back(col);
    }
    std::vector<Index> got;
    for (Index v : walk_plus(extend_plus(Tableau(cols))).sigma)
        got.push_back(v == kept.size() + 1 ? t.entry_count() + 1 : kept[v - 1]);
    std::vector<Index> expected;
    for (Index v : testing::running_sigma_plus())
        if (v != 2 && v != 4 && v != 6) expected.push_back(v);
    const bool removed = got == expected;
    return {full && removed, std::string("full walk ") + (full ? "ok" : "differs") +
                                 ", column removal " + (removed ? "ok" : "differs")};
}

Verdict golden_rational_example() {
    const auto path = testing::rational_example();
    const bool word = emit_sw(to_sw(sweep(path))) == "S12 W W S12 S12 W W W S12 W W W W W W W";
    auto sorted = ranks(path).values();
    std::sort(sorted.begin(), sorted.end());
    const bool rks =
        sorted == std::vector<Rank>{0, 4, 8, 8, 8, 12, 12, 12, 12, 16, 16, 16, 20, 20, 20, 24};
    return {word && rks, std::string("word ") + (word ? "ok" : "differs") + ", ranks " +
                             (rks ? "ok" : "differ")};
}

constexpr FamilyKind kinds[] = {FamilyKind::K, FamilyKind::KPlus, FamilyKind::KMinus};

Verdict oracle_equivalence() {
    const auto start = Clock::now();
    std::size_t paths = 0, bad = 0;
    std::string first;
    for (auto kind : kinds)
        for (const auto& k : testing::multiset_grid(4, 3)) {
            if (!testing::has_family(kind, k)) continue;
            const auto [b, n] = testing::oracle_mismatches(kind, k, &first);
            bad += b;
            paths += n;
        }
    const double time = seconds_since(start);
    return {bad == 0 && time < 10.0, std::to_string(paths) + " paths, " + std::to_string(bad) +
                                         " mismatches, " + ms(time) + (first.empty() ? "" : ", first: " + first)};
}

Verdict certification() {
    std::size_t families = 0, failed = 0;
    std::string first;
    for (auto kind : kinds)
        for (const auto& k : testing::multiset_grid(4, 3)) {
            if (!testing::has_family(kind, k)) continue;
            const auto report = certify_bijection(testing::family_of(kind, k), {.permute_k = true});
            ++families;
            if (!report.bijection) {
                ++failed;
                if (first.empty()) first = report_to_json(report).dump();
            }
        }
    return {failed == 0, std::to_string(families) + " closures, " + std::to_string(failed) + " failed" +
                             (first.empty() ? "" : ", first: " + first)};
}

Verdict invariant_suite() {
    std::size_t paths = 0;
    for (const auto& k : testing::multiset_grid(4, 3))
        for (const auto& p : enumerate(FamilySpec::k_dyck(k), {.permute_k = true}).paths) {
            ++paths;
            if (auto broken = testing::check_invariants(p)) return {false, *broken};
        }
    return {true, std::to_string(paths) + " paths"};
}

// Random k-paths with n <= 200 and |k| <= 2000. Timing compares invert with a
// std::sort of the path's (rank, -position) keys, both as medians.
Verdict large_round_trips() {
    std::mt19937_64 rng(2024);
    std::size_t failures = 0;
    double worst_ratio = 0;
    std::size_t longest = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng() % 200;
        const Rise max_k = std::max<Rise>(1, 2000 / static_cast<Rise>(n));
        const auto k = testing::random_k(n, max_k, rng);
        const auto d = testing::random_path(k, 1, rng);
        longest = std::max(longest, d.size());
        StepSequence pre;
        const double invert_time = median_seconds(9, [&] { pre = invert(d, FamilyKind::K); });
        if (sweep(pre) != d || invert(sweep(d), FamilyKind::K) != d) ++failures;

        const auto rk = ranks(d).values();
        std::vector<std::pair<Rank, std::ptrdiff_t>> keys(rk.size());
        const double sort_time = median_seconds(9, [&] {
            for (std::size_t i = 0; i < rk.size(); ++i)
                keys[i] = {rk[i], -static_cast<std::ptrdiff_t>(i)};
            std::sort(keys.begin(), keys.end());
        });
        if (d.size() >= 1000) worst_ratio = std::max(worst_ratio, invert_time / sort_time);
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu round-trip failures, longest path %zu, worst invert/sort %.2fx",
                  failures, longest, worst_ratio);
    return {failures == 0 && worst_ratio <= 10.0, buf};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"1 golden running example", golden_running_example},
        {"2 golden plus example", golden_plus_example},
        {"3 golden rational example", golden_rational_example},
        {"4 oracle equivalence", oracle_equivalence},
        {"5 bijectivity certification", certification},
        {"6 invariant suite", invariant_suite},
        {"7 large random round trips", large_round_trips},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s %s: %s\n", v.pass ? "PASS" : "FAIL", name.c_str(), v.detail.c_str());
        if (!v.pass) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
