#pragma once

#include <algorithm>
#include <limits>
#include <random>
#include <vector>

#include "kdyck/path.hpp"
#include "kdyck/tableau.hpp"

namespace kdyck::testing {

// Running example: k = (2,4,5,3) and its sweep image.
inline StepSequence running_preimage() {
    return {2, -1, -1, 4, -1, 5, -1, -1, -1, -1, 3, -1, -1, -1, -1, -1, -1, -1};
}
inline StepSequence running_image() {
    return {4, 2, -1, -1, -1, -1, -1, 5, -1, 3, -1, -1, -1, -1, -1, -1, -1, -1};
}
inline std::vector<Rank> running_preimage_ranks() {
    return {0, 2, 1, 0, 4, 3, 8, 7, 6, 5, 4, 7, 6, 5, 4, 3, 2, 1};
}
inline Tableau running_tableau() {
    return Tableau({{1, 3, 5, 7, 9}, {2, 4, 6}, {8, 11, 13, 15, 17, 18}, {10, 12, 14, 16}});
}
inline std::vector<Index> running_sigma() {
    return {2, 6, 4, 1, 11, 8, 18, 17, 15, 13, 10, 16, 14, 12, 9, 7, 5, 3};
}
inline std::vector<Index> running_sigma_plus() {
    return {1, 10, 17, 15, 13, 11, 8, 19, 18, 16, 14, 12, 9, 6, 4, 2, 7, 5, 3};
}

// Rational (12,4) path in the S=+12, W=-4 model.
inline StepSequence rational_example() {
    return {12, 12, -4, -4, -4, -4, 12, -4, -4, -4, 12, -4, -4, -4, -4, -4};
}

// Reference sweep by repeated selection of the minimum (rank, -position).
// Quadratic and independent of the library's sort.
inline StepSequence reference_sweep(const StepSequence& steps) {
    std::vector<Rank> level(steps.size());
    Rank h = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        level[i] = h;
        h += steps[i];
    }
    std::vector<bool> used(steps.size(), false);
    std::vector<Rise> out;
    for (std::size_t round = 0; round < steps.size(); ++round) {
        std::size_t best = steps.size();
        for (std::size_t i = 0; i < steps.size(); ++i) {
            if (used[i]) continue;
            if (best == steps.size() || level[i] < level[best] ||
                (level[i] == level[best] && i > best))
                best = i;
        }
        used[best] = true;
        out.push_back(steps[best]);
    }
    return StepSequence(std::move(out));
}

// Random path with up rises `ups` in order and unit (or `down`) down steps.
// Descends whenever allowed with probability proportional to remaining downs.
inline StepSequence random_path(const std::vector<Rise>& ups, Rise down, std::mt19937_64& rng) {
    Rise total = 0;
    for (Rise a : ups) total += a;
    std::size_t downs_left = static_cast<std::size_t>(total / down);
    std::size_t next_up = 0;
    Rise level = 0;
    std::vector<Rise> out;
    while (next_up < ups.size() || downs_left > 0) {
        const std::size_t ups_left = ups.size() - next_up;
        bool go_down = false;
        if (ups_left == 0) {
            go_down = true;
        } else if (level - down >= 0 && downs_left > 0) {
            std::uniform_int_distribution<std::size_t> pick(0, ups_left + downs_left - 1);
            go_down = pick(rng) >= ups_left;
        }
        if (go_down) {
            out.push_back(-down);
            level -= down;
            --downs_left;
        } else {
            out.push_back(ups[next_up]);
            level += ups[next_up++];
        }
    }
    return StepSequence(std::move(out));
}

inline std::vector<Rise> random_k(std::size_t n, Rise max_k, std::mt19937_64& rng) {
    std::uniform_int_distribution<Rise> pick(1, max_k);
    std::vector<Rise> k(n);
    for (auto& x : k) x = pick(rng);
    return k;
}

// Sorted k vectors with n <= max_n and entries <= max_k (one per permutation class).
inline std::vector<std::vector<Rise>> multiset_grid(std::size_t max_n, Rise max_k) {
    std::vector<std::vector<Rise>> out;
    std::vector<Rise> current;
    auto rec = [&](auto&& self, Rise lowest) -> void {
        if (!current.empty()) out.push_back(current);
        if (current.size() == max_n) return;
        for (Rise v = lowest; v <= max_k; ++v) {
            current.push_back(v);
            self(self, v);
            current.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

}  // namespace kdyck::testing
