#pragma once

#include <vector>

#include "kdyck/path.hpp"

namespace kdyck {

// Order in which the sweep reads the steps: by starting rank ascending, and
// right to left among steps that start at the same rank. Positions are 1-based.
struct SweepOrder {
    std::vector<Index> order;

    friend bool operator==(const SweepOrder&, const SweepOrder&) = default;
};

SweepOrder sweep_order(const StepSequence& steps);

// The sweep map. Defined for every valid general Dyck path.
StepSequence sweep(const StepSequence& steps);

}  // namespace kdyck
