#include "kdyck/sweep.hpp"

#include <algorithm>
#include <numeric>

namespace kdyck {

SweepOrder sweep_order(const StepSequence& steps) {
    require_valid(steps);
    const auto r = ranks(steps);
    std::vector<Index> order(steps.size());
    std::iota(order.begin(), order.end(), Index{1});
    std::sort(order.begin(), order.end(), [&r](Index a, Index b) {
        const Rank ra = r[a - 1];
        const Rank rb = r[b - 1];
        return ra != rb ? ra < rb : a > b;
    });
    return {std::move(order)};
}

StepSequence sweep(const StepSequence& steps) {
    const auto order = sweep_order(steps);
    std::vector<Rise> out;
    out.reserve(steps.size());
    for (Index p : order.order) out.push_back(steps.at(p));
    return StepSequence(std::move(out));
}

}  // namespace kdyck
