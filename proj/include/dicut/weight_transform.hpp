#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "dicut/types.hpp"

namespace dicut {

// Reduced-weight instance family: family i mimics the original instance when
// the optimum lies in [2^i, 2^{i+1}). Element weights are w_i(e) =
// floor(w(e) * W' / 2^{i+2}) when w(e) < 2^{i+2}, and W' otherwise; the floor
// may produce 0, and solvers for the sub-instances must accept zero weights.
struct RescalePlan {
    int z = 0;                                 // ceil(log2(W*|U| + 1))
    Weight wPrime = 2;                         // smallest power of two > 4|U|/eps
    std::int64_t universeSize = 0;
    std::vector<std::vector<Weight>> families; // families[i-1] holds w_i
};

RescalePlan build_rescale_plan(const std::vector<Weight>& weights, Weight maxWeight, Rational eps);

template <typename Solution>
struct RescaleOutcome {
    Solution best;
    Weight value = 0;      // under the original weights
    int chosenIndex = 0;   // 1-based family index of the winner
    bool fellBack = false; // every val_i(F_i) reached W'
};

struct RescaleCandidateRange {
    int lo = 1;
    int hi = 1;
    bool fellBack = false;
};

// i* is the smallest family whose solution scores below W'; the candidates
// are {i*, i*+1, i*+2} clamped to [1, z]. With no such family every
// candidate is kept (the fallback rule).
inline RescaleCandidateRange pick_rescale_candidates(const std::vector<Weight>& scaledValues,
                                                     Weight wPrime) {
    RescaleCandidateRange range;
    int z = static_cast<int>(scaledValues.size());
    int iStar = 0;
    for (int i = 1; i <= z; ++i)
        if (scaledValues[static_cast<std::size_t>(i) - 1] < wPrime) { iStar = i; break; }
    if (iStar == 0) {
        range.lo = 1;
        range.hi = z;
        range.fellBack = true;
    } else {
        range.lo = iStar;
        range.hi = std::min(z, iStar + 2);
    }
    return range;
}

// Runs the inner solver once per family, locates the smallest i with
// val_i(F_i) < W', and returns the best of F_{i*}, F_{i*+1}, F_{i*+2} under
// the original weights. When a (1+eps)-approximate solver is supplied the
// winner is (1+2eps)-approximate. If no family scores below W', falls back
// to the best of all z candidates.
//
// Solver: (int i, const std::vector<Weight>& wi, Weight wPrime) -> Solution
// Elements: (const Solution&) -> indices into the universe (the set Q)
template <typename Solution, typename Solver, typename Elements>
RescaleOutcome<Solution> solve_with_rescale(const std::vector<Weight>& weights, Weight maxWeight,
                                            Rational eps, Solver&& solve, Elements&& elements) {
    RescalePlan plan = build_rescale_plan(weights, maxWeight, eps);
    std::vector<Solution> candidates;
    candidates.reserve(static_cast<std::size_t>(plan.z));
    std::vector<Weight> scaledValues(static_cast<std::size_t>(plan.z), 0);
    for (int i = 1; i <= plan.z; ++i) {
        const std::vector<Weight>& wi = plan.families[static_cast<std::size_t>(i) - 1];
        candidates.push_back(solve(i, wi, plan.wPrime));
        Wide vi = 0;
        for (int e : elements(candidates.back())) vi += wi[static_cast<std::size_t>(e)];
        scaledValues[static_cast<std::size_t>(i) - 1] =
            static_cast<Weight>(vi > static_cast<Wide>(plan.wPrime) ? static_cast<Wide>(plan.wPrime) : vi);
    }

    RescaleCandidateRange range = pick_rescale_candidates(scaledValues, plan.wPrime);

    auto originalValue = [&](const Solution& sol) {
        Wide v = 0;
        for (int e : elements(sol)) v += weights[static_cast<std::size_t>(e)];
        return static_cast<Weight>(v);
    };

    RescaleOutcome<Solution> out;
    out.fellBack = range.fellBack;
    bool have = false;
    for (int i = range.lo; i <= range.hi; ++i) {
        Weight v = originalValue(candidates[static_cast<std::size_t>(i) - 1]);
        if (!have || v < out.value) {
            have = true;
            out.value = v;
            out.chosenIndex = i;
            out.best = candidates[static_cast<std::size_t>(i) - 1];
        }
    }
    if (!have) fail(Err::NoCandidate, "rescale produced no candidate");
    return out;
}

// w'(v) = 4 n^2 w(v) + 1; optimal cuts under w' are optimal under w, and a
// (1+eps/2)-approximate solve on w' is (1+eps)-approximate on w.
std::vector<Weight> lift_zero_weights(const std::vector<Weight>& weights, std::int64_t n);

}  // namespace dicut
