#include "dicut/weight_transform.hpp"

namespace dicut {

RescalePlan build_rescale_plan(const std::vector<Weight>& weights, Weight maxWeight, Rational eps) {
    if (eps.num <= 0 || eps.num >= eps.den) fail(Err::BadArgument, "eps must lie in (0,1)");
    if (weights.empty()) fail(Err::BadArgument, "empty universe");
    for (Weight w : weights)
        if (w < 1 || w > maxWeight) fail(Err::WeightOutOfRange, "weight outside [1, W]");

    RescalePlan plan;
    plan.universeSize = static_cast<std::int64_t>(weights.size());
    Wide cap = static_cast<Wide>(maxWeight) * plan.universeSize + 1;
    plan.z = static_cast<int>(ceil_log2(static_cast<std::uint64_t>(cap)));

    // smallest power of two with wPrime * p > 4 |U| q, kept exact in integers
    Wide bound = static_cast<Wide>(4) * plan.universeSize * eps.den;
    Weight wPrime = 1;
    while (static_cast<Wide>(wPrime) * eps.num <= bound) wPrime <<= 1;
    plan.wPrime = wPrime;

    plan.families.resize(static_cast<std::size_t>(plan.z));
    for (int i = 1; i <= plan.z; ++i) {
        auto& family = plan.families[static_cast<std::size_t>(i) - 1];
        family.resize(weights.size());
        for (std::size_t e = 0; e < weights.size(); ++e) {
            Weight w = weights[e];
            bool belowThreshold = i + 2 >= 62 || w < (Weight{1} << (i + 2));
            if (belowThreshold) {
                family[e] = static_cast<Weight>((static_cast<Wide>(w) * plan.wPrime) >> (i + 2));
            } else {
                family[e] = plan.wPrime;
            }
        }
    }
    return plan;
}

std::vector<Weight> lift_zero_weights(const std::vector<Weight>& weights, std::int64_t n) {
    Wide factor = static_cast<Wide>(4) * n * n;
    std::vector<Weight> out(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] < 0) fail(Err::WeightOutOfRange, "negative weight");
        Wide lifted = factor * weights[i] + 1;
        if (lifted > static_cast<Wide>(std::int64_t{1} << 62))
            fail(Err::WeightOutOfRange, "lifted weight exceeds the supported range");
        out[i] = static_cast<Weight>(lifted);
    }
    return out;
}

}  // namespace dicut
