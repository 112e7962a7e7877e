#include "dicut/sampling.hpp"

#include <algorithm>

namespace dicut {

TerminalSet pick_terminals(const WeightedDigraph& g, std::int64_t nu, const VertexSet& forbidden,
                           RngStream& rng) {
    std::int64_t m = g.arc_count();
    if (nu < 1 || nu > m) fail(Err::BadNu, "nu must lie in [1, m]");
    std::int64_t draws = 2 * m / nu;
    std::vector<char> banned = forbidden.mask(g.vertex_count());

    for (int attempt = 0; attempt < 16; ++attempt) {
        std::vector<char> picked(static_cast<std::size_t>(g.vertex_count()), 0);
        bool any = false;
        for (std::int64_t i = 0; i < draws; ++i) {
            int e = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
            int tail = g.arc(e).tail;
            if (!banned[static_cast<std::size_t>(tail)]) {
                picked[static_cast<std::size_t>(tail)] = 1;
                any = true;
            }
        }
        if (any) return TerminalSet{VertexSet::from_mask(picked), nu, forbidden};
    }
    // All sampled tails were forbidden; keep the non-emptiness contract with
    // the least eligible vertex of positive out-degree.
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!banned[static_cast<std::size_t>(v)] && g.out_degree(v) > 0)
            return TerminalSet{VertexSet({v}), nu, forbidden};
    fail(Err::NoEligibleTerminal, "every positive-out-degree vertex is forbidden");
}

EstimateContext guess_estimates(EstimateMode mode, const WeightedDigraph& g, RngStream& rng) {
    if (g.vertex_count() == 0 || g.arc_count() == 0) fail(Err::BadArgument, "empty graph");
    std::int64_t m = g.arc_count();
    std::int64_t n = g.vertex_count();
    Weight w = std::max<Weight>(1, g.max_weight());
    Wide optCap = mode == EstimateMode::Edge ? static_cast<Wide>(m) * w : static_cast<Wide>(n) * w;

    std::int64_t optChoices = floor_log2(static_cast<std::uint64_t>(optCap)) + 1;
    std::int64_t volChoices = floor_log2(static_cast<std::uint64_t>(m)) + 1;

    EstimateContext ctx;
    ctx.optEstimate = Weight{1} << rng.below(static_cast<std::uint64_t>(optChoices));
    ctx.volEstimate = std::int64_t{1} << rng.below(static_cast<std::uint64_t>(volChoices));
    return ctx;
}

BatchHierarchy build_batch_hierarchy(const TerminalSet& terminals) {
    const std::vector<int>& order = terminals.terminals.ids();
    if (order.empty()) fail(Err::EmptyTerminals, "hierarchy needs at least one terminal");
    BatchHierarchy h;
    h.z = static_cast<int>(ceil_log2(order.size()));
    h.levels.resize(static_cast<std::size_t>(h.z) + 1);
    h.parent.resize(static_cast<std::size_t>(h.z) + 1);
    h.levels[0] = {order};
    h.parent[0] = {-1};
    for (int i = 1; i <= h.z; ++i) {
        auto& level = h.levels[static_cast<std::size_t>(i)];
        auto& par = h.parent[static_cast<std::size_t>(i)];
        const auto& prev = h.levels[static_cast<std::size_t>(i) - 1];
        for (std::size_t j = 0; j < prev.size(); ++j) {
            const std::vector<int>& batch = prev[j];
            if (batch.size() == 1) {
                level.push_back(batch);
                par.push_back(static_cast<int>(j));
                continue;
            }
            std::size_t half = (batch.size() + 1) / 2;
            level.emplace_back(batch.begin(), batch.begin() + static_cast<std::ptrdiff_t>(half));
            par.push_back(static_cast<int>(j));
            level.emplace_back(batch.begin() + static_cast<std::ptrdiff_t>(half), batch.end());
            par.push_back(static_cast<int>(j));
        }
    }
    return h;
}

EstimateContext make_injected_context(const WeightedDigraph& g, EstimateMode mode, Weight optEstimate,
                                      std::int64_t volEstimate, const VertexSet& terminals,
                                      const VertexSet& forbidden) {
    std::int64_t m = g.arc_count();
    std::int64_t n = g.vertex_count();
    Weight w = std::max<Weight>(1, g.max_weight());
    Wide optCap = mode == EstimateMode::Edge ? static_cast<Wide>(m) * w : static_cast<Wide>(n) * w;
    if (optEstimate < 1 || static_cast<Wide>(optEstimate) > optCap ||
        (optEstimate & (optEstimate - 1)) != 0)
        fail(Err::BadArgument, "injected optEstimate must be a power of two in range");
    if (volEstimate < 1 || volEstimate > m || (volEstimate & (volEstimate - 1)) != 0)
        fail(Err::BadArgument, "injected volEstimate must be a power of two in [1, m]");
    if (terminals.empty()) fail(Err::EmptyTerminals, "injected terminal set is empty");
    if (terminals.size() > 2 * m / volEstimate)
        fail(Err::BadArgument, "injected terminal set exceeds 2m/nu");
    for (int v : terminals.ids()) {
        if (v < 0 || v >= g.vertex_count()) fail(Err::BadArgument, "injected terminal out of range");
        if (forbidden.contains(v)) fail(Err::BadArgument, "injected terminal is forbidden");
    }
    EstimateContext ctx;
    ctx.optEstimate = optEstimate;
    ctx.volEstimate = volEstimate;
    ctx.terminals = TerminalSet{terminals, volEstimate, forbidden};
    ctx.z = static_cast<int>(ceil_log2(terminals.ids().size()));
    ctx.injected = true;
    return ctx;
}

}  // namespace dicut
