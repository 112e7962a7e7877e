#pragma once

#include <cstdint>

namespace dicut {

// Counter-based generator: output i of a stream is a pure function of
// (seed, stream, i), so trials can be re-derived in any order and the whole
// run replays bit-for-bit regardless of thread count.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(mix(mix(seed) ^ mix(stream ^ 0x9e3779b97f4a7c15ull))) {}

    std::uint64_t next() { return mix(key_ + 0x9e3779b97f4a7c15ull * ++counter_); }

    // Uniform over [0, bound). Rejection keeps the distribution exact.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) return 0;
        std::uint64_t limit = ~0ull - ~0ull % bound;
        std::uint64_t r = next();
        while (r >= limit) r = next();
        return r % bound;
    }

    // Integer in [lo, hi], inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool bernoulli_num_den(std::uint64_t num, std::uint64_t den) {
        if (num >= den) return true;
        return below(den) < num;
    }

    // Child stream independent of this one and of its siblings.
    RngStream derive(std::uint64_t child) const {
        RngStream out(0);
        out.key_ = mix(key_ ^ mix(child + 0x632be59bd9b4e019ull));
        out.counter_ = 0;
        return out;
    }

private:
    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace dicut
