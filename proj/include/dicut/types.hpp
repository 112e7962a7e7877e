#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dicut {

using Weight = std::int64_t;
// Intermediate products (scaled capacities, cut values near m*W) are computed
// in 128 bits; inputs are capped at parse time so results fit back in Weight.
using Wide = __int128;

// Failure codes shared across the library. Callers match on `code`.
enum class Err {
    EmptySide,
    SameVertex,
    NoVertexCut,
    BadNu,
    EmptyTerminals,
    NoEligibleTerminal,
    MissingParent,
    RootOnly,
    TooSmall,
    CompleteGraph,
    EmptyFarSet,
    NoFeasibleCut,
    TooLarge,
    NoFeasible,
    ParseError,
    WeightOutOfRange,
    SelfLoop,
    OutOfUniverse,
    NoCandidate,
    BadArgument,
};

const char* err_name(Err code);

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& message)
        : std::runtime_error(std::string(err_name(code)) + ": " + message), code_(code) {}

    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& message) { throw Error(code, message); }

// Exact rational, normalized with den >= 1. Epsilons are carried as rationals
// so that penalty capacities stay integral after scaling.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) fail(Err::BadArgument, "rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool operator==(const Rational&) const = default;
};

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

inline std::int64_t ceil_log2(std::uint64_t x) {
    if (x <= 1) return 0;
    std::int64_t k = 0;
    std::uint64_t v = 1;
    while (v < x) { v <<= 1; ++k; }
    return k;
}

inline std::int64_t floor_log2(std::uint64_t x) {
    std::int64_t k = -1;
    while (x) { x >>= 1; ++k; }
    return k;
}

}  // namespace dicut
