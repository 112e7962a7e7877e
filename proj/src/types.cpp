#include "dicut/types.hpp"

#include <cctype>

namespace dicut {

const char* err_name(Err code) {
    switch (code) {
        case Err::EmptySide: return "EmptySide";
        case Err::SameVertex: return "SameVertex";
        case Err::NoVertexCut: return "NoVertexCut";
        case Err::BadNu: return "BadNu";
        case Err::EmptyTerminals: return "EmptyTerminals";
        case Err::NoEligibleTerminal: return "NoEligibleTerminal";
        case Err::MissingParent: return "MissingParent";
        case Err::RootOnly: return "RootOnly";
        case Err::TooSmall: return "TooSmall";
        case Err::CompleteGraph: return "CompleteGraph";
        case Err::EmptyFarSet: return "EmptyFarSet";
        case Err::NoFeasibleCut: return "NoFeasibleCut";
        case Err::TooLarge: return "TooLarge";
        case Err::NoFeasible: return "NoFeasible";
        case Err::ParseError: return "ParseError";
        case Err::WeightOutOfRange: return "WeightOutOfRange";
        case Err::SelfLoop: return "SelfLoop";
        case Err::OutOfUniverse: return "OutOfUniverse";
        case Err::NoCandidate: return "NoCandidate";
        case Err::BadArgument: return "BadArgument";
    }
    return "Unknown";
}

namespace {

std::int64_t parse_int64(const std::string& text, const char* what) {
    if (text.empty()) fail(Err::BadArgument, std::string("empty ") + what);
    std::size_t pos = 0;
    std::int64_t value = 0;
    try {
        value = std::stoll(text, &pos);
    } catch (const std::exception&) {
        fail(Err::BadArgument, std::string("bad ") + what + ": " + text);
    }
    if (pos != text.size()) fail(Err::BadArgument, std::string("bad ") + what + ": " + text);
    return value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::int64_t p = parse_int64(text.substr(0, slash), "numerator");
        std::int64_t q = parse_int64(text.substr(slash + 1), "denominator");
        return Rational(p, q);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(parse_int64(text, "rational"), 1);
    std::string intPart = text.substr(0, dot);
    std::string fracPart = text.substr(dot + 1);
    if (fracPart.empty() || fracPart.size() > 18) fail(Err::BadArgument, "bad decimal: " + text);
    for (char c : fracPart)
        if (!std::isdigit(static_cast<unsigned char>(c))) fail(Err::BadArgument, "bad decimal: " + text);
    std::int64_t den = 1;
    for (std::size_t i = 0; i < fracPart.size(); ++i) den *= 10;
    std::int64_t whole = intPart.empty() || intPart == "-" ? 0 : parse_int64(intPart, "rational");
    bool negative = !intPart.empty() && intPart[0] == '-';
    std::int64_t frac = parse_int64(fracPart, "rational");
    std::int64_t num = (negative ? -1 : 1) * ((negative ? -whole : whole) * den + frac);
    return Rational(num, den);
}

std::string to_string(const Rational& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

}  // namespace dicut
