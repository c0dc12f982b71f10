#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace snark {

/// Exact rationals for flow values and flow numbers.
using Rational = boost::rational<std::int64_t>;

/// "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Parses "n" or "n/d"; throws std::invalid_argument on malformed text.
Rational parse_rational(const std::string& text);

}  // namespace snark
