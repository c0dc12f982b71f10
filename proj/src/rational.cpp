#include "snark/rational.hpp"

#include <charconv>
#include <stdexcept>

namespace snark {

namespace {

std::int64_t parse_int(std::string_view s, const std::string& whole) {
    std::int64_t v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end || s.empty()) throw std::invalid_argument("bad rational " + whole);
    return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text, text));
    const auto den = parse_int(std::string_view(text).substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator in " + text);
    return Rational(parse_int(std::string_view(text).substr(0, slash), text), den);
}

}  // namespace snark
