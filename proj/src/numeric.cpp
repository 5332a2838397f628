#include "cattab/numeric.hpp"

#include <stdexcept>

namespace cattab {

Integer binomial(unsigned n, unsigned r) {
    if (r > n) throw std::invalid_argument("binomial: r exceeds n");
    if (r > n - r) r = n - r;
    Integer result = 1;
    // Multiply/divide in lockstep; each intermediate quotient is exact.
    for (unsigned i = 1; i <= r; ++i) {
        result *= n - r + i;
        result /= i;
    }
    return result;
}

std::string to_text(const Integer& value) { return value.str(); }

std::string to_text(const Rational& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

namespace {

Integer parse_integer(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("rational: empty integer part");
    std::size_t start = text[0] == '-' ? 1 : 0;
    if (start == text.size()) throw std::invalid_argument("rational: sign without digits");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("rational: unexpected character '" +
                                        std::string(1, text[i]) + "'");
    }
    return Integer(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const Integer num = parse_integer(text.substr(0, slash));
    const Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    return Rational(num, den);
}

Rational sample_rational(SplitMix64& rng, bool nonzero) {
    for (;;) {
        const std::int64_t num = static_cast<std::int64_t>(rng.next_below(1999)) - 999;
        if (nonzero && num == 0) continue;
        const std::int64_t den = static_cast<std::int64_t>(rng.next_below(999)) + 1;
        return Rational(num, den);
    }
}

}  // namespace cattab
