#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace cattab {

// Exact arithmetic carriers. Counts (c_k, d_k, f_k) use Integer; all model
// evaluation happens over Rational, which keeps values reduced with a
// positive denominator.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact binomial coefficient; requires r <= n.
Integer binomial(unsigned n, unsigned r);

// Canonical text forms: "p" for integers, "p/q" otherwise, q > 0.
std::string to_text(const Integer& value);
std::string to_text(const Rational& value);

// Parses "p" or "p/q" (optional leading '-'). Throws std::invalid_argument
// on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

// Deterministic 64-bit generator (splitmix64). Used wherever seeded,
// platform-independent sampling is required; std:: distributions are
// not reproducible across standard libraries.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform-ish value in [0, bound); bound must be nonzero. Modulo bias is
    // irrelevant at the tiny bounds used here.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

// Random rational with |numerator| <= 999 and denominator in 1..999.
Rational sample_rational(SplitMix64& rng, bool nonzero);

}  // namespace cattab
