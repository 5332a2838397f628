#pragma once

#include "cattab/numeric.hpp"

#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cattab {

// Thrown when an enumeration request exceeds its configured size guard.
class EnumerationLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A Catalan tuple (e_0, ..., e_k): non-negative entries summing to k whose
// partial sums satisfy the strict ballot condition e_0 + ... + e_l > l for
// every l < k. Length means k, i.e. one less than the entry count.
// Immutable once constructed; construction validates.
class CatalanTuple {
public:
    explicit CatalanTuple(std::vector<int> entries);

    // Returns a description of the first violated condition, or nullopt if
    // `entries` forms a valid Catalan tuple.
    static std::optional<std::string> violation(std::span<const int> entries);

    int length() const { return static_cast<int>(entries_.size()) - 1; }
    const std::vector<int>& entries() const { return entries_; }
    int operator[](int j) const { return entries_.at(static_cast<std::size_t>(j)); }

    // Partial sum p_l = e_0 + ... + e_l - l for 0 <= l <= k. Strictly positive
    // for l < k and always 0 at l = k.
    int partial_sum(int l) const;

    // Smallest l with p_l == a, or nullopt when a is never attained. For
    // a == 0 this is always the final index k.
    std::optional<int> first_index_with_partial_sum(int a) const;

    auto operator<=>(const CatalanTuple&) const = default;

private:
    std::vector<int> entries_;
};

// Grafts f below a fresh rightmost branch of e's root:
// (e_0, ..., e_k), (f_0, ..., f_m) -> (e_0 + 1, e_1, ..., e_k, f_0, ..., f_m).
CatalanTuple graft_last(const CatalanTuple& e, const CatalanTuple& f);

// Grafts f below a fresh leftmost branch of e's root:
// (e_0, ..., e_k), (f_0, ..., f_l) -> (e_0 + 1, f_0, ..., f_l, e_1, ..., e_k).
CatalanTuple graft_first(const CatalanTuple& e, const CatalanTuple& f);

// Inverse of graft_last / graft_first. Unique; requires length >= 1.
std::pair<CatalanTuple, CatalanTuple> split_last(const CatalanTuple& t);
std::pair<CatalanTuple, CatalanTuple> split_first(const CatalanTuple& t);

inline constexpr int kDefaultTupleLimit = 12;

// All Catalan tuples of length k, lexicographically descending by entries.
// Throws EnumerationLimitError when k exceeds `limit`.
std::vector<CatalanTuple> enumerate_tuples(int k, int limit = kDefaultTupleLimit);

// c_k = binom(2k, k) / (k + 1); equals |enumerate_tuples(k)|.
Integer catalan_number(int k);

namespace detail {
// Shared memoized enumeration; reference stays valid for the process
// lifetime. Internal use: callers must not exceed kMaxCachedTupleLength.
inline constexpr int kMaxCachedTupleLength = 16;
const std::vector<CatalanTuple>& tuple_set(int k);
}  // namespace detail

}  // namespace cattab
