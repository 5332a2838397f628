#include "cattab/tuples.hpp"

#include <algorithm>
#include <deque>
#include <mutex>

namespace cattab {

CatalanTuple::CatalanTuple(std::vector<int> entries) : entries_(std::move(entries)) {
    if (auto why = violation(entries_)) throw std::invalid_argument("not a Catalan tuple: " + *why);
}

std::optional<std::string> CatalanTuple::violation(std::span<const int> entries) {
    if (entries.empty()) return "tuple must have at least one entry";
    const int k = static_cast<int>(entries.size()) - 1;
    long long sum = 0;
    for (int j = 0; j <= k; ++j) {
        if (entries[static_cast<std::size_t>(j)] < 0)
            return "entry at index " + std::to_string(j) + " is negative";
        sum += entries[static_cast<std::size_t>(j)];
        if (j < k && sum <= j)
            return "partial sum " + std::to_string(sum) + " at index " + std::to_string(j) +
                   " is not greater than " + std::to_string(j);
    }
    if (sum != k)
        return "entries sum to " + std::to_string(sum) + ", expected length " + std::to_string(k);
    return std::nullopt;
}

int CatalanTuple::partial_sum(int l) const {
    const int k = length();
    if (l < 0 || l > k)
        throw std::out_of_range("partial_sum: index " + std::to_string(l) +
                                " outside 0.." + std::to_string(k));
    int sum = 0;
    for (int j = 0; j <= l; ++j) sum += entries_[static_cast<std::size_t>(j)];
    return sum - l;
}

std::optional<int> CatalanTuple::first_index_with_partial_sum(int a) const {
    const int k = length();
    int sum = 0;
    for (int l = 0; l <= k; ++l) {
        sum += entries_[static_cast<std::size_t>(l)];
        if (sum - l == a) return l;
    }
    return std::nullopt;
}

CatalanTuple graft_last(const CatalanTuple& e, const CatalanTuple& f) {
    std::vector<int> out = e.entries();
    out.reserve(out.size() + f.entries().size());
    out[0] += 1;
    out.insert(out.end(), f.entries().begin(), f.entries().end());
    return CatalanTuple(std::move(out));
}

CatalanTuple graft_first(const CatalanTuple& e, const CatalanTuple& f) {
    std::vector<int> out;
    out.reserve(e.entries().size() + f.entries().size());
    out.push_back(e.entries()[0] + 1);
    out.insert(out.end(), f.entries().begin(), f.entries().end());
    out.insert(out.end(), e.entries().begin() + 1, e.entries().end());
    return CatalanTuple(std::move(out));
}

std::pair<CatalanTuple, CatalanTuple> split_last(const CatalanTuple& t) {
    if (t.length() < 1) throw std::invalid_argument("split_last: length-0 tuple has no factors");
    // p_{k-1} = 1 for every valid tuple, so the hit always exists.
    const int j = *t.first_index_with_partial_sum(1);
    const auto& e = t.entries();
    std::vector<int> left(e.begin(), e.begin() + j + 1);
    left[0] -= 1;
    std::vector<int> right(e.begin() + j + 1, e.end());
    return {CatalanTuple(std::move(left)), CatalanTuple(std::move(right))};
}

std::pair<CatalanTuple, CatalanTuple> split_first(const CatalanTuple& t) {
    if (t.length() < 1) throw std::invalid_argument("split_first: length-0 tuple has no factors");
    // Partial sums reach e_0 - 1 eventually (p_k = 0 covers e_0 = 1).
    const int j = *t.first_index_with_partial_sum(t[0] - 1);
    const auto& e = t.entries();
    std::vector<int> left;
    left.reserve(e.size() - static_cast<std::size_t>(j));
    left.push_back(e[0] - 1);
    left.insert(left.end(), e.begin() + j + 1, e.end());
    // j >= 1 always: p_0 = e_0 can never equal e_0 - 1.
    std::vector<int> right(e.begin() + 1, e.begin() + j + 1);
    return {CatalanTuple(std::move(left)), CatalanTuple(std::move(right))};
}

namespace detail {

const std::vector<CatalanTuple>& tuple_set(int k) {
    static std::mutex mutex;
    // deque: growing the cache must not move the sets already handed out.
    static std::deque<std::vector<CatalanTuple>> sets;
    std::scoped_lock lock(mutex);
    if (k < 0 || k > kMaxCachedTupleLength)
        throw std::invalid_argument("tuple_set: length out of cacheable range");
    while (static_cast<int>(sets.size()) <= k) {
        const int kk = static_cast<int>(sets.size());
        std::vector<CatalanTuple> out;
        if (kk == 0) {
            out.emplace_back(std::vector<int>{0});
        } else {
            // Every tuple of length kk arises from exactly one graft_last pair,
            // so this generates without duplicates.
            for (int m = 0; m < kk; ++m) {
                for (const CatalanTuple& a : sets[static_cast<std::size_t>(m)]) {
                    for (const CatalanTuple& b : sets[static_cast<std::size_t>(kk - 1 - m)]) {
                        out.push_back(graft_last(a, b));
                    }
                }
            }
            std::sort(out.begin(), out.end(), std::greater<>());
        }
        sets.push_back(std::move(out));
    }
    return sets[static_cast<std::size_t>(k)];
}

}  // namespace detail

std::vector<CatalanTuple> enumerate_tuples(int k, int limit) {
    if (k < 0) throw std::invalid_argument("enumerate_tuples: negative length");
    if (k > limit)
        throw EnumerationLimitError("enumerate_tuples: k=" + std::to_string(k) +
                                    " exceeds limit " + std::to_string(limit));
    if (k > detail::kMaxCachedTupleLength)
        throw EnumerationLimitError("enumerate_tuples: k=" + std::to_string(k) +
                                    " exceeds hard cap " +
                                    std::to_string(detail::kMaxCachedTupleLength));
    return detail::tuple_set(k);
}

Integer catalan_number(int k) {
    if (k < 0) throw std::invalid_argument("catalan_number: negative index");
    const unsigned uk = static_cast<unsigned>(k);
    return binomial(2 * uk, uk) / (uk + 1);
}

}  // namespace cattab
