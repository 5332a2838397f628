#include "cattab/tables.hpp"

#include "cattab/power_series.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace cattab {

namespace {

std::vector<int> length_profile(const std::vector<CatalanTuple>& pockets) {
    std::vector<int> lengths;
    lengths.reserve(pockets.size());
    for (std::size_t j = 0; j < pockets.size(); ++j)
        lengths.push_back(pockets[j].length() + (j == 0 ? 1 : 0));
    return lengths;
}

}  // namespace

CatalanTable::CatalanTable(std::vector<CatalanTuple> pockets) : pockets_(std::move(pockets)) {
    if (pockets_.empty()) throw std::invalid_argument("Catalan table needs at least one pocket");
    const std::vector<int> lengths = length_profile(pockets_);
    if (auto why = CatalanTuple::violation(lengths))
        throw std::invalid_argument("not a Catalan table: length tuple invalid: " + *why);
}

CatalanTuple CatalanTable::length_tuple() const { return CatalanTuple(length_profile(pockets_)); }

CatalanTable merge_at_root(const CatalanTable& a, const CatalanTable& b) {
    std::vector<CatalanTuple> pockets;
    pockets.reserve(a.pockets().size() + b.pockets().size() - 1);
    pockets.push_back(graft_last(a.pocket(0), b.pocket(0)));
    pockets.insert(pockets.end(), a.pockets().begin() + 1, a.pockets().end());
    pockets.insert(pockets.end(), b.pockets().begin() + 1, b.pockets().end());
    return CatalanTable(std::move(pockets));
}

CatalanTable merge_at_first_pocket(const CatalanTable& a, const CatalanTable& b) {
    if (a.length() < 1)
        throw std::invalid_argument("merge_at_first_pocket: left table has no first pocket");
    std::vector<CatalanTuple> pockets;
    pockets.reserve(a.pockets().size() + b.pockets().size() - 1);
    pockets.push_back(a.pocket(0));
    pockets.push_back(graft_first(a.pocket(1), b.pocket(0)));
    pockets.insert(pockets.end(), b.pockets().begin() + 1, b.pockets().end());
    pockets.insert(pockets.end(), a.pockets().begin() + 2, a.pockets().end());
    return CatalanTable(std::move(pockets));
}

std::pair<CatalanTable, CatalanTable> split_at_root(const CatalanTable& t) {
    if (t.pocket(0).length() < 1)
        throw std::invalid_argument("split_at_root: zeroth pocket (0) admits no decomposition");
    const auto [left_root, right_root] = split_last(t.pocket(0));
    // The left factor's length is where the length tuple's partial sums first
    // drop to 1 + |right root pocket|.
    const int target = 1 + right_root.length();
    const auto hit = t.length_tuple().first_index_with_partial_sum(target);
    if (!hit) throw std::logic_error("split_at_root: split position not found");
    const int left_length = *hit;

    std::vector<CatalanTuple> left{left_root};
    left.insert(left.end(), t.pockets().begin() + 1, t.pockets().begin() + 1 + left_length);
    std::vector<CatalanTuple> right{right_root};
    right.insert(right.end(), t.pockets().begin() + 1 + left_length, t.pockets().end());
    return {CatalanTable(std::move(left)), CatalanTable(std::move(right))};
}

std::pair<CatalanTable, CatalanTable> split_at_first_pocket(const CatalanTable& t) {
    if (t.length() < 1)
        throw std::invalid_argument("split_at_first_pocket: table has no first pocket");
    if (t.pocket(1).length() < 1)
        throw std::invalid_argument(
            "split_at_first_pocket: first pocket (0) admits no decomposition");
    const auto [left_first, right_root] = split_first(t.pocket(1));
    const int target = t.pocket(0).length() + left_first.length() + 1;
    // The spliced block keeps the length tuple's partial sums at or above
    // `target` and may touch it; the block ends at the first strict descent
    // to target - 1. Index 0 can sit at target - 1 spuriously, so start at 1.
    const CatalanTuple lengths = t.length_tuple();
    int right_length = -1;
    int sum = lengths[0];
    for (int j = 1; j <= lengths.length(); ++j) {
        sum += lengths[j];
        if (sum - j == target - 1) {
            right_length = j - 1;
            break;
        }
    }
    if (right_length < 0) throw std::logic_error("split_at_first_pocket: split position not found");

    std::vector<CatalanTuple> right{right_root};
    right.insert(right.end(), t.pockets().begin() + 2, t.pockets().begin() + 2 + right_length);
    std::vector<CatalanTuple> left{t.pocket(0), left_first};
    left.insert(left.end(), t.pockets().begin() + 2 + right_length, t.pockets().end());
    return {CatalanTable(std::move(left)), CatalanTable(std::move(right))};
}

std::vector<CatalanTable> enumerate_tables(int k, int limit) {
    if (k < 1) throw std::invalid_argument("enumerate_tables: tables have length >= 1");
    if (k > limit)
        throw EnumerationLimitError("enumerate_tables: k=" + std::to_string(k) +
                                    " exceeds limit " + std::to_string(limit));
    std::vector<CatalanTable> out;
    for (const CatalanTuple& lengths : detail::tuple_set(k)) {
        // Pocket j draws from all tuples of the profile length; pocket 0 is
        // one shorter than its length-tuple entry.
        std::vector<const std::vector<CatalanTuple>*> choices;
        choices.reserve(lengths.entries().size());
        for (int j = 0; j <= k; ++j)
            choices.push_back(&detail::tuple_set(lengths[j] - (j == 0 ? 1 : 0)));

        std::vector<std::size_t> odo(choices.size(), 0);
        bool exhausted = false;
        while (!exhausted) {
            std::vector<CatalanTuple> pockets;
            pockets.reserve(choices.size());
            for (std::size_t j = 0; j < choices.size(); ++j)
                pockets.push_back((*choices[j])[odo[j]]);
            out.emplace_back(std::move(pockets));
            // Rightmost pocket advances fastest; leftmost is most significant.
            std::size_t j = choices.size();
            for (;;) {
                if (j == 0) {
                    exhausted = true;
                    break;
                }
                --j;
                if (++odo[j] < choices[j]->size()) break;
                odo[j] = 0;
            }
        }
    }
    return out;
}

std::vector<CatalanTable> enumerate_tables_by_merging(int k, int limit) {
    if (k < 1) throw std::invalid_argument("enumerate_tables_by_merging: length >= 1 required");
    if (k > limit)
        throw EnumerationLimitError("enumerate_tables_by_merging: k=" + std::to_string(k) +
                                    " exceeds limit " + std::to_string(limit));
    std::vector<std::vector<CatalanTable>> sets(static_cast<std::size_t>(k) + 1);
    sets[1].emplace_back(std::vector<CatalanTuple>{CatalanTuple({0}), CatalanTuple({0})});
    for (int kk = 2; kk <= k; ++kk) {
        std::set<CatalanTable> unique;
        for (int l = 1; l < kk; ++l) {
            for (const CatalanTable& a : sets[static_cast<std::size_t>(l)]) {
                for (const CatalanTable& b : sets[static_cast<std::size_t>(kk - l)]) {
                    unique.insert(merge_at_root(a, b));
                    unique.insert(merge_at_first_pocket(a, b));
                }
            }
        }
        sets[static_cast<std::size_t>(kk)].assign(unique.begin(), unique.end());
    }
    return sets[static_cast<std::size_t>(k)];
}

Integer count_tables(int k) {
    if (k < 0) throw std::invalid_argument("count_tables: negative index");
    const unsigned uk = static_cast<unsigned>(k);
    return binomial(3 * uk + 1, uk) / (uk + 1);
}

Integer count_trivial_first_pocket(int k) {
    if (k < 0) throw std::invalid_argument("count_trivial_first_pocket: negative index");
    const unsigned uk = static_cast<unsigned>(k);
    return binomial(3 * uk, uk) / (2 * uk + 1);
}

PocketSumIdentity verify_pocket_sum_identity(int k, int limit) {
    if (k < 0) throw std::invalid_argument("verify_pocket_sum_identity: negative index");
    PocketSumIdentity report;
    report.closed_form = count_tables(k);
    report.pocket_tree_sum = 0;
    for (const CatalanTuple& t : enumerate_tuples(k + 1, limit)) {
        Integer product = catalan_number(t[0] - 1);
        for (int j = 1; j <= t.length(); ++j) product *= catalan_number(t[j]);
        report.pocket_tree_sum += product;
    }
    report.equal = report.pocket_tree_sum == report.closed_form;
    return report;
}

namespace {

PowerSeries series_from_counts(const std::vector<Integer>& counts, int order) {
    // counts[n] becomes the coefficient of x^{n+1}.
    PowerSeries s(order);
    for (std::size_t n = 0; n + 1 <= static_cast<std::size_t>(order); ++n)
        s.set_coeff(static_cast<int>(n) + 1, counts[n]);
    return s;
}

void check_identities(const std::vector<Integer>& f, const std::vector<Integer>& d,
                      int series_order, int check_order, bool* cubic, bool* planted,
                      bool* product) {
    const PowerSeries h = series_from_counts(f, series_order);
    const PowerSeries g = series_from_counts(d, series_order);
    const PowerSeries x = PowerSeries::monomial(series_order, 1);
    const PowerSeries one = PowerSeries::monomial(series_order, 0);

    const PowerSeries cubic_residual =
        (h * h * h).shifted_down() - h.truncated(series_order - 1) + x.truncated(series_order - 1);
    const PowerSeries one_minus_g = one - g;
    const PowerSeries planted_residual = g * one_minus_g * one_minus_g - x;
    const PowerSeries product_residual = x * g - h * h;

    *cubic = *cubic && cubic_residual.truncated(check_order).is_zero();
    *planted = *planted && planted_residual.truncated(check_order).is_zero();
    *product = *product && product_residual.truncated(check_order).is_zero();
}

}  // namespace

GeneratingFunctionReport verify_generating_functions(int order) {
    if (order < 1) throw std::invalid_argument("verify_generating_functions: order >= 1 required");
    GeneratingFunctionReport report;
    report.order = order;

    // Two coefficients of slack keep every residual exact through x^order.
    const int series_order = order + 2;
    const std::size_t terms = static_cast<std::size_t>(series_order);
    std::vector<Integer> f_closed, d_closed;
    f_closed.reserve(terms);
    d_closed.reserve(terms);
    for (std::size_t n = 0; n < terms; ++n) {
        f_closed.push_back(count_trivial_first_pocket(static_cast<int>(n)));
        d_closed.push_back(count_tables(static_cast<int>(n)));
    }

    std::vector<Integer> f_rec(terms, 0), d_rec(terms, 0);
    f_rec[0] = 1;
    d_rec[0] = 1;
    for (std::size_t n = 1; n < terms; ++n) {
        Integer f_n = 0;
        Integer dd = 0;
        for (std::size_t l = 1; l <= n; ++l) {
            f_n += f_rec[l - 1] * d_rec[n - l];
            dd += d_rec[l - 1] * d_rec[n - l];
        }
        f_rec[n] = f_n;
        d_rec[n] = f_n + dd;
    }

    report.recursion_matches_closed = f_rec == f_closed && d_rec == d_closed;

    report.cubic_identity = true;
    report.planted_cubic = true;
    report.product_identity = true;
    check_identities(f_closed, d_closed, series_order, order, &report.cubic_identity,
                     &report.planted_cubic, &report.product_identity);
    check_identities(f_rec, d_rec, series_order, order, &report.cubic_identity,
                     &report.planted_cubic, &report.product_identity);

    const std::size_t reported = static_cast<std::size_t>(order);
    report.trivial_pocket_closed.assign(f_closed.begin(), f_closed.begin() + reported);
    report.table_count_closed.assign(d_closed.begin(), d_closed.begin() + reported);
    report.trivial_pocket_recursive.assign(f_rec.begin(), f_rec.begin() + reported);
    report.table_count_recursive.assign(d_rec.begin(), d_rec.begin() + reported);
    return report;
}

}  // namespace cattab
