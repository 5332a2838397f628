#pragma once

#include "cattab/numeric.hpp"
#include "cattab/tables.hpp"
#include "cattab/trees.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace cattab {

inline constexpr int kDefaultMomentLimit = 14;  // largest N accepted by default

// The quartic coupling is pinned to -1 throughout: every level of the moment
// recursion then enters with weight -kQuarticCoupling = +1, and no further
// coupling powers appear anywhere. Not a tunable.
inline constexpr int kQuarticCoupling = -1;

// One term of the N-point expansion: two-point chords between opposite-parity
// node indices and oriented resolvent threads between equal-parity indices.
struct OrientedThread {
    int from = 0;
    int to = 0;
    bool even_row = false;  // true when both endpoints are even side labels

    bool operator==(const OrientedThread&) const = default;
};

struct Monomial {
    int point_count = 0;                        // N
    std::vector<std::pair<int, int>> chords;    // (down, up) per pocket edge, down < up
    std::vector<OrientedThread> threads;        // pockets in order, even row then odd
    int sign_exponent = 0;                      // sum of first entries of non-root pockets

    bool operator==(const Monomial&) const = default;
};

// Applies the two-row construction to every non-leaf pocket of the table's
// pocket tree: at even levels the even row carries the direct tree and the
// odd row the opposite tree, at odd levels the roles swap. A thread between
// row positions a < b is oriented row[a] -> row[b].
Monomial monomial_from_table(const CatalanTable& table);

// (-1)^(sum of first entries of all non-root pockets). Coincides with the
// parity of threads whose oriented pair runs from a larger to a smaller index.
int sign_tau(const CatalanTable& table);

// Arc crossing predicates for generated monomials; shared endpoints do not
// count as crossings.
bool chords_non_crossing(const Monomial& m);
bool threads_avoid_chords(const Monomial& m);

// Exact model input: pairwise distinct eigenvalues indexed 0..N-1 and a
// symmetric two-point array.
class ModelData {
public:
    ModelData(std::vector<Rational> eigenvalues, std::vector<std::vector<Rational>> two_point);

    // Seeded deterministic data: distinct eigenvalues and nonzero symmetric
    // two-point values, all with numerators/denominators below 10^3.
    static ModelData sample(int n, std::uint64_t seed);

    int point_count() const { return static_cast<int>(eigenvalues_.size()); }
    const Rational& eigenvalue(int b) const;
    const Rational& two_point(int l, int m) const;

    // Index relabelings: rotated(r) maps position j to the data of
    // (j + r) mod N; reversed() maps j to N-1-j.
    ModelData rotated(int shift) const;
    ModelData reversed() const;

private:
    std::vector<Rational> eigenvalues_;
    std::vector<std::vector<Rational>> two_point_;
};

// Product over chords of two-point values times product over threads of
// 1/(E_from - E_to), exactly.
Rational evaluate_monomial(const Monomial& m, const ModelData& data);

// Alternative convention kept as a cross-check: denominators sorted as
// 1/(E_min - E_max) with the overall sign restored from sign_exponent.
// Agrees with evaluate_monomial on every generated monomial.
Rational evaluate_monomial_sorted(const Monomial& m, const ModelData& data);

struct ExpansionTerm {
    CatalanTable table;
    Monomial monomial;
    Rational value;
};

struct Expansion {
    Rational total;
    std::vector<ExpansionTerm> terms;
};

// Sum over all Catalan tables of length N/2, with the full term list.
Expansion expand_moment(int n, const ModelData& data, int table_limit = kDefaultTableLimit);

// Symbolic term list (no model data).
std::vector<Monomial> moment_monomials(int n, int table_limit = kDefaultTableLimit);

// Literal evaluation of the N-point recursion with coupling -1, memoized on
// the exact index subsequence. The memo lives inside one call; the function
// itself is pure and thread-safe.
Rational recursion_oracle(int n, const ModelData& data, int n_limit = kDefaultMomentLimit);

// 2^k c_k with N = 2k+2: terms produced by unfolding the recursion fully.
Integer raw_term_count(int n);

// Leaf count of the fully unfolded recursion tree, computed independently
// from the unfolding recurrence; equals raw_term_count(n).
Integer recursion_leaf_count(int n);

// Exact invariance of the expansion under cyclic index relabelings and under
// reversal.
struct SymmetryReport {
    bool cyclic_ok = false;
    int first_failing_rotation = 0;  // 0 when cyclic_ok
    bool reversal_ok = false;
    bool all_ok() const { return cyclic_ok && reversal_ok; }
};
SymmetryReport check_cyclic_invariance(int n, const ModelData& data, int rotations,
                                       int table_limit = kDefaultTableLimit);

// Three-term partial-fraction sum; exactly zero for pairwise distinct inputs,
// which the function requires.
Rational partial_fraction_identity(const Rational& p, const Rational& q, const Rational& r);

}  // namespace cattab
