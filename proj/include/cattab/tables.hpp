#pragma once

#include "cattab/numeric.hpp"
#include "cattab/tuples.hpp"

#include <utility>
#include <vector>

namespace cattab {

// A Catalan table of length k: pockets <e^(0), ..., e^(k)>, each a Catalan
// tuple, whose shifted length profile (1 + |e^(0)|, |e^(1)|, ..., |e^(k)|)
// is itself a Catalan tuple of length k. Immutable; construction validates.
class CatalanTable {
public:
    explicit CatalanTable(std::vector<CatalanTuple> pockets);

    int length() const { return static_cast<int>(pockets_.size()) - 1; }
    const std::vector<CatalanTuple>& pockets() const { return pockets_; }
    const CatalanTuple& pocket(int j) const { return pockets_.at(static_cast<std::size_t>(j)); }

    // (1 + |e^(0)|, |e^(1)|, ..., |e^(k)|); always a valid Catalan tuple.
    CatalanTuple length_tuple() const;

    auto operator<=>(const CatalanTable&) const = default;

private:
    std::vector<CatalanTuple> pockets_;
};

// Merges b into a at the root pocket: the zeroth pockets combine via
// graft_last and b's remaining pockets follow a's. Length adds.
CatalanTable merge_at_root(const CatalanTable& a, const CatalanTable& b);

// Merges b into a at the first pocket: pocket 1 of a combines with b's root
// pocket via graft_first and b's remaining pockets are spliced in after it.
CatalanTable merge_at_first_pocket(const CatalanTable& a, const CatalanTable& b);

// Unique inverses of the merges. split_at_root requires |e^(0)| >= 1,
// split_at_first_pocket requires |e^(1)| >= 1; otherwise std::invalid_argument.
std::pair<CatalanTable, CatalanTable> split_at_root(const CatalanTable& t);
std::pair<CatalanTable, CatalanTable> split_at_first_pocket(const CatalanTable& t);

inline constexpr int kDefaultTableLimit = 9;

// All Catalan tables of length k (k >= 1), in canonical order: length tuples
// in the tuple enumeration order, then pocket tuples as an odometer with the
// leftmost pocket most significant. |result| = d_{k-1}.
std::vector<CatalanTable> enumerate_tables(int k, int limit = kDefaultTableLimit);

// Cross-check route: closes {<(0),(0)>} under the two merges, deduplicating.
// Slower; exists to validate the constructive enumeration independently.
std::vector<CatalanTable> enumerate_tables_by_merging(int k, int limit = kDefaultTableLimit);

// d_k = binom(3k+1, k) / (k+1), the number of Catalan tables of length k+1.
Integer count_tables(int k);

// f_k = binom(3k, k) / (2k+1), the number of length-(k+1) tables whose first
// pocket is (0); equally many have zeroth pocket (0).
Integer count_trivial_first_pocket(int k);

// Evaluates sum over length-(k+1) tuples of c_{e_0 - 1} c_{e_1} ... c_{e_{k+1}}
// and compares with the closed form d_k.
struct PocketSumIdentity {
    Integer pocket_tree_sum;
    Integer closed_form;
    bool equal = false;
};
PocketSumIdentity verify_pocket_sum_identity(int k, int limit = kDefaultTupleLimit);

// Builds H(x) = sum f_n x^{n+1} and G(x) = sum d_n x^{n+1} from the closed
// forms and from the coupled recursions
//   f_k = sum_{l=1..k} f_{l-1} d_{k-l},   d_k = f_k + sum_{l=1..k} d_{l-1} d_{k-l}
// and checks, coefficient-exactly up to x^order for both coefficient sources:
//   H^3/x - H + x = 0,   G (1-G)^2 = x,   x G = H^2.
struct GeneratingFunctionReport {
    int order = 0;
    std::vector<Integer> trivial_pocket_closed;    // f_n, closed form
    std::vector<Integer> table_count_closed;       // d_n, closed form
    std::vector<Integer> trivial_pocket_recursive; // f_n, recursion
    std::vector<Integer> table_count_recursive;    // d_n, recursion
    bool recursion_matches_closed = false;
    bool cubic_identity = false;    // H^3/x - H + x = 0
    bool planted_cubic = false;     // G (1-G)^2 = x
    bool product_identity = false;  // x G = H^2
    bool all_hold() const {
        return recursion_matches_closed && cubic_identity && planted_cubic && product_identity;
    }
};
GeneratingFunctionReport verify_generating_functions(int order);

}  // namespace cattab
