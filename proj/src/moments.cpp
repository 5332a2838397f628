#include "cattab/moments.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace cattab {

Monomial monomial_from_table(const CatalanTable& table) {
    const PocketTree tree = label_sides(pocket_tree(table.length_tuple()));
    Monomial m;
    m.point_count = tree.side_count();

    for (int child = 1; child < tree.pocket_count(); ++child) {
        const auto& pocket = tree.pockets[static_cast<std::size_t>(child)];
        m.chords.emplace_back(pocket.down_label, pocket.up_label);
    }

    for (int p = 0; p < tree.pocket_count(); ++p) {
        if (tree.is_leaf(p)) continue;
        const PocketRows rows = pocket_rows(tree, p);
        const CatalanTuple& tuple = table.pocket(p);
        if (tuple.length() + 1 != static_cast<int>(rows.even.size()))
            throw std::logic_error("monomial_from_table: pocket/valency mismatch");
        const bool even_level = tree.pockets[static_cast<std::size_t>(p)].level % 2 == 0;
        const ThreadTree for_even = even_level ? direct_tree(tuple) : opposite_tree(tuple);
        const ThreadTree for_odd = even_level ? opposite_tree(tuple) : direct_tree(tuple);
        for (const auto& [a, b] : for_even.threads)
            m.threads.push_back({rows.even[static_cast<std::size_t>(a)],
                                 rows.even[static_cast<std::size_t>(b)], true});
        for (const auto& [a, b] : for_odd.threads)
            m.threads.push_back({rows.odd[static_cast<std::size_t>(a)],
                                 rows.odd[static_cast<std::size_t>(b)], false});
    }

    int exponent = 0;
    for (int j = 1; j <= table.length(); ++j) exponent += table.pocket(j)[0];
    m.sign_exponent = exponent;
    return m;
}

int sign_tau(const CatalanTable& table) {
    int exponent = 0;
    for (int j = 1; j <= table.length(); ++j) exponent += table.pocket(j)[0];
    return exponent % 2 == 0 ? 1 : -1;
}

namespace {

// Strict interior of the arc (a, b) on the labeled circle, a < b.
bool strictly_inside(int x, int a, int b) { return a < x && x < b; }

bool arcs_cross(int a1, int b1, int a2, int b2) {
    // Endpoints shared between the two arcs never count as a crossing.
    if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) return false;
    return strictly_inside(a2, a1, b1) != strictly_inside(b2, a1, b1);
}

}  // namespace

bool chords_non_crossing(const Monomial& m) {
    for (std::size_t i = 0; i < m.chords.size(); ++i)
        for (std::size_t j = i + 1; j < m.chords.size(); ++j)
            if (arcs_cross(m.chords[i].first, m.chords[i].second, m.chords[j].first,
                           m.chords[j].second))
                return false;
    return true;
}

bool threads_avoid_chords(const Monomial& m) {
    for (const OrientedThread& t : m.threads) {
        const auto [lo, hi] = std::minmax(t.from, t.to);
        for (const auto& [a, b] : m.chords)
            if (arcs_cross(lo, hi, a, b)) return false;
    }
    return true;
}

ModelData::ModelData(std::vector<Rational> eigenvalues,
                     std::vector<std::vector<Rational>> two_point)
    : eigenvalues_(std::move(eigenvalues)), two_point_(std::move(two_point)) {
    const std::size_t n = eigenvalues_.size();
    if (n < 2) throw std::invalid_argument("ModelData: need at least two indices");
    if (two_point_.size() != n)
        throw std::invalid_argument("ModelData: two-point array has wrong row count");
    for (std::size_t l = 0; l < n; ++l) {
        if (two_point_[l].size() != n)
            throw std::invalid_argument("ModelData: two-point array is not square");
        for (std::size_t m = l + 1; m < n; ++m) {
            if (two_point_[l][m] != two_point_[m][l])
                throw std::invalid_argument("ModelData: two-point array is not symmetric at (" +
                                            std::to_string(l) + "," + std::to_string(m) + ")");
            if (eigenvalues_[l] == eigenvalues_[m])
                throw std::invalid_argument("ModelData: eigenvalues at " + std::to_string(l) +
                                            " and " + std::to_string(m) + " coincide");
        }
    }
}

ModelData ModelData::sample(int n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("ModelData::sample: need n >= 2");
    SplitMix64 rng(seed);
    std::vector<Rational> eigen;
    std::set<Rational> seen;
    eigen.reserve(static_cast<std::size_t>(n));
    while (static_cast<int>(eigen.size()) < n) {
        Rational value = sample_rational(rng, false);
        if (seen.insert(value).second) eigen.push_back(std::move(value));
    }
    std::vector<std::vector<Rational>> g2(static_cast<std::size_t>(n),
                                          std::vector<Rational>(static_cast<std::size_t>(n)));
    for (std::size_t l = 0; l < static_cast<std::size_t>(n); ++l) {
        for (std::size_t m = l + 1; m < static_cast<std::size_t>(n); ++m) {
            g2[l][m] = sample_rational(rng, true);
            g2[m][l] = g2[l][m];
        }
    }
    return ModelData(std::move(eigen), std::move(g2));
}

const Rational& ModelData::eigenvalue(int b) const {
    return eigenvalues_.at(static_cast<std::size_t>(b));
}

const Rational& ModelData::two_point(int l, int m) const {
    if (l == m) throw std::invalid_argument("ModelData: two-point needs distinct indices");
    return two_point_.at(static_cast<std::size_t>(l)).at(static_cast<std::size_t>(m));
}

ModelData ModelData::rotated(int shift) const {
    const int n = point_count();
    auto src = [&](int j) { return ((j + shift) % n + n) % n; };
    std::vector<Rational> eigen(static_cast<std::size_t>(n));
    std::vector<std::vector<Rational>> g2(static_cast<std::size_t>(n),
                                          std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int j = 0; j < n; ++j) {
        eigen[static_cast<std::size_t>(j)] = eigenvalues_[static_cast<std::size_t>(src(j))];
        for (int m = 0; m < n; ++m)
            g2[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)] =
                two_point_[static_cast<std::size_t>(src(j))][static_cast<std::size_t>(src(m))];
    }
    return ModelData(std::move(eigen), std::move(g2));
}

ModelData ModelData::reversed() const {
    const int n = point_count();
    auto src = [&](int j) { return n - 1 - j; };
    std::vector<Rational> eigen(static_cast<std::size_t>(n));
    std::vector<std::vector<Rational>> g2(static_cast<std::size_t>(n),
                                          std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int j = 0; j < n; ++j) {
        eigen[static_cast<std::size_t>(j)] = eigenvalues_[static_cast<std::size_t>(src(j))];
        for (int m = 0; m < n; ++m)
            g2[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)] =
                two_point_[static_cast<std::size_t>(src(j))][static_cast<std::size_t>(src(m))];
    }
    return ModelData(std::move(eigen), std::move(g2));
}

Rational evaluate_monomial(const Monomial& m, const ModelData& data) {
    if (data.point_count() < m.point_count)
        throw std::invalid_argument("evaluate_monomial: model data covers too few indices");
    Rational value = 1;
    for (const auto& [l, r] : m.chords) value *= data.two_point(l, r);
    for (const OrientedThread& t : m.threads) {
        const Rational denom = data.eigenvalue(t.from) - data.eigenvalue(t.to);
        if (denom == 0) throw std::domain_error("evaluate_monomial: coincident eigenvalues");
        value /= denom;
    }
    return value;
}

Rational evaluate_monomial_sorted(const Monomial& m, const ModelData& data) {
    Rational value = m.sign_exponent % 2 == 0 ? 1 : -1;
    for (const auto& [l, r] : m.chords) value *= data.two_point(l, r);
    for (const OrientedThread& t : m.threads) {
        const auto [lo, hi] = std::minmax(t.from, t.to);
        const Rational denom = data.eigenvalue(lo) - data.eigenvalue(hi);
        if (denom == 0) throw std::domain_error("evaluate_monomial: coincident eigenvalues");
        value /= denom;
    }
    return value;
}

namespace {

void require_even_moment(int n, const char* who) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument(std::string(who) + ": N must be even and >= 2, got " +
                                    std::to_string(n));
}

}  // namespace

Expansion expand_moment(int n, const ModelData& data, int table_limit) {
    require_even_moment(n, "expand_moment");
    if (data.point_count() < n)
        throw std::invalid_argument("expand_moment: model data covers too few indices");
    Expansion result;
    result.total = 0;
    for (CatalanTable& table : enumerate_tables(n / 2, table_limit)) {
        Monomial monomial = monomial_from_table(table);
        Rational value = evaluate_monomial(monomial, data);
        result.total += value;
        result.terms.push_back({std::move(table), std::move(monomial), std::move(value)});
    }
    return result;
}

std::vector<Monomial> moment_monomials(int n, int table_limit) {
    require_even_moment(n, "moment_monomials");
    std::vector<Monomial> out;
    for (const CatalanTable& table : enumerate_tables(n / 2, table_limit))
        out.push_back(monomial_from_table(table));
    return out;
}

namespace {

Rational oracle_eval(const std::vector<int>& seq, const ModelData& data,
                     std::map<std::vector<int>, Rational>& memo) {
    const int n = static_cast<int>(seq.size());
    if (n == 2) return data.two_point(seq[0], seq[1]);
    if (const auto it = memo.find(seq); it != memo.end()) return it->second;

    Rational total = 0;
    for (int l = 1; 2 * l <= n - 2; ++l) {
        const std::size_t cut = static_cast<std::size_t>(2 * l);
        const std::vector<int> head(seq.begin(), seq.begin() + cut);
        const std::vector<int> tail(seq.begin() + cut, seq.end());
        std::vector<int> head_shift(seq.begin() + 1, seq.begin() + cut + 1);
        std::vector<int> tail_rooted;
        tail_rooted.reserve(seq.size() - cut);
        tail_rooted.push_back(seq[0]);
        tail_rooted.insert(tail_rooted.end(), seq.begin() + cut + 1, seq.end());

        const Rational denom =
            (data.eigenvalue(seq[0]) - data.eigenvalue(seq[cut])) *
            (data.eigenvalue(seq[1]) - data.eigenvalue(seq[static_cast<std::size_t>(n) - 1]));
        if (denom == 0) throw std::domain_error("recursion_oracle: coincident eigenvalues");

        total += Rational(-kQuarticCoupling) *
                 (oracle_eval(head, data, memo) * oracle_eval(tail, data, memo) -
                  oracle_eval(head_shift, data, memo) * oracle_eval(tail_rooted, data, memo)) /
                 denom;
    }
    memo.emplace(seq, total);
    return total;
}

}  // namespace

Rational recursion_oracle(int n, const ModelData& data, int n_limit) {
    require_even_moment(n, "recursion_oracle");
    if (n > n_limit)
        throw EnumerationLimitError("recursion_oracle: N=" + std::to_string(n) +
                                    " exceeds limit " + std::to_string(n_limit));
    if (data.point_count() < n)
        throw std::invalid_argument("recursion_oracle: model data covers too few indices");
    std::vector<int> seq(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) seq[static_cast<std::size_t>(j)] = j;
    std::map<std::vector<int>, Rational> memo;
    return oracle_eval(seq, data, memo);
}

Integer raw_term_count(int n) {
    require_even_moment(n, "raw_term_count");
    const int k = (n - 2) / 2;
    return (Integer(1) << k) * catalan_number(k);
}

Integer recursion_leaf_count(int n) {
    require_even_moment(n, "recursion_leaf_count");
    std::vector<Integer> leaves(static_cast<std::size_t>(n) + 1, 0);
    leaves[2] = 1;
    for (int m = 4; m <= n; m += 2) {
        Integer total = 0;
        for (int l = 1; 2 * l <= m - 2; ++l)
            total += 2 * leaves[static_cast<std::size_t>(2 * l)] *
                     leaves[static_cast<std::size_t>(m - 2 * l)];
        leaves[static_cast<std::size_t>(m)] = total;
    }
    return leaves[static_cast<std::size_t>(n)];
}

SymmetryReport check_cyclic_invariance(int n, const ModelData& data, int rotations,
                                       int table_limit) {
    require_even_moment(n, "check_cyclic_invariance");
    SymmetryReport report;
    const Rational base = expand_moment(n, data, table_limit).total;
    report.cyclic_ok = true;
    for (int r = 1; r <= rotations; ++r) {
        if (expand_moment(n, data.rotated(r), table_limit).total != base) {
            report.cyclic_ok = false;
            report.first_failing_rotation = r;
            break;
        }
    }
    report.reversal_ok = expand_moment(n, data.reversed(), table_limit).total == base;
    return report;
}

Rational partial_fraction_identity(const Rational& p, const Rational& q, const Rational& r) {
    if (p == q || q == r || r == p)
        throw std::invalid_argument("partial_fraction_identity: inputs must be pairwise distinct");
    return Rational(1) / ((p - q) * (q - r)) + Rational(1) / ((r - p) * (p - q)) +
           Rational(1) / ((q - r) * (r - p));
}

}  // namespace cattab
