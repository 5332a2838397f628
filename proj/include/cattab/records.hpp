#pragma once

#include "cattab/moments.hpp"
#include "cattab/render.hpp"
#include "cattab/tables.hpp"
#include "cattab/tuples.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace cattab::records {

// Repository-wide record format: line-delimited JSON, one object per line,
// integer arrays for tuples/tables, strings "p/q" for rationals, counts as
// strings. Bumped together with the cache layout.
inline constexpr int kFormatVersion = 1;

using json = nlohmann::ordered_json;

json tuple_record(const CatalanTuple& t);
CatalanTuple tuple_from_json(const json& j);

json table_record(const CatalanTable& t);
CatalanTable table_from_json(const json& j);

// {"sign_exponent": n, "chords": [[l,m],...],
//  "threads": [{"from":l,"to":m,"parity":"even"|"odd"},...]}
json monomial_record(const Monomial& m);
Monomial monomial_from_json(const json& j);

// Pocket trees serialize as a parent array plus the two side-label arrays
// (indexed by child pocket; entry 0 belongs to the root and stays null).
json pocket_tree_record(const PocketTree& tree);

// Model data files carry one record per line:
//   {"index": b, "eigenvalue": "p/q"}
//   {"pair": [l, m], "two_point": "p/q"}
// Every index 0..n-1 and every unordered pair must be covered.
void write_model(std::ostream& out, const ModelData& data);
ModelData read_model(std::istream& in);

DiagramStyle style_from_json(const json& j);

// Parses a single JSONL line; throws std::invalid_argument with the line
// number on malformed content.
json parse_line(const std::string& line, int line_number);

}  // namespace cattab::records
