#include "cattab/records.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

namespace cattab::records {

namespace {

std::vector<int> int_array(const json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
    std::vector<int> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw std::invalid_argument(std::string(what) + ": expected integer entries");
        out.push_back(v.get<int>());
    }
    return out;
}

}  // namespace

json tuple_record(const CatalanTuple& t) { return json{{"tuple", t.entries()}}; }

CatalanTuple tuple_from_json(const json& j) {
    const json& body = j.is_object() ? j.at("tuple") : j;
    return CatalanTuple(int_array(body, "tuple"));
}

json table_record(const CatalanTable& t) {
    json pockets = json::array();
    for (const CatalanTuple& p : t.pockets()) pockets.push_back(p.entries());
    return json{{"table", std::move(pockets)}};
}

CatalanTable table_from_json(const json& j) {
    const json& body = j.is_object() ? j.at("table") : j;
    if (!body.is_array()) throw std::invalid_argument("table: expected an array of arrays");
    std::vector<CatalanTuple> pockets;
    pockets.reserve(body.size());
    for (const auto& p : body) pockets.emplace_back(int_array(p, "table pocket"));
    return CatalanTable(std::move(pockets));
}

json monomial_record(const Monomial& m) {
    json chords = json::array();
    for (const auto& [l, r] : m.chords) chords.push_back(json::array({l, r}));
    json threads = json::array();
    for (const OrientedThread& t : m.threads)
        threads.push_back(json{{"from", t.from}, {"to", t.to},
                               {"parity", t.even_row ? "even" : "odd"}});
    return json{{"sign_exponent", m.sign_exponent},
                {"chords", std::move(chords)},
                {"threads", std::move(threads)}};
}

Monomial monomial_from_json(const json& j) {
    Monomial m;
    m.sign_exponent = j.at("sign_exponent").get<int>();
    int max_index = -1;
    for (const auto& c : j.at("chords")) {
        const std::vector<int> pair = int_array(c, "chord");
        if (pair.size() != 2) throw std::invalid_argument("chord: expected two indices");
        m.chords.emplace_back(pair[0], pair[1]);
        max_index = std::max({max_index, pair[0], pair[1]});
    }
    for (const auto& t : j.at("threads")) {
        const std::string parity = t.at("parity").get<std::string>();
        if (parity != "even" && parity != "odd")
            throw std::invalid_argument("thread: parity must be \"even\" or \"odd\"");
        OrientedThread thread{t.at("from").get<int>(), t.at("to").get<int>(), parity == "even"};
        max_index = std::max({max_index, thread.from, thread.to});
        m.threads.push_back(thread);
    }
    m.point_count = max_index + 1;
    return m;
}

json pocket_tree_record(const PocketTree& tree) {
    json parents = json::array();
    json down = json::array();
    json up = json::array();
    for (const auto& pocket : tree.pockets) {
        parents.push_back(pocket.parent);
        if (pocket.parent < 0) {
            down.push_back(nullptr);
            up.push_back(nullptr);
        } else {
            down.push_back(pocket.down_label);
            up.push_back(pocket.up_label);
        }
    }
    return json{{"parents", std::move(parents)},
                {"down_sides", std::move(down)},
                {"up_sides", std::move(up)}};
}

void write_model(std::ostream& out, const ModelData& data) {
    const int n = data.point_count();
    for (int b = 0; b < n; ++b)
        out << json{{"index", b}, {"eigenvalue", to_text(data.eigenvalue(b))}}.dump() << "\n";
    for (int l = 0; l < n; ++l)
        for (int m = l + 1; m < n; ++m)
            out << json{{"pair", json::array({l, m})}, {"two_point", to_text(data.two_point(l, m))}}
                       .dump()
                << "\n";
}

ModelData read_model(std::istream& in) {
    std::map<int, Rational> eigen;
    std::map<std::pair<int, int>, Rational> pairs;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        const json j = parse_line(line, line_number);
        if (j.contains("index")) {
            const int b = j.at("index").get<int>();
            if (!eigen.emplace(b, parse_rational(j.at("eigenvalue").get<std::string>())).second)
                throw std::invalid_argument("model data: duplicate eigenvalue for index " +
                                            std::to_string(b));
        } else if (j.contains("pair")) {
            const std::vector<int> p = int_array(j.at("pair"), "pair");
            if (p.size() != 2 || p[0] == p[1])
                throw std::invalid_argument("model data: pair needs two distinct indices");
            const auto key = std::minmax(p[0], p[1]);
            if (!pairs.emplace(key, parse_rational(j.at("two_point").get<std::string>())).second)
                throw std::invalid_argument("model data: duplicate two-point value");
        } else {
            throw std::invalid_argument("model data: line " + std::to_string(line_number) +
                                        " is neither an eigenvalue nor a two-point record");
        }
    }
    const int n = static_cast<int>(eigen.size());
    if (n < 2) throw std::invalid_argument("model data: need at least two eigenvalues");
    std::vector<Rational> eigenvalues(static_cast<std::size_t>(n));
    for (int b = 0; b < n; ++b) {
        const auto it = eigen.find(b);
        if (it == eigen.end())
            throw std::invalid_argument("model data: missing eigenvalue for index " +
                                        std::to_string(b));
        eigenvalues[static_cast<std::size_t>(b)] = it->second;
    }
    std::vector<std::vector<Rational>> g2(static_cast<std::size_t>(n),
                                          std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int l = 0; l < n; ++l) {
        for (int m = l + 1; m < n; ++m) {
            const auto it = pairs.find({l, m});
            if (it == pairs.end())
                throw std::invalid_argument("model data: missing two-point value for pair (" +
                                            std::to_string(l) + "," + std::to_string(m) + ")");
            g2[static_cast<std::size_t>(l)][static_cast<std::size_t>(m)] = it->second;
            g2[static_cast<std::size_t>(m)][static_cast<std::size_t>(l)] = it->second;
        }
    }
    return ModelData(std::move(eigenvalues), std::move(g2));
}

DiagramStyle style_from_json(const json& j) {
    DiagramStyle style;
    if (j.contains("chord_color")) style.chord_color = j.at("chord_color").get<std::string>();
    if (j.contains("even_thread_color"))
        style.even_thread_color = j.at("even_thread_color").get<std::string>();
    if (j.contains("odd_thread_color"))
        style.odd_thread_color = j.at("odd_thread_color").get<std::string>();
    if (j.contains("node_color")) style.node_color = j.at("node_color").get<std::string>();
    if (j.contains("chord_width")) style.chord_width = j.at("chord_width").get<double>();
    if (j.contains("thread_width")) style.thread_width = j.at("thread_width").get<double>();
    return style;
}

json parse_line(const std::string& line, int line_number) {
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded())
        throw std::invalid_argument("malformed record at line " + std::to_string(line_number));
    return j;
}

}  // namespace cattab::records
