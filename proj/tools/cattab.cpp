// cattab: enumeration, counting, verification, expansion and rendering for
// Catalan tuples/tables and the chord-diagram expansion of quartic matrix
// model moments. All structural output is line-delimited JSON; everything
// written to stdout is deterministic for fixed (command, flags, seed).

#include "cattab/cache.hpp"
#include "cattab/moments.hpp"
#include "cattab/records.hpp"
#include "cattab/render.hpp"
#include "cattab/tables.hpp"
#include "cattab/trees.hpp"
#include "cattab/tuples.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using cattab::records::json;

struct Limits {
    int tuples = cattab::kDefaultTupleLimit;
    int tables = cattab::kDefaultTableLimit;
    int moments = cattab::kDefaultMomentLimit;
};

Limits make_limits(bool unsafe) {
    if (!unsafe) return {};
    return {cattab::detail::kMaxCachedTupleLength, cattab::detail::kMaxCachedTupleLength, 32};
}

void write_output(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << payload;
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
        .count();
}

int run_enumeration(const std::string& kind, int k, const std::string& out_path,
                    const std::string& cache_dir, const Limits& limits) {
    std::optional<std::string> payload;
    if (!cache_dir.empty()) payload = cattab::cache_load(cache_dir, kind, k);
    if (!payload) {
        std::ostringstream body;
        std::size_t count = 0;
        if (kind == "tuples") {
            for (const auto& t : cattab::enumerate_tuples(k, limits.tuples)) {
                body << cattab::records::tuple_record(t).dump() << "\n";
                ++count;
            }
        } else {
            for (const auto& t : cattab::enumerate_tables(k, limits.tables)) {
                body << cattab::records::table_record(t).dump() << "\n";
                ++count;
            }
        }
        body << json{{"kind", kind}, {"k", k}, {"count", std::to_string(count)}}.dump() << "\n";
        payload = body.str();
        if (!cache_dir.empty()) cattab::cache_store(cache_dir, kind, k, *payload);
    }
    write_output(*payload, out_path);
    return 0;
}

int run_count(int k, const std::string& mode, const std::string& out_path, const Limits& limits) {
    const cattab::Integer c_k = cattab::catalan_number(k);
    const cattab::Integer c_next = cattab::catalan_number(k + 1);
    const cattab::Integer d_k = cattab::count_tables(k);
    const cattab::Integer f_k = cattab::count_trivial_first_pocket(k);

    std::cout << "k=" << k << " N=" << 2 * k + 2 << "\n";
    std::cout << "c_k   = " << c_k << "\n";
    std::cout << "c_k+1 = " << c_next << "\n";
    std::cout << "d_k   = " << d_k << "\n";
    std::cout << "f_k   = " << f_k << "\n";

    json record{{"k", k},
                {"mode", mode},
                {"c_k", cattab::to_text(c_k)},
                {"c_k_plus_1", cattab::to_text(c_next)},
                {"d_k", cattab::to_text(d_k)},
                {"f_k", cattab::to_text(f_k)}};
    bool ok = true;

    if (mode == "enumerate") {
        const auto tuples = cattab::enumerate_tuples(k, limits.tuples);
        const auto tables = cattab::enumerate_tables(k + 1, limits.tables);
        const bool tuples_match = cattab::Integer(tuples.size()) == c_k;
        const bool tables_match = cattab::Integer(tables.size()) == d_k;
        ok = tuples_match && tables_match;
        std::cout << "enumerated |C_" << k << "| = " << tuples.size()
                  << (tuples_match ? " (match)" : " (MISMATCH)") << "\n";
        std::cout << "enumerated |T_" << k + 1 << "| = " << tables.size()
                  << (tables_match ? " (match)" : " (MISMATCH)") << "\n";
        record["enumerated_tuples"] = std::to_string(tuples.size());
        record["enumerated_tables"] = std::to_string(tables.size());
    } else if (mode == "identity") {
        const auto report = cattab::verify_pocket_sum_identity(k, limits.tuples);
        ok = report.equal;
        std::cout << "pocket-tree sum = " << report.pocket_tree_sum << ", closed form = "
                  << report.closed_form << (report.equal ? " (match)" : " (MISMATCH)") << "\n";
        record["pocket_tree_sum"] = cattab::to_text(report.pocket_tree_sum);
    } else if (mode == "series") {
        const int order = std::max(k, 1);
        const auto report = cattab::verify_generating_functions(order);
        ok = report.all_hold();
        std::cout << "series order " << order << ": recursion==closed "
                  << (report.recursion_matches_closed ? "ok" : "FAIL") << ", cubic "
                  << (report.cubic_identity ? "ok" : "FAIL") << ", planted cubic "
                  << (report.planted_cubic ? "ok" : "FAIL") << ", product "
                  << (report.product_identity ? "ok" : "FAIL") << "\n";
        record["series_order"] = order;
    } else if (mode != "closed") {
        throw CLI::ValidationError("--mode must be closed, enumerate, identity or series");
    }

    record["ok"] = ok;
    std::cout << "result: " << (ok ? "ok" : "FAIL") << "\n";
    if (!out_path.empty()) write_output(record.dump() + "\n", out_path);
    return ok ? 0 : 1;
}

int run_verify(int n, std::uint64_t seed, int trials, const Limits& limits) {
    bool all_ok = true;
    for (int trial = 0; trial < trials; ++trial) {
        const auto start = std::chrono::steady_clock::now();
        cattab::ModelData data = [&] {
            for (std::uint64_t attempt = 0;; ++attempt) {
                try {
                    return cattab::ModelData::sample(n, seed + static_cast<std::uint64_t>(trial) +
                                                            attempt * 0x9e37ull);
                } catch (const std::invalid_argument& e) {
                    std::cerr << "trial " << trial << ": degenerate data (" << e.what()
                              << "), resampling with next sub-seed\n";
                    if (attempt > 8) throw;
                }
            }
        }();

        const cattab::Expansion expansion = cattab::expand_moment(n, data, limits.tables);
        const cattab::Rational oracle = cattab::recursion_oracle(n, data, limits.moments);
        const cattab::SymmetryReport symmetry =
            cattab::check_cyclic_invariance(n, data, n, limits.tables);

        const bool match = expansion.total == oracle;
        const bool ok = match && symmetry.all_ok();
        all_ok = all_ok && ok;
        std::cout << json{{"trial", trial},
                          {"n", n},
                          {"terms", expansion.terms.size()},
                          {"raw_terms", cattab::to_text(cattab::raw_term_count(n))},
                          {"value", cattab::to_text(expansion.total)},
                          {"matches_recursion", match},
                          {"cyclic", symmetry.cyclic_ok},
                          {"reversal", symmetry.reversal_ok}}
                         .dump()
                  << "\n";
        std::cerr << "trial " << trial << ": " << elapsed_ms(start) << " ms\n";
    }
    std::cout << (all_ok ? "verify: all trials passed" : "verify: FAILURE") << "\n";
    return all_ok ? 0 : 1;
}

int run_expand(std::optional<int> n, const std::string& table_text, const std::string& data_path,
               const std::string& out_path, const Limits& limits) {
    std::optional<cattab::ModelData> data;
    if (!data_path.empty()) {
        std::ifstream in(data_path);
        if (!in) throw std::runtime_error("cannot open data file: " + data_path);
        data = cattab::records::read_model(in);
    }

    std::ostringstream body;
    auto emit = [&](const cattab::CatalanTable& table) {
        json record = cattab::records::table_record(table);
        const cattab::Monomial monomial = cattab::monomial_from_table(table);
        record.update(cattab::records::monomial_record(monomial));
        if (data) record["value"] = cattab::to_text(cattab::evaluate_monomial(monomial, *data));
        body << record.dump() << "\n";
    };

    if (!table_text.empty()) {
        const cattab::CatalanTable table =
            cattab::records::table_from_json(cattab::records::parse_line(table_text, 1));
        emit(table);
    } else {
        if (!n) throw CLI::ValidationError("expand needs --n or --table");
        cattab::Rational total = 0;
        std::size_t terms = 0;
        for (const auto& table : cattab::enumerate_tables(*n / 2, limits.tables)) {
            emit(table);
            ++terms;
            if (data)
                total += cattab::evaluate_monomial(cattab::monomial_from_table(table), *data);
        }
        json summary{{"n", *n}, {"terms", terms}};
        if (data) summary["total"] = cattab::to_text(total);
        body << summary.dump() << "\n";
    }
    write_output(body.str(), out_path);
    return 0;
}

int run_render(const std::string& table_text, const std::string& tuple_text,
               const std::string& kind, const std::string& format, const std::string& out_path,
               const std::string& style_path) {
    if (out_path.empty()) throw CLI::ValidationError("render needs --out");
    cattab::RenderFormat render_format;
    if (format == "svg")
        render_format = cattab::RenderFormat::svg;
    else if (format == "dot")
        render_format = cattab::RenderFormat::dot;
    else
        throw CLI::ValidationError("unsupported format tag: " + format);

    cattab::DiagramStyle style;
    if (!style_path.empty()) {
        std::ifstream in(style_path);
        if (!in) throw std::runtime_error("cannot open style file: " + style_path);
        std::ostringstream text;
        text << in.rdbuf();
        style = cattab::records::style_from_json(cattab::records::parse_line(text.str(), 1));
    }

    std::string document;
    if (kind == "chord") {
        if (table_text.empty()) throw CLI::ValidationError("chord diagrams need --table");
        const cattab::CatalanTable table =
            cattab::records::table_from_json(cattab::records::parse_line(table_text, 1));
        document = cattab::render_chord_diagram(table, render_format, style);
    } else {
        if (tuple_text.empty()) throw CLI::ValidationError("tree renderings need --tuple");
        const cattab::CatalanTuple tuple =
            cattab::records::tuple_from_json(cattab::records::parse_line(tuple_text, 1));
        cattab::TreeKind tree_kind;
        if (kind == "pocket")
            tree_kind = cattab::TreeKind::pocket;
        else if (kind == "direct")
            tree_kind = cattab::TreeKind::direct;
        else if (kind == "opposite")
            tree_kind = cattab::TreeKind::opposite;
        else
            throw CLI::ValidationError("--kind must be chord, pocket, direct or opposite");
        document = cattab::render_tree(tuple, tree_kind, render_format, style);
    }
    write_output(document, out_path);
    std::cout << out_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Catalan tuples, Catalan tables and quartic matrix model moments"};
    app.require_subcommand(1);
    // Global flags stay valid after the subcommand name.
    app.fallthrough();

    bool unsafe_limits = false;
    app.add_flag("--unsafe-limits", unsafe_limits,
                 "lift the enumeration size guards (desk-scale defaults otherwise)");
    std::string cache_dir;
    app.add_option("--cache-dir", cache_dir, "enumeration cache directory")
        ->envname("CATTAB_CACHE_DIR");

    int k = 0;
    int n = 0;
    std::uint64_t seed = 1;
    int trials = 3;
    std::string mode = "closed";
    std::string format = "svg";
    std::string kind = "chord";
    std::string out_path;
    std::string data_path;
    std::string table_text;
    std::string tuple_text;
    std::string style_path;

    CLI::App* cmd_tuples = app.add_subcommand("tuples", "enumerate Catalan tuples of length k");
    cmd_tuples->add_option("--k", k, "tuple length")->required();
    cmd_tuples->add_option("--out", out_path, "output file (stdout otherwise)");

    CLI::App* cmd_tables = app.add_subcommand("tables", "enumerate Catalan tables of length k");
    cmd_tables->add_option("--k", k, "table length")->required();
    cmd_tables->add_option("--out", out_path, "output file (stdout otherwise)");

    CLI::App* cmd_count =
        app.add_subcommand("count", "counting results and combinatorial identities");
    cmd_count->add_option("--k", k, "index into the count tables")->required();
    cmd_count->add_option("--mode", mode, "closed | enumerate | identity | series");
    cmd_count->add_option("--out", out_path, "machine-readable record output");

    CLI::App* cmd_verify =
        app.add_subcommand("verify", "check the expansion against the moment recursion");
    cmd_verify->add_option("--n", n, "number of points (even)")->required();
    cmd_verify->add_option("--seed", seed, "model data seed");
    cmd_verify->add_option("--trials", trials, "number of sampled model data sets");

    CLI::App* cmd_expand = app.add_subcommand("expand", "emit the monomial expansion");
    cmd_expand->add_option("--n", n, "number of points (even)");
    cmd_expand->add_option("--table", table_text, "explicit Catalan table, e.g. [[1,0],[0],[0]]");
    cmd_expand->add_option("--data", data_path, "model data file (JSONL)");
    cmd_expand->add_option("--out", out_path, "output file (stdout otherwise)");

    CLI::App* cmd_render = app.add_subcommand("render", "draw chord diagrams and trees");
    cmd_render->add_option("--table", table_text, "Catalan table for chord diagrams");
    cmd_render->add_option("--tuple", tuple_text, "Catalan tuple for tree drawings");
    cmd_render->add_option("--kind", kind, "chord | pocket | direct | opposite");
    cmd_render->add_option("--format", format, "svg | dot");
    cmd_render->add_option("--out", out_path, "output file")->required();
    cmd_render->add_option("--style", style_path, "style configuration record (JSON)");

    CLI11_PARSE(app, argc, argv);
    const Limits limits = make_limits(unsafe_limits);

    try {
        if (cmd_tuples->parsed()) return run_enumeration("tuples", k, out_path, cache_dir, limits);
        if (cmd_tables->parsed()) return run_enumeration("tables", k, out_path, cache_dir, limits);
        if (cmd_count->parsed()) return run_count(k, mode, out_path, limits);
        if (cmd_verify->parsed()) {
            if (n > limits.moments)
                throw cattab::EnumerationLimitError(
                    "verify: N=" + std::to_string(n) + " exceeds limit " +
                    std::to_string(limits.moments) + " (use --unsafe-limits to lift)");
            return run_verify(n, seed, trials, limits);
        }
        if (cmd_expand->parsed())
            return run_expand(cmd_expand->count("--n") ? std::optional<int>(n) : std::nullopt,
                              table_text, data_path, out_path, limits);
        if (cmd_render->parsed())
            return run_render(table_text, tuple_text, kind, format, out_path, style_path);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const cattab::EnumerationLimitError& e) {
        std::cerr << "error: " << e.what() << " (see --unsafe-limits)\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
