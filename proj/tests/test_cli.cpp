#include "cattab/records.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

// Runs the installed binary with stdout captured; stderr is left alone so
// failures stay visible in the test log.
RunResult run(const std::string& args) {
    static int counter = 0;
    const fs::path out = fs::temp_directory_path() / ("cattab-cli-" + std::to_string(counter++));
    const std::string command = std::string(CATTAB_BIN) + " " + args + " > " + out.string();
    const int status = std::system(command.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out);
    fs::remove(out);
    return result;
}

}  // namespace

TEST_CASE("cli: tuple and table enumeration records") {
    const RunResult tuples = run("tuples --k 3");
    CHECK(tuples.exit_code == 0);
    CHECK(tuples.out == "{\"tuple\":[3,0,0,0]}\n{\"tuple\":[2,1,0,0]}\n{\"tuple\":[2,0,1,0]}\n"
                        "{\"tuple\":[1,2,0,0]}\n{\"tuple\":[1,1,1,0]}\n"
                        "{\"kind\":\"tuples\",\"k\":3,\"count\":\"5\"}\n");

    const RunResult tables = run("tables --k 3");
    CHECK(tables.exit_code == 0);
    CHECK(tables.out.find("\"count\":\"7\"") != std::string::npos);

    const RunResult single = run("tuples --k 0");
    CHECK(single.out == "{\"tuple\":[0]}\n{\"kind\":\"tuples\",\"k\":0,\"count\":\"1\"}\n");

    // --out writes exactly the stream that stdout would carry.
    const fs::path out_path = fs::temp_directory_path() / "cattab-cli-tuples.jsonl";
    const RunResult to_file = run("tuples --k 3 --out " + out_path.string());
    CHECK(to_file.exit_code == 0);
    CHECK(to_file.out.empty());
    CHECK(slurp(out_path) == tuples.out);
    fs::remove(out_path);
}

TEST_CASE("cli: identical invocations are byte-identical") {
    const std::string args = "verify --n 6 --seed 4 --trials 2 2>/dev/null";
    const RunResult first = run(args);
    const RunResult second = run(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.find("all trials passed") != std::string::npos);
    CHECK(first.out.find("\"terms\":7") != std::string::npos);
}

TEST_CASE("cli: count modes and exit codes") {
    const RunResult closed = run("count --k 7 --mode closed");
    CHECK(closed.exit_code == 0);
    CHECK(closed.out.find("21318") != std::string::npos);

    CHECK(run("count --k 0 --mode identity").exit_code == 0);
    CHECK(run("count --k 6 --mode series").exit_code == 0);
    CHECK(run("count --k 4 --mode enumerate").exit_code == 0);
    CHECK(run("count --k 3 --mode bogus 2>/dev/null").exit_code != 0);
}

TEST_CASE("cli: verify exit status and reporting") {
    const RunResult good = run("verify --n 2 --seed 1 --trials 1 2>/dev/null");
    CHECK(good.exit_code == 0);
    const RunResult twelve = run("verify --n 12 --seed 1 --trials 1 2>/dev/null");
    CHECK(twelve.exit_code == 0);
    CHECK(twelve.out.find("\"terms\":728") != std::string::npos);
    CHECK(twelve.out.find("\"raw_terms\":\"1344\"") != std::string::npos);
    // Limit guard: N=16 needs --unsafe-limits.
    CHECK(run("verify --n 16 --seed 1 --trials 1 2>/dev/null").exit_code == 2);
}

TEST_CASE("cli: expand") {
    const RunResult symbolic = run("expand --n 4");
    CHECK(symbolic.exit_code == 0);
    CHECK(symbolic.out.find("{\"n\":4,\"terms\":2}") != std::string::npos);

    const RunResult two = run("expand --n 2");
    CHECK(two.out.find("\"threads\":[]") != std::string::npos);

    const RunResult reference =
        run("expand --table \"[[2,0,0],[1,1,0],[0],[0],[0],[1,0],[0]]\"");
    CHECK(reference.exit_code == 0);
    CHECK(reference.out.find("\"chords\":[[0,5],[1,2],[3,4],[6,7],[8,11],[9,10]]") !=
          std::string::npos);

    // With model data, values and a total appear.
    const fs::path data_path = fs::temp_directory_path() / "cattab-cli-model.jsonl";
    {
        std::ofstream out(data_path);
        cattab::records::write_model(out, cattab::ModelData::sample(4, 8));
    }
    const RunResult valued = run("expand --n 4 --data " + data_path.string());
    CHECK(valued.exit_code == 0);
    CHECK(valued.out.find("\"value\":\"") != std::string::npos);
    CHECK(valued.out.find("\"total\":\"") != std::string::npos);
    fs::remove(data_path);

    // Malformed or invalid tables are rejected.
    CHECK(run("expand --table \"[[0],[7]]\" 2>/dev/null").exit_code == 2);
    CHECK(run("expand --table \"not json\" 2>/dev/null").exit_code == 2);
}

TEST_CASE("cli: render writes files and reports the path") {
    const fs::path out_svg = fs::temp_directory_path() / "cattab-cli-render.svg";
    const RunResult svg = run("render --table \"[[0],[0]]\" --kind chord --format svg --out " +
                              out_svg.string());
    CHECK(svg.exit_code == 0);
    CHECK(svg.out == out_svg.string() + "\n");
    CHECK(slurp(out_svg).find("<svg") != std::string::npos);
    fs::remove(out_svg);

    const fs::path out_dot = fs::temp_directory_path() / "cattab-cli-render.dot";
    const RunResult dot =
        run("render --tuple \"[6,0,0,1,3,0,0,0,2,2,0,0,0,0,0]\" --kind opposite --format dot "
            "--out " + out_dot.string());
    CHECK(dot.exit_code == 0);
    CHECK(slurp(out_dot).find("graph thread_tree") != std::string::npos);
    fs::remove(out_dot);

    CHECK(run("render --table \"[[0],[0]]\" --kind chord --format png --out /tmp/x.png "
              "2>/dev/null").exit_code != 0);
}

TEST_CASE("cli: enumeration limits and the unsafe override") {
    CHECK(run("tuples --k 13 2>/dev/null").exit_code == 2);
    CHECK(run("tables --k 10 2>/dev/null").exit_code == 2);
    CHECK(run("tuples --k 13 --unsafe-limits --out /dev/null").exit_code == 0);
}

TEST_CASE("cli: cache reuse is byte-identical and hash-guarded") {
    const fs::path cache_dir = fs::temp_directory_path() / "cattab-cli-cache";
    fs::remove_all(cache_dir);

    const std::string args = "tables --k 4 --cache-dir " + cache_dir.string();
    const RunResult fresh = run(args);
    REQUIRE(fresh.exit_code == 0);
    const RunResult cached = run(args);
    CHECK(cached.out == fresh.out);
    const RunResult uncached = run("tables --k 4");
    CHECK(uncached.out == fresh.out);

    // A tampered payload is ignored and regenerated.
    const fs::path payload = cache_dir / ("tables-k4-v" +
                                          std::to_string(cattab::records::kFormatVersion) +
                                          ".jsonl");
    REQUIRE(fs::exists(payload));
    {
        std::ofstream tamper(payload, std::ios::binary);
        tamper << "{\"garbage\":true}\n";
    }
    const RunResult regenerated = run(args);
    CHECK(regenerated.out == fresh.out);
    CHECK(slurp(payload) == fresh.out);

    // Environment variable supplies the default cache directory.
    fs::remove_all(cache_dir);
    setenv("CATTAB_CACHE_DIR", cache_dir.string().c_str(), 1);
    const RunResult via_env = run("tables --k 4");
    unsetenv("CATTAB_CACHE_DIR");
    CHECK(via_env.out == fresh.out);
    CHECK(fs::exists(payload));
    fs::remove_all(cache_dir);
}
