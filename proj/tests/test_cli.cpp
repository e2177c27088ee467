#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <connprob/cli.hpp>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    RunResult r;
    r.code = connprob::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

// Fresh scratch directory per test case, removed on destruction.
struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() / ("connprob-clitest-" + tag);
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string str() const { return path.string(); }
};

std::string write_file(const TempDir& dir, const std::string& name, const std::string& body) {
    fs::path p = dir.path / name;
    std::ofstream out(p);
    out << body;
    return p.string();
}

}  // namespace

TEST_CASE("models lists the registry") {
    auto table = run_cli({"models"});
    CHECK(table.code == 0);
    CHECK(table.out.find("graph") != std::string::npos);
    CHECK(table.out.find("gem3") != std::string::npos);
    CHECK(table.out.find("ratio") != std::string::npos);

    auto j = run_cli({"models", "--format", "json"});
    CHECK(j.code == 0);
    json p = json::parse(j.out);
    CHECK(p["models"].size() == 13);
    CHECK(p["models"][0]["id"] == "graph");
}

TEST_CASE("coeffs and connected emit exact digit strings") {
    TempDir tmp("coeffs");
    auto r = run_cli({"coeffs", "--model", "graph", "-r", "6", "--format", "json",
                      "--cache-dir", tmp.str()});
    REQUIRE(r.code == 0);
    json p = json::parse(r.out);
    CHECK(p["terms"] == json::array({"1", "1", "2", "8", "64", "1024", "32768"}));
    CHECK(p["from"] == 0);
    CHECK(p["to"] == 6);

    auto c = run_cli({"connected", "--model", "graph", "--at", "6", "--format", "json",
                      "--cache-dir", tmp.str()});
    REQUIRE(c.code == 0);
    json q = json::parse(c.out);
    CHECK(q["connected"] == json::array({"26704"}));

    auto rng = run_cli({"connected", "--model", "comb_map", "--range", "2..6",
                        "--format", "json", "--cache-dir", tmp.str()});
    json s = json::parse(rng.out);
    CHECK(s["connected"] == json::array({"2", "0", "60", "0", "8880"}));
}

TEST_CASE("derivative reports delta and d") {
    TempDir tmp("derivative");
    auto r = run_cli({"derivative", "--model", "graph", "-r", "7", "--format", "json",
                      "--cache-dir", tmp.str()});
    REQUIRE(r.code == 0);
    json p = json::parse(r.out);
    const char* expected[] = {"1", "0", "2", "24", "544", "22320", "1677488"};
    REQUIRE(p["terms"].size() == 7);
    for (int k = 1; k <= 7; ++k) CHECK(p["terms"][k - 1]["d"] == expected[k - 1]);
    CHECK(p["interpretation_claimed"] == true);

    auto t = run_cli({"derivative", "--model", "triangulation", "-r", "2",
                      "--cache-dir", tmp.str()});
    CHECK(t.code == 0);
    CHECK(t.out.find("no combinatorial interpretation") != std::string::npos);
}

TEST_CASE("expand evaluates the truncated expansion exactly") {
    TempDir tmp("expand");
    auto r = run_cli({"expand", "--model", "graph", "-r", "4", "--at", "12",
                      "--format", "json", "--cache-dir", tmp.str()});
    REQUIRE(r.code == 0);
    json p = json::parse(r.out);
    CHECK(p["terms"][1]["d"] == "0");
    CHECK(p["terms"][0]["formula"] == "1 * C(n,1) * 2^(1 - 1n)");
    CHECK(p["at"]["value"]["numerator"] == "34158396211");
    CHECK(p["at"]["value"]["denominator"] == "34359738368");
}

TEST_CASE("series prints the frozen 1/n coefficients") {
    TempDir tmp("series");
    auto r = run_cli({"series", "--model", "triangulation", "-r", "3", "--format", "json",
                      "--cache-dir", tmp.str()});
    REQUIRE(r.code == 0);
    json p = json::parse(r.out);
    const char* nums[] = {"5", "695", "216305"};
    const char* dens[] = {"36", "2592", "279936"};
    REQUIRE(p["coefficients"].size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(p["coefficients"][i]["numerator"] == nums[i]);
        CHECK(p["coefficients"][i]["denominator"] == dens[i]);
    }
    CHECK(p["convention"].get<std::string>().find("lattice") != std::string::npos);

    auto e = run_cli({"series", "--model", "graph", "-r", "3", "--cache-dir", tmp.str()});
    CHECK(e.code == 1);
    CHECK(e.err.find("domain error:") == 0);
    CHECK(e.err.find("term_list") != std::string::npos);
}

TEST_CASE("exact probabilities with optional decimal rendering") {
    TempDir tmp("exact");
    auto r = run_cli({"exact", "--model", "graph", "--at", "4", "--format", "json",
                      "--decimal", "6", "--cache-dir", tmp.str()});
    REQUIRE(r.code == 0);
    json p = json::parse(r.out);
    CHECK(p["values"][0]["probability"]["numerator"] == "19");
    CHECK(p["values"][0]["probability"]["denominator"] == "32");
    CHECK(p["values"][0]["probability"]["decimal"] == "0.593750");

    auto rng = run_cli({"exact", "--model", "comb_map", "--range", "1..6",
                        "--format", "json", "--cache-dir", tmp.str()});
    REQUIRE(rng.code == 0);
    json q = json::parse(rng.out);
    REQUIRE(q["values"].size() == 3);  // off-lattice sizes skipped
    CHECK(q["values"][0]["size"] == 2);
    CHECK(q["values"][2]["probability"]["numerator"] == "37");
    CHECK(q["values"][2]["probability"]["denominator"] == "45");
}

TEST_CASE("verify runs the enumeration cross-checks") {
    TempDir tmp("verify");
    auto r = run_cli({"verify", "--model", "graph", "--budget", "40000",
                      "--cache-dir", tmp.str()});
    CHECK(r.code == 0);
    CHECK(r.out.find("all checks passed") != std::string::npos);

    auto skip = run_cli({"verify", "--model", "gem3", "--cache-dir", tmp.str()});
    CHECK(skip.code == 0);
    CHECK(skip.out.find("no oracle binding") != std::string::npos);
}

TEST_CASE("diagnose prints a verdict") {
    TempDir tmp("diagnose");
    auto r = run_cli({"diagnose", "--model", "graph", "--window", "5..24",
                      "--r-max", "3", "--cache-dir", tmp.str()});
    CHECK(r.code == 0);
    CHECK(r.out.find("CONSISTENT") != std::string::npos);

    std::string ones = "[1";
    for (int i = 1; i <= 24; ++i) ones += ",1";
    ones += "]";
    std::string f = write_file(tmp, "constant.json",
                               R"({"label":"constant","period":1,"terms":)" + ones + "}");
    auto bad = run_cli({"diagnose", "--model-file", f, "--window", "5..24"});
    CHECK(bad.code == 0);
    CHECK(bad.out.find("INCONSISTENT") != std::string::npos);
    CHECK(bad.out.find("violation:") != std::string::npos);

    auto prod = run_cli({"diagnose", "--model", "origami", "--product-with", "origami",
                         "--window", "5..20"});
    CHECK(prod.code == 0);
    CHECK(prod.out.find("origami * origami") != std::string::npos);
}

TEST_CASE("custom model files work across subcommands") {
    TempDir tmp("custom");
    std::string f = write_file(tmp, "graphlike.json",
                               R"({"label":"graphlike","period":1,)"
                               R"("terms":[1,1,2,8,64,1024,32768,"2097152"]})");
    auto r = run_cli({"connected", "--model-file", f, "-r", "7", "--format", "json",
                      "--cache-dir", tmp.str()});
    REQUIRE(r.code == 0);
    json p = json::parse(r.out);
    CHECK(p["model"] == "custom:graphlike");
    CHECK(p["connected"] == json::array({"0", "1", "1", "4", "38", "728", "26704", "1866256"}));

    auto trunc = run_cli({"connected", "--model-file", f, "-r", "9", "--cache-dir", tmp.str()});
    CHECK(trunc.code == 1);
    CHECK(trunc.err.find("insufficient data:") == 0);

    std::string bad = write_file(tmp, "bad.json", R"({"label":"x","period":1,"terms":[2]})");
    auto v = run_cli({"connected", "--model-file", bad, "-r", "0"});
    CHECK(v.code == 1);
    CHECK(v.err.find("validation error:") == 0);
}

TEST_CASE("results are cached byte-stably and the cache is display-independent") {
    TempDir tmp("cache");
    std::vector<std::string> args = {"series", "--model", "quad_sts", "-r", "4",
                                     "--format", "json", "--cache-dir", tmp.str()};
    auto first = run_cli(args);
    REQUIRE(first.code == 0);

    size_t entries = 0;
    fs::path entry;
    for (const auto& de : fs::directory_iterator(tmp.path))
        if (de.path().extension() == ".json") {
            ++entries;
            entry = de.path();
        }
    REQUIRE(entries == 1);

    auto second = run_cli(args);
    CHECK(second.code == 0);
    CHECK(second.out == first.out);

    // decoration happens after cache retrieval and must not disturb the entry
    auto decorated = run_cli({"series", "--model", "quad_sts", "-r", "4", "--format", "json",
                              "--decimal", "4", "--cache-dir", tmp.str()});
    CHECK(decorated.out.find("decimal") != std::string::npos);
    std::ifstream in(entry);
    json envelope = json::parse(in);
    CHECK(envelope["payload"].dump().find("decimal") == std::string::npos);

    // corrupt entries are recomputed silently
    { std::ofstream out(entry, std::ios::trunc); out << "{corrupt"; }
    auto third = run_cli(args);
    CHECK(third.code == 0);
    CHECK(third.out == first.out);

    auto nocache = run_cli({"series", "--model", "quad_sts", "-r", "4", "--format", "json",
                            "--no-cache"});
    CHECK(nocache.out == first.out);
}

TEST_CASE("exit codes distinguish usage, domain, and validation failures") {
    auto unknown = run_cli({"coeffs", "--model", "nosuch"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("usage error: unknown model 'nosuch'") == 0);

    auto both = run_cli({"coeffs", "--model", "graph", "--model-file", "x.json"});
    CHECK(both.code == 2);

    auto badparam = run_cli({"coeffs", "--model", "multigraph", "--param", "junk"});
    CHECK(badparam.code == 2);

    auto missing = run_cli({"coeffs"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("a model is required") != std::string::npos);

    auto offlattice = run_cli({"exact", "--model", "comb_map", "--at", "7", "--no-cache"});
    CHECK(offlattice.code == 1);
    CHECK(offlattice.err.find("domain error:") == 0);
    CHECK(offlattice.err.find("period 2") != std::string::npos);

    auto badd = run_cli({"coeffs", "--model", "multilinear", "--param", "d=1", "--no-cache"});
    CHECK(badd.code == 1);
    CHECK(badd.err.find("validation error:") == 0);

    auto nosub = run_cli({});
    CHECK(nosub.code == 2);

    auto badflag = run_cli({"coeffs", "--model", "graph", "--frobnicate"});
    CHECK(badflag.code == 2);

    auto help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("diagnose") != std::string::npos);
}
