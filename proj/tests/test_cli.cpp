#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include <regemb/cli.hpp>

#include "schema_check.hpp"

using regemb::cli::run_cli;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

const std::string kSourceDir = REGEMB_SOURCE_DIR;

nlohmann::json schema() {
    static nlohmann::json s =
        nlohmann::json::parse(slurp(kSourceDir + "/schemas/cli_output.schema.json"));
    return s;
}

void check_json_invocation(const std::vector<std::string>& args) {
    auto r = run(args);
    CAPTURE(args, r.err);
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc.is_object());
    REQUIRE(schema_check::validate(doc, schema()));
}

}  // namespace

TEST_CASE("bounds table csv matches the published rows") {
    auto r = run({"bounds", "table", "--rows", "3,3,3", "3,9,3", "--format", "csv"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out ==
            "d,k,p,thmA,thmB,thmC,notes\n"
            "3,3,3,4,7,7,\n"
            "3,9,3,22,,25,\n");
}

TEST_CASE("bounds table csv flags the discrepant row") {
    auto r = run({"bounds", "table", "--rows", "3,8,3", "--format", "csv"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("3,8,3,22,,16,") != std::string::npos);
    REQUIRE(r.out.find("18") != std::string::npos);
}

TEST_CASE("golden files") {
    struct Golden {
        std::vector<std::string> args;
        std::string file;
    };
    std::vector<Golden> cases = {
        {{"bounds", "table", "--rows", "3,3,3", "3,9,3", "3,8,3", "--format", "csv"},
         "bounds_table.csv"},
        {{"bounds", "table", "--rows", "3,3,3", "3,9,3", "3,8,3"}, "bounds_table.txt"},
        {{"newton", "check", "--p", "3", "--d", "5"}, "newton_check.txt"},
        {{"newton", "check", "--p", "3", "--d", "11", "--n", "3"}, "newton_cofiber.txt"},
        {{"dl", "stats", "--p", "2", "--seq", "2,1"}, "dl_stats.txt"},
        {{"dl", "stats", "--p", "3", "--seq", "1,2,0,1"}, "dl_stats_odd.txt"},
        {{"classes", "cyclic", "--p", "3", "--d-real", "5"}, "classes_cyclic.txt"},
        {{"classes", "config", "--p", "3", "--t", "1", "--k", "3"}, "classes_config.txt"},
        {{"heights", "--d", "4", "--p", "2"}, "heights.txt"},
        {{"verify", "vandermonde", "--k", "4", "--samples", "20", "--seed", "1"},
         "verify_vandermonde.txt"},
    };
    for (const auto& g : cases) {
        CAPTURE(g.file);
        auto first = run(g.args);
        auto second = run(g.args);
        REQUIRE(first.code == 0);
        REQUIRE(first.out == second.out);  // byte-identical across runs
        REQUIRE(first.out == slurp(kSourceDir + "/tests/golden/" + g.file));
    }
}

TEST_CASE("json outputs validate against the shipped schema") {
    check_json_invocation({"bounds", "table", "--rows", "3,3,3", "3,8,3", "--format", "json"});
    check_json_invocation({"bounds", "query", "--theorem", "kregular_chisholm", "--d", "3",
                           "--k", "9", "--p", "3", "--format", "json"});
    check_json_invocation({"bounds", "query", "--theorem", "secat_range", "--d", "2", "--p",
                           "3", "--m", "1", "--format", "json"});
    check_json_invocation({"bounds", "query", "--theorem", "cat_lower", "--d", "2", "--k",
                           "14", "--format", "json"});
    check_json_invocation({"classes", "cyclic", "--p", "3", "--d-real", "5", "--format",
                           "json"});
    check_json_invocation({"classes", "config", "--p", "3", "--t", "1", "--k", "3",
                           "--format", "json"});
    check_json_invocation({"newton", "check", "--p", "3", "--d", "5", "--format", "json"});
    check_json_invocation({"newton", "check", "--p", "3", "--d", "7", "--n", "3",
                           "--format", "json"});
    check_json_invocation({"dl", "stats", "--p", "2", "--seq", "2,1", "--format", "json"});
    check_json_invocation({"dl", "stats", "--p", "2", "--seq", "", "--format", "json"});
    check_json_invocation({"heights", "--d", "4", "--p", "2", "--format", "json"});
    check_json_invocation({"verify", "vandermonde", "--k", "3", "--samples", "5", "--seed",
                           "7", "--format", "json"});
    check_json_invocation({"dl", "stats", "--p", "3", "--seq", "1,2,0,1", "--format",
                           "json"});

    SECTION("every theorem id answers a query") {
        std::vector<std::vector<std::string>> queries = {
            {"--theorem", "kregular_real", "--d-real", "6", "--k", "3"},
            {"--theorem", "kregular_prime", "--d-real", "6", "--p", "3"},
            {"--theorem", "kregular_chisholm", "--d", "3", "--k", "3", "--p", "3"},
            {"--theorem", "kregular_brs", "--d-real", "4", "--k", "3"},
            {"--theorem", "skew_real", "--d", "2", "--ell", "2"},
            {"--theorem", "skew_prime", "--d", "2", "--ell", "3"},
            {"--theorem", "skew_chisholm", "--d", "3", "--ell", "3", "--p", "3"},
            {"--theorem", "cat_lower", "--d", "2", "--k", "14"},
            {"--theorem", "secat_range", "--d", "2", "--p", "3", "--m", "1"},
            {"--theorem", "height_bound", "--d", "4", "--p", "2"},
            {"--theorem", "derived_kregular", "--dual-degree", "4", "--k", "3"},
            {"--theorem", "derived_skew", "--dual-degree", "4", "--d", "3", "--ell", "3"},
        };
        for (auto q : queries) {
            std::vector<std::string> args = {"bounds", "query"};
            args.insert(args.end(), q.begin(), q.end());
            auto text = run(args);
            CAPTURE(args, text.err);
            REQUIRE(text.code == 0);
            args.push_back("--format");
            args.push_back("json");
            check_json_invocation(args);
        }
    }

    SECTION("the schema actually discriminates") {
        auto bad = nlohmann::json{{"command", "bounds table"}};  // rows missing
        REQUIRE_FALSE(schema_check::validate(bad, schema()));
        auto worse = nlohmann::json{{"rows", 3}};
        REQUIRE_FALSE(schema_check::validate(worse, schema()));
    }
}

TEST_CASE("exit codes") {
    SECTION("fail verdicts exit 1") {
        auto r = run({"verify", "vandermonde", "--k", "3", "--samples", "5", "--seed", "2",
                      "--truncated"});
        REQUIRE(r.code == 1);
        REQUIRE(r.out.find("regular on all samples: no") != std::string::npos);
    }

    SECTION("usage errors exit 2") {
        REQUIRE(run({"nonsense"}).code == 2);
        REQUIRE(run({"bounds"}).code == 2);
        REQUIRE(run({"verify", "vandermonde", "--k", "3", "--samples", "5"}).code == 2);
        REQUIRE(run({"dl", "stats", "--p", "2", "--seq", "2,x"}).code == 2);
        REQUIRE(run({"bounds", "table", "--rows", "3,3", "--format", "csv"}).code == 2);
        REQUIRE(run({"bounds", "query", "--theorem", "who_knows"}).code == 2);
    }

    SECTION("domain errors exit 2") {
        auto r = run({"bounds", "query", "--theorem", "kregular_chisholm", "--d", "4",
                      "--k", "3", "--p", "3"});
        REQUIRE(r.code == 2);
        REQUIRE(r.err.find("power of p") != std::string::npos);
        REQUIRE(run({"classes", "cyclic", "--p", "2", "--d-real", "5"}).code == 2);
        REQUIRE(run({"newton", "check", "--p", "3", "--d", "9"}).code == 2);
    }

    SECTION("help exits 0") {
        auto r = run({"--help"});
        REQUIRE(r.code == 0);
        REQUIRE(r.out.find("bounds") != std::string::npos);
    }
}

TEST_CASE("--out writes the payload to a file") {
    std::string path = "cli_out_test.csv";
    auto r = run({"bounds", "table", "--rows", "3,3,3", "--format", "csv", "--out", path});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.empty());
    REQUIRE(slurp(path).find("3,3,3,4,7,7,") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("verify map reads the wire format") {
    std::string path = "cli_map_test.json";
    {
        std::ofstream f(path);
        // the identity-free pair (1, z): 2-regular but not 3-regular
        f << R"({"arity": 1, "components": [[[[1,1,0,1],[0]]], [[[1,1,0,1],[1]]]]})";
    }
    auto ok = run({"verify", "map", "--file", path, "--k", "2", "--samples", "10",
                   "--seed", "5"});
    REQUIRE(ok.code == 0);
    auto fail = run({"verify", "map", "--file", path, "--k", "3", "--samples", "10",
                     "--seed", "5"});
    REQUIRE(fail.code == 1);
    auto missing = run({"verify", "map", "--file", "no_such_file.json", "--k", "2",
                        "--samples", "5", "--seed", "5"});
    REQUIRE(missing.code == 2);
    std::remove(path.c_str());
}
