#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dsum/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    std::ostringstream out, err;
    std::istringstream in(input);
    const int code = dsum::cli::run(args, out, err, in);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << contents;
    return path;
}

} // namespace

TEST_CASE("sum") {
    auto r = run({"sum", "1319", "134376"});
    CHECK(r.code == 0);
    CHECK(r.out.find("S = 15847/132\n") != std::string::npos);
    CHECK(r.out.find("s = 15847/1584\n") != std::string::npos);

    r = run({"sum", "2", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("S = 0/1\n") != std::string::npos);

    r = run({"sum", "4", "6"});
    CHECK(r.code == 2);
    CHECK(r.err.find("NotCoprime") != std::string::npos);

    // m is reduced mod n; negative arguments parse.
    r = run({"--json", "sum", "-3", "7", "--evaluator", "naive"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("m") == "4");
    CHECK(j.at("S") == "6/7");
    CHECK(j.at("evaluator") == "naive");

    CHECK(run({"sum", "x", "5"}).code == 2);
    CHECK(run({"sum", "1", "0"}).code == 2);
    CHECK(run({"sum", "1", "5", "--evaluator", "slow"}).code == 2);
    CHECK(run({"sum", "1", "2000000", "--evaluator", "naive"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("realize") {
    auto r = run({"realize", "1", "3", "--json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("m") == "7");
    CHECK(j.at("n_prime") == "15");

    r = run({"realize", "7", "132", "--prime-search-start", "509", "--json"});
    CHECK(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j.at("p") == "509");
    CHECK(j.at("n_prime") == "134376");
    CHECK(j.at("m") == "1319");

    r = run({"realize", "7", "132"});
    CHECK(r.code == 0);
    CHECK(r.out.find("m = 18743\n") != std::string::npos);

    CHECK(run({"realize", "2", "4"}).code == 2);
    CHECK(run({"realize", "1", "9", "--prime-search-start", "30", "--search-cap", "1"}).code == 3);
    CHECK(run({"realize", "1", "9", "--prime-search-start", "1"}).code == 2);
    CHECK(run({"realize", "1", "9", "--mr-rounds", "0"}).code == 2);
}

TEST_CASE("verify") {
    const auto fresh = run({"--json", "realize", "1", "3"});
    REQUIRE(fresh.code == 0);
    const auto good = temp_file("dsum_cli_good.json", fresh.out);
    CHECK(run({"verify", good.string()}).code == 0);
    CHECK(run({"verify", "-"}, fresh.out).code == 0);

    auto j = nlohmann::json::parse(fresh.out);
    j["m"] = "8";
    const auto bad = temp_file("dsum_cli_bad.json", j.dump());
    const auto r = run({"verify", bad.string(), "--json"});
    CHECK(r.code == 1);
    CHECK(nlohmann::json::parse(r.out).at("verified") == false);

    const auto empty = temp_file("dsum_cli_empty.json", "");
    CHECK(run({"verify", empty.string()}).code == 2);
    CHECK(run({"verify", "/nonexistent/cert.json"}).code == 2);
}

TEST_CASE("survey") {
    auto r = run({"survey", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "# n=5,count=3\n5,0,1\n5,2,5\n5,3,5\n");

    r = run({"survey", "7", "--prime-bound", "--json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("count") == 4);
    CHECK(j.at("bound") == "4/1");
    CHECK(j.at("bound_satisfied") == true);

    r = run({"survey", "1"});
    CHECK(r.out == "# n=1,count=1\n1,0,1\n");

    CHECK(run({"survey", "12", "--evaluator", "naive"}).out == run({"survey", "12"}).out);
    CHECK(run({"survey", "9", "--prime-bound"}).code == 2);
    CHECK(run({"survey", "200000"}).code == 2);
}
