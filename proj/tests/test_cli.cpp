#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = opn::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("simple subcommands") {
    CHECK(run({"perfect", "28"}).out == "true\n");
    CHECK(run({"perfect", "27"}).out == "false\n");
    CHECK(run({"sigma", "9018009"}).out == "18035199\n");
    CHECK(run({"factor", "22021"}).out == "19^2*61^1\n");
    CHECK(run({"abundancy", "9"}).out == "13/9\n");
    CHECK(run({"valuation", "7", "105301"}).out == "3\n");
    CHECK(run({"two-thirds", "3", "1"}).out == "p=3\nb=1\nholds_general=true\nholds_two_thirds=true\n");
    CHECK(run({"perfect", "28"}).code == 0);
}

TEST_CASE("domain and usage errors") {
    auto r = run({"eulerian", "7^1*3^2"});
    CHECK(r.code == 1);
    CHECK(r.err.rfind("SpecialPrimeResidue: ", 0) == 0);

    r = run({"eulerian", "3^2*7^2*11^2*13^2*22021"});
    CHECK(r.code == 1);
    CHECK(r.err.rfind("NotPrime", 0) == 0);

    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"sigma"}).code == 2);
    CHECK(run({"sigma", "0"}).code == 2);
    CHECK(run({"sigma", "12x"}).code == 2);
    CHECK(run({"eulerian", "3^^2"}).code == 2);
    CHECK(run({"scan-squarefree", "--qmax", "10", "--k", "3"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("eulerian report for the spoof") {
    const auto r = run({"eulerian", "3^2*7^2*11^2*13^2*22021", "--pretend", "22021"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("q=22021\n") != std::string::npos);
    CHECK(r.out.find("n=3003\n") != std::string::npos);
    CHECK(r.out.find("distinct_primes=5\n") != std::string::npos);
    CHECK(r.out.find("cube_bound=violated\n") != std::string::npos);
}

TEST_CASE("spoof search records") {
    const auto r = run({"--format", "records", "spoof-search", "--primes", "3,7,11,13", "--max-exp", "2", "--d-limit",
                        "100000"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::vector<nlohmann::json> records;
    while (std::getline(lines, line)) records.push_back(nlohmann::json::parse(line));
    REQUIRE(records.size() == 1);
    CHECK(records[0]["record"] == "spoof");
    CHECK(records[0]["d"] == "22021");
    CHECK(records[0]["d_factorization"] == "19^2*61^1");
    CHECK(records[0]["is_spoof_perfect"] == true);
    CHECK(records[0]["d_is_composite"] == true);
    CHECK(records[0]["q_vs_n"] == "greater");
}

TEST_CASE("records are deterministic across runs and worker counts") {
    const std::vector<std::vector<std::string>> commands = {
        {"--format", "records", "scan-squarefree", "--qmax", "600", "--k", "5,9"},
        {"--format", "records", "--jobs", "4", "scan-squarefree", "--qmax", "600", "--k", "5,9"},
        {"--format", "records", "scan-residue", "--qmax", "40", "--k", "5", "--probe"},
        {"--format", "records", "--jobs", "3", "scan-residue", "--qmax", "40", "--k", "5", "--probe"},
        {"--format", "records", "scan-lemma-u", "--pmax", "60", "--bmax", "3"},
        {"--format", "records", "--jobs", "5", "scan-lemma-u", "--pmax", "60", "--bmax", "3"},
    };
    for (std::size_t i = 0; i < commands.size(); i += 2) {
        const auto first = run(commands[i]);
        REQUIRE(first.code == 0);
        CHECK(run(commands[i]).out == first.out);
        CHECK(run(commands[i + 1]).out == first.out);
    }
}

TEST_CASE("dris, trace and gcd subcommands") {
    auto r = run({"--format", "records", "dris-check", "5^5*11^4*41^4*3^2"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["case"] == "Case1");
    CHECK(j["guaranteed_qk_lt_n"] == true);
    CHECK(j["case1_witness_r"] == "31");

    r = run({"--format", "records", "trace-k1", "3^2*7^2*11^2*13^2*22021", "--pretend", "22021"});
    REQUIRE(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["case"] == 2);
    CHECK(j["final_holds"] == false);

    r = run({"trace-k1", "13*3^2"});
    CHECK(r.code == 1);
    CHECK(r.err.rfind("PremiseFailure", 0) == 0);

    r = run({"gcd-diagnostic", "5^5*3^2"});
    CHECK(r.code == 1);
    CHECK(r.err.rfind("NotApplicable", 0) == 0);

    r = run({"gcd-diagnostic", "13^5*3^2*61^2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("lhs=3\nrhs=183\n") != std::string::npos);
}

TEST_CASE("factor cache via flag") {
    const auto path = std::filesystem::temp_directory_path() / "opn_cli_cache_test.txt";
    std::filesystem::remove(path);
    CHECK(run({"--cache", path.string(), "factor", "22021"}).out == "19^2*61^1\n");
    std::ifstream in(path);
    std::string content((std::istreambuf_iterator<char>(in)), {});
    CHECK(content == "22021 19^2 61^1\n");
    // Second run hits the cache: sigma(19^2) sigma(61) = 381 * 62, file unchanged.
    CHECK(run({"--cache", path.string(), "sigma", "22021"}).out == "23622\n");
    std::ifstream again(path);
    CHECK(std::string((std::istreambuf_iterator<char>(again)), {}) == content);
    std::filesystem::remove(path);
}
