#include "romik_cli/cli.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "romik");
    std::ostringstream out, err;
    const int code = romik::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in, "missing golden file " << path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::string kPeriodic = "(-227+sqrt(72901))/274";
const std::string kLiteral = "(250*sqrt(5)-250)/1969";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("golden outputs") {
    const std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
        {"orbit_periodic.txt", {"orbit", kPeriodic, "--steps", "10", "--format", "table"}},
        {"rcf_literal.txt", {"rcf", kLiteral, "--depth", "7", "--format", "table"}},
        {"convergents_romik.txt", {"convergents", "--romik", kPeriodic, "--depth", "9", "--format", "table"}},
        {"skipped_literal.json", {"skipped", kLiteral, "--depth", "7", "--format", "json"}},
        {"cylinder.json", {"cylinder", "(1,1),(1,1),(-1,1),(1,-1)", "--format", "json"}},
        {"natext_verify.json", {"natext-verify", "1/5", "3/4", "1/3", "1/2", "--format", "json"}},
        {"ratio_small.csv", {"ratio", "--seeds", "3", "--seed", "1", "--n", "10000", "--threads", "1"}},
    };
    for (const auto& [name, args] : cases) {
        CAPTURE(name);
        const Result r = run(args);
        CHECK(r.code == romik::cli::Ok);
        CHECK(r.out == slurp(std::string(ROMIK_GOLDEN_DIR) + "/" + name));
    }
}

TEST_CASE("output is byte-stable across runs") {
    const std::vector<std::string> args = {"ratio", "--seeds", "4", "--n", "5000", "--threads", "2", "--format", "json"};
    CHECK(run(args).out == run(args).out);
    const std::vector<std::string> conv = {"convert", kPeriodic, "--depth", "30", "--format", "json"};
    CHECK(run(conv).out == run(conv).out);
}

TEST_CASE("json output parses and carries the computed values") {
    const Result r = run({"orbit", kPeriodic, "--steps", "20", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["end"] == "periodic");
    CHECK(j["period"] == 10);

    const Result c = run({"convert", "[0;(2)]", "--format", "json"});
    REQUIRE(c.code == 0);
    const auto k = nlohmann::json::parse(c.out);
    CHECK(k["status"] == "done");
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == romik::cli::UsageFailure);
    CHECK(run({"--help"}).code == romik::cli::Ok);
    CHECK(run({"orbit", "abc"}).code == romik::cli::UsageFailure);
    CHECK(run({"orbit", "1/3", "--steps", "-3"}).code == romik::cli::UsageFailure);
    CHECK(run({"orbit", "1/3", "--format", "xml"}).code == romik::cli::UsageFailure);
    CHECK(run({"convergents", "1/3"}).code == romik::cli::UsageFailure);
    CHECK(run({"frobnicate"}).code == romik::cli::UsageFailure);

    const Result dom = run({"orbit", "3/2"});
    CHECK(dom.code == romik::cli::DomainFailure);
    CHECK_FALSE(dom.err.empty());
    CHECK(dom.out.empty());
    CHECK(run({"natext-verify", "0", "1/2", "0", "1/2"}).code == romik::cli::DomainFailure);
}

TEST_CASE("usage errors name the offending flag") {
    const Result r = run({"orbit", "1/3", "--steps", "-3"});
    CHECK(r.err.find("--steps") != std::string::npos);
}

TEST_CASE("precision comes from the environment") {
    ::setenv("ROMIK_PRECISION_BITS", "nonsense", 1);
    CHECK(run({"ratio", "--seeds", "1", "--n", "100"}).code == romik::cli::UsageFailure);
    ::setenv("ROMIK_PRECISION_BITS", "64", 1);
    const Result r = run({"ratio", "--seeds", "1", "--n", "100", "--format", "json"});
    ::unsetenv("ROMIK_PRECISION_BITS");
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["backend"] == "long-double");
}

}  // TEST_SUITE
