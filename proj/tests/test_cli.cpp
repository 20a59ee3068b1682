#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "galcoh/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "galcoh");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = galcoh::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string problem(const std::string& name) { return std::string(GALCOH_SOURCE_DIR) + "/problems/" + name + ".json"; }

std::string write_temp(const std::string& name, const std::string& text) {
    const std::string path = (std::filesystem::temp_directory_path() / ("galcoh_test_" + name)).string();
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("cli: answers for the bundled problems") {
    const struct {
        const char* file;
        const char* answer;
    } cases[] = {{"decide_model_trivial", "yes"}, {"decide_model_mu4", "no"}, {"decide_tits_mu4", "no"},
                 {"decide_hxh_q8", "no"},         {"decide_gu_mu4_trivial", "no"}, {"neutral_quaternionic", "no"}};
    for (const auto& c : cases) {
        INFO(c.file);
        const Run r = cli({"run", "-i", problem(c.file)});
        REQUIRE(r.code == galcoh::kExitOk);
        const json j = json::parse(r.out);
        CHECK(j.at("answer") == c.answer);
        CHECK(j.at("verification").at("all_pass") == true);
        CHECK(j.at("schema_version") == 1);
    }
    const json gu = json::parse(cli({"decide-gu", "-i", problem("decide_gu_mu4_trivial")}).out);
    CHECK(gu.at("certificate").contains("nontrivial_class"));
    CHECK_FALSE(gu.at("assumed_hypotheses").empty());
}

TEST_CASE("cli: cohomology and delta") {
    const json h2 = json::parse(cli({"cohomology", "-i", problem("cohomology_h2_c2")}).out);
    CHECK(h2.dump().find("invariants") != std::string::npos);
    const Run d = cli({"delta", "-i", problem("delta_mu4")});
    CHECK(d.code == 0);
    const Run v = cli({"verify-example", "-i", problem("verify_example"), "--samples", "10"});
    CHECK(v.code == 0);
    CHECK(json::parse(v.out).at("verification").at("all_pass") == true);
}

TEST_CASE("cli: malformed input reports the path and exits 2") {
    const Run r = cli({"run", "-i", problem("malformed_table")});
    CHECK(r.code == galcoh::kExitInput);
    CHECK(r.err.find(".payload.G.table") != std::string::npos);
    CHECK(r.out.empty());

    CHECK(cli({"run", "-i", write_temp("notjson.json", "{nope")}).code == galcoh::kExitInput);
    CHECK(cli({"run", "-i", "does/not/exist.json"}).code == galcoh::kExitInput);
    const Run wrong = cli({"run", "-i", write_temp("v2.json", R"({"schema_version":2,"kind":"decide-gu","payload":{}})")});
    CHECK(wrong.code == galcoh::kExitInput);
    CHECK(wrong.err.find(".schema_version") != std::string::npos);
    const Run mismatch = cli({"decide-model", "-i", problem("decide_gu_mu4_trivial")});
    CHECK(mismatch.code == galcoh::kExitInput);
    CHECK(mismatch.err.find(".kind") != std::string::npos);
}

TEST_CASE("cli: budget exhaustion exits 3") {
    const Run r = cli({"run", "-i", problem("decide_model_mu4"), "--budget", "1"});
    CHECK(r.code == galcoh::kExitBudget);
    CHECK(r.err.find("SearchBudgetExceeded") != std::string::npos);
}

TEST_CASE("cli: output is deterministic and round-trips through check") {
    for (const char* f : {"decide_model_mu4", "decide_tits_mu4", "decide_hxh_q8", "decide_gu_mu4_trivial"}) {
        INFO(f);
        const Run a = cli({"run", "-i", problem(f)});
        const Run b = cli({"run", "-i", problem(f)});
        CHECK(a.out == b.out);
        const std::string cert = write_temp(std::string("cert_") + f + ".json", a.out);
        const Run c = cli({"check", "-i", problem(f), "--certificate", cert});
        CHECK(c.code == 0);
        CHECK(json::parse(c.out).at("verification").at("all_pass") == true);
    }
}

TEST_CASE("cli: tampered certificate fails check") {
    const Run a = cli({"run", "-i", problem("decide_model_mu4")});
    json j = json::parse(a.out);
    j["answer"] = "yes";
    const std::string cert = write_temp("tampered.json", j.dump());
    const Run c = cli({"check", "-i", problem("decide_model_mu4"), "--certificate", cert});
    CHECK(c.code != 0);
}

TEST_CASE("cli: text format") {
    const Run r = cli({"run", "-i", problem("decide_model_mu4"), "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("answer: no") != std::string::npos);
    CHECK(r.out.find("PASS ") != std::string::npos);
    CHECK(r.out.find("ALL PASS") != std::string::npos);
}
