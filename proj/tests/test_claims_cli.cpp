#include <catch_amalgamated.hpp>

#include <json.hpp>

#include <filesystem>
#include <set>
#include <sstream>

#include "indsub/claims.hpp"
#include "indsub/cli.hpp"
#include "indsub/errors.hpp"
#include "indsub/graph_io.hpp"

using namespace indsub;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "indsub_tests";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

}  // namespace

TEST_CASE("registry lists every claim once per tier", "[claims]") {
  std::set<std::string> ids;
  for (const auto& c : claim_registry()) {
    REQUIRE_FALSE(c.statement.empty());
    ids.insert(c.id + "/" + to_string(c.tier));
  }
  for (int i = 1; i <= 11; ++i) {
    bool found = false;
    for (const auto& c : claim_registry()) found = found || c.id == "C" + std::to_string(i);
    REQUIRE(found);
  }
  REQUIRE(ids.size() == claim_registry().size());
}

TEST_CASE("certificate claims pass", "[claims]") {
  ClaimReport c7 = run_claim("C7", {{"k", 2}});
  REQUIRE(c7.status == Status::pass);
  REQUIRE(c7.computed == std::vector<std::int64_t>{48, 17, 31});
  REQUIRE(c7.witness);
  REQUIRE(c7.witness->size() == 17);
  REQUIRE(run_claim("C7", {{"k", 3}}).computed == std::vector<std::int64_t>{72, 26, 46});
  REQUIRE(run_claim("C1", {{"n", 8}, {"seeds", 20}}).status == Status::pass);
  REQUIRE(run_claim("C9", {{"n", 10}, {"seeds", 50}}).status == Status::pass);
  REQUIRE(run_claim("C6").status == Status::pass);
  REQUIRE(run_claim("C10").status == Status::pass);
}

TEST_CASE("claim errors", "[claims]") {
  REQUIRE_THROWS_AS(run_claim("C99"), UnknownClaim);
  REQUIRE_THROWS_AS(run_claim("C7", {{"bogus", 1}}), BadParams);
  REQUIRE_THROWS_AS(run_claim("C7", {{"k", 0}}), BadParams);
  REQUIRE_THROWS_AS(parse_tier("slow"), BadParams);
  REQUIRE(parse_tier("long") == Tier::long_run);
}

TEST_CASE("exit codes follow the worst status", "[claims]") {
  ClaimReport pass, fail, timeout;
  fail.status = Status::fail;
  timeout.status = Status::timeout;
  REQUIRE(exit_code({pass}) == 0);
  REQUIRE(exit_code({pass, timeout}) == 3);
  REQUIRE(exit_code({timeout, fail}) == 1);
}

TEST_CASE("report JSON carries the schema", "[claims][cli]") {
  ClaimReport r;
  r.claim_id = "C3";
  r.params = {{"n", 9}};
  r.expected = {">= ceil(4n/5)", {}};
  r.computed = {6};
  r.status = Status::fail;
  r.detail = "size 6 < 8";
  r.instance = "graph 1 0\n";
  r.elapsed_ms = 12;
  auto j = nlohmann::json::parse(report_json(r));
  REQUIRE(j["claim_id"] == "C3");
  REQUIRE(j["params"]["n"] == 9);
  REQUIRE(j["expected"] == ">= ceil(4n/5)");
  REQUIRE(j["status"] == "FAIL");
  REQUIRE(j["witness"].is_null());
  REQUIRE(j["instance"] == "graph 1 0\n");
  REQUIRE(j["elapsed_ms"] == 12);
  REQUIRE(nlohmann::json::parse(report_json(r, true))["elapsed_ms"] == 0);
  REQUIRE(report_text(r).find("graph 1 0") != std::string::npos);

  r.status = Status::pass;
  r.expected = {"17", 17};
  auto p = nlohmann::json::parse(report_json(r));
  REQUIRE(p["expected"] == 17);
  REQUIRE_FALSE(p.contains("instance"));
}

TEST_CASE("cli gen and solve", "[cli]") {
  std::string g = tmp("chain.g");
  Run gen = cli({"gen", "--family", "k113chain", "--k", "2", "--out", g});
  REQUIRE(gen.code == 0);
  REQUIRE(read_graph(read_file(g)).graph.order() == 10);
  Run so = cli({"--format", "jsonl", "solve", "--invariant", "so", "--input", g});
  REQUIRE(so.code == 0);
  auto j = nlohmann::json::parse(so.out);
  REQUIRE(j["value"] == 8);
  REQUIRE(j["optimal"] == true);

  Run ex = cli({"extract", "--algo", "outerplanar45", "--input", g});
  REQUIRE(ex.code == 0);
  REQUIRE(ex.out.find("8 vertices") != std::string::npos);

  std::string t = tmp("t2.g"), c = tmp("t2.cert");
  REQUIRE(cli({"gen", "--family", "tk", "--k", "2", "--out", t, "--certs", c}).code == 0);
  Run budget = cli({"solve", "--invariant", "gammac", "--input", t, "--budget-nodes", "1000"});
  REQUIRE(budget.code == 3);
  REQUIRE(budget.out.find("gamma_c = 17 (upper)") != std::string::npos);

  std::string two = tmp("two.g");
  REQUIRE(cli({"gen", "--family", "rand2tree", "--n", "9", "--seed", "7", "--out", two}).code == 0);
  Run part = cli({"partition", "--k", "2", "--input", two});
  REQUIRE(part.code == 0);
  REQUIRE(part.out.find("class 2") != std::string::npos);
  REQUIRE(cli({"extract", "--algo", "outerplane23", "--input", two}).code == 0);
  REQUIRE(cli({"extract", "--algo", "boundedtw", "--s", "2", "--t", "1", "--input", two}).code == 0);
}

TEST_CASE("cli usage errors exit 2", "[cli]") {
  REQUIRE(cli({}).code == 2);
  REQUIRE(cli({"frobnicate"}).code == 2);
  REQUIRE(cli({"check", "--claim", "C99"}).code == 2);
  REQUIRE(cli({"check", "--claim", "C7", "k=x"}).code == 2);
  REQUIRE(cli({"check", "--claim", "C7", "nokey"}).code == 2);
  REQUIRE(cli({"check", "--claim", "C7", "--suite", "fast"}).code == 2);
  REQUIRE(cli({"gen", "--family", "nope", "--out", tmp("x.g")}).code == 2);
  REQUIRE(cli({"solve", "--invariant", "so", "--input", tmp("missing.g")}).code == 2);
  REQUIRE(cli({"--help"}).code == 0);
}

TEST_CASE("cli check output is stable", "[cli][determinism]") {
  Run a = cli({"check", "--claim", "C7", "k=2", "--format", "jsonl", "--stable-timing"});
  Run b = cli({"--format", "jsonl", "--stable-timing", "check", "--claim", "C7", "k=2"});
  REQUIRE(a.code == 0);
  REQUIRE(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  REQUIRE(j["claim_id"] == "C7");
  REQUIRE(j["status"] == "PASS");
  REQUIRE(j["elapsed_ms"] == 0);
  REQUIRE(j["witness"].size() == 17);

  Run s1 = cli({"check", "--suite", "fast", "--format", "jsonl", "--stable-timing"});
  Run s2 = cli({"check", "--suite", "fast", "--format", "jsonl", "--stable-timing", "--threads", "2"});
  REQUIRE(s1.code == 0);
  REQUIRE(s1.out == s2.out);
  int lines = 0;
  for (char ch : s1.out) lines += ch == '\n';
  REQUIRE(lines == 10);
}
