#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "nonfree/cli.hpp"
#include "nonfree/serialize.hpp"

using nlohmann::json;
using namespace nonfree;

namespace {

struct Run {
  int code = -1;
  std::vector<json> records;
  std::string err;
  std::string text;
};

Run run(std::vector<std::string> args, std::optional<int> env_workers = std::nullopt) {
  args.insert(args.begin(), "nonfree");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err, env_workers);
  r.err = err.str();
  r.text = out.str();
  std::istringstream lines(r.text);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.front() == '{') r.records.push_back(json::parse(line));
  }
  return r;
}

std::vector<json> hit_records(const Run& r) {
  std::vector<json> out;
  for (const auto& rec : r.records) {
    if (!rec["result"].contains("summary")) out.push_back(rec["result"]);
  }
  return out;
}

// Every witness embedded in a verified record must re-verify from its JSON.
void check_witnesses(const json& j) {
  if (j.is_object()) {
    if (j.contains("lhs") && j.contains("rhs") && j.contains("relator")) {
      RelationWitness w = json_io::witness_from(j);
      CHECK(w.verified == j["verified"].get<bool>());
      if (j["verified"].get<bool>()) CHECK(recheck(w));
    }
    for (const auto& [key, value] : j.items()) check_witnesses(value);
  } else if (j.is_array()) {
    for (const auto& v : j) check_witnesses(v);
  }
}

}  // namespace

TEST_CASE("verify") {
  Run r = run({"verify", "--tau", "9/4", "--seq", "1,-1,1,14,2"});
  CHECK(r.code == 0);
  REQUIRE(r.records.size() == 1);
  const json& rec = r.records[0];
  CHECK(rec["command"] == "verify");
  CHECK(rec["verified"] == true);
  CHECK(rec["result"]["kind"] == "GroupNontrivial");
  CHECK(rec["result"]["relation"]["verified"] == true);
  check_witnesses(rec);

  r = run({"verify", "--tau", "2", "--seq", "1,1,1"});
  CHECK(r.code == 1);
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0]["verified"] == false);
  CHECK(r.records[0]["result"]["defect"] == "6");

  CHECK(run({"verify", "--tau", "1/0", "--seq", "1"}).code == 2);
  CHECK(run({"verify", "--tau", "x", "--seq", "1"}).code == 2);
  CHECK(run({"verify", "--tau", "2", "--seq", "1,,2"}).code == 2);
  CHECK(run({"verify", "--tau", "2"}).code == 2);
}

TEST_CASE("verify emits semigroup witnesses") {
  Run r = run({"verify", "--tau", "64/81", "--seq", "1,6,27,1"});
  CHECK(r.code == 0);
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0]["result"]["kind"] == "SemigroupAtTau");
  CHECK(r.records[0]["result"].contains("semigroup_relation"));
  check_witnesses(r.records[0]);
}

TEST_CASE("family") {
  Run r = run({"family", "--name", "d", "--k-range", "2..7"});
  CHECK(r.code == 0);
  std::vector<std::string> taus;
  for (const auto& rec : r.records) taus.push_back(rec["result"]["tau"].get<std::string>());
  CHECK(taus == std::vector<std::string>{"3", "5/2", "8/3", "13/5", "21/8", "34/13"});
  for (const auto& rec : r.records) {
    CHECK(rec["verified"] == true);
    check_witnesses(rec);
  }

  r = run({"family", "--name", "b", "--sigma", "2,3", "--k-range", "-3..3"});
  CHECK(r.code == 0);
  std::vector<long> ns;
  for (const auto& rec : r.records) ns.push_back(json_io::big_from(rec["result"]["n"]).get_si());
  CHECK(ns == std::vector<long>{1105, 51, 3, 1, 5, 95, 2071});
  for (const auto& rec : r.records) {
    CHECK(rec["verified"] == true);
    CHECK(rec["result"]["semigroup_claim"] == "S(1,tau)");
    check_witnesses(rec);
  }

  r = run({"family", "--name", "d", "--k", "-2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("degenerate tau=0") != std::string::npos);
  CHECK(r.records.empty());

  r = run({"family", "--name", "d", "--k-range", "-3..-1"});
  CHECK(r.code == 0);
  CHECK(r.records.size() == 2);
  CHECK(r.err.find("skip k=-2") != std::string::npos);

  r = run({"family", "--name", "c", "--variant", "even", "--k", "4"});
  CHECK(r.code == 0);
  r = run({"family", "--name", "e", "--k", "2", "--x", "1"});
  REQUIRE(r.records.size() == 1);
  CHECK(json_io::integers_from(r.records[0]["result"]["candidate"]) ==
        std::vector<BigInt>{2, -1, 1, -1, 1, -1, 1, -1, 2, 1});

  CHECK(run({"family", "--name", "z", "--k", "1"}).code == 2);
  CHECK(run({"family", "--name", "b", "--k", "1"}).code == 2);
  CHECK(run({"family", "--name", "e", "--k", "2", "--x", "0"}).code == 2);
  CHECK(run({"family", "--name", "a", "--k-range", "3..1"}).code == 2);
}

TEST_CASE("search") {
  Run r = run({"search", "--tau", "9/4", "--max-len", "5", "--bound", "14"});
  CHECK(r.code == 0);
  auto hits = hit_records(r);
  bool found = false;
  for (const auto& h : hits) {
    if (json_io::integers_from(h["candidate"]) == std::vector<BigInt>{1, -1, 1, 14, 2})
      found = true;
  }
  CHECK(found);
  REQUIRE_FALSE(r.records.empty());
  const json& summary = r.records.back()["result"];
  CHECK(summary["summary"] == true);
  CHECK(summary["hits"] == hits.size());
  CHECK(summary["exhausted"] == true);

  r = run({"search", "--tau", "5", "--max-len", "4", "--bound", "6"});
  CHECK(r.code == 1);
  CHECK(hit_records(r).empty());

  Run one = run({"search", "--tau", "2", "--max-len", "3", "--bound", "2", "--workers", "1"});
  Run eight = run({"search", "--tau", "2", "--max-len", "3", "--bound", "2", "--workers", "8"});
  CHECK(hit_records(one) == hit_records(eight));
  CHECK_FALSE(hit_records(one).empty());
  // environment worker count is overridden by the flag but otherwise used
  Run env = run({"search", "--tau", "2", "--max-len", "3", "--bound", "2"}, 3);
  CHECK(hit_records(env) == hit_records(one));
  CHECK(env.records.back()["result"]["workers"] == 3);

  for (const auto& rec : one.records) check_witnesses(rec);

  r = run({"search", "--tau", "2", "--max-len", "4", "--bound", "6", "--limit", "2"});
  CHECK(hit_records(r).size() == 2);
  CHECK(r.records.back()["result"]["exhausted"] == false);

  CHECK(run({"search", "--tau", "2", "--max-len", "13"}).code == 2);
  CHECK(run({"search", "--tau", "2", "--signs", "odd"}).code == 2);
  CHECK(run({"search", "--tau", "2/x"}).code == 2);
}

TEST_CASE("classify") {
  Run r = run({"classify", "--tau", "17/5"});
  CHECK(r.code == 0);
  REQUIRE(r.records.size() == 1);
  const json& c = r.records[0]["result"];
  CHECK(c["group"]["status"] == "NonFree");
  CHECK(c["group"]["source"] == "family E k=3");
  check_witnesses(r.records[0]);

  r = run({"classify", "--tau", "-4"});
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0]["result"]["group"]["status"] == "FreeSchottky");

  r = run({"classify", "--tau", "7/10"});
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0]["result"]["group"]["status"] == "Unknown");
  CHECK(r.records[0]["result"]["semigroup"]["status"] == "Unknown");

  r = run({"classify", "--tau", "64/81"});
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0]["result"]["semigroup"]["status"] == "NonSemigroupFree");
  check_witnesses(r.records[0]);

  CHECK(run({"classify", "--tau", "--"}).code == 2);
}

TEST_CASE("poly") {
  Run r = run({"poly", "--seq", "1,-1,1,-1,7"});
  CHECK(r.code == 0);
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0]["result"]["text"] == "7τ² − 23τ + 11");
  CHECK(json_io::integers_from(r.records[0]["result"]["coefficients"]) ==
        std::vector<BigInt>{11, -23, 7});

  r = run({"poly", "--seq", "5"});
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0]["result"]["text"] == "5");
  CHECK(r.records[0]["result"]["degree"] == 0);

  CHECK(run({"poly", "--seq", "a?"}).code == 2);
}

TEST_CASE("usage errors and table output") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  Run t = run({"--table", "family", "--name", "d", "--k-range", "1..3"});
  CHECK(t.code == 0);
  CHECK(t.records.empty());
  CHECK(t.text.find("5/2") != std::string::npos);
  CHECK(t.text.find("\"command\"") == std::string::npos);
}

TEST_CASE("witness round trip rejects tampering") {
  Run r = run({"verify", "--tau", "5/2", "--seq", "1,-1,1,-1,-4"});
  REQUIRE(r.records.size() == 1);
  json w = r.records[0]["result"]["relation"];
  CHECK(json_io::witness_from(w).verified);
  w["rhs"]["exponents"][0] = 7;
  CHECK_FALSE(json_io::witness_from(w).verified);
  w = r.records[0]["result"]["relation"];
  w["tau"] = "3";
  w["eval_tau"] = "3";
  CHECK_FALSE(json_io::witness_from(w).verified);
}
