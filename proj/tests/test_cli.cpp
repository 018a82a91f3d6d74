#include <filesystem>
#include <fstream>
#include <sstream>

#include "distlab/cli.hpp"
#include "distlab/table_cache.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace distlab;
namespace fs = std::filesystem;

namespace {

struct Out {
  int code;
  std::string out, err;
};

Out call(std::vector<std::string> args) {
  std::ostringstream o, e;
  const int code = run(args, o, e);
  return {code, o.str(), e.str()};
}

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("distlab_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("pair-scan GL:GL at q = 3") {
  const auto r = call({"pair-scan", "--pair", "GL:GL", "--n", "2", "--p", "3"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "pair-scan");
  CHECK(j["ok"] == true);
  CHECK(j["result"]["rows"].size() == 80);
  CHECK(j["result"]["gelfand_ok"] == true);
  CHECK(j["result"]["max_dim"] == 1);
  // byte-identical on a second run, csv has one row per irreducible
  CHECK(call({"pair-scan", "--pair", "GL:GL", "--n", "2", "--p", "3"}).out == r.out);
  const auto csv = call({"pair-scan", "--pair", "GL:GL", "--p", "3", "--format", "csv"});
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 81);
  CHECK(csv.out.rfind("id,degree,dim,dim_oracle,galois_invariant,sigma_dual,criterion\n", 0) == 0);
}

TEST_CASE("usage and resource errors exit 1") {
  CHECK(call({}).code == kExitUsage);
  CHECK(call({"bogus"}).code == kExitUsage);
  CHECK(call({"tower", "--p", "4"}).code == kExitUsage);
  CHECK(call({"pair-scan", "--p", "3"}).code == kExitUsage);  // --pair missing
  CHECK(call({"pair-scan", "--pair", "GL:SL", "--p", "3"}).code == kExitUsage);
  CHECK(call({"tower", "--format", "xml"}).code == kExitUsage);
  const auto big = call({"pair-scan", "--pair", "GL:GL", "--p", "3", "--ceiling", "1000"});
  CHECK(big.code == kExitUsage);
  CHECK(big.err.find("ceiling exceeded") != std::string::npos);
  CHECK(big.out.empty());
  const auto rep = call({"packet", "--n", "2", "--p", "3", "--rep", "999"});
  CHECK(rep.code == kExitUsage);
  CHECK(rep.err.find("out of range") != std::string::npos);
  CHECK(call({"unitary", "--n", "3", "--p", "2"}).code == kExitUsage);
  CHECK(call({"padic-example", "--q", "9", "--M", "10"}).code == kExitUsage);
  CHECK(call({"padic-example", "--eta", "x"}).code == kExitUsage);
  CHECK(call({"thm11", "--q", "4"}).code == kExitUsage);
}

TEST_CASE("a failing synthetic table exits 2") {
  const auto dir = scratch("synthetic");
  const auto good = call({"chartab", "--n", "2", "--p", "3", "--side", "base", "--cache-dir", dir.string()});
  REQUIRE(good.code == kExitOk);
  const auto cached = dir / "GL_n2_p3_f1_base_v1.json";
  REQUIRE(fs::exists(cached));
  std::ifstream in(cached);
  auto doc = nlohmann::json::parse(in);
  const auto ok = call({"chartab", "--n", "2", "--p", "3", "--side", "base", "--verify-file", cached.string()});
  CHECK(ok.code == kExitOk);
  doc["characters"][1]["degree"] = 2;
  const auto bad_path = dir / "bad.json";
  std::ofstream(bad_path) << doc.dump();
  const auto bad = call({"chartab", "--n", "2", "--p", "3", "--side", "base", "--verify-file", bad_path.string()});
  CHECK(bad.code == kExitVerification);
  const auto j = nlohmann::json::parse(bad.out);
  CHECK(j["result"]["accepted"] == false);
  CHECK(j["result"]["reason"].get<std::string>().find("validation") == 0);
  CHECK(call({"chartab", "--p", "3", "--verify-file", (dir / "missing.json").string()}).code == kExitUsage);
}

TEST_CASE("a corrupted cache entry is recomputed with a warning") {
  const auto dir = scratch("corrupt");
  const std::vector<std::string> args{"chartab", "--n", "2", "--p", "3", "--side", "base", "--cache-dir", dir.string()};
  const auto first = call(args);
  REQUIRE(first.code == kExitOk);
  std::ofstream(dir / "GL_n2_p3_f1_base_v1.json") << "{\"format\": 1";
  const auto second = call(args);
  CHECK(second.code == kExitOk);
  CHECK(second.err.find("warning") != std::string::npos);
  CHECK(second.out == first.out);
  const auto third = call(args);
  CHECK(third.err.empty());
  CHECK(third.out == first.out);
}

TEST_CASE("verification failure exit code for a non-Gelfand pair") {
  const auto r = call({"pair-scan", "--pair", "SL:SL", "--n", "2", "--p", "3"});
  CHECK(r.code == kExitVerification);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["gelfand_ok"] == false);
  CHECK(j["result"]["tadic_ok"] == true);
}

TEST_CASE("tame subcommands") {
  const auto r = call({"padic-example", "--q", "11"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["q_point"] == 2);
  CHECK(j["result"]["q_point_conjecture_based"] == true);
  CHECK(j["result"]["Z_size"] == 2);
  CHECK(j["result"]["Yprime_size"] == 2);
  CHECK(j["result"]["bound"] == "2");
  const auto r3 = call({"padic-example", "--q", "3"});
  CHECK(r3.code == kExitUsage);
  CHECK(nlohmann::json::parse(r3.out)["result"]["applicable"] == false);
  const auto t = call({"thm11", "--count", "100", "--seed", "11"});
  CHECK(t.code == kExitOk);
  const auto jt = nlohmann::json::parse(t.out);
  CHECK(jt["result"]["cases"].size() == 100);
  CHECK(jt["result"]["failing"] == 0);
  CHECK(call({"thm11", "--count", "100", "--seed", "11"}).out == t.out);
  CHECK(call({"thm11", "--count", "100", "--seed", "12"}).out != t.out);
}

TEST_CASE("text and --out") {
  const auto dir = scratch("out");
  const auto path = dir / "tower.txt";
  const auto r = call({"tower", "--p", "3", "--f", "2", "--format", "text", "--out", path.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().rfind("tower: ok\n", 0) == 0);
  CHECK(ss.str().find("F_9 < F_81") != std::string::npos);
}
