#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "mindeg/catalog.hpp"
#include "mindeg/cli.hpp"
#include "mindeg/solver.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string const data_dir = MINDEG_DATA_DIR;

struct Outcome
{
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args)
{
  std::ostringstream out, err;
  int code = mindeg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> json_lines(std::string const &text)
{
  std::vector<json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty())
      out.push_back(json::parse(line));
  return out;
}

struct TempDir
{
  fs::path path;
  TempDir()
  {
    std::random_device rd;
    path = fs::temp_directory_path() / ("mu-perm-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

void check_record_schema(json const &r)
{
  for (auto key : {"expr", "order", "mu", "cr", "cr_decimal", "classification", "flags",
                   "timing_ms", "stats"})
    CHECK_MESSAGE(r.contains(key), key);
  CHECK(r["flags"].contains("is_CS"));
  CHECK(r["flags"].contains("is_CSE"));
  CHECK(r["flags"].contains("incompressible_type"));
  for (auto key : {"nodes_explored", "candidates_considered", "proven_optimal", "cached"})
    CHECK_MESSAGE(r["stats"].contains(key), key);
  CHECK(r["cr"].is_string());
}

} // namespace

TEST_CASE("mu command")
{
  auto sl = run({"mu", "SL(2,5)"});
  CHECK(sl.code == 0);
  CHECK(sl.out.find("mu(SL(2,5)) = 24") != std::string::npos);

  auto z = run({"mu", "Z4 x Z3", "--oracle"});
  CHECK(z.code == 0);
  CHECK(z.out.find("= 7") != std::string::npos);
  CHECK(z.out.find("oracle = 7, agree") != std::string::npos);

  auto w = run({"--json", "mu", "Q8", "--witness"});
  REQUIRE(w.code == 0);
  auto j = json::parse(w.out);
  check_record_schema(j);
  CHECK(j["mu"] == 8);
  REQUIRE(j.contains("witness"));
  std::size_t deg = 0;
  for (auto const &part : j["witness"])
    deg += 8 / part.size();
  CHECK(deg == 8);

  auto s = run({"mu", "S4", "--stats"});
  CHECK(s.out.find("proven_optimal=true") != std::string::npos);
}

TEST_CASE("exit codes")
{
  auto bad = run({"mu", "Qx"});
  CHECK(bad.code == 1);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("column 2") != std::string::npos);

  CHECK(run({"mu", "Q12"}).code == 1);
  CHECK(run({"mu", "table:" + data_dir + "/tables/missing.txt"}).code == 1);
  CHECK(run({"--order-cap", "100", "mu", "SL(2,5)"}).code == 2);
  CHECK(run({"mu", "S5 x C3"}).code == 2);
  CHECK(run({"--oracle-cap", "10", "mu", "S4", "--oracle"}).code == 2);
  CHECK(run({"--oracle-cap", "500", "mu", "C2"}).code == 1);
  CHECK(run({"--order-cap", "10", "--oracle-cap", "10", "batch", "--max-order", "24"}).code == 2);
  CHECK(run({"--order-cap", "10", "batch", "--max-order", "8"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"mu"}).code == 1);
  CHECK(run({"mu", "C4", "--bogus"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"verify", "nothing"}).code == 1);

  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("batch") != std::string::npos);
}

TEST_CASE("no partial output on bad input")
{
  for (auto args : std::vector<std::vector<std::string>>{
         {"mu", "C4 x"},
         {"classify", "Ab(2,"},
         {"verify", "semidirect", "sd:" + data_dir + "/sd/bad_action.sd"},
         {"verify", "additivity", "C2", "Q7"},
         {"verify", "socle", "S3"},
         {"lattice", "D1"}}) {
    CAPTURE(args[0]);
    auto r = run(args);
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("classify command")
{
  auto q = run({"classify", "Q16"});
  CHECK(q.code == 0);
  CHECK(q.out.find("generalized-quaternion") != std::string::npos);
  CHECK(q.out.find("1/1") != std::string::npos);
  CHECK(q.out.find("CS     true") != std::string::npos);

  auto c = run({"--json", "classify", "C6"});
  REQUIRE(c.code == 0);
  auto j = json::parse(c.out);
  check_record_schema(j);
  CHECK(j["cr"] == "6/5");
  CHECK(j["cr_decimal"] == doctest::Approx(1.2));
  CHECK(j["flags"]["incompressible_type"] == "compressible");

  auto s = run({"--json", "classify", "S3"});
  auto js = json::parse(s.out);
  CHECK(js["flags"]["is_CS"] == false);
  CHECK(js["flags"]["is_CSE"] == true);
  CHECK(js["cse_witness"].size() == 3);

  auto big = run({"--json", "classify", "SL(2,5)"});
  auto jb = json::parse(big.out);
  CHECK(jb["flags"]["is_CSE"].is_null());
  CHECK(jb["cr"] == "5/1");
}

TEST_CASE("lattice command")
{
  auto r = run({"lattice", "Q8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("6 subgroups") != std::string::npos);
  auto j = run({"--json", "lattice", "C6"});
  CHECK(json::parse(j.out).is_object());
}

TEST_CASE("verify command")
{
  auto a = run({"verify", "additivity", "Q8", "Z4"});
  CHECK(a.code == 0);
  CHECK(a.out.find("lhs=12 rhs=12") != std::string::npos);
  CHECK(a.out.find("guarantee=CS") != std::string::npos);
  CHECK(a.out.find("PASS") != std::string::npos);

  auto s = run({"verify", "semidirect", "sd:" + data_dir + "/sd/d5.sd"});
  CHECK(s.code == 0);
  CHECK(s.out.find("mu=5 bound=7") != std::string::npos);
  CHECK(s.out.find("PASS") != std::string::npos);

  auto l = run({"verify", "laplace", "--trials", "50"});
  CHECK(l.code == 0);
  CHECK(l.out.find("all checks PASS") != std::string::npos);

  auto so = run({"verify", "socle", "Ab(2,2)"});
  CHECK(so.code == 0);

  auto all = run({"verify", "all", "--trials", "50"});
  CHECK(all.code == 0);
  CHECK(all.out.find("FAIL") == std::string::npos);
  CHECK(all.out.find("all checks PASS") != std::string::npos);

  auto js = run({"--json", "verify", "additivity", "C4", "C3"});
  CHECK(js.code == 0);
  auto lines = json_lines(js.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0]["lhs"] == 7);
  CHECK(lines[0]["guarantee"] == "coprime");
  CHECK(lines[0]["pass"] == true);
  CHECK(lines[1]["summary"]["pass"] == true);
}

TEST_CASE("batch command")
{
  auto t = run({"batch", "--max-order", "24"});
  CHECK(t.code == 0);
  CHECK(t.out.find("min cr > 1: 6/5 (C6)") != std::string::npos);

  auto j = run({"--json", "batch", "--max-order", "8"});
  REQUIRE(j.code == 0);
  auto lines = json_lines(j.out);
  auto entries = mindeg::catalog(8);
  REQUIRE(lines.size() == entries.size() + 1);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    check_record_schema(lines[i]);
    CHECK(lines[i]["expr"] == entries[i].name);
  }
  CHECK(lines.back()["summary"]["groups"] == entries.size());
  CHECK(lines.back()["summary"]["min_cr_above_1"] == "6/5");

  // text and JSON report the same numbers
  auto text = run({"batch", "--max-order", "16"});
  auto js = json_lines(run({"--json", "batch", "--max-order", "16"}).out);
  std::istringstream in(text.out);
  std::size_t i = 0;
  for (std::string line; std::getline(in, line) && i + 1 < js.size(); ++i) {
    auto const &r = js[i];
    CAPTURE(line);
    CHECK(line.rfind(r["expr"].get<std::string>() + " ", 0) == 0);
    CHECK(line.find("mu=" + std::to_string(r["mu"].get<int>()) + " ") != std::string::npos);
    CHECK(line.find("cr=" + r["cr"].get<std::string>()) != std::string::npos);
  }

  // worker count does not change the output
  auto strip = [](std::vector<json> v) {
    for (auto &r : v)
      r.erase("timing_ms");
    return v;
  };
  auto one = strip(json_lines(run({"--json", "batch", "--max-order", "32"}).out));
  auto four = strip(json_lines(run({"--json", "--threads", "4", "batch", "--max-order", "32"}).out));
  CHECK(one == four);
}

TEST_CASE("result cache")
{
  TempDir dir;
  auto cache = (dir.path / "cache.json").string();

  auto cold = json_lines(run({"--json", "--cache", cache, "batch", "--max-order", "16"}).out);
  REQUIRE(fs::exists(cache));
  auto warm = json_lines(run({"--json", "--cache", cache, "batch", "--max-order", "16"}).out);
  REQUIRE(cold.size() == warm.size());
  for (std::size_t i = 0; i + 1 < cold.size(); ++i) {
    CHECK(warm[i]["stats"]["cached"] == true);
    CHECK(cold[i]["stats"]["cached"] == false);
    for (auto key : {"expr", "order", "mu", "cr", "classification", "flags"})
      CHECK(warm[i][key] == cold[i][key]);
  }
  CHECK(warm.back()["summary"]["cached"] == cold.size() - 1);

  std::ifstream in(cache);
  auto stored = json::parse(in);
  REQUIRE(stored.is_object());
  for (auto const &[key, v] : stored.items())
    CHECK(key == mindeg::normalized_key(mindeg::parse_group_expr(key)));
  CHECK(stored.contains("C2 x S3"));
  CHECK_FALSE(stored.contains("S3 x C2"));
  REQUIRE(stored.contains("Q8"));
  CHECK(stored["Q8"]["mu"] == 8);
  CHECK(stored["Q8"]["order"] == 8);
  CHECK(stored["Q8"]["version"] == 1);

  auto hit = run({"--cache", cache, "mu", "Q8"});
  CHECK(hit.out.find("(cached)") != std::string::npos);

  // products are keyed with sorted atoms
  run({"--cache", cache, "mu", "S3 x C2"});
  auto again = run({"--cache", cache, "mu", "C2 x S3"});
  CHECK(again.out.find("(cached)") != std::string::npos);

  // a wrong cached value is caught by the oracle check
  {
    std::ofstream out(cache);
    out << R"({"Q8": {"order": 8, "mu": 7, "version": 1}})";
  }
  CHECK(run({"--cache", cache, "mu", "Q8", "--oracle"}).code == 3);
  // and entries from another version are ignored
  {
    std::ofstream out(cache);
    out << R"({"Q8": {"order": 8, "mu": 7, "version": 99}})";
  }
  auto fresh = run({"--cache", cache, "mu", "Q8"});
  CHECK(fresh.out.find("= 8") != std::string::npos);

  // off-by-one cached values on compressible groups pass every other check,
  // so only the spot check can catch them
  nlohmann::json wrong = nlohmann::json::object();
  std::size_t planted = 0;
  for (auto const &e : mindeg::catalog(48)) {
    auto mu = mindeg::mu_exact(mindeg::build(e.expr)).mu;
    if (mu + 1 < e.order) {
      wrong[mindeg::normalized_key(e.expr)] = {{"order", e.order}, {"mu", mu + 1}, {"version", 1}};
      ++planted;
    }
  }
  REQUIRE(planted > 50);
  {
    std::ofstream out(cache);
    out << wrong.dump();
  }
  CHECK(run({"--cache", cache, "batch", "--max-order", "48"}).code == 3);

  {
    std::ofstream out(cache);
    out << "not json";
  }
  auto malformed = run({"--cache", cache, "mu", "C4"});
  CHECK(malformed.code == 1);
  CHECK(malformed.out.empty());
}

TEST_CASE("cache path from the environment")
{
  TempDir dir;
  auto cache = dir.path / "env-cache.json";
  ::setenv("MU_PERM_CACHE", cache.c_str(), 1);
  CHECK(run({"mu", "C9"}).code == 0);
  ::unsetenv("MU_PERM_CACHE");
  CHECK(fs::exists(cache));
}

TEST_CASE("the binary reports exit codes")
{
  std::string const bin = MU_PERM_BINARY;
  auto status = [&](std::string const &args) {
    int raw = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  CHECK(status("mu C4") == 0);
  CHECK(status("mu Qx") == 1);
  CHECK(status("--order-cap 100 mu 'SL(2,5)'") == 2);
  CHECK(status("verify additivity Q8 Z4") == 0);
}
