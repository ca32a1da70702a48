#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "arcwords/error.hpp"
#include "arcwords/semigroup.hpp"
#include "cli.hpp"

using namespace arcwords;

namespace {

  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "arcwords");
    std::vector<char const*> argv;
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int const code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
  }

  std::filesystem::path scratch(std::string const& name) {
    auto dir = std::filesystem::temp_directory_path() / "arcwords-cli-tests";
    std::filesystem::create_directories(dir);
    return dir / name;
  }

  void write(std::filesystem::path const& p, std::string const& text) {
    std::ofstream f(p);
    f << text;
  }

}  // namespace

TEST_CASE("len", "[cli]") {
  auto r = run({"len", "--family", "theta:3", "--alpha", "3 2 3"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "6\n");

  r = run({"len", "--family", "K:4", "--alpha", "2 1 4 4", "--word"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.rfind("4\n", 0) == 0);
  CHECK(r.out.find("(verified)") != std::string::npos);

  auto const path = scratch("edge12.dg");
  write(path, "digraph 3\n1 2\n");
  r = run({"len", "--digraph", path.string(), "--alpha", "3 3 3"});
  CHECK(r.code == cli::kFailed);
  CHECK(r.out == "not a member\n");

  r = run({"word", "--family", "K:3", "--alpha", "2 1 1", "--format", "json"});
  CHECK(r.code == cli::kOk);
  auto const j = nlohmann::json::parse(r.out);
  CHECK(j["length"] == 3);
  CHECK(j["verified"] == true);
  CHECK(evaluate(parse_word(j["word"].get<std::string>()), 3) == parse_transformation("2 1 1"));
}

TEST_CASE("exit codes", "[cli]") {
  auto const bad = scratch("loop.dg");
  write(bad, "digraph 2\n1 1\n");
  CHECK(run({"len", "--digraph", bad.string(), "--alpha", "1 1"}).code == cli::kBadInput);
  CHECK(run({"len", "--family", "K:3", "--alpha", "1 2"}).code == cli::kBadInput);
  CHECK(run({"len", "--family", "K:3", "--alpha", "x"}).code == cli::kBadInput);
  CHECK(run({"len", "--family", "K:9", "--alpha", "1 1 1 1 1 1 1 1 1"}).code == cli::kSizeLimit);
  CHECK(run({"len", "--alpha", "1 1"}).code == cli::kBadInput);
  CHECK(run({"len", "--family", "K:2", "--hex", "0230", "--alpha", "1 1"}).code
        == cli::kBadInput);
  CHECK(run({"table", "--class", "all", "--n", "7"}).code == cli::kSizeLimit);
  CHECK(run({"verify", "--suite", "nope", "--n", "3"}).code == cli::kBadInput);
  CHECK(run({"frobnicate"}).code == cli::kBadInput);
  CHECK(run({"--help"}).code == cli::kOk);
  CHECK(run({"len", "--family", "K:3", "--alpha", "1 1 1", "--format", "xml"}).code
        == cli::kBadInput);
}

TEST_CASE("table for a single digraph", "[cli]") {
  auto r = run({"table", "--family", "pi:6"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("l(D) = 24") != std::string::npos);

  r = run({"table", "--family", "K:4", "--format", "json"});
  auto const j = nlohmann::json::parse(r.out);
  CHECK(j["length"] == 4);
  CHECK(j["size"] == 256 - 24);
}

TEST_CASE("table for a class", "[cli]") {
  auto r = run({"table", "--class", "tournaments", "--n", "5", "--format", "json"});
  REQUIRE(r.code == cli::kOk);
  auto const j = nlohmann::json::parse(r.out);
  CHECK(j["class"] == "tournaments");
  CHECK(j["n"] == 5);
  CHECK(j["enumerated_count"] == 6);
  CHECK(j.contains("runtime_seconds"));
  std::vector<std::pair<int, int>> got;
  for (auto const& row : j["rows"]) {
    if (row["r"].get<int>() >= 2) {
      got.emplace_back(row["min"].get<int>(), row["max"].get<int>());
    }
  }
  CHECK(got == std::vector<std::pair<int, int>>{{6, 11}, {8, 14}, {10, 17}});

  r = run({"table", "--class", "connected", "--n", "4", "--format", "csv"});
  REQUIRE(r.code == cli::kOk);
  std::istringstream lines(r.out);
  std::string        line;
  std::getline(lines, line);
  CHECK(line.rfind("class,n,connectivity,r,min,max,witness_digraph_hex,witness_alpha", 0) == 0);
  std::vector<std::string> maxima;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::istringstream       cs(line);
    std::string              cell;
    while (std::getline(cs, cell, ',')) {
      cells.push_back(cell);
    }
    maxima.push_back(cells.at(5));
  }
  CHECK(maxima == std::vector<std::string>{"3", "11", "13"});

  r = run({"table", "--class", "both", "--n", "3"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("all on 3 vertices") != std::string::npos);
  CHECK(r.out.find("connected (unilateral) on 3 vertices") != std::string::npos);
}

TEST_CASE("JSON witnesses round-trip through len", "[cli][property]") {
  for (std::string cls : {"all", "connected", "acyclic", "tournaments"}) {
    auto r = run({"table", "--class", cls, "--n", "5", "--format", "json"});
    REQUIRE(r.code == cli::kOk);
    auto const j = nlohmann::json::parse(r.out);
    for (auto const& row : j["rows"]) {
      if (!row.contains("max")) {
        continue;
      }
      auto const again = run({"len", "--hex", row["witness_digraph_hex"].get<std::string>(),
                              "--alpha", row["witness_alpha"].get<std::string>()});
      CHECK(again.code == cli::kOk);
      CHECK(again.out == std::to_string(row["max"].get<int>()) + "\n");
      if (row.contains("min")) {
        auto const low = run({"len", "--hex", row["min_witness_digraph_hex"].get<std::string>(),
                              "--alpha", row["min_witness_alpha"].get<std::string>()});
        CHECK(low.out == std::to_string(row["min"].get<int>()) + "\n");
      }
    }
  }
}

TEST_CASE("commands are deterministic", "[cli]") {
  auto strip_runtime = [](std::string s) {
    auto j = nlohmann::json::parse(s);
    j.erase("runtime_seconds");
    return j.dump();
  };
  auto const a = run({"table", "--class", "connected", "--n", "5", "--format", "json"});
  auto const b = run({"table", "--class", "connected", "--n", "5", "--format", "json", "--jobs", "3"});
  CHECK(strip_runtime(a.out) == strip_runtime(b.out));
}

TEST_CASE("the cache is keyed and reused", "[cli]") {
  auto const dir = scratch("cache");
  std::filesystem::remove_all(dir);
  auto const first = run({"table", "--class", "tournaments", "--n", "5", "--format", "json",
                          "--cache-dir", dir.string()});
  REQUIRE(first.code == cli::kOk);
  std::vector<std::filesystem::path> files;
  for (auto const& e : std::filesystem::directory_iterator(dir)) {
    files.push_back(e.path());
  }
  REQUIRE(files.size() == 1);

  // A hit reproduces the stored result, runtime included.
  auto const second = run({"table", "--class", "tournaments", "--n", "5", "--format", "json",
                           "--cache-dir", dir.string()});
  CHECK(second.out == first.out);

  // A different key goes to a different file.
  run({"table", "--class", "tournaments", "--n", "4", "--cache-dir", dir.string()});
  CHECK(std::distance(std::filesystem::directory_iterator(dir),
                      std::filesystem::directory_iterator{})
        == 2);

  // An entry whose key does not match is ignored and rewritten.
  auto text = [&] {
    std::ifstream f(files[0]);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }();
  auto j   = nlohmann::json::parse(text);
  j["key"] = "something else";
  j["result"]["rows"][1]["max"] = 999;
  write(files[0], j.dump());
  auto const third = run({"table", "--class", "tournaments", "--n", "5", "--format", "json",
                          "--cache-dir", dir.string()});
  CHECK(third.out.find("999") == std::string::npos);

  CHECK(cli::cache_key("a") != cli::cache_key("b"));
  CHECK(cli::cache_key("") == 0xcbf29ce484222325ULL);
}

TEST_CASE("tournament files", "[cli]") {
  // Pair order (1,2), (1,3), (2,3): 1 -> 2, 3 -> 1, 2 -> 3 is Theta_3.
  auto const th = cli::tournament_from_bits("101");
  CHECK(th == Digraph(3, {{1, 2}, {2, 3}, {3, 1}}));
  CHECK_THROWS_AS(cli::tournament_from_bits("10"), ParseError);
  CHECK_THROWS_AS(cli::tournament_from_bits("10x"), ParseError);

  std::istringstream in("# header\n101\n\n111\n");
  auto const         ts = cli::read_tournaments(in);
  REQUIRE(ts.size() == 2);
  CHECK_FALSE(is_strong_tournament(ts[1]));

  std::istringstream broken("101\n1\n");
  try {
    cli::read_tournaments(broken);
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.line() == 2);
  }

  // All 1024 labelled tournaments on 5 vertices.
  auto const   path = scratch("t5.txt");
  std::ofstream f(path);
  for (int mask = 0; mask < 1024; ++mask) {
    for (int b = 0; b < 10; ++b) {
      f << ((mask >> b) & 1);
    }
    f << '\n';
  }
  f.close();
  auto r = run({"ingest", "--from", path.string(), "--format", "json"});
  REQUIRE(r.code == cli::kOk);
  auto const j = nlohmann::json::parse(r.out);
  CHECK(j["tournaments"] == 1024);
  CHECK(j["classes"].size() == 6);

  r = run({"table", "--class", "tournaments", "--n", "5", "--from", path.string(), "--format",
           "json"});
  REQUIRE(r.code == cli::kOk);
  auto const t = nlohmann::json::parse(r.out);
  CHECK(t["rows"][3]["min"] == 10);
  CHECK(t["rows"][3]["max"] == 17);
  CHECK(run({"table", "--class", "all", "--n", "5", "--from", path.string()}).code
        == cli::kBadInput);
}

TEST_CASE("verify", "[cli]") {
  auto r = run({"verify", "--suite", "C1", "--n", "4"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("0 counterexamples") != std::string::npos);

  r = run({"verify", "--suite", "conjectures", "--n", "5"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("supported") != std::string::npos);

  r = run({"verify", "--suite", "conjectures", "--n", "3", "--format", "json"});
  CHECK(r.code == cli::kFailed);
  CHECK(nlohmann::json::parse(r.out)["passed"] == false);

  r = run({"verify", "--suite", "constructions", "--n", "4"});
  CHECK(r.code == cli::kOk);
}

TEST_CASE("gen", "[cli]") {
  auto r = run({"gen", "--family", "Q:5"});
  CHECK(r.code == cli::kOk);
  CHECK(parse_digraph(r.out) == family(Family::q, 5));
  r = run({"gen", "--family", "kappa:5", "--format", "json"});
  auto const j = nlohmann::json::parse(r.out);
  CHECK(j["edges"].size() == 10);
}
