#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "fpt/bench.hpp"

namespace fs = std::filesystem;

namespace {

struct run_result {
  int code = -1;
  std::string out;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch() {
  const auto d = fs::temp_directory_path() / ("fptkit-test-" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

run_result fptkit(const std::string& args) {
  const auto out = scratch() / "stdout.txt";
  const std::string cmd = "cd '" FPT_CORPUS_DIR "' && '" FPTKIT_PATH "' " + args + " >'" + out.string() + "' 2>/dev/null";
  const int status = std::system(cmd.c_str());
  run_result r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  return r;
}

std::string trim(std::string s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::string field_text(const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

TEST_CASE("exit codes and records on the corpus") {
  std::ifstream cases(std::string(FPT_CORPUS_DIR) + "/cases.txt");
  REQUIRE(cases);
  std::string line;
  int checked = 0;
  while (std::getline(cases, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream parts(line);
    std::string code, args, fields;
    std::getline(parts, code, '|');
    std::getline(parts, args, '|');
    std::getline(parts, fields);
    args = trim(args);
    CAPTURE(args);
    const auto r = fptkit(args);
    CHECK(r.code == std::stoi(code));
    ++checked;
    fields = trim(fields);
    if (fields.empty()) continue;
    const auto record = nlohmann::json::parse(r.out, nullptr, false);
    REQUIRE_FALSE(record.is_discarded());
    CHECK(record.at("schema_version") == 1);
    std::istringstream kv(fields);
    std::string item;
    while (std::getline(kv, item, ',')) {
      const auto eq = item.find('=');
      REQUIRE(eq != std::string::npos);
      const auto key = item.substr(0, eq);
      CAPTURE(key);
      REQUIRE(record.contains(key));
      CHECK(field_text(record.at(key)) == item.substr(eq + 1));
    }
  }
  CHECK(checked >= 30);
}

TEST_CASE("solve record has the documented fields in order") {
  const auto r = fptkit("solve vc --algorithm edge --k 2 c4.gr");
  REQUIRE(r.code == 0);
  const auto record = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : record.items()) keys.push_back(k);
  const std::vector<std::string> expect{"schema_version", "problem", "algorithm", "n", "m", "k", "answer", "witness",
                                        "nodes_expanded", "trials", "seed", "wall_ms"};
  CHECK(keys == expect);
  CHECK(record["witness"].size() == 2);
  CHECK(record["nodes_expanded"].get<int>() >= 1);
}

TEST_CASE("kernelize writes the reduced instance") {
  const auto out = scratch() / "red.3dm";
  const auto r = fptkit("kernelize 3dm --k 2 big.3dm --out '" + out.string() + "'");
  REQUIRE(r.code == 0);
  const auto record = nlohmann::json::parse(r.out);
  CHECK(record["reduced_size"].get<int>() <= 15);
  const auto text = slurp(out);
  CHECK(text.rfind("t 1 6 6 " + std::to_string(record["reduced_size"].get<int>()), 0) == 0);
}

TEST_CASE("generate then solve") {
  const auto g = scratch() / "grid.gr";
  REQUIRE(fptkit("generate grid --rows 3 --cols 4 --out '" + g.string() + "'").code == 0);
  CHECK(slurp(g).rfind("p 12 17", 0) == 0);
  CHECK(fptkit("solve vc --k 6 '" + g.string() + "'").code == 0);
  CHECK(fptkit("solve vc --k 5 '" + g.string() + "'").code == 1);
}

TEST_CASE("bench output is deterministic apart from timing") {
  const auto a = scratch() / "a.jsonl";
  const auto b = scratch() / "b.jsonl";
  REQUIRE(fptkit("bench kernel-sizes --seed 4 --out '" + a.string() + "'").code == 0);
  REQUIRE(fptkit("bench kernel-sizes --seed 4 --out '" + b.string() + "'").code == 0);
  std::istringstream la(slurp(a)), lb(slurp(b));
  std::string x, y;
  int lines = 0;
  while (std::getline(la, x)) {
    REQUIRE(std::getline(lb, y));
    const auto rx = fpt::bench::without_timing(fpt::bench::record::parse(x));
    const auto ry = fpt::bench::without_timing(fpt::bench::record::parse(y));
    CHECK(rx.dump() == ry.dump());
    CHECK(rx.at("schema_version") == fpt::bench::schema_version);
    ++lines;
  }
  CHECK_FALSE(std::getline(lb, y));
  CHECK(lines == 400);
  fs::remove_all(scratch());
}
