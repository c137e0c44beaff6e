#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "hka/anchors.hpp"
#include "hka/cli.hpp"
#include "json.hpp"

using namespace hka;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(HKA_FIXTURES) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("hka_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

std::vector<std::vector<std::string>> tsv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string c; std::getline(ls, c, '\t');) cells.push_back(c);
    rows.push_back(cells);
  }
  return rows;
}

std::size_t column(const std::vector<std::string>& header, const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  return header.size();
}

}  // namespace

TEST_CASE("classify fixtures") {
  auto r = run({"classify", fixture("t_3_3.json")});
  REQUIRE(r.code == cli::kOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["unique_annulus"]["verdict"] == "PROVED");

  r = run({"classify", fixture("fig1_reducible.json")});
  REQUIRE(r.code == cli::kOk);
  j = nlohmann::json::parse(r.out);
  CHECK(j["irreducible"]["verdict"] == "UNKNOWN");

  r = run({"classify", fixture("hk_t.json"), "--format", "tsv"});
  CHECK(r.code == cli::kOk);
  const auto rows = tsv(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1][column(rows[0], "unique")] == "UNKNOWN");
}

TEST_CASE("classify error exit codes") {
  auto r = run({"classify", "/nonexistent/presentation.json"});
  CHECK(r.code == cli::kIoError);

  r = run({"classify", temp_file("malformed.json", "{\"schema\": ")});
  CHECK(r.code == cli::kSchemaError);
  CHECK(r.err.find("$") != std::string::npos);

  auto doc = nlohmann::json::parse(std::ifstream(fixture("t_3_3.json")));
  doc["l1"]["kind"] = "SPIRAL";
  r = run({"classify", temp_file("enum.json", doc.dump())});
  CHECK(r.code == cli::kSchemaError);
  CHECK(r.err.find("$.l1.kind") != std::string::npos);

  doc = nlohmann::json::parse(std::ifstream(fixture("t_3_3.json")));
  doc["h_l_minus"] = {2, 1};
  r = run({"classify", temp_file("offset.json", doc.dump())});
  CHECK(r.code == cli::kValidationError);
  CHECK(r.err.find("orientation offset violated") != std::string::npos);
}

TEST_CASE("argument errors") {
  CHECK(run({}).code == cli::kSchemaError);
  CHECK(run({"frobnicate"}).code == cli::kSchemaError);
  CHECK(run({"classify", "a.json", "--format", "xml"}).code == cli::kSchemaError);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("family command") {
  auto r = run({"family", "T:3,3", "--classify"});
  REQUIRE(r.code == cli::kOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["symmetry"]["upper"] == "Z2xZ2");
  CHECK(j["symmetry"]["exact"] == "Z2xZ2");

  r = run({"family", "T:mu=3..15:2,nu=3..15:2,filter=PT", "--classify", "--format", "tsv"});
  REQUIRE(r.code == cli::kOk);
  CHECK(tsv(r.out).size() == 29);

  r = run({"family", "U:3,1", "--classify"});
  j = nlohmann::json::parse(r.out);
  CHECK(j["symmetry"]["upper"] == "TRIVIAL");

  r = run({"family", "T:3,3"});
  REQUIRE(r.code == cli::kOk);
  j = nlohmann::json::parse(r.out);
  CHECK(j["w_l_plus"] == "x1^2 x2");
  CHECK(j["schema"] == "annulus-presentation/1");

  r = run({"family", "T:mu=-9..-3:2,filter=Vprime"});
  CHECK(nlohmann::json::parse(r.out).size() == 4);

  CHECK(run({"family", "T:2,3"}).code == cli::kSchemaError);
  CHECK(run({"family", "Q:1,1"}).code == cli::kSchemaError);
}

TEST_CASE("table command") {
  auto r = run({"table", "V", "--range", "3..9"});
  REQUIRE(r.code == cli::kOk);
  auto rows = tsv(r.out);
  REQUIRE(rows.size() > 1);
  CHECK(rows[0] == std::vector<std::string>(std::begin(cli::kTableColumns), std::end(cli::kTableColumns)));
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][column(rows[0], "sym_exact")] == "Z2xZ2");

  r = run({"table", "Vprime", "--range", "-9..-3"});
  rows = tsv(r.out);
  REQUIRE(rows.size() == 5);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][column(rows[0], "sym_exact")] == "Z2");

  r = run({"table", "PT", "--range", "3..15"});
  rows = tsv(r.out);
  REQUIRE(rows.size() == 29);
  std::set<std::string> types;
  for (std::size_t i = 1; i < rows.size(); ++i) types.insert(rows[i][column(rows[0], "slope_type")]);
  CHECK(types.size() == 28);

  r = run({"table", "PI"});
  rows = tsv(r.out);
  types.clear();
  for (std::size_t i = 1; i < rows.size(); ++i) types.insert(rows[i][column(rows[0], "slope_type")]);
  CHECK(types.size() == rows.size() - 1);

  r = run({"table", "W", "--format", "markdown"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.rfind("| label |", 0) == 0);

  CHECK(run({"table", "Z"}).code == cli::kSchemaError);
  CHECK(run({"table", "PT", "--range", "9..3"}).code == cli::kSchemaError);
}

TEST_CASE("every proved or refuted cell has a citation in the JSON") {
  for (const char* name : {"PT", "PI", "V", "W", "Vprime", "U"}) {
    const auto t = tsv(run({"table", name}).out);
    const auto j = nlohmann::json::parse(run({"table", name, "--format", "json"}).out);
    const auto list = j.is_array() ? j : nlohmann::json::array({j});
    REQUIRE(list.size() + 1 == t.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (const char* col : {"irreducible", "atoroidal", "unique", "chiral"}) {
        const std::string cell = t[i + 1][column(t[0], col)];
        const std::string key = std::string(col) == "unique" ? "unique_annulus" : col;
        const auto& v = list[i].at(key);
        CHECK(v["verdict"] == cell);
        if (cell == "PROVED" || cell == "REFUTED") {
          CHECK(v["citation"].is_string());
          CHECK(anchor::is_registered(v["citation"].get<std::string>()));
        }
      }
    }
  }
}

TEST_CASE("outputs are byte-identical across runs") {
  const std::vector<std::vector<std::string>> commands = {
      {"classify", fixture("hk_c.json")},
      {"family", "T:mu=3..9:2,nu=3..9:2,filter=PT", "--classify"},
      {"table", "U", "--format", "json"},
      {"oracle", "roots", "--cases", "200"},
      {"oracle", "json", "--cases", "20", "--seed", "5"},
  };
  for (const auto& c : commands) {
    const auto a = run(c);
    const auto b = run(c);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("oracle command") {
  auto r = run({"oracle", "primitivity", "--maxlen", "6"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.rfind("primitivity: pass", 0) == 0);
  r = run({"oracle", "normalize", "--cases", "200"});
  CHECK(r.code == cli::kOk);
  CHECK(run({"oracle", "nonsense"}).code == cli::kSchemaError);
}
