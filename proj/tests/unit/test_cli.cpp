#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using torus2::cli::run_args;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(TORUS2_TEST_DIR) + "/golden/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string data(const std::string& name) { return std::string(TORUS2_TEST_DIR) + "/data/" + name; }

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> row;
    std::stringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(cell);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("golden outputs") {
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
      {{"--format", "csv", "count", "B", "--m", "2", "--max", "10"}, "count_B_2_10.csv"},
      {{"--format", "csv", "count", "C", "--m", "2", "--max", "12"}, "count_C_2_12.csv"},
      {{"--format", "csv", "charfns", "--space", "prism", "--n", "3"}, "charfns_prism.csv"},
      {{"--format", "csv", "classify", "--surface", "torus", "--m", "6"}, "classify_torus_6.csv"},
      {{"--format", "csv", "classify", "--surface", "rp2", "--m", "2", "--max", "14"}, "classify_rp2.csv"},
      {{"--format", "csv", "cover", "--m", "6"}, "cover_6.csv"},
  };
  for (const auto& [args, file] : cases) {
    CAPTURE(file);
    const auto r = run_args(args);
    CHECK(r.exit_code == 0);
    CHECK(r.output == golden(file));
  }
}

TEST_CASE("headline values") {
  const auto b = parse_csv(run_args({"--format", "csv", "count", "B", "--m", "10"}).output);
  CHECK(b[1][2] == "78");
  const auto p = parse_csv(run_args({"--format", "csv", "charfns", "--space", "prism", "--n", "3"}).output);
  CHECK(p[1][3] == "840");
  CHECK(p[1][4] == "5");
  const auto t = parse_csv(run_args({"--format", "csv", "classify", "--surface", "torus", "--m", "6"}).output);
  CHECK(t[1][2] == "5");
  CHECK(t[1][3] == "13");
  CHECK(t[1][4] == "65");
}

TEST_CASE("csv and json carry the same table") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"count", "A", "--m", "2", "--max", "70"},
           {"charfns", "--space", "simplex:3"},
           {"classify", "--surface", "torus", "--m", "2", "--max", "5", "--verify"},
           {"euler", "--genus", "2", "--orientable", "false", "--m", "5"}}) {
    auto csv_args = args;
    csv_args.insert(csv_args.begin(), {"--format", "csv"});
    auto json_args = args;
    json_args.insert(json_args.begin(), {"--format", "json"});
    const auto rows = parse_csv(run_args(csv_args).output);
    const auto doc = nlohmann::json::parse(run_args(json_args).output);
    REQUIRE(doc.size() + 1 == rows.size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
      for (std::size_t k = 0; k < rows[0].size(); ++k) {
        const auto& v = doc[i][rows[0][k]];
        std::string text;
        if (v.is_null()) {
          text = "";
        } else if (v.is_string()) {
          text = v.get<std::string>();
        } else {
          text = v.dump();
        }
        CHECK(text == rows[i + 1][k]);
      }
    }
  }
}

TEST_CASE("plain output is aligned") {
  const auto r = run_args({"count", "B", "--m", "9", "--max", "10"});
  CHECK(r.output == "m   s  B\n9   3  29\n10  3  78\n");
}

TEST_CASE("oracle and verification") {
  CHECK(run_args({"oracle", "--m", "2", "--max", "9"}).exit_code == 0);
  CHECK(run_args({"oracle", "--m", "3", "--max", "7", "--s", "4"}).exit_code == 0);
  CHECK(run_args({"classify", "--surface", "rp2", "--m", "3", "--max", "6", "--verify"}).exit_code == 0);
  CHECK(run_args({"classify", "--surface", "custom:" + data("swap.h1"), "--m", "4", "--verify"}).exit_code == 0);
}

TEST_CASE("file spaces") {
  const auto r = run_args({"--format", "csv", "charfns", "--space", "file:" + data("square.poset")});
  CHECK(r.exit_code == 0);
  const auto rows = parse_csv(r.output);
  CHECK(rows[1][3] == "18");
  CHECK(rows[1][8] == "2");
  const auto e = parse_csv(run_args({"--format", "csv", "euler", "--space", "file:" + data("square.poset")}).output);
  CHECK(e[1][2] == "0");
}

TEST_CASE("single covers") {
  const auto r = run_args({"--format", "csv", "cover", "--m", "4", "--lambda", "0,1,0,2"});
  CHECK(r.exit_code == 0);
  CHECK(r.output == "m,lambda,euler,components,closed,orientable\n4,\"0,1,0,2\",0,1,true,false\n");
  const auto cells = run_args({"cover", "--m", "3", "--lambda", "0,1,2", "--cells"});
  CHECK(cells.exit_code == 0);
  CHECK(std::count(cells.output.begin(), cells.output.end(), '\n') == 13);
}

TEST_CASE("exit codes") {
  CHECK(run_args({}).exit_code == 2);
  CHECK(run_args({"count", "D", "--m", "4"}).exit_code == 2);
  CHECK(run_args({"count", "B", "--m", "1"}).exit_code == 2);
  CHECK(run_args({"count", "C", "--m", "4", "--s", "4"}).exit_code == 2);
  CHECK(run_args({"count", "B", "--m", "6", "--max", "4"}).exit_code == 2);
  CHECK(run_args({"charfns", "--space", "cube"}).exit_code == 2);
  CHECK(run_args({"charfns", "--space", "file:/nonexistent"}).exit_code == 2);
  CHECK(run_args({"classify", "--surface", "klein", "--m", "4"}).exit_code == 2);
  CHECK(run_args({"cover", "--m", "4", "--lambda", "0,0,1,2"}).exit_code == 2);
  CHECK(run_args({"--format", "xml", "count", "A", "--m", "3"}).exit_code == 2);
  CHECK(run_args({"oracle", "--m", "23"}).exit_code == 3);
  CHECK(run_args({"--budget", "100", "oracle", "--m", "8"}).exit_code == 3);
  CHECK(run_args({"--budget", "100", "charfns", "--space", "prism"}).exit_code == 3);
  CHECK(run_args({"--help"}).exit_code == 0);
  CHECK_FALSE(run_args({"--help"}).output.empty());
  CHECK_FALSE(run_args({"count", "B"}).error.empty());
}
