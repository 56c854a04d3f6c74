#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "loopss/chart.hpp"
#include "loopss/cli.hpp"
#include "loopss/json_out.hpp"
#include "loopss/model.hpp"

using namespace loopss;

namespace {

struct CliRun {
  int exit_code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return CliRun{code, out.str(), err.str()};
}

const std::string kDataDir = LOOPSS_DATA_DIR;

}  // namespace

TEST_CASE("exit codes: 0 PASS, 1 FAIL, 2 input error") {
  CHECK(cli({"verify", "--model", "sphere:3", "--expect", "theorem2"}).exit_code == 0);
  CHECK(cli({"verify", "--model", "sphere:2", "--expect", "theorem2-odd-form"}).exit_code == 1);
  CHECK(cli({"verify", "--model", "sphere:0"}).exit_code == 2);
  CHECK(cli({"verify", "--model", "nonsense:3"}).exit_code == 2);
  CHECK(cli({"compute", "--model", "sphere:2", "--tmax", "3"}).exit_code == 2);
  CHECK(cli({"compute", "--model", "sphere:2", "--format", "yaml"}).exit_code == 2);
  CHECK(cli({"frobnicate"}).exit_code == 2);
  CHECK(cli({"compute", "--model", "custom:/no/such/file.model"}).exit_code == 2);
}

TEST_CASE("verify picks registered defaults per model") {
  CliRun sphere = cli({"verify", "--model", "sphere:4"});
  CHECK(sphere.exit_code == 0);
  CHECK(sphere.out.find("theorem2-even") != std::string::npos);
  CliRun cpn = cli({"verify", "--model", "cpn:2"});
  CHECK(cpn.exit_code == 0);
  CHECK(cpn.out.find("theorem3") != std::string::npos);
  CHECK(cpn.out.find("additive reference") != std::string::npos);
  CliRun circle = cli({"verify", "--model", "circle"});
  CHECK(circle.exit_code == 0);
  CHECK(circle.out.find("PASS") == 0);
}

TEST_CASE("verify accepts candidate files") {
  CliRun run = cli({"verify", "--model", "sphere:3", "--expect",
                    kDataDir + "/expected/theorem2_odd_n3.model"});
  CHECK(run.exit_code == 0);
}

TEST_CASE("json output is byte-identical across runs and carries the CP^2 torsion") {
  std::vector<std::string> args{"compute", "--model", "cpn:2", "--tmax", "12",
                                "--format", "json"};
  CliRun first = cli(args);
  CliRun second = cli(args);
  REQUIRE(first.exit_code == 0);
  CHECK(first.out == second.out);

  nlohmann::json data = nlohmann::json::parse(first.out);
  CHECK(data["r"] == 5);
  CHECK(data["window"]["d"] == 4);
  CHECK(data["window"]["t_max"] == 12);
  bool found = false;
  for (const auto& cell : data["cells"])
    if (cell["s"] == -4 && cell["t"] == 4) {
      found = true;
      CHECK(cell["rank"] == 0);
      CHECK(cell["torsion"] == nlohmann::json::array({3}));
      CHECK(cell["basis"] == nlohmann::json::array({"c^2*u^1"}));
    }
  CHECK(found);
}

TEST_CASE("json key order follows the schema") {
  CliRun run = cli({"compute", "--model", "sphere:2", "--tmax", "8", "--format", "json"});
  REQUIRE(run.exit_code == 0);
  std::size_t r = run.out.find("\"r\"");
  std::size_t window = run.out.find("\"window\"");
  std::size_t cells = run.out.find("\"cells\"");
  std::size_t diffs = run.out.find("\"differentials\"");
  CHECK(r < window);
  CHECK(window < cells);
  CHECK(cells < diffs);
  std::size_t s = run.out.find("\"s\"");
  std::size_t rank = run.out.find("\"rank\"");
  std::size_t torsion = run.out.find("\"torsion\"");
  std::size_t basis = run.out.find("\"basis\"");
  CHECK(s < rank);
  CHECK(rank < torsion);
  CHECK(torsion < basis);
}

TEST_CASE("json differentials appear on the pages that carry them") {
  CliRun run = cli({"compute", "--model", "sphere:2", "--tmax", "8", "--format", "json",
                    "--pages", "2"});
  REQUIRE(run.exit_code == 0);
  nlohmann::json data = nlohmann::json::parse(run.out);
  REQUIRE(data["differentials"].is_array());
  CHECK(data["differentials"].size() > 0);
  bool saw_two = false;
  for (const auto& entry : data["differentials"]) {
    CHECK(entry["from"][0].get<int>() - 2 == entry["to"][0].get<int>());
    CHECK(entry["from"][1].get<int>() + 1 == entry["to"][1].get<int>());
    for (const auto& row : entry["matrix"])
      for (const auto& v : row)
        if (v.get<long long> () == 2) saw_two = true;
  }
  CHECK(saw_two);
}

TEST_CASE("chart and json render the same groups") {
  ManifoldModel model = cpn_model(2);
  std::vector<Page> pages = pages_through(model, 12, 5);
  const Page& einf = pages.back();
  ChartGrid grid = chart_grid(einf, nullptr);
  nlohmann::json data = nlohmann::json::parse(emit_json(einf, nullptr));
  for (const auto& cell : data["cells"]) {
    int s = cell["s"].get<int>();
    int t = cell["t"].get<int>();
    const std::string label = grid.rows[t][s + grid.d].label;
    const Cell* page_cell = einf.cell(s, t);
    REQUIRE(page_cell);
    CHECK(label == page_cell->group.to_string());
  }
  // and conversely every labeled grid spot shows up among the JSON cells
  for (int t = 0; t <= grid.t_top; ++t)
    for (int s = -grid.d; s <= 0; ++s) {
      if (grid.rows[t][s + grid.d].label == ".") continue;
      bool found = false;
      for (const auto& cell : data["cells"])
        if (cell["s"] == s && cell["t"] == t) found = true;
      CHECK(found);
    }
}

TEST_CASE("sphere:2 chart alternates x2 and x0 along the fiber column") {
  CliRun run = cli({"compute", "--model", "sphere:2", "--tmax", "8", "--format", "chart"});
  REQUIRE(run.exit_code == 0);
  CHECK(run.out.find("x2") != std::string::npos);
  CHECK(run.out.find("x0") != std::string::npos);

  ManifoldModel model = sphere_model(2);
  Page e2 = initial_page(model, 8);
  ChartGrid grid = chart_grid(e2, spec_at(model, 2));
  for (int t = 0; t <= 6; ++t)
    CHECK(grid.rows[t][grid.d].annotation == (t % 2 == 1 ? "x2" : "x0"));
}

TEST_CASE("cpn:2 chart shows a single x3 family") {
  ManifoldModel model = cpn_model(2);
  std::vector<Page> pages = pages_through(model, 12, 4);
  ChartGrid grid = chart_grid(pages.back(), spec_at(model, 4));
  int x3 = 0;
  for (const auto& row : grid.rows)
    for (const ChartCell& cell : row) {
      if (cell.annotation.empty()) continue;
      CHECK(cell.annotation == "x3");
      ++x3;
    }
  CHECK(x3 >= 2);
}

TEST_CASE("compute on the circle prints the closed form") {
  CliRun run = cli({"compute", "--model", "circle"});
  REQUIRE(run.exit_code == 0);
  CHECK(run.out.find("Lambda[a] (x) Z[t,t^-1]") != std::string::npos);
  CHECK(run.out.find("countable") != std::string::npos);
  CliRun json_run = cli({"compute", "--model", "circle", "--format", "json"});
  nlohmann::json data = nlohmann::json::parse(json_run.out);
  CHECK(data["model"] == "circle");
  CHECK(data["pieces"][0]["degree"] == 0);
}

TEST_CASE("custom model files drive compute end to end") {
  CliRun run = cli({"compute", "--model", "custom:" + kDataDir + "/models/s2.model",
                    "--tmax", "8", "--format", "json"});
  REQUIRE(run.exit_code == 0);
  CliRun builtin = cli({"compute", "--model", "sphere:2", "--tmax", "8", "--format", "json"});
  CHECK(run.out == builtin.out);
}

TEST_CASE("page ranges select the printed pages") {
  CliRun run = cli({"compute", "--model", "cpn:2", "--tmax", "12", "--format", "json",
                    "--pages", "2..3"});
  REQUIRE(run.exit_code == 0);
  nlohmann::json data = nlohmann::json::parse(run.out);
  REQUIRE(data.is_array());
  CHECK(data.size() == 2);
  CHECK(data[0]["r"] == 2);
  CHECK(data[1]["r"] == 3);
  CHECK(cli({"compute", "--model", "cpn:2", "--pages", "9"}).exit_code == 2);
}

TEST_CASE("svg chart lands on disk when requested") {
  std::string path = std::string(LOOPSS_BINARY_DIR) + "/chart_test.svg";
  CliRun run = cli({"compute", "--model", "sphere:2", "--tmax", "8", "--format", "chart",
                    "--svg", path});
  REQUIRE(run.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(bool(in));
  std::ostringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str().find("<svg") != std::string::npos);
}
