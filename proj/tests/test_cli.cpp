#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "jperf/analysis.hpp"
#include "jperf/cli.hpp"
#include "jperf/dataset_io.hpp"
#include "jperf/synth.hpp"

using namespace jperf;
namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct Workspace {
  fs::path root;
  Workspace() {
    root = fs::temp_directory_path() / ("jperf_cli_" + std::to_string(::getpid()));
    fs::remove_all(root);
    fs::create_directories(root);
    REQUIRE(run_cli({"demo", "table1", "--export", (root / "t1").string()}).code == 0);
    REQUIRE(run_cli({"demo", "counterexample", "--export", (root / "ce").string()}).code == 0);
  }
  ~Workspace() { fs::remove_all(root); }
  std::vector<std::string> data(const std::string& name) const {
    return {"--journals", (root / name / "journals.csv").string(), "--matrix",
            (root / name / "matrix.csv").string()};
  }
};

std::vector<std::string> cat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

const char* const kIppGolden =
    "id,value\n1,5.500\n2,5.500\n3,0.055\n4,0.055\n5,5.500\n6,5.500\n7,0.055\n8,0.055\n";
const char* const kAfGolden =
    "id,value\n1,44.000\n2,44.000\n3,0.440\n4,0.440\n5,44.000\n6,44.000\n7,0.440\n8,0.440\n";

}  // namespace

TEST_CASE("compute reproduces the 8-journal golden tables") {
  Workspace ws;
  const auto ipp = run_cli(cat(cat({"compute"}, ws.data("t1")),
                               {"--indicator", "ipp", "--iw-normalization", "mean",
                                "--precision", "3"}));
  CHECK(ipp.code == 0);
  CHECK(ipp.out == kIppGolden);
  const auto af = run_cli(cat(cat({"compute"}, ws.data("t1")), {"--indicator", "af", "--precision", "3"}));
  CHECK(af.code == 0);
  CHECK(af.out == kAfGolden);
}

TEST_CASE("compute json output") {
  Workspace ws;
  const auto r = run_cli(cat(cat({"compute"}, ws.data("t1")),
                             {"--indicator", "ai", "--format", "json", "--precision", "15"}));
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["indicator"] == "AI");
  CHECK(j["params"]["alpha"] == 0.85);  // default damping
  CHECK(j["basis"] == "per_article");
  CHECK(j["solver"]["method_used"] == "direct");
  double total = 0;
  for (const auto& [id, v] : j["values"].items()) total += v.get<double>() * 100.0 * 100.0;
  CHECK(total == doctest::Approx(100.0).epsilon(1e-9));
  CHECK(j["values"].begin().key() == "1");
}

TEST_CASE("compute rejects mismatched parameter flags") {
  Workspace ws;
  for (const auto& extra : std::vector<std::vector<std::string>>{
           {"--indicator", "if", "--alpha", "0.5"},
           {"--indicator", "ai", "--beta", "0.5", "--gamma", "0.1"},
           {"--indicator", "sjr", "--beta", "0.5"},
           {"--indicator", "af", "--iw-normalization", "mean"},
           {"--indicator", "ai", "--alpha", "1.5"},
           {"--indicator", "nope"}}) {
    const auto r = run_cli(cat(cat({"compute"}, ws.data("t1")), extra));
    CHECK(r.code == 1);
    CHECK(Json::parse(r.err)["error"] == "InvalidParameter");
  }
}

TEST_CASE("correlate emits the lower/upper layout") {
  Workspace ws;
  BlockModelSpec spec;
  spec.journals_per_field = 5;
  spec.articles_min = 10;
  spec.articles_max = 200;
  spec.seed = 31;
  const auto inst = block_model(spec).instance;
  export_dataset(inst, ws.root / "bm");
  const auto r = run_cli(cat(cat({"correlate"}, ws.data("bm")),
                             {"--indicators", "if,af,ai:0.5,wpr:0.85:0,ipp:mean", "--precision",
                              "12"}));
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  const auto header = split_csv_line(line);
  REQUIRE(header.size() == 6);
  CHECK(header[4] == "WPR(0.85,0)");

  IndicatorParams wpr;
  wpr.beta = 0.85;
  wpr.gamma = 0.0;
  const auto expected = correlation_table(
      {impact_factor(inst), audience_factor(inst), article_influence(inst, EigenParams(0.5)),
       compute_indicator(inst, IndicatorKind::WPR, wpr),
       influence_per_publication(inst, IwNormalization::mean_references)});
  for (std::size_t i = 0; i < 5; ++i) {
    REQUIRE(std::getline(in, line));
    const auto cells = split_csv_line(line);
    CHECK(cells[0] == header[i + 1]);
    for (std::size_t j = 0; j < 5; ++j) {
      const double v = std::stod(cells[j + 1]);
      const double want = i == j ? 1.0 : (i > j ? expected.pearson[i][j] : expected.spearman[i][j]);
      CHECK(v == doctest::Approx(want).epsilon(1e-10));
    }
  }
}

TEST_CASE("sensitivity drop reproduces the coverage scenario") {
  Workspace ws;
  const auto r = run_cli(cat(cat({"sensitivity"}, ws.data("t1")),
                             {"--indicator", "af", "--drop", "8", "--precision", "3"}));
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "id,before,after,relative_change");
  const std::vector<std::string> after{"42.938", "42.938", "0.429", "0.429",
                                       "34.063", "34.063", "0.341"};
  for (const auto& want : after) {
    REQUIRE(std::getline(in, line));
    CHECK(split_csv_line(line)[2] == want);
  }
  const auto ipp = run_cli(cat(cat({"sensitivity"}, ws.data("t1")),
                               {"--indicator", "ipp", "--iw-normalization", "mean", "--drop", "8",
                                "--precision", "3"}));
  CHECK(ipp.out.find("1,5.500,5.513,") != std::string::npos);
  CHECK(ipp.out.find("5,5.500,5.490,") != std::string::npos);
  const auto missing = run_cli(cat(cat({"sensitivity"}, ws.data("t1")),
                                   {"--indicator", "af", "--drop", "99"}));
  CHECK(missing.code == 1);
}

TEST_CASE("sensitivity sweep is deterministic") {
  Workspace ws;
  const auto args = cat(cat({"sensitivity"}, ws.data("t1")), {"--indicator", "af", "--sweep"});
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("dropped,max_relative_change\n3,0.225845\n", 0) == 0);
}

TEST_CASE("field-check on the two-journal counterexample") {
  Workspace ws;
  const auto r = run_cli(cat(cat({"field-check"}, ws.data("ce")),
                             {"--partition", (ws.root / "ce" / "partition.csv").string(),
                              "--indicator", "ipp", "--format", "json"}));
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["delta"] == 0.003);
  CHECK(j["field_means"][0].get<double>() == doctest::Approx(15.0));
  CHECK(j["bounds_hold"][0] == false);
  CHECK(j["upper_bound"].get<double>() == doctest::Approx(10.03).epsilon(1e-12));
}

TEST_CASE("demo output and exports") {
  Workspace ws;
  const auto r = run_cli({"demo", "table1"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("1,5.500,5.500,5.513,5.513,44.000,44.000,42.938,42.938") != std::string::npos);
  CHECK(r.out.find("8,0.055,0.055,,,0.440,0.440,,") != std::string::npos);

  const auto t1 = load_dataset(ws.root / "t1" / "journals.csv", ws.root / "t1" / "matrix.csv");
  CHECK(t1.journals() == table1_instance().journals());
  CHECK(t1.matrix() == table1_instance().matrix());
  const auto ce = load_dataset(ws.root / "ce" / "journals.csv", ws.root / "ce" / "matrix.csv");
  const auto part = load_partition(ws.root / "ce" / "partition.csv", ce.journals());
  CHECK(min_delta(ce.matrix(), part) == 0.003);
  CHECK(run_cli({"demo", "nope"}).code == 1);
}

TEST_CASE("generate and check") {
  Workspace ws;
  const auto dir = (ws.root / "gen").string();
  REQUIRE(run_cli({"generate", "--seed", "7", "--journals-per-field", "6", "--export", dir}).code ==
          0);
  BlockModelSpec spec;
  spec.journals_per_field = 6;
  spec.seed = 7;
  const auto direct = block_model(spec);
  const auto loaded = load_dataset(ws.root / "gen" / "journals.csv", ws.root / "gen" / "matrix.csv");
  CHECK(loaded.matrix() == direct.instance.matrix());
  const auto r = run_cli(cat({"check"}, ws.data("gen")));
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["irreducible"] == true);
}

TEST_CASE("error records and exit codes") {
  Workspace ws;
  const auto dir = ws.root / "red";
  fs::create_directories(dir);
  std::ofstream(dir / "journals.csv") << "id,name,articles_t1,articles_t2\na,A,1,1\nb,B,1,1\n";
  std::ofstream(dir / "matrix.csv") << "citing\\cited,a,b\na,1,0\nb,0,1\n";
  const auto red = run_cli(cat(cat({"compute"}, ws.data("red")), {"--indicator", "ipp"}));
  CHECK(red.code == 1);
  const auto rec = Json::parse(red.err);
  CHECK(rec["error"] == "NotIrreducible");
  CHECK(rec["components"].size() == 2);

  BlockModelSpec spec;
  spec.journals_per_field = 4;
  spec.seed = 3;
  export_dataset(block_model(spec).instance, ws.root / "bm");
  const auto nc = run_cli(cat(cat({"compute"}, ws.data("bm")),
                              {"--indicator", "ai", "--method", "power", "--max-iterations", "2"}));
  CHECK(nc.code == 2);
  CHECK(Json::parse(nc.err)["error"] == "NoConvergence");
  CHECK(Json::parse(nc.err)["iterations"] == 2);

  std::ofstream(dir / "matrix.csv") << "citing\\cited,a,b\na,1,-1\nb,0,1\n";
  const auto neg = run_cli(cat(cat({"compute"}, ws.data("red")), {"--indicator", "if"}));
  CHECK(neg.code == 1);
  CHECK(Json::parse(neg.err)["violations"][0]["error"] == "NegativeCount");

  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"compute"}).code == 1);
}

TEST_CASE("installed binary exit codes") {
  Workspace ws;
  const std::string bin = JPERF_CLI_PATH;
  const auto data = ws.data("t1");
  std::string cmd = bin + " compute";
  for (const auto& a : data) cmd += " '" + a + "'";
  const auto out = (ws.root / "out.txt").string();
  CHECK(std::system((cmd + " --indicator af --precision 3 > '" + out + "'").c_str()) == 0);
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == kAfGolden);
  const int status = std::system((cmd + " --indicator if --alpha 0.3 2>/dev/null").c_str());
  CHECK(WEXITSTATUS(status) == 1);
}
