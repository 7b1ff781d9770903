#include <doctest.h>

#include <cstdio>
#include <unistd.h>
#include <fstream>
#include <sstream>

#include "cellar/cli.hpp"
#include "test_util.hpp"

using namespace cellar;

namespace {

std::string temp_path(const std::string& tag) {
  return std::string("cellar_test_") + tag + "_" + std::to_string(::getpid()) + ".json";
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& tag) : path(temp_path(tag)) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("exit codes follow the contract") {
  CHECK(run_cli({"report", "catalog:A3"}).exit_code == 1);
  CHECK(run_cli({"report", "catalog:A5"}).exit_code == 0);
  CHECK(run_cli({"verify-cell", "catalog:A11", "--datum", "bundled"}).exit_code == 0);
  CHECK(run_cli({"gram-factor", "--cartan", "[[1]]"}).exit_code == 0);
  CHECK(run_cli({"nonsense"}).exit_code == 2);
  CHECK(run_cli({"report", "no_such_file.json"}).exit_code == 2);
  CHECK(run_cli({"report", "catalog:A3", "--trace-cap", "4"}).exit_code == 3);
  CHECK(run_cli({"ext-sym", "catalog:A8"}).exit_code == 1);
  CHECK(run_cli({"weak-sym", "catalog:A4"}).exit_code == 0);
}

TEST_CASE("verify-cell flags a broken datum") {
  BuiltAlgebra b = catalog_build("Kronecker");
  CellDatumSpec spec = *b.datum;
  std::swap(spec.basis[0][0][0], spec.basis[3][0][0]);
  TempFile f("datum");
  std::ofstream(f.path) << serialize_cell_datum_spec(spec);
  CliResult r = run_cli({"verify-cell", "catalog:Kronecker", "--datum", f.path});
  CHECK(r.exit_code == 1);
}

TEST_CASE("reports are byte-identical across runs") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"report", "catalog:A3"},
           {"verify-cell", "catalog:A4", "--datum", "bundled"},
           {"basis", "catalog:Gamma0?m=2"},
           {"catalog", "list"}}) {
    CliResult a = run_cli(args);
    CliResult b = run_cli(args);
    CHECK(a.json == b.json);
  }
}

TEST_CASE("catalog build round-trips bit-exactly through files") {
  TempFile pres("pres");
  CliResult r = run_cli({"catalog", "build", "A7", "--out", pres.path});
  CHECK(r.exit_code == 0);
  std::ifstream in(pres.path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string bytes = ss.str();
  Presentation p = parse_presentation(bytes);
  CHECK(serialize_presentation(p) == bytes);
  CliResult again = run_cli({"cartan", pres.path});
  CHECK(again.exit_code == 0);
  CHECK(again.json.find("\"dimension\": 28") != std::string::npos);
}

TEST_CASE("catalog datum export loads back") {
  TempFile pres("pres2");
  TempFile datum("datum2");
  CliResult r = run_cli({"catalog", "build", "Gamma2", "--param", "l=-1", "--param", "m=0",
                         "--out", pres.path, "--datum-out", datum.path});
  CHECK(r.exit_code == 0);
  CliResult v = run_cli({"verify-cell", pres.path, "--datum", datum.path});
  CHECK(v.exit_code == 0);
}

TEST_CASE("truncation through the CLI") {
  CliResult r = run_cli({"truncate", "catalog:Gamma0?m=3", "--vertices", "a,b,1,2"});
  CHECK(r.exit_code == 0);
  CHECK(r.json.find("\"dimension\": 23") != std::string::npos);
  CliResult bad = run_cli({"truncate", "catalog:Gamma0?m=3", "--vertices", "a,zz"});
  CHECK(bad.exit_code == 2);
}

TEST_CASE("order-check on an explicit candidate") {
  CliResult ok = run_cli(
      {"order-check", "--candidate", "[[1,1],[1,1],[1,0],[1,0]]", "--self-injective"});
  CHECK(ok.exit_code == 0);
  CHECK(ok.json.find("\"consistent\": true") != std::string::npos);
  CliResult bad = run_cli(
      {"order-check", "--candidate", "[[1,1,0],[1,1,1],[0,1,1],[0,1,0]]", "--self-injective"});
  CHECK(bad.exit_code == 1);
}

TEST_CASE("report includes the machine-readable certificates") {
  CliResult r = run_cli({"report", "catalog:A3"});
  CHECK(r.json.find("\"verdict\": \"NOT-CELLULAR\"") != std::string::npos);
  CHECK(r.json.find("\"candidates\"") != std::string::npos);
  CHECK(r.json.find("\"reason\"") != std::string::npos);
}

TEST_CASE("human rendering and JSON carry the same content") {
  CliResult r = run_cli({"cartan", "catalog:Kronecker"});
  CHECK(r.human.find("dimension") != std::string::npos);
  CHECK(r.json.find("\"dimension\": 4") != std::string::npos);
}
