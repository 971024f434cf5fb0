#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <map>
#include <string>

#include <json.hpp>

#include "parafock/action.hpp"
#include "parafock/rational.hpp"

using namespace parafock;
using Json = nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string output;
};

// Runs a shell command, capturing stdout+stderr and the exit status.
RunResult run(const std::string& command) {
  RunResult result;
  FILE* pipe = ::popen((command + " 2>&1").c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  while (std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe))
    result.output.append(buffer, got);
  const int status = ::pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string cli() { return std::string("\"") + PARAFOCK_CLI_PATH + "\" "; }
std::string testbin() { return std::string("\"") + PARAFOCK_TESTBIN_PATH + "\" "; }

}  // namespace

TEST_CASE("build: p=1 window exports the expected basis and matrices") {
  const RunResult res = run(cli() + "build --p 1 --max-m 1");
  REQUIRE(res.code == 0);
  const Json doc = Json::parse(res.output);

  CHECK(doc.at("p") == 1);
  CHECK(doc.at("max_m") == 1);
  CHECK(doc.at("basis").size() == 4);
  CHECK(doc.at("boundary_exact").at("b+") == false);
  CHECK(doc.at("boundary_exact").at("b-") == true);
  CHECK(doc.at("boundary_exact").at("f+") == true);
  CHECK(doc.at("boundary_exact").at("f-") == true);

  // Every exported matrix agrees entry-for-entry with the in-process one.
  for (Generator g : all_generators) {
    const SparseOperator op = matrix_of(ParaOrder(1), Truncation(1), g);
    std::map<std::string, std::string> expected;
    for (const auto& [key, value] : op.entries)
      expected[to_string(key.first) + "|" + to_string(key.second)] = to_string(value);

    std::map<std::string, std::string> got;
    for (const Json& e : doc.at("operators").at(to_string(g)))
      got[std::string(e.at("row")) + "|" + std::string(e.at("col"))] = e.at("val");
    CHECK(got == expected);
  }

  // The n = p fold at p = 1: b+ carries |0,1,alpha> to +|1,1,alpha>.
  bool found = false;
  for (const Json& e : doc.at("operators").at("b+"))
    if (e.at("row") == "(1,1,alpha)" && e.at("col") == "(0,1,alpha)") {
      CHECK(e.at("val") == "1");
      found = true;
    }
  CHECK(found);
}

TEST_CASE("build: a zero-width window leaves b+ with no entries") {
  const RunResult res = run(cli() + "build --p 2 --max-m 0");
  REQUIRE(res.code == 0);
  const Json doc = Json::parse(res.output);
  CHECK(doc.at("basis").size() == 3);
  CHECK(doc.at("operators").at("b+").empty());
  CHECK_FALSE(doc.at("operators").at("f+").empty());
  CHECK(doc.at("boundary_exact").at("b+") == false);
}

TEST_CASE("output is byte-reproducible across runs") {
  const std::string build_cmd = cli() + "build --p 2 --max-m 3";
  CHECK(run(build_cmd).output == run(build_cmd).output);
  const std::string gram_cmd = cli() + "gram --p 2 --max-m 2 --ortho";
  CHECK(run(gram_cmd).output == run(gram_cmd).output);
  const std::string verify_cmd = cli() + "verify --p 1 --max-m 3 --threads 2";
  CHECK(run(verify_cmd).output == run(verify_cmd).output);
}

TEST_CASE("verify: passes on the honest representation") {
  const RunResult res = run(cli() + "verify --p 2 --max-m 3 --threads 2");
  REQUIRE(res.code == 0);
  const Json doc = Json::parse(res.output);
  CHECK(doc.at("all_passed") == true);
  CHECK(doc.at("suites").size() == 9);
  CHECK_FALSE(doc.contains("injected_fault"));
  for (const Json& suite : doc.at("suites")) {
    CHECK(suite.at("passed") == true);
    CHECK(suite.at("failures").empty());
  }
}

TEST_CASE("verify: text format prints one line per suite") {
  const RunResult res = run(cli() + "verify --p 1 --max-m 3 --format text");
  CHECK(res.code == 0);
  CHECK(res.output.find("vacuum p=1") != std::string::npos);
  CHECK(res.output.find("relations p=1") != std::string::npos);
  CHECK(res.output.find("PASS") != std::string::npos);
  CHECK(res.output.find("FAILED") == std::string::npos);
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run(cli() + "verify --p 0 --max-m 4").code == 1);
  CHECK(run(cli() + "verify --p 2 --max-m 2").code == 1);
  CHECK(run(cli() + "gram --p 2 --m 1").code == 1);
  CHECK(run(cli() + "build --p 2 --format dot").code == 1);
  CHECK(run(cli() + "nonsense --p 2").code == 1);
  CHECK(run(cli()).code == 1);
}

TEST_CASE("eval: expressions act on kets") {
  RunResult res = run(cli() + "eval --p 3 --expr 'b- b+' --ket '|0>'");
  CHECK(res.code == 0);
  CHECK(res.output == "3*|0,0,alpha>\n");

  res = run(cli() + "eval --p 2 --expr 'N_s' --ket '|0>'");
  CHECK(res.code == 0);
  CHECK(res.output == "1/2*|0,0,alpha>\n");

  res = run(cli() + "eval --p 1 --expr 'f+ f+' --ket '|0>'");
  CHECK(res.code == 0);
  CHECK(res.output == "0\n");

  res = run(cli() + "eval --p 2 --expr '{b+,f+}' --ket '|0>' --format json");
  CHECK(res.code == 0);
  const Json doc = Json::parse(res.output);
  CHECK(doc.at("result_text") == "2*|1,1,beta>");
  CHECK(doc.at("result").size() == 1);
  CHECK(doc.at("result").at(0).at("coeff") == "2");
  CHECK(doc.at("result").at(0).at("ket") == "|1,1,beta>");
}

TEST_CASE("eval: malformed input exits 1 with a position") {
  RunResult res = run(cli() + "eval --p 2 --expr '[b+ b-]' --ket '|0>'");
  CHECK(res.code == 1);
  CHECK(res.output.find("parse error at position 6") != std::string::npos);

  res = run(cli() + "eval --p 2 --expr 'b+' --ket '|3,2,beta>'");
  CHECK(res.code == 1);
  CHECK(res.output.find("it reduces to") != std::string::npos);
  CHECK(res.output.find("1/2*|3,2,alpha>") != std::string::npos);
}

TEST_CASE("gram: sector matrix with orthonormal payload") {
  const RunResult res = run(cli() + "gram --p 2 --m 1 --n 1 --ortho");
  REQUIRE(res.code == 0);
  const Json doc = Json::parse(res.output);
  CHECK(doc.at("dim") == 2);
  CHECK(doc.at("gram") == Json::parse(R"([["4","2"],["2","2"]])"));

  const Json& vectors = doc.at("ortho").at("vectors");
  REQUIRE(vectors.size() == 2);
  CHECK(vectors.at(0).at("label") == "+");
  CHECK(vectors.at(0).at("norm2_exact") == "4");
  CHECK(vectors.at(0).at("coords").at("|1,1,alpha>") == doctest::Approx(0.5));
  CHECK(vectors.at(1).at("label") == "-");
  CHECK(vectors.at(1).at("norm2_exact") == "4");
  CHECK(vectors.at(1).at("coords").at("|1,1,alpha>") == doctest::Approx(-0.5));
  CHECK(vectors.at(1).at("coords").at("|1,1,beta>") == doctest::Approx(1.0));
}

TEST_CASE("gram: whole-window matrix") {
  const RunResult res = run(cli() + "gram --p 1 --max-m 1");
  REQUIRE(res.code == 0);
  const Json doc = Json::parse(res.output);
  CHECK(doc.at("total_dim") == 4);
  CHECK(doc.at("gram").size() == 4);
  CHECK(doc.at("basis").at(0) == "(0,0,alpha)");

  const RunResult text = run(cli() + "gram --p 2 --m 1 --n 1 --format text");
  CHECK(text.code == 0);
  CHECK(text.output == "[[4, 2], [2, 2]]\n");
}

TEST_CASE("spectrum: sector table carries the superselection data") {
  const RunResult res = run(cli() + "spectrum --p 2 --max-m 2");
  REQUIRE(res.code == 0);
  const Json doc = Json::parse(res.output);
  CHECK(doc.at("total_dim") == 11);
  bool saw_interior = false;
  for (const Json& sector : doc.at("sectors")) {
    CHECK(sector.at("N_b") == sector.at("m"));
    CHECK(sector.at("N_f") == sector.at("n"));
    if (sector.at("m") == 1 && sector.at("n") == 1) {
      saw_interior = true;
      CHECK(sector.at("dim") == 2);
      CHECK(sector.at("N_s_values") == Json::parse(R"(["1/2","-1/2"])"));
    }
  }
  CHECK(saw_interior);
  CHECK(run(cli() + "spectrum --p 2 --max-m 2 --format text").code == 0);
}

TEST_CASE("diagram: dot output reflects the ladder structure") {
  const RunResult res = run(cli() + "diagram --p 2 --max-m 2 --format dot");
  REQUIRE(res.code == 0);
  const std::string& dot = res.output;
  CHECK(dot.find("digraph carrier") != std::string::npos);

  int nodes = 0;
  for (std::size_t at = dot.find("[label=\"V("); at != std::string::npos;
       at = dot.find("[label=\"V(", at + 1))
    ++nodes;
  CHECK(nodes == 9);

  CHECK(dot.find("V_1_1 [label=\"V(1,1) dim=2\"]") != std::string::npos);
  CHECK(dot.find("V_0_1 -> V_1_1 [label=\"b+\"]") != std::string::npos);
  CHECK(dot.find("V_1_2 -> V_1_1 [label=\"f-\"]") != std::string::npos);
  // Nothing raises out of the n = p column.
  CHECK(dot.find("V_1_2 -> V_1_3") == std::string::npos);

  const RunResult small = run(cli() + "diagram --p 1 --max-m 1 --format json");
  REQUIRE(small.code == 0);
  const Json doc = Json::parse(small.output);
  CHECK(doc.at("nodes").size() == 4);
  for (const Json& node : doc.at("nodes")) CHECK(node.at("dim") == 1);

  CHECK(run(cli() + "diagram --p 1 --max-m 1").output.find("window dimension: 4") !=
        std::string::npos);
}

TEST_CASE("--out failures exit with code 3") {
  const RunResult res =
      run(cli() + "build --p 1 --max-m 1 --out /nonexistent-dir/out.json");
  CHECK(res.code == 3);
  CHECK(res.output.find("cannot open") != std::string::npos);
}

TEST_CASE("fault injection: test binary detects corruption, release refuses the flag") {
  const RunResult faulted = run(
      testbin() + "verify --p 2 --max-m 4 --inject-fault f+.alpha.alpha.sign");
  CHECK(faulted.code == 2);
  const Json doc = Json::parse(faulted.output);
  CHECK(doc.at("all_passed") == false);
  CHECK(doc.at("injected_fault") == "f+.alpha.alpha.sign");

  const RunResult unknown =
      run(testbin() + "verify --p 2 --max-m 4 --inject-fault no.such.fault");
  CHECK(unknown.code == 1);
  CHECK(unknown.output.find("catalog") != std::string::npos);

  CHECK(run(cli() + "verify --p 2 --max-m 4 --inject-fault f+.alpha.alpha.sign")
            .code == 1);

  // The clean test binary still passes: instrumentation alone changes nothing.
  CHECK(run(testbin() + "verify --p 1 --max-m 3").code == 0);
}
