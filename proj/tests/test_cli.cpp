#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fqid/algebra_io.hpp"
#include "fqid/cli.hpp"
#include "fqid/library.hpp"
#include "fqid/report_json.hpp"

using namespace fqid;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("examples") {
  auto r = run({"bound", "--q", "3", "--d", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "2/9\n");

  r = run({"dixon", "--algebra", "builtin:field(2)", "--poly", "x1*x1", "--flavor", "assoc"});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["report"]["probability"] == "1/2");
  CHECK(j["report"]["threshold"] == "3/4");
  CHECK(j["report"]["verdict_consistent"] == true);

  r = run({"probability", "--algebra", "builtin:field(2)", "--poly", "x1", "--samples", "1000"});
  CHECK(r.code == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"dixon", "--algebra", "builtin:field(2)"}).code == 2);
  CHECK(run({"dixon", "--algebra", "builtin:field(2)", "--poly", "x1 +"}).code == 2);
  CHECK(run({"dixon", "--algebra", "builtin:field(2)", "--poly", "x1", "--flavor", "jordan"}).code == 2);
  CHECK(run({"dixon", "--algebra", "builtin:nope(2)", "--poly", "x1"}).code == 2);
  CHECK(run({"dixon", "--algebra", "builtin:field(2)", "--poly", "x1", "--workers", "0"}).code == 2);
  CHECK(run({"probability", "--algebra", "builtin:field(2)", "--poly", "x1", "--seed", "4"}).code == 2);
  CHECK(run({"engel", "--algebra", "builtin:matrix(2,2)", "--m", "1"}).code == 2);
  CHECK(run({"descent", "--algebra", "builtin:field(2)", "--poly", "x1*x1", "--flavor", "assoc"}).code == 2);
  CHECK(run({"dixon", "--algebra", "builtin:heisenberg(2)", "--poly", "[x1,x2]", "--flavor", "lie", "--cap", "10"})
            .code == 2);
  const auto lie_on_assoc = run({"dixon", "--algebra", "builtin:matrix(2,2)", "--poly", "[x1,x2]", "--flavor", "lie"});
  CHECK(lie_on_assoc.code == 2);
  CHECK(lie_on_assoc.err.find("FlavorMismatch") != std::string::npos);
  CHECK(run({"dixon", "--algebra", "builtin:matrix(2,2)", "--poly", "[x1,x2]", "--flavor", "lie", "--commutator"})
            .code == 0);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("threshold equality is reported as a violation") {
  const auto r = run({"dixon", "--algebra", "builtin:field(2)", "--poly", "x1*x2", "--flavor", "assoc"});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["report"]["probability"] == "3/4");
}

TEST_CASE("cap from the environment") {
  const std::vector<std::string> args{"dixon", "--algebra", "builtin:heisenberg(2)", "--poly", "[x1,x2]",
                                      "--flavor", "lie"};
  ::setenv("FQIDTEST_CAP", "32", 1);
  CHECK(run(args).code == 2);
  auto with_cap = args;
  with_cap.insert(with_cap.end(), {"--cap", "64"});
  CHECK(run(with_cap).code == 0);
  ::unsetenv("FQIDTEST_CAP");
  CHECK(run(args).code == 0);
}

TEST_CASE("algebra files") {
  const auto path = std::filesystem::temp_directory_path() / "fqid_test_algebra.json";
  {
    std::ofstream f(path);
    f << algebra_to_json(builtin_algebra("truncated(2,3)")).dump();
  }
  const auto r = run({"check-identity", "--algebra", path.string(), "--poly", "x1*x1*x1", "--flavor", "assoc"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["report"]["is_identity"] == true);
  CHECK(run({"check-identity", "--algebra", "/nonexistent/a.json", "--poly", "x1"}).code == 2);
  {
    std::ofstream f(path);
    f << "{ not json";
  }
  CHECK(run({"check-identity", "--algebra", path.string(), "--poly", "x1"}).code == 2);
  std::filesystem::remove(path);
}

TEST_CASE("human output and notes") {
  const auto r = run({"dixon", "--algebra", "builtin:truncated(2,4)", "--poly", "x1*x1 + x1", "--flavor", "assoc",
                      "--human"});
  CHECK(r.code == 0);
  CHECK(r.out.find("report.probability") != std::string::npos);
  CHECK(r.out.find("note: Q is not homogeneous") != std::string::npos);
  CHECK(run({"bound", "--q", "3", "--d", "3", "--out", "json"}).out.find("\"value\": \"2/9\"") != std::string::npos);
}

TEST_CASE("corpus reports round-trip byte for byte") {
  for (const auto& cmd : cli::corpus_commands()) {
    auto full = cmd;
    full.insert(full.end(), {"--out", "json"});
    const auto r = run(full);
    CAPTURE(cmd[0]);
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(render(j) == r.out);
    if (j.contains("report") && j["report"].contains("zero_count")) {
      CHECK(render(report_json(eval_report_from_json(j["report"]))) == render(j["report"]));
    }
  }
}

TEST_CASE("corpus is independent of the worker count") {
  const auto one = run({"corpus"});
  const auto four = run({"corpus", "--workers", "4"});
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
}
