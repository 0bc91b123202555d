#include "cli_app.hpp"

#include "sugawara/serialize.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace sugawara;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args)
{
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("usage errors exit with 2")
{
  CHECK(run({}).code == cli::usage_error);
  CHECK(run({"vectors"}).code == cli::usage_error);
  CHECK(run({"--pyramid", "2,1", "vectors"}).code == cli::usage_error);
  CHECK(run({"--pyramid", "1,x", "vectors"}).code == cli::usage_error);
  CHECK(run({"--pyramid", "1,2", "frobnicate"}).code == cli::usage_error);
  CHECK(run({"--pyramid", "1,2", "--format", "xml", "vectors"}).code == cli::usage_error);
  CHECK(run({"--pyramid", "1,2", "--z", "0", "shift"}).code == cli::usage_error);
  CHECK(run({"--pyramid", "1,2", "--chi", "/nonexistent/chi.json", "shift"}).code == cli::usage_error);
  const Result r = run({"--pyramid", "2,1", "vectors"});
  CHECK(r.err.find("non-decreasing") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("vectors for pyramid (1,2)")
{
  const Result r = run({"--pyramid", "1,2", "vectors"});
  REQUIRE(r.code == cli::ok);
  const json doc = json::parse(r.out);
  CHECK(doc.at("pyramid") == "1,2");
  int selected = 0;
  for (const auto& v : doc.at("vectors")) {
    if (v.at("selected").get<bool>()) ++selected;
    CHECK(element_to_json(element_from_json(v.at("element"))) == v.at("element"));
  }
  CHECK(selected == 3);
  CHECK(run({"--pyramid", "1,2", "vectors"}).out == r.out);
  const Result text = run({"--pyramid", "1,2", "--format", "text", "vectors"});
  CHECK(text.out.find("3 selected") != std::string::npos);
}

TEST_CASE("verify passes for pyramid (2,3)")
{
  const Result r = run({"--pyramid", "2,3", "verify"});
  CHECK(r.code == cli::ok);
  const json doc = json::parse(r.out);
  CHECK(doc.at("passed") == true);
  CHECK(doc.at("reports").size() == 7);
  CHECK(run({"--pyramid", "2,3", "--workers", "3", "verify"}).out == r.out);
  CHECK(run({"verify", "--pyramid", "2,3"}).out == r.out);
}

TEST_CASE("center for gl_2")
{
  const Result r = run({"--pyramid", "1,1", "center"});
  CHECK(r.code == cli::ok);
  const json doc = json::parse(r.out);
  CHECK(doc.at("generators").size() == 2);
  CHECK(doc.at("automorphism_c").is_null());
  const Result shifted = run({"--pyramid", "1,1", "--automorphism-c", "-1", "center"});
  CHECK(shifted.code == cli::ok);
  CHECK(json::parse(shifted.out).at("automorphism_c") == "-1");
}

TEST_CASE("shift with a chi file and evaluation point")
{
  const std::string path = "test_cli_chi.json";
  {
    std::ofstream f(path);
    f << R"({"E[1,1,0]": "2", "E[1,2,1]": "-1/2"})";
  }
  const Result r = run({"--pyramid", "1,2", "--chi", path, "--z", "3", "shift"});
  std::remove(path.c_str());
  REQUIRE(r.code == cli::ok);
  const json doc = json::parse(r.out);
  CHECK(doc.at("chi").at("E[1,2,1]") == "-1/2");
  CHECK(doc.at("jacobian_rank") == 3);
  CHECK(doc.at("evaluated").size() == 3);
  CHECK(doc.at("z") == "3");
  CHECK(doc.at("passed") == true);

  const Result seeded = run({"--pyramid", "1,2", "--seed", "9", "shift"});
  CHECK(seeded.code == cli::ok);
  CHECK(run({"--pyramid", "1,2", "--seed", "9", "shift"}).out == seeded.out);
}

TEST_CASE("basis listing")
{
  const Result r = run({"--pyramid", "1,2", "basis"});
  REQUIRE(r.code == cli::ok);
  const json doc = json::parse(r.out);
  CHECK(doc.at("dimension") == 5);
  CHECK(doc.at("basis").at(0) == "E[1,1,0]");
  CHECK(run({"--pyramid", "1,2", "--format", "text", "basis"}).out.find("[E[1,1,0], E[1,2,1]] = E[1,2,1]") !=
        std::string::npos);
}
