#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fanohost/cli.hpp"
#include "fanohost/json_io.hpp"

using fano::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = fano::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("fanohost_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("host: genus-4 curve") {
  auto r = run({"host", "--ambient", "P3", "--degrees", "2,3"});
  CHECK(r.code == 0);
  auto j = r.json();
  CHECK(j["descriptor"]["host_dim"] == 3);
  CHECK(j.contains("evidence"));
  CHECK(j["evidence"]["inequalities"].size() == 4);
}

TEST_CASE("host: uncertified grid exits 1 with unverified wording") {
  auto r = run({"host", "--ambient", "P4", "--degrees", "5", "--pad-max", "0"});
  CHECK(r.code == 1);
  auto j = r.json();
  CHECK(j["certified"] == false);
  CHECK(j["note"].get<std::string>().find("unverified") != std::string::npos);
  CHECK(j.contains("evidence"));
}

TEST_CASE("host: flags reach the search") {
  auto r = run({"host", "--ambient", "P3", "--degrees", "2,3", "--twist-max", "1"});
  CHECK(r.code == 0);
  CHECK(r.json()["descriptor"]["host_dim"] == 5);
  auto g = run({"host", "--ambient", "P7", "--degrees", "2,2,2,2", "--general", "--no-absorb"});
  CHECK(g.json()["descriptor"]["absorbed"].empty());
}

TEST_CASE("hodge: missing degrees is invalid input") {
  auto r = run({"hodge", "--ambient", "P9"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("hodge output re-parses for check and report") {
  auto h = run({"hodge", "--ambient", "P2", "--degrees", "3"});
  REQUIRE(h.code == 0);
  auto j = h.json();
  CHECK(j["euler"] == 0);
  CHECK(j["diamond"]["h"][1][0] == 1);
  CHECK(j["evidence"]["checks"][0]["holds"] == true);
  auto ell = temp_file("elliptic.json", h.out);
  auto p2 = temp_file("p2.json", R"({"n": 2, "h": [[1,0,0],[0,1,0],[0,0,1]]})");

  auto c = run({"check", "--y", ell, "--x", p2});
  CHECK(c.code == 1);
  CHECK(c.json()["violated"] == Json::array({-1, 1}));
  CHECK(c.json()["verdict"] == "obstructed");

  auto same = run({"check", "--y", ell, "--x", ell});
  CHECK(same.code == 0);
  CHECK(same.json()["note"].get<std::string>().find("does not certify") != std::string::npos);

  auto rep = run({"report", "--json", ell});
  CHECK(rep.code == 0);
  CHECK(rep.json()["fano_dimension"] == 3);
}

TEST_CASE("host descriptors re-parse as report input") {
  auto h = run({"host", "--ambient", "P4", "--degrees", "5"});
  auto path = temp_file("quintic_host.json", h.json()["descriptor"].dump());
  auto rep = run({"report", "--json", path});
  CHECK(rep.code == 0);
  CHECK(rep.json()["exact"] == true);
  CHECK(rep.json()["fano_dimension"] == 5);
}

TEST_CASE("malformed JSON is exit 2 with a position") {
  auto bad = temp_file("bad.json", "{\"n\": 1, \"h\": [[1,");
  auto r = run({"check", "--y", bad, "--x", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("byte") != std::string::npos);
}

TEST_CASE("wci single model and fixtures") {
  auto r = run({"wci", "--weights", "1,1,1,3", "--degrees", "6"});
  CHECK(r.code == 0);
  auto j = r.json();
  CHECK(j["descriptor"]["host_dim"] == 4);
  CHECK(j["lower_bound"]["value"] == 4);
  CHECK(j["quasi_smooth"] == true);

  auto f = run({"wci", "--fixtures", std::string(FANOHOST_DATA_DIR) + "/reid_k3_sample.json"});
  CHECK(f.code == 0);
  CHECK(f.json()["evidence"]["host_dim_equals_lower_bound"] == f.json()["evidence"]["families"]);

  auto broken = temp_file("fixtures.json", R"({"family": "k3", "families": [{"weights": [1,1,1], "degrees": [3]}]})");
  CHECK(run({"wci", "--fixtures", broken}).code == 2);
  CHECK(run({"wci", "--weights", "1,2,2", "--degrees", "4"}).code == 2);
}

TEST_CASE("report variants") {
  auto g7 = run({"report", "--genus", "7", "--general"});
  CHECK(g7.code == 0);
  CHECK(g7.json()["fano_dimension"]["at_most"] == 5);
  CHECK(g7.json()["fano_dimension"]["at_least"] == 3);
  CHECK(run({"report", "--genus", "3", "--hyperelliptic", "--non-hyperelliptic"}).code == 2);
  auto k3 = run({"report", "--k3", "--base-dim", "6"});
  CHECK(k3.json()["fano_dimension"]["at_most"] == 8);
  auto w = run({"report", "--ambient", "P(1,1,3)", "--degrees", "6"});
  CHECK(w.code == 0);
  CHECK(w.json()["fano_dimension"]["at_most"] == 5);
}

TEST_CASE("validate and fixture override") {
  auto v = run({"validate"});
  CHECK(v.code == 0);
  CHECK(v.json()["mismatches"].empty());

  auto cat = Json::parse(R"({"version": 1, "entries": [
    {"id": "quintic-threefold", "family": "calabi-yau",
     "model": {"ambient": "P4", "degrees": [5]}, "upper": "4", "lower": "5"}]})");
  auto path = temp_file("catalog.json", cat.dump());
  auto bad = run({"validate", "--fixtures", path});
  CHECK(bad.code == 1);
  CHECK(bad.json()["mismatches"].size() == 1);
  CHECK(bad.json()["mismatches"][0]["field"] == "upper");
}

TEST_CASE("output is byte-identical across runs") {
  const std::vector<std::string> args{"host", "--ambient", "Gr(2,6)", "--degrees", "1,1,1,1,1,1,1",
                                      "--general"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("argument errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"host", "--ambient", "P3", "--degrees", "x"}).code == 2);
  CHECK(run({"host", "--ambient", "Q2", "--degrees", "2"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
