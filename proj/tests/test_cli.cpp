#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <sstream>

#include "cli.hpp"

using json = nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = buffon::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream l(line);
    std::string cell;
    while (std::getline(l, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("buffon_cli_test_" + name);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("favard prints one decreasing row per level") {
    Run r = run({"favard", "--grid", "64"});
    REQUIRE(r.code == 0);
    auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 7);
    CHECK(rows[0] == std::vector<std::string>{"N", "fav_estimate", "error_indicator"});
    double prev = 1e9;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      CHECK(std::stoi(rows[i][0]) == static_cast<int>(i));
      const double v = std::stod(rows[i][1]);
      CHECK(v < prev);
      prev = v;
    }
  }

  TEST_CASE("favard at level zero is the unit square") {
    Run r = run({"favard", "--param", "N_min=0", "--param", "N_max=0", "--grid", "512"});
    REQUIRE(r.code == 0);
    auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(std::stod(rows[1][1]) == doctest::Approx(4 / std::numbers::pi).epsilon(1e-5));
  }

  TEST_CASE("invalid digit sets exit with code 2") {
    Run r = run({"favard", "--param", "system={\"A\":[1,2],\"B\":[0,1]}"});
    CHECK(r.code == 2);
    CHECK(r.err.find("digit set must contain 0") != std::string::npos);
    CHECK(r.out.empty());
  }

  TEST_CASE("factor reports the five-digit example") {
    Run r = run({"factor", "--param", "A=[0,3,4,8,9]", "--param", "L=25"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["factor_split"]["bad"] == json::array({1, 0, -1, 0, 1}));
    CHECK(j["factor_split"]["s_A"] == 12);
    CHECK(j["compatible_splits"]["splits"] == json::parse("[[3,4],[4,3],[6,2]]"));
    CHECK(j.contains("parasitic"));
    CHECK(j["parasitic"]["s_values"] == json::array({12}));
  }

  TEST_CASE("factor on the four-corner digits is trivial") {
    Run r = run({"factor", "--param", "A=[0,1]", "--param", "L=4"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["compatible_splits"]["trivial"] == true);
    CHECK_FALSE(j.contains("parasitic"));
  }

  TEST_CASE("verify runs a suite") {
    Run r = run({"verify", "--suite", "intervals"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["suite"] == "intervals");
    CHECK(j["pass"] == true);
    CHECK_FALSE(j["checks"].empty());
  }

  TEST_CASE("usage errors exit with code 2") {
    CHECK(run({"favard", "--bogus"}).code == 2);
    CHECK(run({"favard", "--mode", "fast"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"verify", "--suite", "nope"}).code == 2);
    CHECK(run({"shadow", "--param", "N=2"}).code == 2);  // no direction
    CHECK(run({"favard", "--config", "/nonexistent/config.json"}).code == 2);
  }

  TEST_CASE("output is deterministic") {
    const std::vector<std::string> gamma{"gamma", "--param", "A=[0,3,4,8,9]", "--param", "L=5",
                                         "--param", "eta=0.5", "--param", "m=2", "--seed", "9"};
    Run a = run(gamma), b = run(gamma);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    json j = json::parse(a.out);
    CHECK(j["checks"]["containment"] == true);
    CHECK(j["gamma_measure"].get<double>() >= j["floor"].get<double>());

    Run c = run({"shadow", "--param", "N=2", "--param", "t=[\"1/3\",\"1/2\"]", "--mode", "exact"});
    Run d = run({"shadow", "--param", "N=2", "--param", "t=[\"1/3\",\"1/2\"]", "--mode", "exact"});
    REQUIRE(c.code == 0);
    CHECK(c.out == d.out);
    CHECK(csv_rows(c.out)[0] == std::vector<std::string>{"system_id", "N", "theta_or_t", "shadow_measure"});
  }

  TEST_CASE("--out writes only on success") {
    const auto good = temp_path("good.csv"), bad = temp_path("bad.csv");
    std::filesystem::remove(good);
    std::filesystem::remove(bad);
    Run r = run({"favard", "--param", "N_max=2", "--grid", "32", "--out", good.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(good);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(csv_rows(text.str()).size() == 3);
    Run f = run({"favard", "--param", "grid=4", "--out", bad.string()});
    CHECK(f.code == 2);
    CHECK_FALSE(std::filesystem::exists(bad));
    std::filesystem::remove(good);
  }

  TEST_CASE("oversized levels exit with code 3") {
    Run r = run({"favard", "--param", "N_min=12", "--param", "N_max=12"});
    CHECK(r.code == 3);
    CHECK(r.out.empty());
  }

  TEST_CASE("lamprey sweep and sums") {
    Run r = run({"lamprey", "--param", "sweep=30"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["vanishing"] == 525);
    CHECK(j["l53_rotation"] == 30);
    Run s = run({"lamprey", "--param", "A=[0,3,4,8,9]", "--param", "s=12"});
    REQUIRE(s.code == 0);
    CHECK(json::parse(s.out)["vanishing"] == true);
  }

  TEST_CASE("riesz samples") {
    Run r = run({"riesz", "--param", "A=[0,1]", "--param", "L=4", "--param", "samples=5"});
    REQUIRE(r.code == 0);
    auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == std::vector<std::string>{"xi", "abs_P"});
    CHECK(std::stod(rows[1][1]) == doctest::Approx(1.0));
  }
}
