// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "helpers.hpp"
#include "sigop/error.hpp"
#include "sigop/packet_io.hpp"
#include "sigop/verify_suite.hpp"

using namespace sigop;
using namespace sigop::test;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("sigop_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

}  // namespace

TEST_CASE("packet JSON round trip") {
  const char* text = R"({"mass": 1.5,
    "branches": {"plus": {"re": 1, "im": 0.5}, "minus": -0.25},
    "profile": {"space": "alpha", "type": "gaussian", "center": 0.3, "width": 0.7},
    "transverse": {"ky": 0.1, "kz": -0.2}})";
  const PacketSpec p = packet_from_json(text);
  CHECK(p.mass == 1.5);
  CHECK(p.weight_plus == cplx(1.0, 0.5));
  CHECK(p.weight_minus == cplx(-0.25, 0.0));
  CHECK(p.space == ProfileSpace::alpha);
  CHECK(p.center == 0.3);
  CHECK(p.width == 0.7);
  CHECK(p.ky == 0.1);
  CHECK(p.kz == -0.2);
  const PacketSpec q = packet_from_json(packet_to_json(p));
  CHECK(q.mass == p.mass);
  CHECK(q.weight_plus == p.weight_plus);
  CHECK(q.weight_minus == p.weight_minus);
  CHECK(q.space == p.space);
  CHECK(q.center == p.center);
  CHECK(q.width == p.width);
  CHECK(q.ky == p.ky);
  CHECK(q.kz == p.kz);
}

TEST_CASE("packet JSON defaults and errors") {
  const PacketSpec p = packet_from_json(R"({"branches": {"plus": 1}, "profile": {}})");
  CHECK(p.mass == 1.0);
  CHECK(p.space == ProfileSpace::ell);
  CHECK(p.width == 1.0);
  for (const char* bad : {"not json", R"({"profile": {}})", R"({"branches": {"plus": 1}})",
                          R"({"branches": {"plus": "x"}, "profile": {}})",
                          R"({"branches": {"plus": 1}, "profile": {"space": "x"}})",
                          R"({"branches": {"plus": 1}, "profile": {"type": "lorentzian"}})",
                          R"({"branches": {"plus": 1}, "profile": {"width": -1}})",
                          R"({"branches": {}, "profile": {}})", R"({"mass": 0, "branches": {"plus": 1}, "profile": {}})"}) {
    CAPTURE(bad);
    try {
      packet_from_json(bad);
      FAIL("accepted");
    } catch (const error& e) {
      CHECK(e.code() == errc::invalid_argument);
    }
  }
}

TEST_CASE("FNV-1a reference values") {
  CHECK(fnv1a("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cull);
  CHECK(fnv1a("foobar") == 0x85944171f73967e8ull);
}

TEST_CASE("CSV formatting") {
  CsvTable t;
  t.meta = {"sigop test"};
  t.columns = {"a", "b"};
  t.rows = {{0.1, -0.0}, {1e-300, 2.0}};
  const std::string s = format_csv(t);
  CHECK(s == "# sigop test\na,b\n0.10000000000000001,0\n1e-300,2\n");
  t.rows.push_back({1.0});
  CHECK_THROWS_AS(format_csv(t), error);
}

TEST_CASE("atomic writes") {
  TempDir dir;
  const fs::path target = dir.path / "out.csv";
  write_atomic(target.string(), "first\n");
  CHECK(slurp(target) == "first\n");
  write_atomic(target.string(), "second\n");
  CHECK(slurp(target) == "second\n");
  std::size_t entries = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir.path)) ++entries;
  CHECK(entries == 1);
  try {
    write_atomic((dir.path / "missing" / "x.csv").string(), "x");
    FAIL("missing directory accepted");
  } catch (const error& e) {
    CHECK(e.code() == errc::io);
  }
}

TEST_CASE("spectrum table") {
  const CsvTable t = spectrum_table(-5.0, 5.0, 1001, 1.0);
  CHECK(t.rows.size() == 1001);
  CHECK(t.columns.size() == 27);
  CHECK(t.columns[3] == "L00re");
  CHECK(t.columns.back() == "range1im");
  const auto& mid = t.rows[500];
  CHECK(mid[0] == 0.0);
  CHECK(mid[2] == 0.0);
  CHECK(mid[3] == doctest::Approx(0.5));
  CHECK_THROWS_AS(spectrum_table(1.0, -1.0, 10, 1.0), error);
  CHECK_THROWS_AS(spectrum_table(-1.0, 1.0, 1, 1.0), error);
  CHECK_THROWS_AS(spectrum_table(-1.0, 1.0, 10, 0.0), error);
}

TEST_CASE("other tables") {
  const CsvTable th = thermal_table(2.0 * std::numbers::pi, -1.0, 1.0, 5);
  CHECK(th.rows.size() == 5);
  CHECK(th.rows[2][1] == doctest::Approx(0.5));
  const ShellAmplitude g = generate_packet(ell_packet(0.0, 2.0, 1.0, 0.5));
  CHECK(amplitude_table(g).rows.size() == 2 * g.grid.n);
  CHECK(rapidity_spectrum_table(to_rapidity_spectrum(g)).rows.size() == g.grid.n);
  const CsvTable rec = reconstruction_table(g, {0.0, 1.0}, -2.0, 0.5, 9);
  CHECK(rec.rows.size() == 18);
  CHECK(rec.rows[9][0] == 1.0);
  CHECK(rec.rows[9][1] == -2.0);
  CHECK_THROWS_AS(reconstruction_table(g, {}, 0.0, 1.0, 3), error);
}

TEST_CASE("crosscheck report JSON") {
  CrosscheckReport r;
  r.wedge = cplx(1.0, 2.0);
  r.pass = true;
  const auto j = nlohmann::json::parse(crosscheck_json(r));
  CHECK(j["wedge"]["im"] == 2.0);
  CHECK(j["pass"] == true);
  CHECK(j["deviation"].contains("kernel_spectral"));
}

TEST_CASE("verification suite plumbing") {
  CHECK(criterion_count() == 12);
  const Criterion c = run_criterion(5);
  CHECK(c.passed());
  CHECK(c.worst_ratio() < 1.0);
  SuiteOptions strict;
  strict.tolerance = 0.0;
  const Criterion s = run_criterion(1, strict);
  CHECK_FALSE(s.passed());
  SuiteOptions some;
  some.only = {10, 11};
  const auto list = run_suite(some);
  REQUIRE(list.size() == 2);
  CHECK(list[0].id == 10);
  const auto j = nlohmann::json::parse(suite_report_json(list));
  CHECK(j.is_object());
  CHECK_THROWS_AS(run_criterion(13), error);
  // identical reports for identical options
  CHECK(suite_report_json(run_suite(some)) == suite_report_json(list));
}
