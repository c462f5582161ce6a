// SPDX-License-Identifier: Apache-2.0
#include "sigop/packet_io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <unistd.h>

#include "sigop/error.hpp"
#include "sigop/signature_operator.hpp"

namespace sigop {

namespace {

using nlohmann::json;

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(errc::invalid_argument, std::string("packet spec: missing \"") + key + "\"");
  return j.at(key);
}

double number(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number()) fail(errc::invalid_argument, std::string("packet spec: \"") + key + "\" must be a number");
  return v.get<double>();
}

cplx weight(const json& branches, const char* key) {
  if (!branches.contains(key)) return 0.0;
  const json& w = branches.at(key);
  if (w.is_number()) return w.get<double>();
  if (!w.is_object()) fail(errc::invalid_argument, std::string("packet spec: branch \"") + key + "\" must be {re, im}");
  return {number(w, "re", 0.0), number(w, "im", 0.0)};
}

json complex_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

}  // namespace

PacketSpec packet_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(errc::invalid_argument, std::string("packet spec is not valid JSON: ") + e.what());
  }
  PacketSpec p;
  p.mass = number(j, "mass", 1.0);
  const json& b = member(j, "branches");
  p.weight_plus = weight(b, "plus");
  p.weight_minus = weight(b, "minus");
  const json& prof = member(j, "profile");
  const std::string space = prof.value("space", "ell");
  if (space == "ell")
    p.space = ProfileSpace::ell;
  else if (space == "alpha")
    p.space = ProfileSpace::alpha;
  else
    fail(errc::invalid_argument, "packet spec: profile space must be \"ell\" or \"alpha\"");
  if (prof.value("type", "gaussian") != "gaussian") fail(errc::invalid_argument, "packet spec: only gaussian profiles");
  p.center = number(prof, "center", 0.0);
  p.width = number(prof, "width", 1.0);
  if (j.contains("transverse")) {
    p.ky = number(j.at("transverse"), "ky", 0.0);
    p.kz = number(j.at("transverse"), "kz", 0.0);
  }
  validate(p);
  return p;
}

std::string packet_to_json(const PacketSpec& p) {
  const json j = {{"mass", p.mass},
                  {"branches", {{"plus", complex_json(p.weight_plus)}, {"minus", complex_json(p.weight_minus)}}},
                  {"profile",
                   {{"space", p.space == ProfileSpace::ell ? "ell" : "alpha"},
                    {"type", "gaussian"},
                    {"center", p.center},
                    {"width", p.width}}},
                  {"transverse", {{"ky", p.ky}, {"kz", p.kz}}}};
  return j.dump(2);
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string format_csv(const CsvTable& t) {
  std::string out;
  for (const auto& m : t.meta) out += "# " + m + "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + t.columns[i];
  out += "\n";
  for (const auto& row : t.rows) {
    if (row.size() != t.columns.size()) fail(errc::invalid_argument, "csv row width does not match header");
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + fmt(row[i]);
    out += "\n";
  }
  return out;
}

void write_atomic(const std::string& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path dir = target.has_parent_path() ? target.parent_path() : fs::path(".");
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) fail(errc::io, "output directory does not exist: " + dir.string());
  const fs::path tmp = dir / ("." + target.filename().string() + ".tmp" + std::to_string(::getpid()));
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) fail(errc::io, "cannot open " + tmp.string());
    f.write(content.data(), std::streamsize(content.size()));
    f.flush();
    if (!f) {
      fs::remove(tmp, ec);
      fail(errc::io, "write failed: " + tmp.string());
    }
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    fail(errc::io, "cannot rename onto " + path);
  }
}

namespace {

std::vector<double> range(double lo, double hi, std::size_t n) {
  if (n < 2 || !(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi))
    fail(errc::invalid_argument, "range needs lo < hi and at least two points");
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = lo + (hi - lo) * double(i) / double(n - 1);
  return v;
}

void push_matrix(std::vector<double>& row, const Mat2& a) {
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      row.push_back(a(r, c).real());
      row.push_back(a(r, c).imag());
    }
}

void push_vector(std::vector<double>& row, const Spinor2& v) {
  for (int r = 0; r < 2; ++r) {
    row.push_back(v(r).real());
    row.push_back(v(r).imag());
  }
}

}  // namespace

CsvTable spectrum_table(double ell_min, double ell_max, std::size_t points, double mass) {
  if (!(mass > 0.0)) fail(errc::invalid_argument, "mass must be positive");
  CsvTable t;
  t.columns = {"ell", "lambda0", "lambda1"};
  for (const char* name : {"L", "K"})
    for (const char* ij : {"00", "01", "10", "11"})
      for (const char* part : {"re", "im"}) t.columns.push_back(std::string(name) + ij + part);
  for (const char* name : {"kernel", "range"})
    for (const char* i : {"0", "1"})
      for (const char* part : {"re", "im"}) t.columns.push_back(std::string(name) + i + part);
  for (double ell : range(ell_min, ell_max, points)) {
    std::vector<double> row{ell, 0.0, ell / (std::numbers::pi * mass)};
    const Projectors p = projectors(ell);
    push_matrix(row, p.L);
    push_matrix(row, p.K);
    push_vector(row, kernel_vector(ell));
    push_vector(row, range_vector(ell));
    t.rows.push_back(std::move(row));
  }
  return t;
}

CsvTable thermal_table(double beta_temp, double ell_min, double ell_max, std::size_t points) {
  CsvTable t;
  t.columns = {"ell", "weight_range", "weight_kernel"};
  for (double ell : range(ell_min, ell_max, points)) {
    const ThermalWeights w = thermal_weights(beta_temp, ell);
    t.rows.push_back({ell, w.range, w.kernel});
  }
  return t;
}

CsvTable amplitude_table(const ShellAmplitude& g) {
  CsvTable t;
  t.columns = {"s", "alpha", "re", "im"};
  for (int s : {1, -1})
    for (std::size_t j = 0; j < g.grid.n; ++j)
      t.rows.push_back({double(s), g.grid.alpha(j), g.branch(s)[j].real(), g.branch(s)[j].imag()});
  return t;
}

CsvTable rapidity_spectrum_table(const RapiditySpectrum& gh) {
  CsvTable t;
  t.columns = {"ell", "plus_re", "plus_im", "minus_re", "minus_im"};
  for (std::size_t i = 0; i < gh.size(); ++i)
    t.rows.push_back({gh.ell(i), gh.plus[i].real(), gh.plus[i].imag(), gh.minus[i].real(), gh.minus[i].imag()});
  return t;
}

CsvTable reconstruction_table(const ShellAmplitude& g, const std::vector<double>& times, double x0, double dx,
                              std::size_t count) {
  if (times.empty() || count == 0 || !(dx > 0.0)) fail(errc::invalid_argument, "empty reconstruction grid");
  CsvTable t;
  t.columns = {"t", "x", "psi0_re", "psi0_im", "psi1_re", "psi1_im"};
  for (double time : times) {
    const SpinorSamples line = reconstruct_line(g, time, x0, dx, count);
    for (std::size_t j = 0; j < line.size(); ++j) {
      const Spinor2& v = line.values[j];
      t.rows.push_back({time, line.x(j), v(0).real(), v(0).imag(), v(1).real(), v(1).imag()});
    }
  }
  return t;
}

CsvTable decay_table(const DecayReport& r) {
  CsvTable t;
  t.columns = {"t", "sup_norm", "weighted"};
  for (std::size_t i = 0; i < r.times.size(); ++i) t.rows.push_back({r.times[i], r.sup_norm[i], r.weighted[i]});
  return t;
}

CsvTable rayleigh_table(const std::vector<RayleighEntry>& entries) {
  CsvTable t;
  t.columns = {"shift", "norm2", "pairing_re", "pairing_im", "quotient"};
  for (const auto& e : entries) t.rows.push_back({e.shift, e.norm2, e.pairing.real(), e.pairing.imag(), e.quotient});
  return t;
}

std::string wedge_result_json(const WedgeResult& r) {
  const json j = {{"value", complex_json(r.value)},
                  {"tail_bound", r.tail_bound},
                  {"nodes", r.nodes},
                  {"T_max", r.t_max},
                  {"X_max", r.x_max}};
  return j.dump(2);
}

std::string crosscheck_json(const CrosscheckReport& r) {
  const json j = {{"wedge", complex_json(r.wedge)},
                  {"kernel", complex_json(r.kernel)},
                  {"spectral", complex_json(r.spectral)},
                  {"tail_bound", r.tail_bound},
                  {"ladder_error", r.ladder_error},
                  {"deviation", {{"wedge_kernel", r.dev_ab}, {"wedge_spectral", r.dev_ac}, {"kernel_spectral", r.dev_bc}}},
                  {"scale", r.scale},
                  {"pass", r.pass}};
  return j.dump(2);
}

}  // namespace sigop
