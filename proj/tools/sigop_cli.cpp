// SPDX-License-Identifier: Apache-2.0
// Command-line front end; talks to the library through the C API only.
#include <CLI11.hpp>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "sigop/sigop.h"

namespace {

using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_check = 1;
constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct api_error : std::runtime_error {
  sigop_status status;
  api_error(sigop_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(sigop_status s, const char* what) {
  if (s != SIGOP_OK) throw api_error(s, std::string(what) + ": " + sigop_last_error());
}

struct PacketDeleter {
  void operator()(sigop_packet* p) const { sigop_packet_free(p); }
};
struct TableDeleter {
  void operator()(sigop_table* t) const { sigop_table_free(t); }
};
struct StringDeleter {
  void operator()(char* s) const { sigop_string_free(s); }
};
using Packet = std::unique_ptr<sigop_packet, PacketDeleter>;
using Table = std::unique_ptr<sigop_table, TableDeleter>;
using CString = std::unique_ptr<char, StringDeleter>;

enum class Kind { number, integer, text, numbers, integers, texts, flag };

struct Flag {
  std::string name;  // config key and flag name without dashes
  Kind kind;
  std::string help;
};

// Raw flag values as typed on the command line; converted once parsing is done.
struct Raw {
  std::string scalar;
  std::vector<std::string> list;
  bool flag = false;
  CLI::Option* option = nullptr;
};

const std::vector<Flag> common_flags{
    {"out", Kind::text, "output directory"},
    {"seed", Kind::integer, "seed for randomized check selection"},
    {"mass", Kind::number, "particle mass"},
    {"alpha-min", Kind::number, "rapidity grid lower end"},
    {"alpha-max", Kind::number, "rapidity grid upper end"},
    {"grid-n", Kind::integer, "rapidity grid size"},
};

const std::map<std::string, std::vector<Flag>> command_flags{
    {"spectrum",
     {{"ell-min", Kind::number, "lower end of the ell range"},
      {"ell-max", Kind::number, "upper end of the ell range"},
      {"points", Kind::integer, "number of ell samples"}}},
    {"thermal",
     {{"beta", Kind::number, "inverse temperature"},
      {"ell-min", Kind::number, "lower end of the ell range"},
      {"ell-max", Kind::number, "upper end of the ell range"},
      {"points", Kind::integer, "number of ell samples"}}},
    {"pair",
     {{"packet", Kind::texts, "packet spec JSON files (two)"},
      {"t-max", Kind::number, "wedge time cutoff"},
      {"x-max", Kind::number, "wedge space cutoff"},
      {"t-panels", Kind::integer, "panels in t"},
      {"y-panels", Kind::integer, "panels along the light cone"},
      {"wedge-points", Kind::integer, "Gauss nodes per panel and direction"},
      {"tolerance", Kind::number, "pairwise relative tolerance"}}},
    {"verify",
     {{"wedge-points", Kind::integer, "Gauss nodes per panel for the crosscheck"},
      {"tolerance", Kind::number, "replace every bound tolerance"},
      {"criteria", Kind::integers, "run only these criteria"},
      {"no-budget", Kind::flag, "do not enforce runtime budgets"}}},
    {"project",
     {{"packet", Kind::texts, "packet spec JSON file"},
      {"kind", Kind::text, "negative|positive|range|kernel|signature|thermal"},
      {"beta", Kind::number, "inverse temperature for kind thermal"}}},
    {"reconstruct",
     {{"packet", Kind::texts, "packet spec JSON file"},
      {"times", Kind::numbers, "time slices"},
      {"x-min", Kind::number, "first x sample"},
      {"dx", Kind::number, "x spacing"},
      {"count", Kind::integer, "samples per slice"}}},
    {"decay",
     {{"packet", Kind::texts, "packet spec JSON file"},
      {"times", Kind::numbers, "time slices"},
      {"power", Kind::integer, "weight exponent p in (1 + t^p)"}}},
    {"mfinite",
     {{"packet", Kind::texts, "packet spec JSON file"},
      {"shifts", Kind::numbers, "spatial translations"}}},
};

const char* const default_decay_packet =
    R"({"mass": 1.0, "branches": {"plus": {"re": 1, "im": 0}, "minus": {"re": 0, "im": 0.5}},
        "profile": {"space": "ell", "type": "gaussian", "center": 0.0, "width": 3.0}})";
const char* const default_scan_packet =
    R"({"mass": 1.0, "branches": {"plus": {"re": 1, "im": 0}, "minus": {"re": 0, "im": 0.5}},
        "profile": {"space": "ell", "type": "gaussian", "center": 0.0, "width": 2.0}})";

double to_number(const std::string& key, const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw usage_error("--" + key + ": not a number: " + s);
  return v;
}

long long to_integer(const std::string& key, const std::string& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw usage_error("--" + key + ": not an integer: " + s);
  return v;
}

json convert(const Flag& f, const Raw& r) {
  switch (f.kind) {
    case Kind::number: return to_number(f.name, r.scalar);
    case Kind::integer: return to_integer(f.name, r.scalar);
    case Kind::text: return r.scalar;
    case Kind::flag: return r.flag;
    case Kind::numbers: {
      json a = json::array();
      for (const auto& s : r.list) a.push_back(to_number(f.name, s));
      return a;
    }
    case Kind::integers: {
      json a = json::array();
      for (const auto& s : r.list) a.push_back(to_integer(f.name, s));
      return a;
    }
    case Kind::texts: return r.list;
  }
  return nullptr;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw usage_error("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Merged run configuration: JSON document first, flags on top.
class Config {
 public:
  Config(std::string command, json doc) : command_(std::move(command)), doc_(std::move(doc)) {}

  const std::string& command() const { return command_; }
  const json& doc() const { return doc_; }

  double number(const std::string& key, double fallback) const {
    if (!doc_.contains(key)) return fallback;
    if (!doc_[key].is_number()) throw usage_error(key + " must be a number");
    return doc_[key].get<double>();
  }
  long long integer(const std::string& key, long long fallback) const {
    if (!doc_.contains(key)) return fallback;
    if (!doc_[key].is_number_integer()) throw usage_error(key + " must be an integer");
    return doc_[key].get<long long>();
  }
  std::size_t count(const std::string& key, long long fallback) const {
    const long long v = integer(key, fallback);
    if (v <= 0) throw usage_error(key + " must be positive");
    return std::size_t(v);
  }
  std::string text(const std::string& key, const std::string& fallback) const {
    if (!doc_.contains(key)) return fallback;
    if (!doc_[key].is_string()) throw usage_error(key + " must be a string");
    return doc_[key].get<std::string>();
  }
  bool flag(const std::string& key) const { return doc_.contains(key) && doc_[key].is_boolean() && doc_[key].get<bool>(); }
  std::vector<double> numbers(const std::string& key, std::vector<double> fallback) const {
    if (!doc_.contains(key)) return fallback;
    const json& v = doc_[key];
    if (v.is_number()) return {v.get<double>()};
    if (!v.is_array()) throw usage_error(key + " must be a list of numbers");
    std::vector<double> out;
    for (const auto& e : v) {
      if (!e.is_number()) throw usage_error(key + " must be a list of numbers");
      out.push_back(e.get<double>());
    }
    return out;
  }
  std::vector<std::string> texts(const std::string& key) const {
    if (!doc_.contains(key)) return {};
    const json& v = doc_[key];
    if (v.is_string()) return {v.get<std::string>()};
    if (!v.is_array()) throw usage_error(key + " must be a list of strings");
    std::vector<std::string> out;
    for (const auto& e : v) {
      if (!e.is_string()) throw usage_error(key + " must be a list of strings");
      out.push_back(e.get<std::string>());
    }
    return out;
  }

  sigop_grid grid() const {
    sigop_grid g;
    sigop_grid_default(&g);
    g.alpha_min = number("alpha-min", g.alpha_min);
    g.alpha_max = number("alpha-max", g.alpha_max);
    g.n = count("grid-n", static_cast<long long>(g.n));
    return g;
  }
  double mass() const {
    const double m = number("mass", 1.0);
    if (!(m > 0.0)) throw usage_error("mass must be positive");
    return m;
  }
  std::string out_path(const std::string& file) const {
    return (std::filesystem::path(text("out", ".")) / file).string();
  }

  // numbers hash by value, so 2 and 2.0 agree
  static json canonical(const json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_array() || j.is_object()) {
      json out = j;
      for (auto& v : out) v = canonical(v);
      return out;
    }
    return j;
  }

  std::string hash() const {
    json all = canonical(doc_);
    all["command"] = command_;
    all.erase("out");
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, sigop_hash(all.dump().c_str()));
    return buf;
  }

  std::vector<std::string> meta() const {
    const sigop_grid g = grid();
    std::ostringstream grid_line;
    grid_line.precision(17);
    grid_line << "grid alpha-min=" << g.alpha_min << " alpha-max=" << g.alpha_max << " n=" << g.n
              << " mass=" << mass();
    return {std::string("sigop ") + sigop_version(), "command " + command_, "config-hash " + hash(), grid_line.str()};
  }

  json meta_json() const {
    const sigop_grid g = grid();
    return {{"tool", std::string("sigop ") + sigop_version()},
            {"command", command_},
            {"config_hash", hash()},
            {"grid", {{"alpha_min", g.alpha_min}, {"alpha_max", g.alpha_max}, {"n", g.n}, {"mass", mass()}}}};
  }

  // Paths must resolve before any computation starts.
  void check_paths() const {
    const std::string out = text("out", ".");
    if (!std::filesystem::is_directory(out)) throw usage_error("output directory does not exist: " + out);
    for (const auto& p : texts("packet"))
      if (!std::filesystem::is_regular_file(p)) throw usage_error("packet spec not found: " + p);
  }

 private:
  std::string command_;
  json doc_;
};

std::string with_mass(const std::string& spec_text, const Config& c) {
  json j;
  try {
    j = json::parse(spec_text);
  } catch (const json::parse_error& e) {
    throw usage_error(std::string("packet spec is not valid JSON: ") + e.what());
  }
  if (c.doc().contains("mass") && j.is_object()) j["mass"] = c.mass();
  return j.dump();
}

Packet load_packet(const Config& c, const std::string& path, const char* fallback_json, int fallback_index) {
  const sigop_grid g = c.grid();
  sigop_packet* p = nullptr;
  if (!path.empty())
    check(sigop_packet_from_json(with_mass(read_file(path), c).c_str(), &g, &p), path.c_str());
  else if (fallback_json)
    check(sigop_packet_from_json(with_mass(fallback_json, c).c_str(), &g, &p), "default packet");
  else
    check(sigop_packet_default(fallback_index, &g, &p), "default packet");
  return Packet(p);
}

Packet single_packet(const Config& c, const char* fallback_json) {
  const auto paths = c.texts("packet");
  if (paths.size() > 1) throw usage_error(c.command() + " takes one packet");
  return load_packet(c, paths.empty() ? "" : paths[0], fallback_json, 0);
}

void emit(const Config& c, sigop_table* t, const std::string& file, const std::vector<std::string>& extra = {}) {
  auto lines = c.meta();
  lines.insert(lines.end(), extra.begin(), extra.end());
  for (const auto& l : lines) check(sigop_table_add_meta(t, l.c_str()), "metadata");
  check(sigop_table_write_csv(t, c.out_path(file).c_str()), "write");
}

void emit_json(const Config& c, json body, const std::string& file) {
  body["meta"] = c.meta_json();
  check(sigop_write_file(c.out_path(file).c_str(), (body.dump(2) + "\n").c_str()), "write");
}

json complex_json(sigop_complex z) { return {{"re", z.re}, {"im", z.im}}; }

int cmd_spectrum(const Config& c) {
  sigop_table* t = nullptr;
  check(sigop_table_spectrum(c.number("ell-min", -5.0), c.number("ell-max", 5.0), c.count("points", 1001), c.mass(), &t),
        "spectrum");
  Table table(t);
  emit(c, t, "spectrum.csv");
  return exit_ok;
}

int cmd_thermal(const Config& c) {
  const double beta = c.number("beta", 2.0 * std::numbers::pi);
  if (!(beta > 0.0)) throw usage_error("beta must be positive");
  sigop_table* t = nullptr;
  check(sigop_table_thermal(beta, c.number("ell-min", -10.0), c.number("ell-max", 10.0), c.count("points", 2001), &t),
        "thermal");
  Table table(t);
  std::ostringstream b;
  b.precision(17);
  b << "beta " << beta;
  std::vector<std::string> extra{b.str()};
  if (std::abs(beta - 2.0 * std::numbers::pi) <= 1e-12) extra.push_back("label unruh");
  emit(c, t, "thermal.csv", extra);
  return exit_ok;
}

int cmd_pair(const Config& c) {
  const auto paths = c.texts("packet");
  if (paths.size() > 2) throw usage_error("pair takes at most two packets");
  Packet a = load_packet(c, paths.size() > 0 ? paths[0] : "", nullptr, 0);
  Packet b = load_packet(c, paths.size() > 1 ? paths[1] : "", nullptr, 1);
  sigop_wedge_grid w;
  sigop_wedge_grid_default(&w);
  w.t_max = c.number("t-max", w.t_max);
  w.x_max = c.number("x-max", w.x_max);
  w.t_panels = c.count("t-panels", static_cast<long long>(w.t_panels));
  w.y_panels = c.count("y-panels", static_cast<long long>(w.y_panels));
  w.points = c.count("wedge-points", static_cast<long long>(w.points));
  sigop_crosscheck r;
  check(sigop_crosscheck_run(a.get(), b.get(), &w, c.number("tolerance", 1e-3), &r), "crosscheck");
  json body = {{"wedge", complex_json(r.wedge)},
               {"kernel", complex_json(r.kernel)},
               {"spectral", complex_json(r.spectral)},
               {"tail_bound", r.tail_bound},
               {"ladder_error", r.ladder_error},
               {"deviation",
                {{"wedge_kernel", r.dev_wedge_kernel},
                 {"wedge_spectral", r.dev_wedge_spectral},
                 {"kernel_spectral", r.dev_kernel_spectral}}},
               {"wedge_grid",
                {{"T_max", w.t_max}, {"X_max", w.x_max}, {"t_panels", w.t_panels}, {"y_panels", w.y_panels},
                 {"points", w.points}}},
               {"pass", r.pass != 0}};
  emit_json(c, body, "pair.json");
  std::cout << "pair: " << (r.pass ? "pass" : "FAIL") << " (max deviation "
            << std::max({r.dev_wedge_kernel, r.dev_wedge_spectral, r.dev_kernel_spectral}) << ")\n";
  return r.pass ? exit_ok : exit_check;
}

int cmd_verify(const Config& c) {
  sigop_verify_options o;
  sigop_verify_options_default(&o);
  o.wedge_points = c.count("wedge-points", static_cast<long long>(o.wedge_points));
  if (c.doc().contains("tolerance")) {
    o.has_tolerance = 1;
    o.tolerance = c.number("tolerance", 0.0);
    if (o.tolerance < 0.0) throw usage_error("tolerance must be non-negative");
  }
  std::vector<int> ids;
  for (double v : c.numbers("criteria", {})) ids.push_back(int(v));
  o.criteria = ids.empty() ? nullptr : ids.data();
  o.criteria_count = ids.size();
  o.seed = static_cast<uint64_t>(c.integer("seed", static_cast<long long>(o.seed)));
  o.enforce_budget = c.flag("no-budget") ? 0 : 1;
  char* raw = nullptr;
  int passed = 0;
  check(sigop_verify_run(&o, &raw, &passed), "verify");
  CString report(raw);
  json body = json::parse(report.get());
  for (const auto& cr : body["criteria"])
    std::cout << (cr["pass"].get<bool>() ? "PASS " : "FAIL ") << cr["id"].get<int>() << " "
              << cr["title"].get<std::string>() << "\n";
  emit_json(c, body, "verify.json");
  return passed ? exit_ok : exit_check;
}

sigop_projection projection_kind(const std::string& k) {
  static const std::map<std::string, sigop_projection> kinds{
      {"negative", SIGOP_PROJECT_NEGATIVE}, {"positive", SIGOP_PROJECT_POSITIVE},
      {"range", SIGOP_PROJECT_RANGE},       {"kernel", SIGOP_PROJECT_KERNEL},
      {"signature", SIGOP_PROJECT_SIGNATURE}, {"thermal", SIGOP_PROJECT_THERMAL}};
  const auto it = kinds.find(k);
  if (it == kinds.end()) throw usage_error("unknown projection kind: " + k);
  return it->second;
}

int cmd_project(const Config& c) {
  Packet p = single_packet(c, nullptr);
  const std::string kind = c.text("kind", "negative");
  sigop_table* t = nullptr;
  check(sigop_table_projection(p.get(), projection_kind(kind), c.number("beta", 2.0 * std::numbers::pi), &t), "project");
  Table table(t);
  emit(c, t, "project.csv", {"kind " + kind});
  return exit_ok;
}

int cmd_reconstruct(const Config& c) {
  Packet p = single_packet(c, nullptr);
  const auto times = c.numbers("times", {0.0});
  sigop_table* t = nullptr;
  check(sigop_table_reconstruction(p.get(), times.data(), times.size(), c.number("x-min", -10.0), c.number("dx", 0.01),
                                   c.count("count", 2001), &t),
        "reconstruct");
  Table table(t);
  emit(c, t, "reconstruct.csv");
  return exit_ok;
}

int cmd_decay(const Config& c) {
  Packet p = single_packet(c, default_decay_packet);
  const auto times = c.numbers("times", {5.0, 10.0, 20.0, 40.0});
  int down = 0;
  sigop_table* t = nullptr;
  check(sigop_table_decay(p.get(), times.data(), times.size(), int(c.integer("power", 2)), &down, &t), "decay");
  Table table(t);
  emit(c, t, "decay.csv", {std::string("non-increasing ") + (down ? "true" : "false")});
  return exit_ok;
}

int cmd_mfinite(const Config& c) {
  Packet p = single_packet(c, default_scan_packet);
  const auto shifts = c.numbers("shifts", {0.0, 2.0, 4.0, 8.0, 16.0});
  int up = 0;
  sigop_table* t = nullptr;
  check(sigop_table_rayleigh(p.get(), shifts.data(), shifts.size(), &up, &t), "mfinite");
  Table table(t);
  emit(c, t, "mfinite.csv", {std::string("strictly-increasing ") + (up ? "true" : "false")});
  return exit_ok;
}

int dispatch(const Config& c) {
  static const std::map<std::string, int (*)(const Config&)> table{
      {"spectrum", cmd_spectrum}, {"thermal", cmd_thermal},         {"pair", cmd_pair},   {"verify", cmd_verify},
      {"project", cmd_project},   {"reconstruct", cmd_reconstruct}, {"decay", cmd_decay}, {"mfinite", cmd_mfinite}};
  const auto it = table.find(c.command());
  if (it == table.end()) throw usage_error("unknown command: " + c.command());
  c.check_paths();
  return it->second(c);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fermionic signature operator of the Rindler wedge"};
  app.set_version_flag("--version", std::string("sigop ") + sigop_version());
  std::string config_path;
  app.add_option("--config", config_path, "JSON run configuration; flags override its fields");
  app.require_subcommand(0, 1);

  std::map<std::string, std::map<std::string, Raw>> raw;
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, flags] : command_flags) {
    CLI::App* sub = app.add_subcommand(name);
    subs[name] = sub;
    std::vector<Flag> all = common_flags;
    all.insert(all.end(), flags.begin(), flags.end());
    for (const Flag& f : all) {
      Raw& r = raw[name][f.name];
      const std::string opt = "--" + f.name;
      switch (f.kind) {
        case Kind::flag: r.option = sub->add_flag(opt, r.flag, f.help); break;
        case Kind::numbers:
        case Kind::integers:
        case Kind::texts: r.option = sub->add_option(opt, r.list, f.help)->delimiter(','); break;
        default: r.option = sub->add_option(opt, r.scalar, f.help); break;
      }
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    json doc = json::object();
    if (!config_path.empty()) {
      try {
        doc = json::parse(read_file(config_path));
      } catch (const json::parse_error& e) {
        throw usage_error(std::string("config is not valid JSON: ") + e.what());
      }
      if (!doc.is_object()) throw usage_error("config must be a JSON object");
    }
    std::string command;
    for (const auto& [name, sub] : subs)
      if (sub->parsed()) command = name;
    if (command.empty()) {
      if (!doc.contains("command") || !doc["command"].is_string()) throw usage_error("no command given");
      command = doc["command"].get<std::string>();
      if (!command_flags.count(command)) throw usage_error("unknown command: " + command);
    } else if (doc.contains("command") && doc["command"] != command) {
      throw usage_error("config command does not match " + command);
    }
    doc.erase("command");

    std::vector<Flag> all = common_flags;
    const auto& own = command_flags.at(command);
    all.insert(all.end(), own.begin(), own.end());
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      const bool known = std::any_of(all.begin(), all.end(), [&](const Flag& f) { return f.name == it.key(); });
      if (!known) throw usage_error("unknown config field for " + command + ": " + it.key());
    }
    if (subs[command]->parsed())
      for (const Flag& f : all) {
        const Raw& r = raw[command][f.name];
        if (r.option && r.option->count() > 0) doc[f.name] = convert(f, r);
      }
    return dispatch(Config(command, doc));
  } catch (const usage_error& e) {
    std::cerr << "sigop: " << e.what() << "\n";
    return exit_usage;
  } catch (const api_error& e) {
    std::cerr << "sigop: " << e.what() << "\n";
    const bool usage = e.status == SIGOP_E_INVALID_ARGUMENT || e.status == SIGOP_E_OUT_OF_RANGE ||
                       e.status == SIGOP_E_PROFILE_TOO_WIDE || e.status == SIGOP_E_IO;
    return usage ? exit_usage : exit_check;
  } catch (const std::exception& e) {
    std::cerr << "sigop: " << e.what() << "\n";
    return exit_check;
  }
}
