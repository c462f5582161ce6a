// SPDX-License-Identifier: Apache-2.0
#include "sigop/sigop.h"

#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <string>

#include "sigop/error.hpp"
#include "sigop/minkowski_embedding.hpp"
#include "sigop/oracle_harness.hpp"
#include "sigop/packet_io.hpp"
#include "sigop/signature_operator.hpp"
#include "sigop/verify_suite.hpp"

struct sigop_packet {
  sigop::PacketSpec spec;
  sigop::ShellAmplitude amplitude;
};

struct sigop_table {
  sigop::CsvTable table;
};

namespace {

thread_local std::string last_error;

sigop_status set_error(sigop_status s, const char* what) {
  last_error = what;
  return s;
}

template <class F>
sigop_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return SIGOP_OK;
  } catch (const sigop::error& e) {
    return set_error(static_cast<sigop_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(SIGOP_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(SIGOP_E_INTERNAL, e.what());
  }
}

void require(const void* p, const char* what) {
  if (!p) sigop::fail(sigop::errc::invalid_argument, std::string(what) + " is null");
}

sigop::RapidityGrid to_grid(const sigop_grid* g) {
  sigop::RapidityGrid grid;
  if (g) {
    grid.alpha_min = g->alpha_min;
    grid.alpha_max = g->alpha_max;
    grid.n = g->n;
  }
  sigop::validate(grid);
  return grid;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sigop_packet* make_packet(const sigop::PacketSpec& spec, const sigop::RapidityGrid& grid) {
  auto* p = new sigop_packet{spec, sigop::generate_packet(spec, grid)};
  return p;
}

sigop_complex to_c(sigop::cplx z) { return {z.real(), z.imag()}; }

sigop_table* wrap(sigop::CsvTable t) { return new sigop_table{std::move(t)}; }

}  // namespace

extern "C" {

const char* sigop_version(void) { return SIGOP_VERSION; }

const char* sigop_last_error(void) { return last_error.c_str(); }

const char* sigop_status_name(sigop_status s) {
  switch (s) {
    case SIGOP_OK: return "ok";
    case SIGOP_E_INVALID_ARGUMENT: return "invalid argument";
    case SIGOP_E_GRID_MISMATCH: return "grid mismatch";
    case SIGOP_E_DOMAIN: return "domain violation";
    case SIGOP_E_SINGULAR: return "singular";
    case SIGOP_E_CONVERGENCE: return "convergence failure";
    case SIGOP_E_TAIL_BOUND: return "tail bound exceeded";
    case SIGOP_E_PROFILE_TOO_WIDE: return "profile too wide";
    case SIGOP_E_OUT_OF_RANGE: return "out of range";
    case SIGOP_E_NOT_EMBEDDED: return "not embedded";
    case SIGOP_E_IO: return "i/o error";
    case SIGOP_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void sigop_string_free(char* s) { std::free(s); }

void sigop_grid_default(sigop_grid* grid) {
  if (!grid) return;
  const sigop::RapidityGrid g;
  *grid = {g.alpha_min, g.alpha_max, g.n};
}

void sigop_wedge_grid_default(sigop_wedge_grid* grid) {
  if (!grid) return;
  const sigop::WedgeQuadratureGrid g;
  *grid = {g.t_max, g.x_max, g.t_panels, g.y_panels, g.points, g.tail_tolerance};
}

void sigop_verify_options_default(sigop_verify_options* options) {
  if (!options) return;
  const sigop::SuiteOptions o;
  *options = {o.wedge_points, 0, 0.0, nullptr, 0, o.seed, o.enforce_budget ? 1 : 0};
}

sigop_status sigop_packet_from_json(const char* json, const sigop_grid* grid, sigop_packet** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = make_packet(sigop::packet_from_json(json), to_grid(grid));
  });
}

sigop_status sigop_packet_default(int index, const sigop_grid* grid, sigop_packet** out) {
  return guarded([&] {
    require(out, "out");
    const auto specs = sigop::default_crosscheck_packets();
    if (index < 0 || std::size_t(index) >= specs.size())
      sigop::fail(sigop::errc::out_of_range, "default packet index out of range");
    *out = make_packet(specs[std::size_t(index)], to_grid(grid));
  });
}

void sigop_packet_free(sigop_packet* packet) { delete packet; }

sigop_status sigop_packet_spec_json(const sigop_packet* packet, char** out) {
  return guarded([&] {
    require(packet, "packet");
    require(out, "out");
    *out = dup(sigop::packet_to_json(packet->spec));
  });
}

sigop_status sigop_packet_norm2(const sigop_packet* packet, double* out) {
  return guarded([&] {
    require(packet, "packet");
    require(out, "out");
    *out = sigop::hilbert_norm2(packet->amplitude);
  });
}

sigop_status sigop_packet_translate(const sigop_packet* packet, double shift, sigop_packet** out) {
  return guarded([&] {
    require(packet, "packet");
    require(out, "out");
    *out = new sigop_packet{packet->spec, sigop::translate(packet->amplitude, shift)};
  });
}

sigop_status sigop_packet_cpt(const sigop_packet* packet, sigop_packet** out) {
  return guarded([&] {
    require(packet, "packet");
    require(out, "out");
    *out = new sigop_packet{packet->spec, sigop::cpt_transform(packet->amplitude)};
  });
}

sigop_status sigop_pairing(const sigop_packet* a, const sigop_packet* b, sigop_complex* out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = to_c(sigop::spectral_pairing(a->amplitude, b->amplitude));
  });
}

sigop_status sigop_crosscheck_run(const sigop_packet* a, const sigop_packet* b, const sigop_wedge_grid* grid,
                                  double tolerance, sigop_crosscheck* out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    sigop::CrosscheckOptions opt;
    if (grid) {
      opt.wedge.t_max = grid->t_max;
      opt.wedge.x_max = grid->x_max;
      opt.wedge.t_panels = grid->t_panels;
      opt.wedge.y_panels = grid->y_panels;
      opt.wedge.points = grid->points;
      opt.wedge.tail_tolerance = grid->tail_tolerance;
    }
    if (!(tolerance > 0.0)) sigop::fail(sigop::errc::invalid_argument, "tolerance must be positive");
    opt.tolerance = tolerance;
    const sigop::CrosscheckReport r = sigop::pairing_crosscheck(a->amplitude, b->amplitude, opt);
    *out = {to_c(r.wedge), to_c(r.kernel), to_c(r.spectral), r.tail_bound, r.ladder_error,
            r.dev_ab,      r.dev_ac,       r.dev_bc,         r.pass ? 1 : 0};
  });
}

sigop_status sigop_table_spectrum(double ell_min, double ell_max, size_t points, double mass, sigop_table** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(sigop::spectrum_table(ell_min, ell_max, points, mass));
  });
}

sigop_status sigop_table_thermal(double beta, double ell_min, double ell_max, size_t points, sigop_table** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(sigop::thermal_table(beta, ell_min, ell_max, points));
  });
}

sigop_status sigop_table_amplitude(const sigop_packet* packet, sigop_table** out) {
  return guarded([&] {
    require(packet, "packet");
    require(out, "out");
    *out = wrap(sigop::amplitude_table(packet->amplitude));
  });
}

sigop_status sigop_table_projection(const sigop_packet* packet, sigop_projection kind, double beta,
                                    sigop_table** out) {
  return guarded([&] {
    require(packet, "packet");
    require(out, "out");
    const sigop::RapiditySpectrum gh = sigop::to_rapidity_spectrum(packet->amplitude);
    sigop::RapiditySpectrum r;
    switch (kind) {
      case SIGOP_PROJECT_NEGATIVE: r = sigop::negative_projection(gh); break;
      case SIGOP_PROJECT_POSITIVE: r = sigop::positive_projection(gh); break;
      case SIGOP_PROJECT_RANGE: r = sigop::apply_L(gh); break;
      case SIGOP_PROJECT_KERNEL: r = sigop::apply_K(gh); break;
      case SIGOP_PROJECT_SIGNATURE: r = sigop::apply_relative_S(gh); break;
      case SIGOP_PROJECT_THERMAL: r = sigop::thermal_weight(beta, gh); break;
      default: sigop::fail(sigop::errc::invalid_argument, "unknown projection kind");
    }
    *out = wrap(sigop::rapidity_spectrum_table(r));
  });
}

sigop_status sigop_table_reconstruction(const sigop_packet* packet, const double* times, size_t ntimes, double x0,
                                        double dx, size_t count, sigop_table** out) {
  return guarded([&] {
    require(packet, "packet");
    require(times, "times");
    require(out, "out");
    *out = wrap(sigop::reconstruction_table(packet->amplitude, {times, times + ntimes}, x0, dx, count));
  });
}

sigop_status sigop_table_decay(const sigop_packet* packet, const double* times, size_t ntimes, int power,
                               int* non_increasing, sigop_table** out) {
  return guarded([&] {
    require(packet, "packet");
    require(times, "times");
    require(out, "out");
    const sigop::DecayReport r = sigop::null_decay_check(packet->amplitude, {times, times + ntimes}, power);
    if (non_increasing) *non_increasing = r.non_increasing ? 1 : 0;
    *out = wrap(sigop::decay_table(r));
  });
}

sigop_status sigop_table_rayleigh(const sigop_packet* packet, const double* shifts, size_t nshifts,
                                  int* strictly_increasing, sigop_table** out) {
  return guarded([&] {
    require(packet, "packet");
    require(shifts, "shifts");
    require(out, "out");
    const auto scan = sigop::rayleigh_quotient_scan(packet->spec, {shifts, shifts + nshifts}, packet->amplitude.grid);
    if (strictly_increasing) {
      bool up = true;
      for (std::size_t i = 1; i < scan.size(); ++i) up = up && scan[i].quotient > scan[i - 1].quotient;
      *strictly_increasing = up ? 1 : 0;
    }
    *out = wrap(sigop::rayleigh_table(scan));
  });
}

void sigop_table_free(sigop_table* table) { delete table; }

sigop_status sigop_table_shape(const sigop_table* table, size_t* rows, size_t* cols) {
  return guarded([&] {
    require(table, "table");
    if (rows) *rows = table->table.rows.size();
    if (cols) *cols = table->table.columns.size();
  });
}

sigop_status sigop_table_value(const sigop_table* table, size_t row, size_t col, double* out) {
  return guarded([&] {
    require(table, "table");
    require(out, "out");
    if (row >= table->table.rows.size() || col >= table->table.columns.size())
      sigop::fail(sigop::errc::out_of_range, "table index out of range");
    *out = table->table.rows[row][col];
  });
}

sigop_status sigop_table_column(const sigop_table* table, size_t col, const char** name) {
  return guarded([&] {
    require(table, "table");
    require(name, "name");
    if (col >= table->table.columns.size()) sigop::fail(sigop::errc::out_of_range, "column index out of range");
    *name = table->table.columns[col].c_str();
  });
}

sigop_status sigop_table_add_meta(sigop_table* table, const char* line) {
  return guarded([&] {
    require(table, "table");
    require(line, "line");
    if (std::strchr(line, '\n')) sigop::fail(sigop::errc::invalid_argument, "metadata line contains a newline");
    table->table.meta.emplace_back(line);
  });
}

sigop_status sigop_table_write_csv(const sigop_table* table, const char* path) {
  return guarded([&] {
    require(table, "table");
    require(path, "path");
    sigop::write_atomic(path, sigop::format_csv(table->table));
  });
}

int sigop_criterion_count(void) { return sigop::criterion_count(); }

sigop_status sigop_verify_run(const sigop_verify_options* options, char** report, int* passed) {
  return guarded([&] {
    require(report, "report");
    sigop::SuiteOptions o;
    if (options) {
      o.wedge_points = options->wedge_points;
      if (options->has_tolerance) {
        if (!(options->tolerance >= 0.0)) sigop::fail(sigop::errc::invalid_argument, "tolerance must be non-negative");
        o.tolerance = options->tolerance;
      }
      if (options->criteria_count) {
        require(options->criteria, "criteria");
        for (std::size_t i = 0; i < options->criteria_count; ++i) {
          const int id = options->criteria[i];
          if (id < 1 || id > sigop::criterion_count()) sigop::fail(sigop::errc::out_of_range, "unknown criterion id");
          o.only.push_back(id);
        }
      }
      o.seed = options->seed;
      o.enforce_budget = options->enforce_budget != 0;
    }
    const auto result = sigop::run_suite(o);
    bool all = true;
    for (const auto& c : result) all = all && c.passed();
    if (passed) *passed = all ? 1 : 0;
    *report = dup(sigop::suite_report_json(result));
  });
}

sigop_status sigop_write_file(const char* path, const char* text) {
  return guarded([&] {
    require(path, "path");
    require(text, "text");
    sigop::write_atomic(path, text);
  });
}

uint64_t sigop_hash(const char* text) { return text ? sigop::fnv1a(text) : 0; }

}  // extern "C"
