/* SPDX-License-Identifier: Apache-2.0 */
#ifndef SIGOP_SIGOP_H
#define SIGOP_SIGOP_H

#include <stddef.h>
#include <stdint.h>

#if defined(SIGOP_BUILDING)
#define SIGOP_API __attribute__((visibility("default")))
#else
#define SIGOP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sigop_status {
  SIGOP_OK = 0,
  SIGOP_E_INVALID_ARGUMENT = 1,
  SIGOP_E_GRID_MISMATCH = 2,
  SIGOP_E_DOMAIN = 3,
  SIGOP_E_SINGULAR = 4,
  SIGOP_E_CONVERGENCE = 5,
  SIGOP_E_TAIL_BOUND = 6,
  SIGOP_E_PROFILE_TOO_WIDE = 7,
  SIGOP_E_OUT_OF_RANGE = 8,
  SIGOP_E_NOT_EMBEDDED = 9,
  SIGOP_E_IO = 10,
  SIGOP_E_INTERNAL = 99
} sigop_status;

typedef enum sigop_projection {
  SIGOP_PROJECT_NEGATIVE = 0, /* chi_(-inf,0)(S) */
  SIGOP_PROJECT_POSITIVE = 1, /* chi_(0,inf)(S) */
  SIGOP_PROJECT_RANGE = 2,    /* L */
  SIGOP_PROJECT_KERNEL = 3,   /* K */
  SIGOP_PROJECT_SIGNATURE = 4,
  SIGOP_PROJECT_THERMAL = 5
} sigop_projection;

typedef struct sigop_complex {
  double re;
  double im;
} sigop_complex;

typedef struct sigop_grid {
  double alpha_min;
  double alpha_max;
  size_t n;
} sigop_grid;

typedef struct sigop_wedge_grid {
  double t_max;
  double x_max;
  size_t t_panels;
  size_t y_panels;
  size_t points;
  double tail_tolerance;
} sigop_wedge_grid;

typedef struct sigop_crosscheck {
  sigop_complex wedge;
  sigop_complex kernel;
  sigop_complex spectral;
  double tail_bound;
  double ladder_error;
  double dev_wedge_kernel;
  double dev_wedge_spectral;
  double dev_kernel_spectral;
  int pass;
} sigop_crosscheck;

typedef struct sigop_verify_options {
  size_t wedge_points;
  int has_tolerance; /* nonzero: tolerance replaces every bound-check tolerance */
  double tolerance;
  const int* criteria; /* NULL or criteria_count ids in 1..sigop_criterion_count() */
  size_t criteria_count;
  uint64_t seed;
  int enforce_budget;
} sigop_verify_options;

/* Opaque handles. */
typedef struct sigop_packet sigop_packet;
typedef struct sigop_table sigop_table;

SIGOP_API const char* sigop_version(void);
/* Message of the last failed call on this thread; empty after a successful call. */
SIGOP_API const char* sigop_last_error(void);
SIGOP_API const char* sigop_status_name(sigop_status status);
SIGOP_API void sigop_string_free(char* s);

SIGOP_API void sigop_grid_default(sigop_grid* grid);
SIGOP_API void sigop_wedge_grid_default(sigop_wedge_grid* grid);
SIGOP_API void sigop_verify_options_default(sigop_verify_options* options);

/* Packets: a validated spec together with its samples on the rapidity grid (NULL grid = default). */
SIGOP_API sigop_status sigop_packet_from_json(const char* json, const sigop_grid* grid, sigop_packet** out);
/* Gaussian packets of the default crosscheck, index 0..3. */
SIGOP_API sigop_status sigop_packet_default(int index, const sigop_grid* grid, sigop_packet** out);
SIGOP_API void sigop_packet_free(sigop_packet* packet);
SIGOP_API sigop_status sigop_packet_spec_json(const sigop_packet* packet, char** out);
SIGOP_API sigop_status sigop_packet_norm2(const sigop_packet* packet, double* out);
SIGOP_API sigop_status sigop_packet_translate(const sigop_packet* packet, double shift, sigop_packet** out);
SIGOP_API sigop_status sigop_packet_cpt(const sigop_packet* packet, sigop_packet** out);

/* (Psi | S Phi) evaluated in ell space. */
SIGOP_API sigop_status sigop_pairing(const sigop_packet* a, const sigop_packet* b, sigop_complex* out);
SIGOP_API sigop_status sigop_crosscheck_run(const sigop_packet* a, const sigop_packet* b, const sigop_wedge_grid* grid,
                                            double tolerance, sigop_crosscheck* out);

/* Tables. */
SIGOP_API sigop_status sigop_table_spectrum(double ell_min, double ell_max, size_t points, double mass,
                                            sigop_table** out);
SIGOP_API sigop_status sigop_table_thermal(double beta, double ell_min, double ell_max, size_t points,
                                           sigop_table** out);
SIGOP_API sigop_status sigop_table_amplitude(const sigop_packet* packet, sigop_table** out);
/* beta is used by SIGOP_PROJECT_THERMAL only. */
SIGOP_API sigop_status sigop_table_projection(const sigop_packet* packet, sigop_projection kind, double beta,
                                              sigop_table** out);
SIGOP_API sigop_status sigop_table_reconstruction(const sigop_packet* packet, const double* times, size_t ntimes,
                                                  double x0, double dx, size_t count, sigop_table** out);
SIGOP_API sigop_status sigop_table_decay(const sigop_packet* packet, const double* times, size_t ntimes, int power,
                                         int* non_increasing, sigop_table** out);
SIGOP_API sigop_status sigop_table_rayleigh(const sigop_packet* packet, const double* shifts, size_t nshifts,
                                            int* strictly_increasing, sigop_table** out);
SIGOP_API void sigop_table_free(sigop_table* table);
SIGOP_API sigop_status sigop_table_shape(const sigop_table* table, size_t* rows, size_t* cols);
SIGOP_API sigop_status sigop_table_value(const sigop_table* table, size_t row, size_t col, double* out);
SIGOP_API sigop_status sigop_table_column(const sigop_table* table, size_t col, const char** name);
/* Metadata lines are written as "# line" above the header. */
SIGOP_API sigop_status sigop_table_add_meta(sigop_table* table, const char* line);
SIGOP_API sigop_status sigop_table_write_csv(const sigop_table* table, const char* path);

/* Verification suite; report is a JSON document owned by the caller. */
SIGOP_API int sigop_criterion_count(void);
SIGOP_API sigop_status sigop_verify_run(const sigop_verify_options* options, char** report, int* passed);

SIGOP_API sigop_status sigop_write_file(const char* path, const char* text);
SIGOP_API uint64_t sigop_hash(const char* text);

#ifdef __cplusplus
}
#endif

#endif
