/* SPDX-License-Identifier: Apache-2.0 */
/* Exercises the C interface; links only the shared library. */
#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "sigop/sigop.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static void test_library_info(void) {
  EXPECT(strcmp(sigop_version(), "0.1.0") == 0);
  EXPECT(strcmp(sigop_status_name(SIGOP_OK), "ok") == 0);
  EXPECT(strcmp(sigop_status_name((sigop_status)55), "unknown status") == 0);
  EXPECT(sigop_criterion_count() == 12);
  EXPECT(sigop_hash("") == 0xcbf29ce484222325ull);
}

static void test_errors(void) {
  sigop_packet* p = NULL;
  EXPECT(sigop_packet_from_json("{", NULL, &p) == SIGOP_E_INVALID_ARGUMENT);
  EXPECT(p == NULL);
  EXPECT(strlen(sigop_last_error()) > 0);
  EXPECT(sigop_packet_default(7, NULL, &p) == SIGOP_E_OUT_OF_RANGE);
  EXPECT(sigop_packet_from_json("{\"branches\":{\"plus\":1},\"profile\":{\"width\":0.3}}", NULL, &p) ==
         SIGOP_E_PROFILE_TOO_WIDE);
  EXPECT(sigop_packet_norm2(NULL, NULL) == SIGOP_E_INVALID_ARGUMENT);
  EXPECT(sigop_packet_default(0, NULL, &p) == SIGOP_OK);
  EXPECT(strlen(sigop_last_error()) == 0);
  sigop_packet* moved = NULL;
  EXPECT(sigop_packet_translate(p, 1e6, &moved) == SIGOP_E_OUT_OF_RANGE);
  EXPECT(moved == NULL);
  sigop_packet_free(p);
  sigop_packet_free(NULL);
  EXPECT(sigop_write_file("/nonexistent-dir/x.txt", "x") == SIGOP_E_IO);
}

static void test_packets(void) {
  sigop_grid grid;
  sigop_grid_default(&grid);
  EXPECT(grid.n == 4096);
  sigop_packet *a = NULL, *b = NULL, *t = NULL;
  EXPECT(sigop_packet_default(0, &grid, &a) == SIGOP_OK);
  EXPECT(sigop_packet_default(1, &grid, &b) == SIGOP_OK);
  sigop_complex z;
  EXPECT(sigop_pairing(a, b, &z) == SIGOP_OK);
  EXPECT(fabs(z.re - 0.062301577032013086) < 1e-12);
  EXPECT(fabs(z.im - 0.05123950112024734) < 1e-12);
  double n0 = 0.0, n1 = 0.0;
  EXPECT(sigop_packet_norm2(a, &n0) == SIGOP_OK);
  EXPECT(sigop_packet_cpt(a, &t) == SIGOP_OK);
  EXPECT(sigop_packet_norm2(t, &n1) == SIGOP_OK);
  EXPECT(fabs(n0 - n1) < 1e-12 * n0);

  char* json = NULL;
  EXPECT(sigop_packet_spec_json(a, &json) == SIGOP_OK);
  sigop_packet* c = NULL;
  EXPECT(sigop_packet_from_json(json, &grid, &c) == SIGOP_OK);
  EXPECT(sigop_pairing(c, b, &z) == SIGOP_OK);
  EXPECT(fabs(z.re - 0.062301577032013086) < 1e-12);
  sigop_string_free(json);

  sigop_wedge_grid wg;
  sigop_wedge_grid_default(&wg);
  wg.points = 8;
  sigop_crosscheck cc;
  EXPECT(sigop_crosscheck_run(a, b, &wg, 1e-3, &cc) == SIGOP_OK);
  EXPECT(cc.pass == 1);
  EXPECT(cc.dev_wedge_spectral < 1e-3);

  sigop_packet_free(a);
  sigop_packet_free(b);
  sigop_packet_free(c);
  sigop_packet_free(t);
}

static void test_tables(void) {
  sigop_table* t = NULL;
  size_t rows = 0, cols = 0;
  EXPECT(sigop_table_spectrum(-5.0, 5.0, 1001, 1.0, &t) == SIGOP_OK);
  EXPECT(sigop_table_shape(t, &rows, &cols) == SIGOP_OK);
  EXPECT(rows == 1001 && cols == 27);
  const char* name = NULL;
  EXPECT(sigop_table_column(t, 0, &name) == SIGOP_OK && strcmp(name, "ell") == 0);
  double v = 1.0;
  EXPECT(sigop_table_value(t, 500, 0, &v) == SIGOP_OK && v == 0.0);
  EXPECT(sigop_table_value(t, 1001, 0, &v) == SIGOP_E_OUT_OF_RANGE);
  EXPECT(sigop_table_add_meta(t, "capi test") == SIGOP_OK);
  EXPECT(sigop_table_write_csv(t, "capi_spectrum.csv") == SIGOP_OK);
  FILE* f = fopen("capi_spectrum.csv", "r");
  EXPECT(f != NULL);
  if (f) {
    char line[64];
    EXPECT(fgets(line, sizeof line, f) && strcmp(line, "# capi test\n") == 0);
    fclose(f);
  }
  remove("capi_spectrum.csv");
  sigop_table_free(t);

  EXPECT(sigop_table_thermal(-1.0, -1.0, 1.0, 3, &t) == SIGOP_E_INVALID_ARGUMENT);

  sigop_packet* p = NULL;
  EXPECT(sigop_packet_default(0, NULL, &p) == SIGOP_OK);
  EXPECT(sigop_table_projection(p, SIGOP_PROJECT_RANGE, 0.0, &t) == SIGOP_OK);
  EXPECT(sigop_table_shape(t, &rows, &cols) == SIGOP_OK && rows == 4096 && cols == 5);
  sigop_table_free(t);
  EXPECT(sigop_table_projection(p, (sigop_projection)42, 0.0, &t) == SIGOP_E_INVALID_ARGUMENT);
  const double times[] = {0.0, 2.0};
  EXPECT(sigop_table_reconstruction(p, times, 2, -1.0, 0.5, 5, &t) == SIGOP_OK);
  EXPECT(sigop_table_shape(t, &rows, &cols) == SIGOP_OK && rows == 10 && cols == 6);
  sigop_table_free(t);
  sigop_packet_free(p);
}

static void test_verify(void) {
  sigop_verify_options o;
  sigop_verify_options_default(&o);
  const int ids[] = {5, 10};
  o.criteria = ids;
  o.criteria_count = 2;
  char* report = NULL;
  int passed = 0;
  EXPECT(sigop_verify_run(&o, &report, &passed) == SIGOP_OK);
  EXPECT(passed == 1);
  EXPECT(report && strstr(report, "\"id\"") != NULL);
  sigop_string_free(report);
  o.has_tolerance = 1;
  o.tolerance = 0.0;
  EXPECT(sigop_verify_run(&o, &report, &passed) == SIGOP_OK);
  EXPECT(passed == 0);
  sigop_string_free(report);
  const int bad[] = {13};
  o.criteria = bad;
  o.criteria_count = 1;
  EXPECT(sigop_verify_run(&o, &report, &passed) == SIGOP_E_OUT_OF_RANGE);
}

int main(void) {
  test_library_info();
  test_errors();
  test_packets();
  test_tables();
  test_verify();
  if (failures) fprintf(stderr, "%d failures\n", failures);
  return failures ? 1 : 0;
}
