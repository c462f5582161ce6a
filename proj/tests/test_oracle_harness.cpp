// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "sigop/error.hpp"
#include "sigop/oracle_harness.hpp"
#include "sigop/signature_operator.hpp"

using namespace sigop;
using namespace sigop::test;

namespace {

int idx(int s) { return s == 1 ? 0 : 1; }

}  // namespace

TEST_CASE("ladder validation") {
  CHECK_THROWS_AS(make_ladder({0.1}, 1), error);
  CHECK_THROWS_AS(make_ladder({0.1, 0.2}, 1), error);
  CHECK_THROWS_AS(make_ladder({0.1, 0.0}, 1), error);
  CHECK_THROWS_AS(make_ladder({0.1, 0.05}, 2), error);
  CHECK_THROWS_AS(make_ladder({0.1, 0.05}, 0), error);
  CHECK_NOTHROW(make_ladder({0.1, 0.05, 0.025}, 2));
}

TEST_CASE("extrapolation is exact for low-order polynomials") {
  ExtrapolationLadder l = make_ladder({0.2, 0.1, 0.05, 0.025}, 3);
  const auto f = [](double e) { return cplx(1.5 - 2.0 * e + 3.0 * e * e - e * e * e, 0.25 * e); };
  l = run_ladder(l, f);
  CHECK(std::abs(l.extrapolated - cplx(1.5, 0.0)) < 1e-14);
  CHECK(l.level_errors.size() == 3);
  const ExtrapolationLadder q =
      run_ladder(make_ladder({0.2, 0.1, 0.05, 0.025}, 3), [](double e) { return cplx(2.0 + e * e, -e); });
  CHECK(std::abs(q.extrapolated - 2.0) < 1e-14);
  CHECK(q.error_estimate < 1e-14);
  ExtrapolationLadder bad = l;
  bad.values.pop_back();
  CHECK_THROWS_AS(extrapolate(bad), error);
}

TEST_CASE("odd residue integrals") {
  // independent high-precision evaluation of the regulated integrals
  const std::pair<double, double> refs[] = {
      {0.25, 0.5929282606998833}, {0.5, 0.62602016562607381}, {1.0, 0.27101495139941835}, {2.0, 0.02346689563063479}};
  for (auto [ell, im] : refs) {
    CAPTURE(ell);
    CHECK(std::abs(residue_closed_odd(ell) - cplx(0.0, im)) < 1e-14);
    const QuadratureResult q = residue_oracle_odd(ell);
    CHECK(q.deviation < 1e-9);
    CHECK(std::abs(q.value - cplx(0.0, im)) < 1e-9);
  }
}

TEST_CASE("even residue closed forms") {
  struct Ref {
    double ell;
    double plus, minus;
  };
  const Ref refs[] = {{0.25, 1.3004577257118433, -0.27033860108305332},
                      {0.5, 3.0114558467724112, -0.13013680681738203},
                      {1.0, 6.2714736892215518, -0.011711617958034673},
                      {2.0, 12.566326791275492, -4.3823083681178899e-5}};
  for (const Ref& r : refs) {
    CAPTURE(r.ell);
    CHECK(std::abs(residue_closed_even(r.ell, 1) - r.plus) < 1e-13 * std::abs(r.plus));
    CHECK(std::abs(residue_closed_even(r.ell, -1) - r.minus) < 1e-13 * std::abs(r.minus) + 1e-17);
  }
}

TEST_CASE("even residue at finite regulator") {
  const ExtrapolationLadder ladder = make_ladder({0.04, 0.02, 0.01, 0.005}, 3);
  const LadderResult plus = residue_oracle_even(1.0, 1, ladder);
  const LadderResult minus = residue_oracle_even(1.0, -1, ladder);
  CHECK(std::abs(plus.ladder.values[0] - 6.0255656885257261) < 1e-9);
  CHECK(std::abs(minus.ladder.values[0] - (-0.012189578153947542)) < 1e-9);
  CHECK(plus.deviation < 1e-5);
  CHECK(std::abs(minus.value - minus.reference) < 1e-6);
}

TEST_CASE("plane-wave transform of the kernel") {
  CHECK(std::abs(diagonalization_closed(1.0, 1, 1, 1.0) - 0.31771656868685321) < 1e-15);
  CHECK(std::abs(diagonalization_closed(1.0, 1, -1, 1.0) - cplx(0.0, -0.013729777830279856)) < 1e-15);
  for (int s : {1, -1})
    for (int st : {1, -1}) {
      CHECK(std::abs(diagonalization_closed(0.7, s, st, 2.0) - sig_matrix(0.7, 2.0)(idx(s), idx(st))) < 1e-15);
      const DiagonalizationResult d = diagonalization_oracle(1.0, s, st);
      CHECK(d.deviation < 1e-6);
      CHECK(d.alpha_spread < 1e-6);
    }
}

TEST_CASE("4D kernels diagonalize with the opposite channel") {
  for (int a : {1, -1}) {
    const TransverseData td = make_transverse(0.5, 0.0, 1.0, a);
    const TransverseData opposite = make_transverse(0.5, 0.0, 1.0, -a);
    for (int s : {1, -1})
      for (int st : {1, -1}) {
        const DiagonalizationResult d = diagonalization_oracle_4d(0.8, s, st, td);
        CHECK(std::abs(d.value - sig_matrix_4d(0.8, opposite)(idx(s), idx(st))) < 1e-6);
      }
  }
}

TEST_CASE("regulated double integral approaches the spectral pairing") {
  const auto specs = default_crosscheck_packets();
  const ShellAmplitude g = generate_packet(specs[0]), gt = generate_packet(specs[2]);
  const cplx c = spectral_pairing(g, gt);
  const ExtrapolationLadder l =
      run_ladder(make_ladder({0.05, 0.025, 0.0125, 0.00625}, 3), [&](double e) { return double_integral_pairing(g, gt, e); });
  CHECK(std::abs(l.extrapolated - c) < 1e-5 * std::abs(c));
  CHECK(std::abs(c - 0.42729155781810132) < 1e-12);
}

TEST_CASE("three-way crosscheck at low resolution") {
  const auto specs = default_crosscheck_packets();
  CrosscheckOptions opt;
  opt.wedge.points = 8;
  const CrosscheckReport r = pairing_crosscheck(generate_packet(specs[0]), generate_packet(specs[1]), opt);
  CHECK(r.pass);
  CHECK(std::abs(r.spectral - cplx(0.062301577032013086, 0.05123950112024734)) < 1e-12);
  CHECK(std::abs(r.kernel - cplx(0.062301581701009266, 0.05123950914419161)) < 1e-10);
  CHECK(r.dev_ab < 1e-3);
  CHECK(r.dev_ac < 1e-3);
  CHECK(r.dev_bc < 1e-6);
}
