// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>

#include "sigop/error.hpp"
#include "sigop/spinor_algebra.hpp"

using namespace sigop;

TEST_CASE("gamma matrices satisfy the Clifford relations") {
  const auto [g0, g1] = gamma_matrices();
  const Mat2 id = Mat2::Identity();
  CHECK((g0 * g0 - id).norm() == 0.0);
  CHECK((g1 * g1 + id).norm() == 0.0);
  CHECK((g0 * g1 + g1 * g0).norm() == 0.0);
  // (gamma^0 gamma^1)^2 = +1
  CHECK(((g0 * g1) * (g0 * g1) - id).norm() == 0.0);
}

TEST_CASE("slash is omega gamma^0 - k gamma^1") {
  const auto [g0, g1] = gamma_matrices();
  CHECK((slash(1.7, -0.4) - (1.7 * g0 - (-0.4) * g1)).norm() < 1e-15);
}

TEST_CASE("basis spinor at rest") {
  const Spinor2 f = basis_spinor(make_shell_point(1, 0.0, 1.0));
  CHECK(f(0).real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(f(1).real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  const Spinor2 g = basis_spinor(make_shell_point(-1, 0.0, 1.0));
  CHECK(g(1).real() == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("basis spinor solves the Dirac equation with signed normalization") {
  for (double m : {0.5, 1.0, 3.0})
    for (int s : {1, -1})
      for (double a = -5.0; a <= 5.0; a += 0.25) {
        const MassShellPoint p = make_shell_point(s, a, m);
        const Spinor2 f = basis_spinor(p);
        CHECK(((slash(p.omega(), p.k()) - m * Mat2::Identity()) * f).norm() <= 1e-13 * std::abs(p.omega()));
        CHECK(std::abs(spin_inner(f, f) - double(s)) < 1e-13);
        CHECK(std::abs(f.squaredNorm() - std::abs(p.omega()) / m) < 1e-12 * std::abs(p.omega()) / m);
      }
}

TEST_CASE("momentum form agrees with the rapidity form") {
  for (int s : {1, -1})
    for (double a : {-2.0, -0.3, 0.0, 0.8, 2.5}) {
      const MassShellPoint p = make_shell_point(s, a, 2.0);
      CHECK((basis_spinor(p.omega(), p.k(), 2.0) - basis_spinor(p)).norm() < 1e-12);
    }
}

TEST_CASE("spinors of opposite shells with equal momentum are orthogonal") {
  for (int s : {1, -1})
    for (double a : {-3.0, -1.0, 0.0, 0.5, 4.0}) {
      const Spinor2 f = basis_spinor(make_shell_point(s, a, 1.0));
      const Spinor2 g = basis_spinor(make_shell_point(-s, -a, 1.0));
      CHECK(std::abs(f.dot(g)) < 1e-14 * f.norm() * g.norm());
    }
}

TEST_CASE("spin pairing closed form") {
  CHECK(spinor_pairing(1, 0.0, 1, 0.0) == cplx(1.0));
  CHECK(spinor_pairing(-1, 0.0, -1, 0.0) == cplx(-1.0));
  CHECK(spinor_pairing(1, 0.0, -1, 0.0) == cplx(0.0));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int k = 0; k < 200; ++k) {
    const double a = u(rng), at = u(rng);
    for (int s : {1, -1})
      for (int st : {1, -1}) {
        const cplx direct = spin_inner(basis_spinor(make_shell_point(s, a, 1.0)), basis_spinor(make_shell_point(st, at, 1.0)));
        const cplx closed = spinor_pairing(s, a, st, at);
        CHECK(std::abs(direct - closed) < 1e-13 * std::max(1.0, std::abs(closed)));
      }
  }
}

TEST_CASE("sign function") {
  CHECK(sign_of(0.0) == 1);
  CHECK(sign_of(2.0) == 1);
  CHECK(sign_of(-1e-300) == -1);
}

TEST_CASE("invalid inputs are rejected") {
  CHECK_THROWS_AS(make_shell_point(0, 0.0, 1.0), error);
  CHECK_THROWS_AS(make_shell_point(1, 0.0, -1.0), error);
  CHECK_THROWS_AS(make_shell_point(1, NAN, 1.0), error);
  CHECK_THROWS_AS(make_transverse(0.0, 0.0, 1.0, 2), error);
  try {
    basis_spinor(0.5, -0.5, 1.0);
    FAIL("omega + k = 0 accepted");
  } catch (const error& e) {
    CHECK(e.code() == errc::domain_violation);
  }
}

TEST_CASE("transverse data") {
  const TransverseData td = make_transverse(3.0, 4.0, 1.0, 1);
  CHECK(td.k_perp() == doctest::Approx(5.0));
  CHECK(td.m_tilde() == doctest::Approx(std::sqrt(26.0)));
  CHECK(td.nu() == doctest::Approx(std::atan(5.0)));
  CHECK(make_transverse(3.0, 4.0, 1.0, -1).nu() == doctest::Approx(-std::atan(5.0)));
  CHECK(make_transverse(0.0, 0.0, 1.0, -1).nu() == 0.0);
}

TEST_CASE("4d pairing reduces to the 2d pairing at zero transverse momentum") {
  for (int a : {1, -1}) {
    const TransverseData td = make_transverse(0.0, 0.0, 1.0, a);
    for (int s : {1, -1})
      for (int st : {1, -1})
        CHECK(std::abs(spinor_pairing_4d(s, 0.7, st, -1.1, td) - spinor_pairing(s, 0.7, st, -1.1)) == 0.0);
    CHECK((reduction_matrix(td) - Mat2::Identity()).norm() == 0.0);
  }
  const TransverseData td = make_transverse(0.4, -1.2, 1.0, 1);
  CHECK(spinor_pairing_4d(1, 0.3, 1, 0.1, td, -1) == cplx(0.0));
  CHECK(spinor_pairing_4d(1, 0.3, 1, 0.1, td, 1) == spinor_pairing_4d(1, 0.3, 1, 0.1, td));
}

TEST_CASE("reduction matrix is unitary") {
  const Mat2 u = reduction_matrix(make_transverse(1.3, 0.2, 0.7, -1));
  CHECK((u.adjoint() * u - Mat2::Identity()).norm() < 1e-15);
}

TEST_CASE("channel block is singular on the reduced mass shell") {
  for (int a : {1, -1}) {
    const TransverseData td = make_transverse(0.6, 0.8, 1.0, a);
    for (double k : {-2.0, 0.0, 1.5}) {
      const double omega = std::hypot(k, td.m_tilde());
      const Mat2 b = channel_block(omega, k, td);
      CHECK(std::abs(b.determinant()) < 1e-12);
      // the channel block is the full Dirac matrix restricted to an invariant pair
      const Mat4 d = dirac_matrix_4d(omega, k, td);
      CHECK(std::abs(d.determinant()) < 1e-10);
    }
  }
}

TEST_CASE("transverse eigenvalue has opposite signs on the two channels") {
  const double kp = 1.7;
  CHECK(transverse_eigenvalue(make_transverse(kp, 0.0, 1.0, 1)) == doctest::Approx(kp));
  CHECK(transverse_eigenvalue(make_transverse(kp, 0.0, 1.0, -1)) == doctest::Approx(-kp));
}
