// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "sigop/error.hpp"
#include "sigop/momentum_rep.hpp"

using namespace sigop;
using namespace sigop::test;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("rapidity grid and its conjugate") {
  const RapidityGrid g;
  CHECK(g.h() == doctest::Approx(24.0 / 4096.0));
  CHECK(g.dell() == doctest::Approx(2.0 * pi / 24.0));
  CHECK(g.ell(g.n / 2) == 0.0);
  CHECK(g.ell(0) == doctest::Approx(-pi / g.h()));
  RapidityGrid bad;
  bad.alpha_max = bad.alpha_min;
  CHECK_THROWS_AS(validate(bad), error);
  bad = RapidityGrid{};
  bad.n = 1;
  CHECK_THROWS_AS(validate(bad), error);
}

TEST_CASE("hilbert inner product") {
  const ShellAmplitude g = generate_packet(ell_packet(0.2, 1.0, 1.0, cplx(0.0, 0.5)));
  const ShellAmplitude h = generate_packet(ell_packet(-0.4, 1.3, cplx(0.3, 0.1), 1.0));
  CHECK(hilbert_norm2(g) > 0.0);
  const cplx gh = hilbert_inner(g, h), hg = hilbert_inner(h, g);
  CHECK(std::abs(gh - std::conj(hg)) < 1e-15 * std::abs(gh));
  CHECK(std::abs(hilbert_inner(g, g).imag()) == 0.0);
  // linear in the second argument
  ShellAmplitude h2 = h;
  for (int s : {1, -1})
    for (auto& v : h2.branch(s)) v *= cplx(0.0, 2.0);
  CHECK(std::abs(hilbert_inner(g, h2) - cplx(0.0, 2.0) * gh) < 1e-14);
  RapidityGrid other;
  other.n = 2048;
  try {
    hilbert_inner(g, generate_packet(ell_packet(0.0, 1.0, 1.0, 0.0), other));
    FAIL("grid mismatch accepted");
  } catch (const error& e) {
    CHECK(e.code() == errc::grid_mismatch);
  }
}

TEST_CASE("generated packets") {
  const PacketSpec spec = ell_packet(0.0, 1.0, 1.0, 0.0);
  const ShellAmplitude a = generate_packet(spec), b = generate_packet(spec);
  CHECK(a.plus == b.plus);
  CHECK(a.minus == b.minus);
  CHECK(max_abs(a.minus) == 0.0);
  for (const PacketSpec& p : {ell_packet(0.5, 1.0, 1.0, cplx(0.0, 0.5)), ell_packet(-1.0, 2.5, cplx(0.2, -0.7), 0.4),
                              alpha_packet(0.3, 0.8, 1.0, -1.0), alpha_packet(-1.0, 1.4, 0.0, cplx(0.0, 1.0))}) {
    const ShellAmplitude g = generate_packet(p);
    CHECK(std::abs(hilbert_norm2(g) - packet_norm2(p)) < 1e-10 * packet_norm2(p));
  }
}

TEST_CASE("ell-space packets are Gaussians in ell") {
  const cplx wp(0.6, -0.2), wm(-0.7, 0.0);
  const double l0 = 0.4, sigma = 1.5;
  const RapiditySpectrum gh = to_rapidity_spectrum(generate_packet(ell_packet(l0, sigma, wp, wm)));
  double err = 0.0;
  for (std::size_t i = 0; i < gh.size(); ++i) {
    const double gauss = std::exp(-(gh.ell(i) - l0) * (gh.ell(i) - l0) / (2.0 * sigma * sigma));
    err = std::max({err, std::abs(gh.plus[i] - wp * gauss), std::abs(gh.minus[i] - wm * gauss)});
  }
  CHECK(err < 1e-12);
}

TEST_CASE("profile too wide for the grid") {
  try {
    generate_packet(ell_packet(0.0, 0.3, 1.0, 0.0));
    FAIL("wide profile accepted");
  } catch (const error& e) {
    CHECK(e.code() == errc::profile_too_wide);
  }
  CHECK_THROWS_AS(generate_packet(alpha_packet(0.0, 4.0, 1.0, 0.0)), error);
  CHECK_THROWS_AS(validate(ell_packet(0.0, 1.0, 0.0, 0.0)), error);
  CHECK_THROWS_AS(validate(ell_packet(0.0, -1.0, 1.0, 0.0)), error);
}

TEST_CASE("truncation certificate") {
  const ShellAmplitude g = generate_packet(ell_packet(0.0, 1.0, 1.0, 1.0));
  CHECK(endpoint_ratio(g) < 1e-10);
  CHECK_NOTHROW(check_truncation(g));
  ShellAmplitude bad = g;
  bad.plus.front() = 1.0;
  CHECK_THROWS_AS(check_truncation(bad), error);
  CHECK(endpoint_ratio(zero_amplitude(1.0, RapidityGrid{})) == 0.0);
}

TEST_CASE("U is unitary and invertible") {
  for (const PacketSpec& p : {ell_packet(0.5, 1.0, 1.0, cplx(0.0, 0.5)), alpha_packet(0.7, 0.5, cplx(0.3, 0.3), -0.2)}) {
    const ShellAmplitude g = generate_packet(p);
    const RapiditySpectrum gh = to_rapidity_spectrum(g);
    CHECK(std::abs(spectral_inner(gh, gh).real() - hilbert_norm2(g)) < 1e-12 * hilbert_norm2(g));
    CHECK(max_diff(from_rapidity_spectrum(gh), g) < 1e-13 * max_abs(g));
  }
}

TEST_CASE("padding and upsampling preserve the packet") {
  const ShellAmplitude g = generate_packet(ell_packet(0.5, 1.0, 1.0, cplx(0.0, 0.5)));
  const ShellAmplitude p = pad_amplitude(g, 4);
  CHECK(p.grid.n == 4 * g.grid.n);
  CHECK(p.grid.h() == doctest::Approx(g.grid.h()));
  CHECK(std::abs(hilbert_norm2(p) - hilbert_norm2(g)) < 1e-13 * hilbert_norm2(g));
  const ShellAmplitude u = upsample_amplitude(g, 4);
  CHECK(u.grid.n == 4 * g.grid.n);
  CHECK(std::abs(hilbert_norm2(u) - hilbert_norm2(g)) < 1e-12 * hilbert_norm2(g));
  double err = 0.0;
  for (std::size_t j = 0; j < g.grid.n; ++j) err = std::max(err, std::abs(u.plus[4 * j] - g.plus[j]));
  CHECK(err < 1e-12 * max_abs(g));
}

TEST_CASE("position-space reconstruction") {
  const ShellAmplitude g = generate_packet(ell_packet(0.5, 1.0, 1.0, cplx(0.0, 0.5)));
  const SpinorSamples line = reconstruct_line(g, 1.5, -3.0, 0.25, 25);
  for (std::size_t j = 0; j < line.size(); j += 6)
    CHECK((reconstruct_position(g, 1.5, line.x(j)) - line.values[j]).norm() < 1e-12);
  ReconstructionCheck rc;
  reconstruct_position(generate_packet(ell_packet(0.0, 2.0, 1.0, 1.0)), 0.0, 1.0, &rc);
  CHECK_FALSE(rc.aliasing_risk);
  reconstruct_position(g, 0.0, 1.0, &rc);
  CHECK(rc.aliasing_risk);
  CHECK(reconstruction_check(g, 0.0, 1e5).aliasing_risk);
}

TEST_CASE("time derivative of the reconstruction") {
  const ShellAmplitude g = generate_packet(ell_packet(-0.2, 1.2, 0.8, cplx(0.1, 0.4)));
  const double t = 0.7, dt = 1e-4;
  const SpinorSamples d = reconstruct_line_dt(g, t, -2.0, 0.5, 9);
  const SpinorSamples up = reconstruct_line(g, t + dt, -2.0, 0.5, 9);
  const SpinorSamples down = reconstruct_line(g, t - dt, -2.0, 0.5, 9);
  for (std::size_t j = 0; j < d.size(); ++j)
    CHECK(((up.values[j] - down.values[j]) / (2.0 * dt) - d.values[j]).norm() < 1e-6);
}

TEST_CASE("Cauchy data round trip") {
  const ShellAmplitude g = generate_packet(ell_packet(0.3, 2.0, 1.0, cplx(0.0, 0.5)));
  const SpinorSamples data = reconstruct_line(g, 0.0, -40.0, 40.0 / 4096.0, 8192);
  const ShellAmplitude back = amplitude_from_initial_data(data, g.mass, g.grid);
  CHECK(max_diff(back, g) < 1e-8 * max_abs(g));
  const SpinorSamples data_dt = reconstruct_line_dt(g, 0.0, -40.0, 40.0 / 4096.0, 8192);
  CHECK(max_diff(amplitude_from_cauchy(data, data_dt, g.mass, g.grid), g) < 1e-8 * max_abs(g));
}

TEST_CASE("Cauchy inner product equals the Hilbert inner product") {
  const ShellAmplitude g = generate_packet(ell_packet(0.3, 2.0, 1.0, cplx(0.0, 0.5)));
  const ShellAmplitude h = generate_packet(alpha_packet(-0.5, 0.5, cplx(0.2, 0.1), 1.0));
  const SpinorSamples a = reconstruct_line(g, 0.0, -40.0, 40.0 / 4096.0, 8192);
  const SpinorSamples b = reconstruct_line(h, 0.0, -40.0, 40.0 / 4096.0, 8192);
  CHECK(std::abs(cauchy_inner(a, a) - hilbert_norm2(g)) < 1e-8 * hilbert_norm2(g));
  CHECK(std::abs(cauchy_inner(a, b) - hilbert_inner(g, h)) < 1e-8 * std::sqrt(hilbert_norm2(g) * hilbert_norm2(h)));
}

TEST_CASE("half-line grid validation") {
  HalfLineGrid g;
  CHECK(g.dx() == doctest::Approx(40.0 / 8192.0));
  CHECK_NOTHROW(validate(g));
  g.count = 0;
  CHECK_THROWS_AS(validate(g), error);
}
