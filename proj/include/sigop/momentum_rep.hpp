// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sigop/spinor_algebra.hpp"

namespace sigop {

struct RapidityGrid {
  double alpha_min = -12.0;
  double alpha_max = 12.0;
  std::size_t n = 4096;

  double h() const { return (alpha_max - alpha_min) / double(n); }
  double alpha(std::size_t j) const { return alpha_min + double(j) * h(); }
  // conjugate grid: ell_i = 2 pi (i - n/2) / (n h)
  double dell() const;
  double ell(std::size_t i) const;
  bool operator==(const RapidityGrid&) const = default;
};

void validate(const RapidityGrid& grid);

// Samples of g(+1, alpha) and g(-1, alpha) on a uniform rapidity grid.
struct ShellAmplitude {
  double mass = 1.0;
  RapidityGrid grid;
  std::vector<cplx> plus;
  std::vector<cplx> minus;

  std::vector<cplx>& branch(int s) { return s > 0 ? plus : minus; }
  const std::vector<cplx>& branch(int s) const { return s > 0 ? plus : minus; }
};

ShellAmplitude zero_amplitude(double mass, const RapidityGrid& grid);

// Samples of ghat(+1, ell) and ghat(-1, ell) on the conjugate grid.
struct RapiditySpectrum {
  double mass = 1.0;
  RapidityGrid grid;
  std::vector<cplx> plus;
  std::vector<cplx> minus;

  std::vector<cplx>& branch(int s) { return s > 0 ? plus : minus; }
  const std::vector<cplx>& branch(int s) const { return s > 0 ? plus : minus; }
  double ell(std::size_t i) const { return grid.ell(i); }
  std::size_t size() const { return plus.size(); }
};

enum class ProfileSpace { ell, alpha };

struct PacketSpec {
  double mass = 1.0;
  cplx weight_plus{1.0, 0.0};
  cplx weight_minus{0.0, 0.0};
  ProfileSpace space = ProfileSpace::ell;
  double center = 0.0;
  double width = 1.0;
  double ky = 0.0;
  double kz = 0.0;
};

void validate(const PacketSpec& spec);

// Largest endpoint magnitude relative to the maximum; 0 for the zero amplitude.
double endpoint_ratio(const ShellAmplitude& g);
void check_truncation(const ShellAmplitude& g, double threshold = 1e-10);

cplx hilbert_inner(const ShellAmplitude& g, const ShellAmplitude& gt);
double hilbert_norm2(const ShellAmplitude& g);

RapiditySpectrum to_rapidity_spectrum(const ShellAmplitude& g);
ShellAmplitude from_rapidity_spectrum(const RapiditySpectrum& gh);

// sum_s integral conj(ghat) ghat~ d ell, rectangle rule on the conjugate grid
cplx spectral_inner(const RapiditySpectrum& a, const RapiditySpectrum& b);

// Zero-extends the grid to the right by the given factor (finer conjugate grid).
ShellAmplitude pad_amplitude(const ShellAmplitude& g, std::size_t factor);
// Band-limited interpolation onto a grid refined by the given factor.
ShellAmplitude upsample_amplitude(const ShellAmplitude& g, std::size_t factor);

ShellAmplitude generate_packet(const PacketSpec& spec, const RapidityGrid& grid = {},
                               double threshold = 1e-10);
// Closed-form hilbert_norm2 of the generated packet.
double packet_norm2(const PacketSpec& spec);

// Uniformly sampled spinor field on x_j = x0 + j dx.
struct SpinorSamples {
  double x0 = 0.0;
  double dx = 1.0;
  std::vector<Spinor2> values;

  double x(std::size_t j) const { return x0 + double(j) * dx; }
  std::size_t size() const { return values.size(); }
};

// Sampling of the half-line x_j = j dx, j = 1..count, dx = x_max / count.
struct HalfLineGrid {
  double x_max = 40.0;
  std::size_t count = 8192;
  double x_min = 1e-3;  // data must be negligible below the inner cutoff

  double dx() const { return x_max / double(count); }
};

void validate(const HalfLineGrid& grid);

// Amplitude of the solution with Psi(0, .) = data0 and d_t Psi(0, .) = data1.
ShellAmplitude amplitude_from_cauchy(const SpinorSamples& data0, const SpinorSamples& data1,
                                     double mass, const RapidityGrid& grid = {},
                                     double threshold = 1e-10);
// Amplitude of the Dirac solution with initial value data0; the time derivative follows
// from the Dirac equation.
ShellAmplitude amplitude_from_initial_data(const SpinorSamples& data0, double mass,
                                           const RapidityGrid& grid = {},
                                           double threshold = 1e-10);

struct ReconstructionCheck {
  double phase_step = 0.0;  // largest phase change between neighbouring samples
  bool aliasing_risk = false;
};

// Phase resolution of the alpha quadrature at (t, x), over the support of g.
ReconstructionCheck reconstruction_check(const ShellAmplitude& g, double t, double x);

Spinor2 reconstruct_position(const ShellAmplitude& g, double t, double x,
                             ReconstructionCheck* check = nullptr);
// Psi(t, x0 + j dx) for j < count.
SpinorSamples reconstruct_line(const ShellAmplitude& g, double t, double x0, double dx,
                               std::size_t count);
// d_t Psi(t, x0 + j dx), evaluated spectrally.
SpinorSamples reconstruct_line_dt(const ShellAmplitude& g, double t, double x0, double dx,
                                  std::size_t count);

// 2 pi integral <Psi | gamma^0 Phi> dx by the rectangle rule.
cplx cauchy_inner(const SpinorSamples& a, const SpinorSamples& b);

}  // namespace sigop
