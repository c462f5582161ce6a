// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "sigop/momentum_rep.hpp"
#include "sigop/spinor_algebra.hpp"

namespace sigop {

// Regularized kernel of the wedge inner product in rapidity variables.
cplx kernel_I(int s, double alpha, int st, double alpha_t, double eps, double mass);
cplx kernel_I_4d(int s, double alpha, int st, double alpha_t, double eps, const TransverseData& td);
cplx kernel_K(int s, double alpha, int st, double alpha_t, double mass, double eps);

// Null-coordinate factors of K: each is the light-cone integral over one null direction.
cplx null_factor_u(int s, double alpha, int st, double alpha_t, double mass, double eps);
cplx null_factor_v(int s, double alpha, int st, double alpha_t, double mass, double eps);

// Ell-dependent factor [[1/(1+e^{-2 pi l}), -i/(2 cosh pi l)], [i/(2 cosh pi l), 1/(1+e^{2 pi l})]].
Mat2 shape_matrix(double ell);
Mat2 sig_matrix(double ell, double mass);
double ell_tilde(double ell, const TransverseData& td);
Mat2 sig_matrix_4d(double ell, const TransverseData& td);

struct Projectors {
  Mat2 L;
  Mat2 K;
};
Projectors projectors(double ell);

// Unit eigenvectors with real positive second component.
Spinor2 kernel_vector(double ell);
Spinor2 range_vector(double ell);

// Decay certificate standing in for the operator domain.
void check_domain(const RapiditySpectrum& gh, double threshold = 1e-10);

RapiditySpectrum apply_matrix_field(const RapiditySpectrum& gh, const std::function<Mat2(double)>& field);
RapiditySpectrum apply_relative_S(const RapiditySpectrum& gh);
RapiditySpectrum apply_relative_S_4d(const RapiditySpectrum& gh, const TransverseData& td);
RapiditySpectrum apply_L(const RapiditySpectrum& gh);
RapiditySpectrum apply_K(const RapiditySpectrum& gh);

// Sum_s integral conj(ghat) (S ghat~) d ell.
cplx spectral_pairing(const RapiditySpectrum& a, const RapiditySpectrum& b);
// Same pairing for amplitudes, evaluated on an alpha grid padded by pad_factor.
cplx spectral_pairing(const ShellAmplitude& g, const ShellAmplitude& gt, std::size_t pad_factor = 4);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_closed = true;
  bool hi_closed = true;
  bool contains(double v) const;
};

// Finite union of disjoint intervals; empty list is the empty set.
struct SpectralWindow {
  std::vector<Interval> parts;
  static SpectralWindow all();
  bool contains(double v) const;
  SpectralWindow intersect(const SpectralWindow& other) const;
};

void validate(const SpectralWindow& w);

RapiditySpectrum spectral_measure(const SpectralWindow& v, const RapiditySpectrum& gh);

// Wedge operator pi_R S iota_M. The input must vanish on x < 0 at t = 0; re-embedding is the
// orthogonal projection onto the wedge subspace, which is the range projector L in ell space.
ShellAmplitude apply_intrinsic_S(const ShellAmplitude& g_wedge, const HalfLineGrid& grid = {},
                                 double threshold = 1e-8);
// Largest |Psi(0, x)| for x <= -x_cut relative to the largest |Psi(0, x)| for x > 0.
double left_leakage(const ShellAmplitude& g, const HalfLineGrid& grid = {}, double x_cut = 0.0);

RapiditySpectrum hamiltonian_apply(const RapiditySpectrum& gh);
// -i d/d alpha by centered differences.
ShellAmplitude hamiltonian_fd(const ShellAmplitude& g);

RapiditySpectrum negative_projection(const RapiditySpectrum& gh);
RapiditySpectrum positive_projection(const RapiditySpectrum& gh);

struct ThermalWeights {
  double range = 0.0;
  double kernel = 0.5;
};
ThermalWeights thermal_weights(double beta_temp, double ell);
Mat2 thermal_matrix(double beta_temp, double ell);
RapiditySpectrum thermal_weight(double beta_temp, const RapiditySpectrum& gh);

struct SigresReport {
  double max_residual = 0.0;
  double transverse_eigenvalue = 0.0;
  double m_tilde = 0.0;
  std::size_t points = 0;
};
// Compares S^a with -H/(pi m~) - lambda_T/(2 pi m m~) on the range subspace.
SigresReport sigres_check_4d(const RapiditySpectrum& gh, const TransverseData& td);

}  // namespace sigop
