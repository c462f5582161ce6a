// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sigop/minkowski_embedding.hpp"
#include "sigop/momentum_rep.hpp"

namespace sigop {

// Polynomial (Richardson) extrapolation of a regulated quantity to eps = 0.
struct ExtrapolationLadder {
  std::vector<double> eps{0.2, 0.1, 0.05, 0.025};
  int levels = 2;
  std::vector<cplx> values;
  cplx extrapolated;
  double error_estimate = 0.0;
  std::vector<double> level_errors;  // |T_k - T_{k-1}| on the last row, k = 1..levels
  bool monotone = false;
};

void validate(const ExtrapolationLadder& ladder);
ExtrapolationLadder make_ladder(std::vector<double> eps, int levels);
ExtrapolationLadder fine_ladder();
// Fills values, extrapolates and fails with errc::convergence if the error estimates do not decrease.
ExtrapolationLadder run_ladder(ExtrapolationLadder ladder, const std::function<cplx(double)>& f);
void extrapolate(ExtrapolationLadder& ladder);

struct QuadratureResult {
  cplx value;
  cplx reference;
  double deviation = 0.0;
  double error_estimate = 0.0;
};

cplx residue_closed_odd(double ell);
cplx residue_closed_even(double ell, int s);

QuadratureResult residue_oracle_odd(double ell, double cutoff = 40.0);

struct LadderResult {
  cplx value;
  cplx reference;
  double deviation = 0.0;
  ExtrapolationLadder ladder;
};

LadderResult residue_oracle_even(double ell, int s, const ExtrapolationLadder& ladder = fine_ladder(),
                                 double cutoff = 40.0);

// Closed form of the plane-wave transform of the kernel, i.e. the (s, st) entry of S_R(ell).
cplx diagonalization_closed(double ell, int s, int st, double mass);

struct DiagonalizationResult {
  std::vector<double> probes;
  std::vector<LadderResult> per_probe;
  cplx value;  // mean over probes
  cplx reference;
  double deviation = 0.0;
  double alpha_spread = 0.0;  // max deviation between probes
};

DiagonalizationResult diagonalization_oracle(double ell, int s, int st, double mass = 1.0,
                                             const std::vector<double>& probes = {-2.0, 0.0, 3.0},
                                             const ExtrapolationLadder& ladder = fine_ladder(),
                                             double alpha_tolerance = 1e-6, double cutoff = 40.0);
// The same transform for the 4D kernel of channel td.a.
DiagonalizationResult diagonalization_oracle_4d(double ell, int s, int st, const TransverseData& td,
                                                double probe = 0.0,
                                                const ExtrapolationLadder& ladder = fine_ladder(),
                                                double cutoff = 40.0);

// Double rapidity integral of the regulated kernel, convolved by FFT on a refined grid.
cplx double_integral_pairing(const ShellAmplitude& g, const ShellAmplitude& gt, double eps, std::size_t refine = 4);

struct CrosscheckOptions {
  WedgeQuadratureGrid wedge;
  ExtrapolationLadder ladder = make_ladder({0.05, 0.025, 0.0125, 0.00625}, 3);
  std::size_t kernel_refine = 4;
  std::size_t spectral_pad = 4;
  double tolerance = 1e-3;
};

struct CrosscheckReport {
  cplx wedge;     // (a) position-space quadrature
  cplx kernel;    // (b) regulated double integral
  cplx spectral;  // (c) ell-space multiplication
  double tail_bound = 0.0;
  double ladder_error = 0.0;
  double dev_ab = 0.0, dev_ac = 0.0, dev_bc = 0.0;
  double scale = 0.0;  // deviations are relative to max(|legs|, scale)
  bool pass = false;
};

// Crosscheck for the requested index pairs; the wedge leg is computed in a single sweep.
std::vector<CrosscheckReport> pairing_crosscheck(const std::vector<ShellAmplitude>& packets,
                                                 const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                                 const CrosscheckOptions& options = {});
CrosscheckReport pairing_crosscheck(const ShellAmplitude& g, const ShellAmplitude& gt,
                                    const CrosscheckOptions& options = {});

// Packets used for the default crosscheck.
std::vector<PacketSpec> default_crosscheck_packets();

}  // namespace sigop
