// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "sigop/momentum_rep.hpp"

namespace sigop {

// Cauchy data on {t = 0, x > 0}, sampled at x_j = j dx, j = 1..count.
struct HalfLineDatum {
  HalfLineGrid grid;
  std::vector<Spinor2> values;

  double x(std::size_t i) const { return double(i + 1) * grid.dx(); }
};

void validate(const HalfLineDatum& d, double threshold = 1e-10);

HalfLineDatum gaussian_bump(const HalfLineGrid& grid, double center, double width, const Spinor2& spinor);
// 2 pi integral over x > 0 of <d | gamma^0 d~>
cplx half_line_inner(const HalfLineDatum& a, const HalfLineDatum& b);

ShellAmplitude extend_by_zero(const HalfLineDatum& d, double mass, const RapidityGrid& grid = {},
                              double threshold = 1e-10);
HalfLineDatum restrict_to_halfline(const ShellAmplitude& g, const HalfLineGrid& grid = {});

// Psi(t, x) -> i gamma^0 gamma^1 Psi(-t, -x); squares to -1.
ShellAmplitude cpt_transform(const ShellAmplitude& g);
// Psi(t, x) -> gamma^0 gamma^1 Psi(-t, -x); squares to +1.
ShellAmplitude cpt_transform_plain(const ShellAmplitude& g);

// Phi(t, x) -> Phi(t, x - shift)
ShellAmplitude translate(const ShellAmplitude& g, double shift);

struct WedgeQuadratureGrid {
  double t_max = 40.0;
  double x_max = 60.0;
  std::size_t t_panels = 32;
  std::size_t y_panels = 32;
  std::size_t points = 64;  // Gauss-Legendre nodes per panel and direction
  std::size_t refine = 1;   // spectral refinement of the rapidity grid
  double tail_tolerance = 1e-4;

  double y_max() const { return x_max - t_max; }
  std::size_t nodes() const { return t_panels * y_panels * points * points; }
};

void validate(const WedgeQuadratureGrid& grid);

struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};
// Composite Gauss-Legendre rule on [a, b].
GaussRule composite_gauss(double a, double b, std::size_t panels, std::size_t points);

struct WedgeResult {
  cplx value;
  double tail_bound = 0.0;
  std::size_t nodes = 0;
  double t_max = 0.0;
  double x_max = 0.0;
};

// Integral of <Psi | Phi> over the truncated wedge, x = |t| + y with 0 < y < x_max - t_max.
WedgeResult wedge_inner_oracle(const ShellAmplitude& g, const ShellAmplitude& gt,
                               const WedgeQuadratureGrid& grid = {});

// All pairwise wedge integrals in one sweep; entry (i, j) pairs packets i and j.
struct WedgeGram {
  std::vector<std::vector<WedgeResult>> entries;
};
WedgeGram wedge_gram(const std::vector<ShellAmplitude>& packets, const WedgeQuadratureGrid& grid = {},
                     bool check_tail = true);

struct DecayReport {
  std::vector<double> times;
  std::vector<double> sup_norm;  // sup_{x >= |t|} |Psi(t, x)|
  std::vector<double> weighted;  // sup_norm (1 + |t|^p)
  double bound = 0.0;            // max of weighted
  bool non_increasing = false;
  int p = 2;
};
DecayReport null_decay_check(const ShellAmplitude& g, const std::vector<double>& times, int p,
                             double x_extent = 40.0, std::size_t samples = 4001);

struct RayleighEntry {
  double shift = 0.0;
  double norm2 = 0.0;
  cplx pairing;
  double quotient = 0.0;
};
std::vector<RayleighEntry> rayleigh_quotient_scan(const PacketSpec& spec, const std::vector<double>& shifts,
                                                  const RapidityGrid& grid = {});

struct RindlerPoint {
  double tau = 0.0;
  double rho = 1.0;
};
RindlerPoint rindler_coords(double t, double x);
std::pair<double, double> from_rindler(const RindlerPoint& p);

}  // namespace sigop
