// SPDX-License-Identifier: Apache-2.0
#include "sigop/momentum_rep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fourier.hpp"
#include "sigop/error.hpp"

namespace sigop {

namespace {

constexpr double pi = std::numbers::pi;
constexpr cplx I{0.0, 1.0};

bool is_pow2(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

void check_same_grid(const RapidityGrid& a, const RapidityGrid& b) {
  if (!(a == b)) fail(errc::grid_mismatch, "rapidity grids differ");
}

void check_shape(const ShellAmplitude& g) {
  validate(g.grid);
  if (g.plus.size() != g.grid.n || g.minus.size() != g.grid.n)
    fail(errc::invalid_argument, "amplitude sample count does not match its grid");
}

double max_abs(const ShellAmplitude& g) {
  double m = 0.0;
  for (const auto& v : g.plus) m = std::max(m, std::abs(v));
  for (const auto& v : g.minus) m = std::max(m, std::abs(v));
  return m;
}

// Running exp(i phi0 + i j dphi) with periodic resynchronization.
template <class F>
void phase_walk(double phi0, double dphi, std::size_t count, F&& f) {
  const cplx w = std::polar(1.0, dphi);
  cplx z;
  for (std::size_t j = 0; j < count; ++j) {
    if ((j & 255) == 0)
      z = std::polar(1.0, phi0 + double(j) * dphi);
    f(j, z);
    z *= w;
  }
}

}  // namespace

double RapidityGrid::dell() const { return 2.0 * pi / (double(n) * h()); }
double RapidityGrid::ell(std::size_t i) const { return (double(i) - double(n / 2)) * dell(); }

void validate(const RapidityGrid& grid) {
  if (!is_pow2(grid.n)) fail(errc::invalid_argument, "grid size must be a power of two");
  if (!(grid.alpha_max > grid.alpha_min) || !std::isfinite(grid.alpha_min) || !std::isfinite(grid.alpha_max))
    fail(errc::invalid_argument, "invalid rapidity interval");
}

void validate(const PacketSpec& spec) {
  if (!(spec.mass > 0.0) || !std::isfinite(spec.mass)) fail(errc::invalid_argument, "mass must be positive");
  if (!(spec.width > 0.0) || !std::isfinite(spec.width)) fail(errc::invalid_argument, "profile width must be positive");
  if (spec.weight_plus == 0.0 && spec.weight_minus == 0.0)
    fail(errc::invalid_argument, "branch weights are both zero");
  if (!std::isfinite(spec.center)) fail(errc::invalid_argument, "profile center must be finite");
}

ShellAmplitude zero_amplitude(double mass, const RapidityGrid& grid) {
  validate(grid);
  if (!(mass > 0.0)) fail(errc::invalid_argument, "mass must be positive");
  return {mass, grid, std::vector<cplx>(grid.n), std::vector<cplx>(grid.n)};
}

double endpoint_ratio(const ShellAmplitude& g) {
  check_shape(g);
  const double top = max_abs(g);
  if (top == 0.0) return 0.0;
  const std::size_t last = g.grid.n - 1;
  const double edge = std::max({std::abs(g.plus[0]), std::abs(g.plus[last]), std::abs(g.minus[0]),
                                std::abs(g.minus[last])});
  return edge / top;
}

void check_truncation(const ShellAmplitude& g, double threshold) {
  if (endpoint_ratio(g) > threshold)
    fail(errc::domain_violation, "amplitude has not decayed at the rapidity grid boundary");
}

cplx hilbert_inner(const ShellAmplitude& g, const ShellAmplitude& gt) {
  check_shape(g);
  check_shape(gt);
  check_same_grid(g.grid, gt.grid);
  if (g.mass != gt.mass) fail(errc::grid_mismatch, "masses differ");
  cplx acc = 0.0;
  for (std::size_t j = 0; j < g.grid.n; ++j)
    acc += std::conj(g.plus[j]) * gt.plus[j] + std::conj(g.minus[j]) * gt.minus[j];
  return acc * g.grid.h() / (4.0 * g.mass);
}

double hilbert_norm2(const ShellAmplitude& g) { return hilbert_inner(g, g).real(); }

RapiditySpectrum to_rapidity_spectrum(const ShellAmplitude& g) {
  check_shape(g);
  const auto& grid = g.grid;
  const std::size_t n = grid.n;
  RapiditySpectrum out{g.mass, grid, std::vector<cplx>(n), std::vector<cplx>(n)};
  const double c = grid.h() / std::sqrt(8.0 * pi * g.mass);
  for (int s : {1, -1}) {
    std::vector<cplx> buf = g.branch(s);
    detail::dft(buf, +1);
    auto& dst = out.branch(s);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t k = (i + n / 2) % n;
      dst[i] = c * std::polar(1.0, grid.ell(i) * grid.alpha_min) * buf[k];
    }
  }
  return out;
}

ShellAmplitude from_rapidity_spectrum(const RapiditySpectrum& gh) {
  validate(gh.grid);
  const auto& grid = gh.grid;
  const std::size_t n = grid.n;
  if (gh.plus.size() != n || gh.minus.size() != n)
    fail(errc::invalid_argument, "spectrum sample count does not match its grid");
  ShellAmplitude out{gh.mass, grid, std::vector<cplx>(n), std::vector<cplx>(n)};
  const double c = std::sqrt(2.0 * gh.mass / pi) * grid.dell();
  for (int s : {1, -1}) {
    const auto& src = gh.branch(s);
    std::vector<cplx> buf(n);
    for (std::size_t i = 0; i < n; ++i)
      buf[(i + n / 2) % n] = src[i] * std::polar(1.0, -grid.ell(i) * grid.alpha_min);
    detail::dft(buf, -1);
    auto& dst = out.branch(s);
    for (std::size_t j = 0; j < n; ++j) dst[j] = c * buf[j];
  }
  return out;
}

cplx spectral_inner(const RapiditySpectrum& a, const RapiditySpectrum& b) {
  check_same_grid(a.grid, b.grid);
  if (a.plus.size() != b.plus.size() || a.minus.size() != b.minus.size())
    fail(errc::grid_mismatch, "spectrum sizes differ");
  cplx acc = 0.0;
  for (std::size_t i = 0; i < a.plus.size(); ++i)
    acc += std::conj(a.plus[i]) * b.plus[i] + std::conj(a.minus[i]) * b.minus[i];
  return acc * a.grid.dell();
}

ShellAmplitude pad_amplitude(const ShellAmplitude& g, std::size_t factor) {
  check_shape(g);
  if (!is_pow2(factor) && factor != 1) fail(errc::invalid_argument, "pad factor must be a power of two");
  RapidityGrid grid{g.grid.alpha_min, g.grid.alpha_min + double(factor) * (g.grid.alpha_max - g.grid.alpha_min),
                    g.grid.n * factor};
  ShellAmplitude out = zero_amplitude(g.mass, grid);
  std::copy(g.plus.begin(), g.plus.end(), out.plus.begin());
  std::copy(g.minus.begin(), g.minus.end(), out.minus.begin());
  return out;
}

ShellAmplitude upsample_amplitude(const ShellAmplitude& g, std::size_t factor) {
  check_shape(g);
  if (factor == 1) return g;
  if (!is_pow2(factor)) fail(errc::invalid_argument, "upsampling factor must be a power of two");
  const RapiditySpectrum gh = to_rapidity_spectrum(g);
  const std::size_t n = g.grid.n, nf = n * factor, shift = (nf - n) / 2;
  RapiditySpectrum fine{g.mass, RapidityGrid{g.grid.alpha_min, g.grid.alpha_max, nf},
                        std::vector<cplx>(nf), std::vector<cplx>(nf)};
  for (int s : {1, -1})
    std::copy(gh.branch(s).begin(), gh.branch(s).end(), fine.branch(s).begin() + long(shift));
  return from_rapidity_spectrum(fine);
}

ShellAmplitude generate_packet(const PacketSpec& spec, const RapidityGrid& grid, double threshold) {
  validate(spec);
  ShellAmplitude g = zero_amplitude(spec.mass, grid);
  const double sig = spec.width;
  for (std::size_t j = 0; j < grid.n; ++j) {
    const double a = grid.alpha(j);
    cplx profile;
    if (spec.space == ProfileSpace::ell) {
      // inverse transform of exp(-(ell - ell0)^2 / (2 sigma^2))
      profile = 2.0 * sig * std::sqrt(spec.mass) * std::exp(-0.5 * sig * sig * a * a) *
                std::polar(1.0, -spec.center * a);
    } else {
      const double d = (a - spec.center) / sig;
      profile = std::exp(-0.5 * d * d);
    }
    g.plus[j] = spec.weight_plus * profile;
    g.minus[j] = spec.weight_minus * profile;
  }
  if (endpoint_ratio(g) > threshold)
    fail(errc::profile_too_wide, "packet profile does not decay within the rapidity grid");
  return g;
}

double packet_norm2(const PacketSpec& spec) {
  validate(spec);
  const double w = std::norm(spec.weight_plus) + std::norm(spec.weight_minus);
  const double base = w * spec.width * std::sqrt(pi);
  return spec.space == ProfileSpace::ell ? base : base / (4.0 * spec.mass);
}

namespace {

void check_samples(const SpinorSamples& d) {
  if (d.values.empty()) fail(errc::invalid_argument, "empty spinor samples");
  if (!(d.dx > 0.0) || !std::isfinite(d.x0)) fail(errc::invalid_argument, "invalid sample grid");
  for (const auto& v : d.values)
    if (!v.allFinite()) fail(errc::invalid_argument, "spinor samples must be finite");
}

double sample_max(const SpinorSamples& d) {
  double m = 0.0;
  for (const auto& v : d.values) m = std::max(m, v.norm());
  return m;
}

void check_decay(const SpinorSamples& d, double threshold) {
  const double top = sample_max(d);
  if (top == 0.0) return;
  const double edge = std::max(d.values.front().norm(), d.values.back().norm());
  if (edge > threshold * top) fail(errc::domain_violation, "Cauchy data have not decayed at the grid boundary");
}

// dx sum_j v_j exp(-i k x_j)
Spinor2 fourier_at(const SpinorSamples& d, double k) {
  cplx a0 = 0.0, a1 = 0.0;
  phase_walk(-k * d.x0, -k * d.dx, d.size(), [&](std::size_t j, cplx z) {
    a0 += d.values[j](0) * z;
    a1 += d.values[j](1) * z;
  });
  return Spinor2(a0 * d.dx, a1 * d.dx);
}

template <class PhiHat1>
ShellAmplitude amplitude_from_transforms(const SpinorSamples& data0, PhiHat1&& phihat1, double mass,
                                         const RapidityGrid& grid, double threshold) {
  ShellAmplitude g = zero_amplitude(mass, grid);
  const double k_band = pi / data0.dx;
  for (int s : {1, -1}) {
    auto& dst = g.branch(s);
    std::size_t first = grid.n, last = 0;
    for (std::size_t j = 0; j < grid.n; ++j) {
      const auto p = make_shell_point(s, grid.alpha(j), mass);
      const double k = p.k();
      if (std::abs(k) >= k_band) continue;
      first = std::min(first, j);
      last = j;
      const Spinor2 f0 = fourier_at(data0, k);
      const Spinor2 f1 = phihat1(k, f0);
      const Spinor2 v = std::abs(p.omega()) * f0 + double(s) * f1;
      dst[j] = spin_inner(basis_spinor(p), v);
    }
    if (first > last) continue;
    // spectrum must be negligible where the sampling band cuts off the rapidity grid
    double top = 0.0;
    for (const auto& v : dst) top = std::max(top, std::abs(v));
    if (top == 0.0) continue;
    const bool cut_low = first > 0, cut_high = last + 1 < grid.n;
    if ((cut_low && std::abs(dst[first]) > threshold * top) || (cut_high && std::abs(dst[last]) > threshold * top))
      fail(errc::out_of_range, "spatial sampling too coarse for the momentum content of the data");
  }
  return g;
}

}  // namespace

ShellAmplitude amplitude_from_cauchy(const SpinorSamples& data0, const SpinorSamples& data1, double mass,
                                     const RapidityGrid& grid, double threshold) {
  check_samples(data0);
  check_samples(data1);
  if (data0.size() != data1.size() || data0.x0 != data1.x0 || data0.dx != data1.dx)
    fail(errc::grid_mismatch, "Cauchy data are sampled on different grids");
  check_decay(data0, threshold);
  check_decay(data1, threshold);
  // transform of i d_t Psi
  return amplitude_from_transforms(
      data0, [&](double k, const Spinor2&) -> Spinor2 { return I * fourier_at(data1, k); }, mass, grid,
      threshold);
}

ShellAmplitude amplitude_from_initial_data(const SpinorSamples& data0, double mass, const RapidityGrid& grid,
                                           double threshold) {
  check_samples(data0);
  check_decay(data0, threshold);
  const auto [g0, g1] = gamma_matrices();
  // i d_t Psi = gamma^0 (m + k gamma^1) Psi in momentum space
  return amplitude_from_transforms(
      data0,
      [&](double k, const Spinor2& f0) -> Spinor2 {
        return g0 * (mass * Mat2::Identity() + k * g1) * f0;
      },
      mass, grid, threshold);
}

namespace {

// Indices carrying non-negligible amplitude on either branch.
std::pair<std::size_t, std::size_t> support(const ShellAmplitude& g, double rel) {
  const double cut = rel * max_abs(g);
  std::size_t lo = g.grid.n, hi = 0;
  for (std::size_t j = 0; j < g.grid.n; ++j)
    if (std::abs(g.plus[j]) > cut || std::abs(g.minus[j]) > cut) {
      lo = std::min(lo, j);
      hi = j;
    }
  return {lo, hi};
}

// sum_s (s / 4 pi) h sum_alpha g f (factor) e^{-i(omega t - k x_j)}
template <class Factor>
SpinorSamples line_sum(const ShellAmplitude& g, double t, double x0, double dx, std::size_t count,
                       Factor&& factor) {
  check_shape(g);
  SpinorSamples out{x0, dx, std::vector<Spinor2>(count, Spinor2::Zero())};
  std::vector<cplx> acc0(count), acc1(count);
  const double h = g.grid.h();
  for (int s : {1, -1}) {
    const auto& src = g.branch(s);
    for (std::size_t j = 0; j < g.grid.n; ++j) {
      if (src[j] == 0.0) continue;
      const auto p = make_shell_point(s, g.grid.alpha(j), g.mass);
      const Spinor2 f = basis_spinor(p);
      const cplx c = double(s) / (4.0 * pi) * h * src[j] * factor(p) * std::polar(1.0, -p.omega() * t);
      const cplx c0 = c * f(0), c1 = c * f(1);
      const double k = p.k();
      phase_walk(k * x0, k * dx, count, [&](std::size_t i, cplx z) {
        acc0[i] += c0 * z;
        acc1[i] += c1 * z;
      });
    }
  }
  for (std::size_t i = 0; i < count; ++i) out.values[i] = Spinor2(acc0[i], acc1[i]);
  return out;
}

}  // namespace

ReconstructionCheck reconstruction_check(const ShellAmplitude& g, double t, double x) {
  check_shape(g);
  ReconstructionCheck r;
  const auto [lo, hi] = support(g, 1e-13);
  if (lo > hi) return r;
  const double a = std::max(std::abs(g.grid.alpha(lo)), std::abs(g.grid.alpha(hi)));
  r.phase_step = g.mass * std::cosh(a) * (std::abs(t) + std::abs(x)) * g.grid.h();
  r.aliasing_risk = r.phase_step > pi;
  return r;
}

Spinor2 reconstruct_position(const ShellAmplitude& g, double t, double x, ReconstructionCheck* check) {
  if (check) *check = reconstruction_check(g, t, x);
  return line_sum(g, t, x, 1.0, 1, [](const MassShellPoint&) { return cplx(1.0); }).values[0];
}

SpinorSamples reconstruct_line(const ShellAmplitude& g, double t, double x0, double dx, std::size_t count) {
  return line_sum(g, t, x0, dx, count, [](const MassShellPoint&) { return cplx(1.0); });
}

SpinorSamples reconstruct_line_dt(const ShellAmplitude& g, double t, double x0, double dx, std::size_t count) {
  return line_sum(g, t, x0, dx, count, [](const MassShellPoint& p) { return -I * p.omega(); });
}

cplx cauchy_inner(const SpinorSamples& a, const SpinorSamples& b) {
  if (a.size() != b.size() || a.x0 != b.x0 || a.dx != b.dx)
    fail(errc::grid_mismatch, "spinor samples are on different grids");
  cplx acc = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j)
    acc += std::conj(a.values[j](0)) * b.values[j](0) + std::conj(a.values[j](1)) * b.values[j](1);
  return 2.0 * pi * a.dx * acc;
}

}  // namespace sigop

namespace sigop {

void validate(const HalfLineGrid& grid) {
  if (!(grid.x_max > 0.0) || !std::isfinite(grid.x_max) || grid.count < 2)
    fail(errc::invalid_argument, "invalid half-line grid");
  if (!(grid.x_min >= 0.0) || grid.x_min >= grid.x_max) fail(errc::invalid_argument, "invalid inner cutoff");
}

}  // namespace sigop
