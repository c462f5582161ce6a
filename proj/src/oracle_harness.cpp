// SPDX-License-Identifier: Apache-2.0
#include "sigop/oracle_harness.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fourier.hpp"
#include "sigop/error.hpp"
#include "sigop/signature_operator.hpp"

namespace sigop {

namespace {

constexpr double pi = std::numbers::pi;
constexpr cplx I{0.0, 1.0};

using gk = boost::math::quadrature::gauss_kronrod<double, 61>;
using gk_low = boost::math::quadrature::gauss_kronrod<double, 31>;

struct Integral {
  cplx value;
  double error = 0.0;
  double l1 = 0.0;

  bool converged(double rel) const { return error <= rel * (1.0 + l1); }
};

// Fixed Kronrod rules on consecutive breakpoints; the 31-point result serves as the error estimate.
// Adaptive refinement is avoided: its accumulated per-panel error floors swamp the estimate.
template <class F>
Integral integrate_panels(F&& f, const std::vector<double>& points) {
  Integral r;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    double l1 = 0.0;
    const cplx hi = gk::integrate(f, points[i], points[i + 1], 0, 0.0, nullptr, &l1);
    const cplx lo = gk_low::integrate(f, points[i], points[i + 1], 0, 0.0);
    r.value += hi;
    r.error += std::abs(hi - lo);
    r.l1 += l1;
  }
  return r;
}

// Breakpoints on [c - cutoff, c + cutoff], graded geometrically towards c down to scale / 4.
std::vector<double> graded_points(double c, double cutoff, double scale, double unit) {
  std::vector<double> off;
  if (scale > 0.0)
    for (double d = 0.25 * scale; d < unit; d *= 2.0) off.push_back(d);
  for (double d = unit; d < cutoff; d += unit) off.push_back(d);
  off.push_back(cutoff);
  std::vector<double> pts;
  for (auto it = off.rbegin(); it != off.rend(); ++it) pts.push_back(c - *it);
  pts.push_back(c);
  for (double d : off) pts.push_back(c + d);
  return pts;
}

// 2 pi x / (1 + e^{-2 pi x})
double fermi_ramp(double x) {
  if (x >= 0.0) return 2.0 * pi * x / (1.0 + std::exp(-2.0 * pi * x));
  const double e = std::exp(2.0 * pi * x);
  return 2.0 * pi * x * e / (1.0 + e);
}

double rel_dev(cplx x, cplx y, double floor) {
  return std::abs(x - y) / std::max({std::abs(x), std::abs(y), floor});
}

}  // namespace

void validate(const ExtrapolationLadder& ladder) {
  if (ladder.eps.size() < 2) fail(errc::invalid_argument, "ladder needs at least two regulator values");
  for (std::size_t i = 0; i < ladder.eps.size(); ++i) {
    if (!(ladder.eps[i] > 0.0)) fail(errc::invalid_argument, "regulator values must be positive");
    if (i > 0 && !(ladder.eps[i] < ladder.eps[i - 1]))
      fail(errc::invalid_argument, "regulator values must be strictly decreasing");
  }
  if (ladder.levels < 1 || std::size_t(ladder.levels) >= ladder.eps.size())
    fail(errc::invalid_argument, "extrapolation levels must be between 1 and the ladder length - 1");
}

ExtrapolationLadder make_ladder(std::vector<double> eps, int levels) {
  ExtrapolationLadder l;
  l.eps = std::move(eps);
  l.levels = levels;
  validate(l);
  return l;
}

ExtrapolationLadder fine_ladder() { return make_ladder({0.04, 0.02, 0.01, 0.005, 0.0025}, 4); }

void extrapolate(ExtrapolationLadder& ladder) {
  validate(ladder);
  const std::size_t n = ladder.eps.size();
  if (ladder.values.size() != n) fail(errc::invalid_argument, "ladder values missing");
  const auto L = std::size_t(ladder.levels);
  // Neville table for the value of the interpolating polynomial at eps = 0
  std::vector<std::vector<cplx>> T(n, std::vector<cplx>(L + 1));
  for (std::size_t i = 0; i < n; ++i) {
    T[i][0] = ladder.values[i];
    for (std::size_t k = 1; k <= std::min(i, L); ++k) {
      const double e0 = ladder.eps[i - k], e1 = ladder.eps[i];
      T[i][k] = T[i][k - 1] + (T[i][k - 1] - T[i - 1][k - 1]) * e1 / (e0 - e1);
    }
  }
  const auto& last = T[n - 1];
  ladder.extrapolated = last[L];
  ladder.level_errors.clear();
  for (std::size_t k = 1; k <= L; ++k) ladder.level_errors.push_back(std::abs(last[k] - last[k - 1]));
  ladder.error_estimate = ladder.level_errors.back();
  double top = 0.0;
  for (const auto& v : ladder.values) top = std::max(top, std::abs(v));
  const double noise = 1e-13 * top + 1e-15;
  ladder.monotone = true;
  for (std::size_t k = 1; k < ladder.level_errors.size(); ++k)
    if (ladder.level_errors[k] > ladder.level_errors[k - 1] && ladder.level_errors[k] > noise) ladder.monotone = false;
}

ExtrapolationLadder run_ladder(ExtrapolationLadder ladder, const std::function<cplx(double)>& f) {
  validate(ladder);
  ladder.values.clear();
  for (double e : ladder.eps) ladder.values.push_back(f(e));
  extrapolate(ladder);
  if (!ladder.monotone) fail(errc::convergence, "extrapolation error estimates do not decrease along the ladder");
  return ladder;
}

cplx residue_closed_odd(double ell) { return I * pi * ell / std::cosh(pi * ell); }

cplx residue_closed_even(double ell, int s) { return fermi_ramp(s * ell); }

QuadratureResult residue_oracle_odd(double ell, double cutoff) {
  auto f = [ell](double b) -> cplx {
    // sinh b / (1 + cosh 2b) = sinh b / (2 cosh^2 b)
    const double c = std::cosh(b);
    return std::sinh(b) / (2.0 * c * c) * std::polar(1.0, 2.0 * ell * b);
  };
  const Integral in = integrate_panels(f, graded_points(0.0, cutoff, 0.0, 1.0));
  QuadratureResult r;
  r.value = in.value;
  r.reference = residue_closed_odd(ell);
  r.deviation = std::abs(r.value - r.reference);
  r.error_estimate = in.error + 2.0 * std::exp(-cutoff);
  if (!in.converged(1e-10)) fail(errc::convergence, "odd residue quadrature did not converge");
  return r;
}

LadderResult residue_oracle_even(double ell, int s, const ExtrapolationLadder& ladder, double cutoff) {
  auto at = [&](double eps) {
    auto f = [=](double b) -> cplx {
      // 1 - cosh 2z = -2 sinh^2 z, free of cancellation near the pole
      const cplx z(b, -0.5 * eps * s);
      const cplx sh = std::sinh(z);
      return std::cosh(z) / (-2.0 * sh * sh) * std::polar(1.0, 2.0 * ell * b);
    };
    const Integral in = integrate_panels(f, graded_points(0.0, cutoff, eps, 1.0));
    if (!in.converged(1e-10)) fail(errc::convergence, "even residue quadrature did not converge");
    return in.value;
  };
  LadderResult r;
  r.ladder = run_ladder(ladder, at);
  r.value = r.ladder.extrapolated;
  r.reference = residue_closed_even(ell, s);
  r.deviation = std::abs(r.value - r.reference);
  return r;
}

cplx diagonalization_closed(double ell, int s, int st, double mass) { return sig_matrix(ell, mass)(s > 0 ? 0 : 1, st > 0 ? 0 : 1); }

namespace {

LadderResult diagonalize_at(double ell, double alpha, const std::function<cplx(double, double)>& kernel,
                            const ExtrapolationLadder& ladder, double cutoff) {
  auto at = [&](double eps) {
    auto f = [&](double at_) -> cplx { return kernel(at_, eps) * std::polar(1.0, -ell * at_); };
    // beta = (alpha - alpha~) / 2: the cutoff and grading are in alpha~ units
    const Integral in = integrate_panels(f, graded_points(alpha, 2.0 * cutoff, 2.0 * eps, 2.0));
    if (!in.converged(1e-10)) fail(errc::convergence, "kernel transform quadrature did not converge");
    return in.value * std::polar(1.0, ell * alpha);
  };
  LadderResult r;
  r.ladder = run_ladder(ladder, at);
  r.value = r.ladder.extrapolated;
  return r;
}

}  // namespace

DiagonalizationResult diagonalization_oracle(double ell, int s, int st, double mass, const std::vector<double>& probes,
                                             const ExtrapolationLadder& ladder, double alpha_tolerance,
                                             double cutoff) {
  if (probes.empty()) fail(errc::invalid_argument, "need at least one probe rapidity");
  DiagonalizationResult r;
  r.probes = probes;
  r.reference = diagonalization_closed(ell, s, st, mass);
  for (double a : probes) {
    auto kernel = [=](double at_, double eps) { return kernel_I(s, a, st, at_, eps, mass); };
    LadderResult lr = diagonalize_at(ell, a, kernel, ladder, cutoff);
    lr.reference = r.reference;
    lr.deviation = std::abs(lr.value - r.reference);
    r.value += lr.value;
    r.per_probe.push_back(lr);
  }
  r.value /= double(probes.size());
  for (const auto& x : r.per_probe)
    for (const auto& y : r.per_probe) r.alpha_spread = std::max(r.alpha_spread, std::abs(x.value - y.value));
  r.deviation = 0.0;
  for (const auto& x : r.per_probe) r.deviation = std::max(r.deviation, x.deviation);
  if (r.alpha_spread > alpha_tolerance) fail(errc::convergence, "kernel transform depends on the probe rapidity");
  return r;
}

DiagonalizationResult diagonalization_oracle_4d(double ell, int s, int st, const TransverseData& td, double probe,
                                                const ExtrapolationLadder& ladder, double cutoff) {
  DiagonalizationResult r;
  r.probes = {probe};
  auto kernel = [&](double at_, double eps) { return kernel_I_4d(s, probe, st, at_, eps, td); };
  LadderResult lr = diagonalize_at(ell, probe, kernel, ladder, cutoff);
  r.value = lr.value;
  r.per_probe.push_back(lr);
  return r;
}

cplx double_integral_pairing(const ShellAmplitude& g0, const ShellAmplitude& gt0, double eps, std::size_t refine) {
  if (!(eps > 0.0)) fail(errc::invalid_argument, "regulator must be positive");
  if (!(g0.grid == gt0.grid) || g0.mass != gt0.mass) fail(errc::grid_mismatch, "packets must share grid and mass");
  const ShellAmplitude g = upsample_amplitude(g0, refine);
  const ShellAmplitude gt = upsample_amplitude(gt0, refine);
  const std::size_t n = g.grid.n, m2 = 2 * n;
  const double h = g.grid.h(), mass = g.mass;
  std::vector<cplx> gt_hat[2];
  for (int b = 0; b < 2; ++b) {
    gt_hat[b].assign(m2, 0.0);
    const auto& src = gt.branch(b == 0 ? 1 : -1);
    std::copy(src.begin(), src.end(), gt_hat[b].begin());
    detail::dft(gt_hat[b], -1);
  }
  cplx total = 0.0;
  for (int b = 0; b < 2; ++b) {
    const int s = b == 0 ? 1 : -1;
    std::vector<cplx> conv(m2, 0.0);
    for (int bt = 0; bt < 2; ++bt) {
      const int st = bt == 0 ? 1 : -1;
      // kernel at lag d = alpha - alpha~, wrapped for a linear convolution
      std::vector<cplx> ker(m2, 0.0);
      for (std::size_t j = 0; j < n; ++j) ker[j] = kernel_I(s, double(j) * h, st, 0.0, eps, mass);
      for (std::size_t j = 1; j < n; ++j) ker[m2 - j] = kernel_I(s, -double(j) * h, st, 0.0, eps, mass);
      detail::dft(ker, -1);
      for (std::size_t j = 0; j < m2; ++j) conv[j] += ker[j] * gt_hat[bt][j];
    }
    detail::dft(conv, +1);
    const auto& gs = g.branch(s);
    cplx acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += std::conj(gs[j]) * conv[j];
    total += acc / double(m2);
  }
  return total * h * h / (4.0 * mass);
}

std::vector<CrosscheckReport> pairing_crosscheck(const std::vector<ShellAmplitude>& packets,
                                                 const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                                 const CrosscheckOptions& options) {
  for (const auto& [i, j] : pairs)
    if (i >= packets.size() || j >= packets.size()) fail(errc::invalid_argument, "pair index out of range");
  const WedgeGram gram = wedge_gram(packets, options.wedge);
  std::vector<CrosscheckReport> out;
  for (const auto& [i, j] : pairs) {
    const auto& g = packets[i];
    const auto& gt = packets[j];
    CrosscheckReport r;
    const WedgeResult& w = gram.entries[i][j];
    r.wedge = w.value;
    r.tail_bound = w.tail_bound;
    const ExtrapolationLadder lad = run_ladder(
        options.ladder, [&](double eps) { return double_integral_pairing(g, gt, eps, options.kernel_refine); });
    r.kernel = lad.extrapolated;
    r.ladder_error = lad.error_estimate;
    r.spectral = spectral_pairing(g, gt, options.spectral_pad);
    r.scale = 1e-4 * std::sqrt(hilbert_norm2(g) * hilbert_norm2(gt)) / g.mass;
    r.dev_ab = rel_dev(r.wedge, r.kernel, r.scale);
    r.dev_ac = rel_dev(r.wedge, r.spectral, r.scale);
    r.dev_bc = rel_dev(r.kernel, r.spectral, r.scale);
    r.pass = r.dev_ab <= options.tolerance && r.dev_ac <= options.tolerance && r.dev_bc <= options.tolerance;
    out.push_back(r);
  }
  return out;
}

CrosscheckReport pairing_crosscheck(const ShellAmplitude& g, const ShellAmplitude& gt,
                                    const CrosscheckOptions& options) {
  return pairing_crosscheck({g, gt}, {{0, 1}}, options)[0];
}

std::vector<PacketSpec> default_crosscheck_packets() {
  std::vector<PacketSpec> p(4);
  p[0].weight_plus = 1.0;
  p[0].weight_minus = cplx(0.0, 0.5);
  p[0].center = 0.5;
  p[0].width = 1.0;
  p[1].weight_plus = 0.3;
  p[1].weight_minus = 1.0;
  p[1].center = -0.3;
  p[1].width = 1.2;
  p[2].weight_plus = 1.0;
  p[2].weight_minus = 0.0;
  p[2].center = 1.0;
  p[2].width = 1.0;
  p[3].weight_plus = cplx(0.6, -0.2);
  p[3].weight_minus = -0.7;
  p[3].center = 0.0;
  p[3].width = 1.5;
  return p;
}

}  // namespace sigop
