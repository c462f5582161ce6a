// SPDX-License-Identifier: Apache-2.0
#include "sigop/signature_operator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "sigop/error.hpp"

namespace sigop {

namespace {

constexpr double pi = std::numbers::pi;
constexpr cplx I{0.0, 1.0};

// 1 / (1 + e^{-x})
double logistic(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

// 1 / (2 cosh x)
double half_sech(double x) {
  const double e = std::exp(-std::abs(x));
  return e / (1.0 + e * e);
}

void check_eps(double eps) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) fail(errc::invalid_argument, "regulator must be non-negative");
}

void check_mass(double m) {
  if (!(m > 0.0) || !std::isfinite(m)) fail(errc::invalid_argument, "mass must be positive");
}

cplx kernel_I_nu(int s, double alpha, int st, double alpha_t, double eps, double mass, double nu) {
  check_eps(eps);
  check_mass(mass);
  const double beta = 0.5 * (alpha - alpha_t);
  const double c = 1.0 / (4.0 * pi * pi * mass);
  const cplx z(beta, nu);
  if (s == st) {
    if (eps == 0.0 && beta == 0.0) fail(errc::singular, "kernel is singular at coinciding rapidities");
    const cplx sh = std::sinh(cplx(beta, -0.5 * eps * s));
    return c * double(s) * std::cosh(z) / (-2.0 * sh * sh);
  }
  return -c * double(s) * std::sinh(z) / (1.0 + std::cosh(2.0 * beta));
}

}  // namespace

cplx kernel_I(int s, double alpha, int st, double alpha_t, double eps, double mass) {
  return kernel_I_nu(s, alpha, st, alpha_t, eps, mass, 0.0);
}

cplx kernel_I_4d(int s, double alpha, int st, double alpha_t, double eps, const TransverseData& td) {
  return kernel_I_nu(s, alpha, st, alpha_t, eps, td.mass, td.nu());
}

cplx kernel_K(int s, double alpha, int st, double alpha_t, double mass, double eps) {
  check_eps(eps);
  check_mass(mass);
  const double d = alpha - alpha_t;
  if (s == st) {
    if (eps == 0.0 && d == 0.0) fail(errc::singular, "kernel is singular at coinciding rapidities");
    const cplx sh = std::sinh(cplx(0.5 * d, -0.5 * eps * s));
    return 1.0 / (mass * mass * (-2.0 * sh * sh));
  }
  return 1.0 / (mass * mass * (1.0 + std::cosh(d)));
}

cplx null_factor_u(int s, double alpha, int st, double alpha_t, double mass, double eps) {
  const double beta = 0.5 * (alpha - alpha_t);
  const double pre = std::exp(-alpha) / (mass * s);
  if (s != st) return pre / (1.0 + std::exp(-2.0 * beta));
  return pre / (1.0 - std::exp(cplx(-2.0 * beta, eps * s)));
}

cplx null_factor_v(int s, double alpha, int st, double alpha_t, double mass, double eps) {
  const double beta = 0.5 * (alpha - alpha_t);
  const double pre = std::exp(alpha) / (mass * s);
  if (s != st) return pre / (1.0 + std::exp(2.0 * beta));
  return pre / (1.0 - std::exp(cplx(2.0 * beta, -eps * s)));
}

Mat2 shape_matrix(double ell) {
  const double q = half_sech(pi * ell);
  Mat2 m;
  m << logistic(2.0 * pi * ell), -I * q, I * q, logistic(-2.0 * pi * ell);
  return m;
}

Mat2 sig_matrix(double ell, double mass) {
  check_mass(mass);
  return (ell / (pi * mass)) * shape_matrix(ell);
}

double ell_tilde(double ell, const TransverseData& td) {
  const double nu = td.nu();
  return ell * std::cos(nu) - 0.5 * std::sin(nu);
}

Mat2 sig_matrix_4d(double ell, const TransverseData& td) {
  check_mass(td.mass);
  return (ell_tilde(ell, td) / (pi * td.mass)) * shape_matrix(ell);
}

Projectors projectors(double ell) {
  const Mat2 l = shape_matrix(ell);
  return {l, Mat2::Identity() - l};
}

Spinor2 kernel_vector(double ell) {
  // (i e^{-pi l}, 1) normalized
  if (ell >= 0.0) {
    const double e = std::exp(-pi * ell);
    return Spinor2(I * e, 1.0) / std::sqrt(1.0 + e * e);
  }
  const double e = std::exp(pi * ell);
  return Spinor2(I, e) / std::sqrt(1.0 + e * e);
}

Spinor2 range_vector(double ell) {
  // (-i e^{pi l}, 1) normalized
  if (ell <= 0.0) {
    const double e = std::exp(pi * ell);
    return Spinor2(-I * e, 1.0) / std::sqrt(1.0 + e * e);
  }
  const double e = std::exp(-pi * ell);
  return Spinor2(-I, e) / std::sqrt(1.0 + e * e);
}

void check_domain(const RapiditySpectrum& gh, double threshold) {
  const std::size_t n = gh.size();
  if (n < 2 || gh.minus.size() != n) fail(errc::invalid_argument, "malformed spectrum");
  double top = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    top = std::max(top, std::abs(gh.ell(i)) * std::max(std::abs(gh.plus[i]), std::abs(gh.minus[i])));
  if (top == 0.0) return;
  double edge = 0.0;
  for (std::size_t i : {std::size_t(0), n - 1})
    edge = std::max(edge, std::abs(gh.ell(i)) * std::max(std::abs(gh.plus[i]), std::abs(gh.minus[i])));
  if (edge > threshold * top) fail(errc::domain_violation, "spectrum does not decay fast enough in ell");
}

RapiditySpectrum apply_matrix_field(const RapiditySpectrum& gh, const std::function<Mat2(double)>& field) {
  RapiditySpectrum out = gh;
  for (std::size_t i = 0; i < gh.size(); ++i) {
    const Spinor2 v = field(gh.ell(i)) * Spinor2(gh.plus[i], gh.minus[i]);
    out.plus[i] = v(0);
    out.minus[i] = v(1);
  }
  return out;
}

RapiditySpectrum apply_relative_S(const RapiditySpectrum& gh) {
  check_domain(gh);
  const double m = gh.mass;
  return apply_matrix_field(gh, [m](double l) { return sig_matrix(l, m); });
}

RapiditySpectrum apply_relative_S_4d(const RapiditySpectrum& gh, const TransverseData& td) {
  check_domain(gh);
  return apply_matrix_field(gh, [&td](double l) { return sig_matrix_4d(l, td); });
}

RapiditySpectrum apply_L(const RapiditySpectrum& gh) {
  return apply_matrix_field(gh, [](double l) { return shape_matrix(l); });
}

RapiditySpectrum apply_K(const RapiditySpectrum& gh) {
  return apply_matrix_field(gh, [](double l) { return projectors(l).K; });
}

cplx spectral_pairing(const RapiditySpectrum& a, const RapiditySpectrum& b) {
  return spectral_inner(a, apply_relative_S(b));
}

cplx spectral_pairing(const ShellAmplitude& g, const ShellAmplitude& gt, std::size_t pad_factor) {
  return spectral_pairing(to_rapidity_spectrum(pad_amplitude(g, pad_factor)),
                          to_rapidity_spectrum(pad_amplitude(gt, pad_factor)));
}

bool Interval::contains(double v) const {
  const bool above = lo_closed ? v >= lo : v > lo;
  const bool below = hi_closed ? v <= hi : v < hi;
  return above && below;
}

SpectralWindow SpectralWindow::all() {
  const double inf = std::numeric_limits<double>::infinity();
  return {{Interval{-inf, inf, false, false}}};
}

bool SpectralWindow::contains(double v) const {
  return std::any_of(parts.begin(), parts.end(), [v](const Interval& i) { return i.contains(v); });
}

SpectralWindow SpectralWindow::intersect(const SpectralWindow& other) const {
  SpectralWindow out;
  for (const auto& a : parts)
    for (const auto& b : other.parts) {
      Interval c;
      if (a.lo > b.lo || (a.lo == b.lo && !a.lo_closed)) {
        c.lo = a.lo;
        c.lo_closed = a.lo_closed;
      } else {
        c.lo = b.lo;
        c.lo_closed = b.lo_closed;
      }
      if (a.hi < b.hi || (a.hi == b.hi && !a.hi_closed)) {
        c.hi = a.hi;
        c.hi_closed = a.hi_closed;
      } else {
        c.hi = b.hi;
        c.hi_closed = b.hi_closed;
      }
      if (c.lo < c.hi || (c.lo == c.hi && c.lo_closed && c.hi_closed)) out.parts.push_back(c);
    }
  std::sort(out.parts.begin(), out.parts.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  return out;
}

void validate(const SpectralWindow& w) {
  for (std::size_t i = 0; i < w.parts.size(); ++i) {
    const auto& p = w.parts[i];
    if (std::isnan(p.lo) || std::isnan(p.hi) || p.lo > p.hi) fail(errc::invalid_argument, "invalid interval");
    if (i > 0) {
      const auto& q = w.parts[i - 1];
      if (q.hi > p.lo || (q.hi == p.lo && q.hi_closed && p.lo_closed))
        fail(errc::invalid_argument, "spectral window intervals must be sorted and disjoint");
    }
  }
}

RapiditySpectrum spectral_measure(const SpectralWindow& v, const RapiditySpectrum& gh) {
  validate(v);
  const double m = gh.mass;
  const bool at_zero = v.contains(0.0);
  return apply_matrix_field(gh, [&](double l) {
    const Projectors p = projectors(l);
    Mat2 e = Mat2::Zero();
    if (at_zero) e += p.K;
    if (v.contains(l / (pi * m))) e += p.L;
    return e;
  });
}

RapiditySpectrum hamiltonian_apply(const RapiditySpectrum& gh) {
  check_domain(gh);
  RapiditySpectrum out = gh;
  for (std::size_t i = 0; i < gh.size(); ++i) {
    out.plus[i] *= -gh.ell(i);
    out.minus[i] *= -gh.ell(i);
  }
  return out;
}

ShellAmplitude hamiltonian_fd(const ShellAmplitude& g) {
  ShellAmplitude out = zero_amplitude(g.mass, g.grid);
  const double h = g.grid.h();
  const std::size_t n = g.grid.n;
  for (int s : {1, -1}) {
    const auto& src = g.branch(s);
    auto& dst = out.branch(s);
    for (std::size_t j = 0; j < n; ++j) {
      const cplx up = j + 1 < n ? src[j + 1] : cplx(0.0);
      const cplx down = j > 0 ? src[j - 1] : cplx(0.0);
      dst[j] = -I * (up - down) / (2.0 * h);
    }
  }
  return out;
}

RapiditySpectrum negative_projection(const RapiditySpectrum& gh) {
  return apply_matrix_field(gh, [](double l) { return l < 0.0 ? shape_matrix(l) : Mat2(Mat2::Zero()); });
}

RapiditySpectrum positive_projection(const RapiditySpectrum& gh) {
  return apply_matrix_field(gh, [](double l) { return l > 0.0 ? shape_matrix(l) : Mat2(Mat2::Zero()); });
}

ThermalWeights thermal_weights(double beta_temp, double ell) {
  if (!(beta_temp > 0.0)) fail(errc::invalid_argument, "inverse temperature must be positive");
  ThermalWeights w;
  if (std::isinf(beta_temp))
    w.range = ell < 0.0 ? 1.0 : (ell > 0.0 ? 0.0 : 0.5);
  else
    w.range = logistic(-beta_temp * ell);
  return w;
}

Mat2 thermal_matrix(double beta_temp, double ell) {
  const ThermalWeights w = thermal_weights(beta_temp, ell);
  const Projectors p = projectors(ell);
  return w.range * p.L + w.kernel * p.K;
}

RapiditySpectrum thermal_weight(double beta_temp, const RapiditySpectrum& gh) {
  return apply_matrix_field(gh, [beta_temp](double l) { return thermal_matrix(beta_temp, l); });
}

SigresReport sigres_check_4d(const RapiditySpectrum& gh, const TransverseData& td) {
  SigresReport r;
  r.m_tilde = td.m_tilde();
  r.transverse_eigenvalue = transverse_eigenvalue(td);
  r.points = gh.size();
  const double m = td.mass, mt = r.m_tilde;
  const RapiditySpectrum range = apply_L(gh);
  const RapiditySpectrum lhs = apply_relative_S_4d(range, td);
  const RapiditySpectrum h = hamiltonian_apply(range);
  double scale = 0.0, worst = 0.0;
  for (std::size_t i = 0; i < gh.size(); ++i)
    for (int s : {1, -1}) {
      const cplx rhs = -h.branch(s)[i] / (pi * mt) - r.transverse_eigenvalue / (2.0 * pi * m * mt) * range.branch(s)[i];
      worst = std::max(worst, std::abs(lhs.branch(s)[i] - rhs));
      scale = std::max({scale, std::abs(lhs.branch(s)[i]), std::abs(rhs)});
    }
  r.max_residual = scale > 0.0 ? worst / scale : worst;
  return r;
}

}  // namespace sigop
