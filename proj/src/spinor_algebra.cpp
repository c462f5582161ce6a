// SPDX-License-Identifier: Apache-2.0
#include "sigop/spinor_algebra.hpp"

#include <array>
#include <cmath>

#include "sigop/error.hpp"

namespace sigop {

namespace {

constexpr cplx I{0.0, 1.0};

void check_sign(int s, const char* what) {
  if (s != 1 && s != -1) fail(errc::invalid_argument, std::string(what) + " must be +1 or -1");
}

void check_mass(double m) {
  if (!(m > 0.0) || !std::isfinite(m)) fail(errc::invalid_argument, "mass must be positive");
}

}  // namespace

double MassShellPoint::omega() const { return mass * s * std::cosh(alpha); }
double MassShellPoint::k() const { return mass * s * std::sinh(alpha); }

MassShellPoint make_shell_point(int s, double alpha, double mass) {
  check_sign(s, "branch sign");
  check_mass(mass);
  if (!std::isfinite(alpha)) fail(errc::invalid_argument, "rapidity must be finite");
  return {s, alpha, mass};
}

double TransverseData::k_perp() const { return std::hypot(ky, kz); }
double TransverseData::m_tilde() const { return std::hypot(mass, k_perp()); }
double TransverseData::nu() const { return std::atan(a * k_perp() / mass); }

TransverseData make_transverse(double ky, double kz, double mass, int a) {
  check_sign(a, "channel");
  check_mass(mass);
  if (!std::isfinite(ky) || !std::isfinite(kz)) fail(errc::invalid_argument, "transverse momenta must be finite");
  return {ky, kz, mass, a};
}

std::pair<Mat2, Mat2> gamma_matrices() {
  Mat2 g0, g1;
  g0 << 0.0, 1.0, 1.0, 0.0;
  g1 << 0.0, 1.0, -1.0, 0.0;
  return {g0, g1};
}

Mat2 slash(double omega, double k) {
  Mat2 p;
  p << 0.0, omega - k, omega + k, 0.0;
  return p;
}

cplx spin_inner(const Spinor2& u, const Spinor2& v) {
  return std::conj(u(0)) * v(1) + std::conj(u(1)) * v(0);
}

int sign_of(double omega) { return omega >= 0.0 ? 1 : -1; }

Spinor2 basis_spinor(const MassShellPoint& p) {
  check_mass(p.mass);
  check_sign(p.s, "branch sign");
  // (m, omega + k) / sqrt(2m eps(omega)(omega + k)) with omega + k = m s e^alpha
  const double r = 1.0 / std::sqrt(2.0);
  return Spinor2(r * std::exp(-0.5 * p.alpha), p.s * r * std::exp(0.5 * p.alpha));
}

Spinor2 basis_spinor(double omega, double k, double mass) {
  check_mass(mass);
  const int eps = sign_of(omega);
  const double q = eps * (omega + k);
  if (!(q > 0.0)) fail(errc::domain_violation, "momentum is not on the mass shell");
  const double c = 1.0 / std::sqrt(2.0 * mass * q);
  return Spinor2(c * mass, c * (omega + k));
}

cplx spinor_pairing(int s, double alpha, int st, double alpha_t) {
  const double beta = 0.5 * (alpha - alpha_t);
  return s == st ? cplx(s * std::cosh(beta)) : cplx(s * std::sinh(beta));
}

cplx spinor_pairing_4d(int s, double alpha, int st, double alpha_t, const TransverseData& td) {
  const cplx z(0.5 * (alpha - alpha_t), td.nu());
  const double ratio = td.m_tilde() / td.mass;
  return s == st ? double(s) * ratio * std::cosh(z) : double(s) * ratio * std::sinh(z);
}

cplx spinor_pairing_4d(int s, double alpha, int st, double alpha_t, const TransverseData& td,
                       int other_a) {
  check_sign(other_a, "channel");
  if (other_a != td.a) return 0.0;
  return spinor_pairing_4d(s, alpha, st, alpha_t, td);
}

Mat2 reduction_matrix(const TransverseData& td) {
  const double h = 0.5 * td.nu();
  Mat2 u;
  u << std::cos(h), I * std::sin(h), I * std::sin(h), std::cos(h);
  return u;
}

namespace {

// Dirac representation: gamma^0 = diag(1, 1, -1, -1), gamma^j = [[0, sigma_j], [-sigma_j, 0]].
std::array<Mat4, 4> dirac_gammas() {
  Mat2 sx, sy, sz, id = Mat2::Identity(), z = Mat2::Zero();
  sx << 0.0, 1.0, 1.0, 0.0;
  sy << 0.0, -I, I, 0.0;
  sz << 1.0, 0.0, 0.0, -1.0;
  std::array<Mat4, 4> g;
  g[0] << id, z, z, -id;
  g[1] << z, sx, -sx, z;
  g[2] << z, sy, -sy, z;
  g[3] << z, sz, -sz, z;
  return g;
}

std::array<int, 2> channel_components(int a) { return a == 1 ? std::array<int, 2>{0, 3} : std::array<int, 2>{1, 2}; }

}  // namespace

Mat4 dirac_matrix_4d(double omega, double k, const TransverseData& td) {
  const auto g = dirac_gammas();
  return omega * g[0] - k * g[1] - td.mass * Mat4::Identity() - td.k_perp() * g[2];
}

Mat2 channel_block(double omega, double k, const TransverseData& td) {
  const Mat4 d = dirac_matrix_4d(omega, k, td);
  const auto c = channel_components(td.a);
  Mat2 b;
  b << d(c[0], c[0]), d(c[0], c[1]), d(c[1], c[0]), d(c[1], c[1]);
  return b;
}

double transverse_eigenvalue(const TransverseData& td) {
  const auto g = dirac_gammas();
  // plane wave e^{i k_perp y}: d_y -> i k_perp, d_z -> 0
  const Mat4 t = g[0] * g[1] * (I * td.k_perp() * g[2]);
  const auto c = channel_components(td.a);
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  v(c[0]) = 1.0;
  const Eigen::Vector4cd w = t * v;
  if ((w - w(c[0]) * v).norm() > 1e-12 * (1.0 + td.k_perp()))
    fail(errc::domain_violation, "channel is not invariant under the transverse operator");
  return w(c[0]).real();
}

}  // namespace sigop
