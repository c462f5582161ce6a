// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>

namespace sigop {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Spinor2 = Eigen::Vector2cd;
using Mat4 = Eigen::Matrix4cd;

// Point (s, alpha) on the mass shell, (omega, k) = m s (cosh alpha, sinh alpha).
struct MassShellPoint {
  int s = 1;
  double alpha = 0.0;
  double mass = 1.0;

  double omega() const;
  double k() const;
};

MassShellPoint make_shell_point(int s, double alpha, double mass);

// Transverse momenta of a separated 4D mode; a selects the invariant channel.
struct TransverseData {
  double ky = 0.0;
  double kz = 0.0;
  double mass = 1.0;
  int a = 1;

  double k_perp() const;
  double m_tilde() const;
  // nu_a = atan(a |k_perp| / m), in (-pi/2, pi/2)
  double nu() const;
};

TransverseData make_transverse(double ky, double kz, double mass, int a);

std::pair<Mat2, Mat2> gamma_matrices();

// omega gamma^0 - k gamma^1
Mat2 slash(double omega, double k);

// <u, gamma^0 v>, antilinear in u
cplx spin_inner(const Spinor2& u, const Spinor2& v);

// Normalized solution of (slash(p) - m) f = 0 with spin_inner(f, f) = sign(omega).
Spinor2 basis_spinor(const MassShellPoint& p);
// Same spinor from momentum components; omega must satisfy omega^2 = k^2 + m^2.
Spinor2 basis_spinor(double omega, double k, double mass);

int sign_of(double omega);  // +1 for omega >= 0

cplx spinor_pairing(int s, double alpha, int st, double alpha_t);

cplx spinor_pairing_4d(int s, double alpha, int st, double alpha_t, const TransverseData& td);
// Pairing between channels td.a and other_a; zero across channels.
cplx spinor_pairing_4d(int s, double alpha, int st, double alpha_t, const TransverseData& td,
                       int other_a);

Mat2 reduction_matrix(const TransverseData& td);

// Dirac matrix omega gamma^0 - k gamma^1 - m - k_perp gamma^2 (Dirac representation),
// with (ky, kz) rotated to (|k_perp|, 0).
Mat4 dirac_matrix_4d(double omega, double k, const TransverseData& td);

// 2x2 block of dirac_matrix_4d acting on the channel td.a.
Mat2 channel_block(double omega, double k, const TransverseData& td);

// Eigenvalue of gamma^0 gamma^1 (gamma^2 d_y + gamma^3 d_z) on the channel of td.
double transverse_eigenvalue(const TransverseData& td);

}  // namespace sigop
