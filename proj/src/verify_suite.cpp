// SPDX-License-Identifier: Apache-2.0
#include "sigop/verify_suite.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <json.hpp>
#include <limits>
#include <numbers>
#include <random>

#include "sigop/error.hpp"
#include "sigop/minkowski_embedding.hpp"
#include "sigop/oracle_harness.hpp"
#include "sigop/signature_operator.hpp"

namespace sigop {

namespace {

constexpr double pi = std::numbers::pi;

Check bound(std::string name, double value, double reference, double tolerance) {
  Check c;
  c.name = std::move(name);
  c.value = value;
  c.reference = reference;
  c.deviation = std::abs(value - reference);
  c.tolerance = tolerance;
  return c;
}

// Bound check on a precomputed deviation.
Check deviation_check(std::string name, double deviation, double tolerance) {
  return bound(std::move(name), deviation, 0.0, tolerance);
}

// value > reference, strictly
Check above(std::string name, double value, double reference) {
  Check c;
  c.name = std::move(name);
  c.value = value;
  c.reference = reference;
  c.deviation = reference - value;
  c.threshold = true;
  return c;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

double max_abs(const std::vector<cplx>& a) {
  double d = 0.0;
  for (const cplx& v : a) d = std::max(d, std::abs(v));
  return d;
}

template <class T>
double branch_diff(const T& a, const T& b) {
  return std::max(max_diff(a.plus, b.plus), max_diff(a.minus, b.minus));
}

template <class T>
double branch_max(const T& a) {
  return std::max(max_abs(a.plus), max_abs(a.minus));
}

cplx uniform_weight(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double re = u(rng);
  return {re, u(rng)};
}

PacketSpec random_packet(std::mt19937_64& rng, bool alpha_space) {
  std::uniform_real_distribution<double> center(-1.0, 1.0);
  PacketSpec p;
  p.weight_plus = uniform_weight(rng);
  p.weight_minus = uniform_weight(rng);
  p.space = alpha_space ? ProfileSpace::alpha : ProfileSpace::ell;
  p.center = alpha_space ? center(rng) : 1.5 * center(rng);
  std::uniform_real_distribution<double> width(alpha_space ? 0.4 : 0.8, alpha_space ? 1.4 : 2.5);
  p.width = width(rng);
  return p;
}

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a + (b - a) * double(i) / double(n - 1);
  return out;
}

// Algebraic identities of the basis spinors.
void spinor_identities(Criterion& c, const SuiteOptions&) {
  const double m = 1.0;
  const auto alphas = linspace(-6.0, 6.0, 100);
  double dirac = 0.0, norm = 0.0, euclid = 0.0, orth = 0.0, pairing = 0.0;
  for (int s : {1, -1})
    for (double a : alphas) {
      const MassShellPoint p = make_shell_point(s, a, m);
      const Spinor2 f = basis_spinor(p);
      dirac = std::max(dirac, ((slash(p.omega(), p.k()) - m * Mat2::Identity()) * f).norm() / std::abs(p.omega()));
      norm = std::max(norm, std::abs(spin_inner(f, f) - double(s)));
      euclid = std::max(euclid, std::abs(f.squaredNorm() - std::abs(p.omega()) / m) / (std::abs(p.omega()) / m));
      // opposite shell, same spatial momentum
      const Spinor2 g = basis_spinor(make_shell_point(-s, -a, m));
      orth = std::max(orth, std::abs(f.dot(g)) / (f.norm() * g.norm()));
      for (int st : {1, -1})
        for (double at : alphas) {
          const cplx ref = spinor_pairing(s, a, st, at);
          const cplx val = spin_inner(f, basis_spinor(make_shell_point(st, at, m)));
          pairing = std::max(pairing, std::abs(val - ref) / std::max(1.0, std::abs(ref)));
        }
    }
  c.checks.push_back(deviation_check("dirac_equation", dirac, 1e-12));
  c.checks.push_back(deviation_check("spin_norm_sign", norm, 1e-12));
  c.checks.push_back(deviation_check("euclidean_norm_omega", euclid, 1e-12));
  c.checks.push_back(deviation_check("opposite_shell_orthogonal", orth, 1e-12));
  c.checks.push_back(deviation_check("spin_pairing_cosh_sinh", pairing, 1e-12));
}

void unitarity(Criterion& c, const SuiteOptions& o) {
  std::mt19937_64 rng(o.seed);
  std::vector<ShellAmplitude> packets;
  std::vector<RapiditySpectrum> spectra;
  double norm_dev = 0.0, closed_dev = 0.0, trip = 0.0;
  for (int i = 0; i < 20; ++i) {
    const PacketSpec spec = random_packet(rng, i % 2 == 1);
    packets.push_back(generate_packet(spec));
    const ShellAmplitude& g = packets.back();
    spectra.push_back(to_rapidity_spectrum(g));
    const double n2 = hilbert_norm2(g);
    norm_dev = std::max(norm_dev, std::abs(spectral_inner(spectra.back(), spectra.back()).real() - n2) / n2);
    closed_dev = std::max(closed_dev, std::abs(n2 - packet_norm2(spec)) / n2);
    trip = std::max(trip, branch_diff(from_rapidity_spectrum(spectra.back()), g) / branch_max(g));
  }
  double inner_dev = 0.0;
  for (std::size_t i = 0; i + 1 < packets.size(); ++i) {
    const cplx a = hilbert_inner(packets[i], packets[i + 1]);
    const cplx b = spectral_inner(spectra[i], spectra[i + 1]);
    const double scale = std::sqrt(hilbert_norm2(packets[i]) * hilbert_norm2(packets[i + 1]));
    inner_dev = std::max(inner_dev, std::abs(a - b) / scale);
  }
  c.checks.push_back(deviation_check("norm_preserved", norm_dev, 1e-10));
  c.checks.push_back(deviation_check("inner_product_preserved", inner_dev, 1e-10));
  c.checks.push_back(deviation_check("closed_form_norm", closed_dev, 1e-10));
  c.checks.push_back(deviation_check("round_trip", trip, 1e-12));
}

void residues(Criterion& c, const SuiteOptions&) {
  for (double ell : {0.25, 0.5, 1.0, 2.0}) {
    const QuadratureResult odd = residue_oracle_odd(ell);
    c.checks.push_back(bound("odd_l" + std::to_string(ell).substr(0, 4) + "_im", odd.value.imag(),
                             odd.reference.imag(), 1e-6));
    c.checks.back().deviation = odd.deviation;
    for (int s : {1, -1}) {
      const LadderResult even = residue_oracle_even(ell, s);
      c.checks.push_back(bound("even_l" + std::to_string(ell).substr(0, 4) + (s > 0 ? "_s+" : "_s-"),
                               even.value.real(), even.reference.real(), 1e-6));
      c.checks.back().deviation = even.deviation;
    }
  }
}

void diagonalization(Criterion& c, const SuiteOptions&) {
  for (double ell : {0.5, 1.0, 2.0})
    for (int s : {1, -1})
      for (int st : {1, -1}) {
        const DiagonalizationResult r = diagonalization_oracle(ell, s, st);
        const std::string tag = "l" + std::to_string(ell).substr(0, 3) + (s > 0 ? "_s+" : "_s-") + (st > 0 ? "+" : "-");
        Check k = bound("closed_form_" + tag, std::abs(r.value), std::abs(r.reference), 1e-6);
        k.deviation = r.deviation;
        c.checks.push_back(k);
        c.checks.push_back(deviation_check("alpha_independence_" + tag, r.alpha_spread, 1e-6));
      }
}

void matrix_facts(Criterion& c, const SuiteOptions&) {
  const double m = 1.0;
  double eig = 0.0, kern = 0.0, range = 0.0, idem = 0.0, herm = 0.0, comp = 0.0, spectral = 0.0;
  for (double ell : linspace(-20.0, 20.0, 4001)) {
    const Mat2 S = sig_matrix(ell, m);
    Eigen::ComplexEigenSolver<Mat2> es(S, false);
    std::array<double, 2> got{es.eigenvalues()(0).real(), es.eigenvalues()(1).real()};
    std::sort(got.begin(), got.end());
    std::array<double, 2> want{0.0, ell / (pi * m)};
    std::sort(want.begin(), want.end());
    eig = std::max({eig, std::abs(got[0] - want[0]), std::abs(got[1] - want[1]),
                    std::abs(es.eigenvalues()(0).imag()), std::abs(es.eigenvalues()(1).imag())});
    kern = std::max(kern, (S * kernel_vector(ell)).norm());
    range = std::max(range, (S * range_vector(ell) - ell / (pi * m) * range_vector(ell)).norm());
    const Projectors p = projectors(ell);
    idem = std::max(idem, (p.L * p.L - p.L).norm());
    herm = std::max(herm, (p.L - p.L.adjoint()).norm());
    comp = std::max(comp, (p.K - (Mat2::Identity() - p.L)).norm());
    spectral = std::max(spectral, (S - ell / (pi * m) * p.L).norm());
  }
  c.checks.push_back(deviation_check("eigenvalues", eig, 1e-12));
  c.checks.push_back(deviation_check("kernel_vector_annihilated", kern, 1e-12));
  c.checks.push_back(deviation_check("range_vector_preserved", range, 1e-12));
  c.checks.push_back(deviation_check("L_idempotent", idem, 1e-12));
  c.checks.push_back(deviation_check("L_hermitian", herm, 1e-12));
  c.checks.push_back(deviation_check("K_complement", comp, 1e-12));
  c.checks.push_back(deviation_check("spectral_decomposition", spectral, 1e-12));
}

void crosscheck(Criterion& c, const SuiteOptions& o) {
  std::vector<ShellAmplitude> packets;
  for (const PacketSpec& p : default_crosscheck_packets()) packets.push_back(generate_packet(p));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < packets.size(); ++i)
    for (std::size_t j = i + 1; j < packets.size(); ++j) pairs.emplace_back(i, j);
  CrosscheckOptions opt;
  opt.wedge.points = o.wedge_points;
  const auto reports = pairing_crosscheck(packets, pairs, opt);
  for (std::size_t k = 0; k < reports.size(); ++k) {
    const auto& r = reports[k];
    const std::string tag = "p" + std::to_string(pairs[k].first) + std::to_string(pairs[k].second);
    c.checks.push_back(deviation_check(tag + "_wedge_vs_kernel", r.dev_ab, opt.tolerance));
    c.checks.push_back(deviation_check(tag + "_wedge_vs_spectral", r.dev_ac, opt.tolerance));
    c.checks.push_back(deviation_check(tag + "_kernel_vs_spectral", r.dev_bc, opt.tolerance));
  }
}

void hamiltonian(Criterion& c, const SuiteOptions&) {
  PacketSpec spec;
  spec.center = 0.5;
  spec.weight_plus = 1.0;
  spec.weight_minus = cplx(0.3, -0.2);
  double spectral = 0.0;
  std::vector<double> fd_error;
  std::vector<double> steps;
  for (std::size_t n : {std::size_t(4096), std::size_t(8192)}) {
    RapidityGrid grid;
    grid.n = n;
    const RapiditySpectrum gh = apply_L(to_rapidity_spectrum(generate_packet(spec, grid)));
    const RapiditySpectrum sg = apply_relative_S(gh);
    const RapiditySpectrum hg = hamiltonian_apply(gh);
    double d = 0.0;
    for (int s : {1, -1})
      for (std::size_t i = 0; i < gh.size(); ++i)
        d = std::max(d, std::abs(sg.branch(s)[i] + hg.branch(s)[i] / (pi * gh.mass)));
    spectral = std::max(spectral, d / branch_max(sg));
    // range vectors decay like e^{-|alpha|/2}; the stencil is compared away from the grid ends
    const ShellAmplitude a = from_rapidity_spectrum(gh);
    const ShellAmplitude b = from_rapidity_spectrum(sg);
    const ShellAmplitude h = hamiltonian_fd(a);
    double e = 0.0, scale = 0.0;
    for (int s : {1, -1})
      for (std::size_t j = 0; j < n; ++j) {
        if (std::abs(grid.alpha(j)) > grid.alpha_max - 2.0) continue;
        e = std::max(e, std::abs(h.branch(s)[j] + pi * gh.mass * b.branch(s)[j]));
        scale = std::max(scale, std::abs(h.branch(s)[j]));
      }
    fd_error.push_back(e / scale);
    steps.push_back(grid.h());
  }
  c.checks.push_back(deviation_check("spectral_relation", spectral, 1e-12));
  c.checks.push_back(deviation_check("finite_difference_h2", fd_error[0], steps[0] * steps[0]));
  c.checks.push_back(bound("finite_difference_order", std::log2(fd_error[0] / fd_error[1]), 2.0, 0.1));
}

void cpt_structure(Criterion& c, const SuiteOptions&) {
  const double m = 1.0;
  const HalfLineGrid hg;
  std::vector<ShellAmplitude> images;
  images.push_back(extend_by_zero(gaussian_bump(hg, 7.0, 1.0, Spinor2(1.0, cplx(0.0, 0.5))), m));
  images.push_back(extend_by_zero(gaussian_bump(hg, 9.0, 1.5, Spinor2(0.3, -1.0)), m));
  images.push_back(extend_by_zero(gaussian_bump(hg, 12.0, 0.8, Spinor2(cplx(0.2, 0.7), 0.4)), m));
  double unitary = 0.0, square = 0.0, plain = 0.0, kernel = 0.0, orth = 0.0, split = 0.0;
  for (const auto& g : images) {
    const ShellAmplitude tg = cpt_transform(g);
    const double n2 = hilbert_norm2(g);
    unitary = std::max(unitary, std::abs(hilbert_norm2(tg) - n2) / n2);
    const ShellAmplitude ttg = cpt_transform(tg);
    double d = 0.0;
    for (int s : {1, -1})
      for (std::size_t j = 0; j < g.grid.n; ++j) d = std::max(d, std::abs(ttg.branch(s)[j] + g.branch(s)[j]));
    square = std::max(square, d / branch_max(g));
    plain = std::max(plain, branch_diff(cpt_transform_plain(cpt_transform_plain(g)), g) / branch_max(g));
    const RapiditySpectrum sg = apply_relative_S(to_rapidity_spectrum(g));
    const RapiditySpectrum stg = apply_relative_S(to_rapidity_spectrum(tg));
    kernel = std::max(kernel, branch_max(stg) / branch_max(sg));
    const RapiditySpectrum gh = to_rapidity_spectrum(g);
    split = std::max(split, std::abs(spectral_inner(apply_L(gh), apply_K(gh))) / n2);
  }
  for (const auto& g : images)
    for (const auto& gt : images)
      orth = std::max(orth, std::abs(hilbert_inner(g, cpt_transform(gt))) /
                                std::sqrt(hilbert_norm2(g) * hilbert_norm2(gt)));
  c.checks.push_back(deviation_check("cpt_unitary", unitary, 1e-12));
  c.checks.push_back(deviation_check("cpt_squares_to_minus_one", square, 1e-12));
  c.checks.push_back(deviation_check("cpt_plain_squares_to_one", plain, 1e-12));
  c.checks.push_back(deviation_check("cpt_image_annihilated", kernel, 1e-8));
  c.checks.push_back(deviation_check("wedge_images_orthogonal_to_cpt_images", orth, 1e-8));
  c.checks.push_back(deviation_check("range_kernel_orthogonal", split, 1e-8));
}

void m_finiteness(Criterion& c, const SuiteOptions&) {
  PacketSpec spec;
  spec.width = 2.0;
  spec.weight_plus = 1.0;
  spec.weight_minus = cplx(0.0, 0.5);
  const auto scan = rayleigh_quotient_scan(spec, {0.0, 2.0, 4.0, 8.0, 16.0});
  double slack = std::numeric_limits<double>::infinity(), norm_drift = 0.0;
  for (std::size_t i = 1; i < scan.size(); ++i) {
    slack = std::min(slack, scan[i].quotient - scan[i - 1].quotient);
    norm_drift = std::max(norm_drift, std::abs(scan[i].norm2 - scan[0].norm2) / scan[0].norm2);
  }
  c.checks.push_back(above("quotient_strictly_increasing", slack, 0.0));
  c.checks.push_back(above("final_over_initial", scan.back().quotient / scan.front().quotient, 3.0));
  c.checks.push_back(deviation_check("translation_norm_constant", norm_drift, 1e-12));
}

void thermal(Criterion& c, const SuiteOptions&) {
  const double m = 1.0;
  double weight = 0.0, kernel_weight = 0.0, commute = 0.0;
  for (double beta : {2.0 * pi, 1.0, 10.0})
    for (double ell : linspace(-20.0, 20.0, 4001)) {
      const ThermalWeights w = thermal_weights(beta, ell);
      weight = std::max(weight, std::abs(w.range - 1.0 / (1.0 + std::exp(beta * ell))));
      kernel_weight = std::max(kernel_weight, std::abs(w.kernel - 0.5));
      const Mat2 W = thermal_matrix(beta, ell);
      const Mat2 S = sig_matrix(ell, m);
      commute = std::max(commute, (W * S - S * W).norm());
    }
  // zero temperature on the range branch; ell = 0 is the jump of the step function and is skipped
  PacketSpec spec;
  spec.center = 0.3;
  spec.weight_plus = 1.0;
  spec.weight_minus = cplx(0.4, 0.6);
  const RapiditySpectrum gh = to_rapidity_spectrum(generate_packet(spec));
  const RapiditySpectrum cold = thermal_weight(std::numeric_limits<double>::infinity(), apply_L(gh));
  const RapiditySpectrum neg = negative_projection(gh);
  double limit = 0.0;
  for (int s : {1, -1})
    for (std::size_t i = 0; i < gh.size(); ++i)
      if (gh.ell(i) != 0.0) limit = std::max(limit, std::abs(cold.branch(s)[i] - neg.branch(s)[i]));
  c.checks.push_back(deviation_check("fermi_weight_range_branch", weight, 1e-13));
  c.checks.push_back(deviation_check("kernel_branch_half", kernel_weight, 1e-13));
  c.checks.push_back(deviation_check("commutes_with_S", commute, 1e-13));
  c.checks.push_back(deviation_check("zero_temperature_limit", limit / branch_max(gh), 1e-10));
}

void reduction_4d(Criterion& c, const SuiteOptions& o) {
  const double m = 1.0;
  std::mt19937_64 rng(o.seed + 11);
  std::uniform_real_distribution<double> ell_d(-6.0, 6.0), alpha_d(-3.0, 3.0), k_d(-3.0, 3.0);
  PacketSpec spec;
  spec.center = 0.2;
  spec.weight_plus = cplx(0.8, 0.1);
  spec.weight_minus = cplx(-0.3, 0.5);
  const RapiditySpectrum gh = to_rapidity_spectrum(generate_packet(spec));
  double collapse = 0.0, residual = 0.0;
  for (int a : {1, -1}) {
    const TransverseData td = make_transverse(0.0, 0.0, m, a);
    collapse = std::max(collapse, branch_diff(apply_relative_S_4d(gh, td), apply_relative_S(gh)) / branch_max(gh));
    for (int k = 0; k < 50; ++k) {
      const double ell = ell_d(rng), al = alpha_d(rng), at = alpha_d(rng);
      collapse = std::max(collapse, (sig_matrix_4d(ell, td) - sig_matrix(ell, m)).norm());
      collapse = std::max(collapse, std::abs(ell_tilde(ell, td) - ell));
      for (int s : {1, -1})
        for (int st : {1, -1}) {
          collapse = std::max(collapse, std::abs(spinor_pairing_4d(s, al, st, at, td) - spinor_pairing(s, al, st, at)));
          const cplx k2 = kernel_I(s, al, st, at, 0.1, m);
          collapse = std::max(collapse, std::abs(kernel_I_4d(s, al, st, at, 0.1, td) - k2) / std::abs(k2));
        }
    }
  }
  for (int k = 0; k < 12; ++k) {
    const double ky = k_d(rng), kz = k_d(rng);
    const TransverseData td = make_transverse(ky, kz, m, k % 2 == 0 ? 1 : -1);
    residual = std::max(residual, sigres_check_4d(gh, td).max_residual);
  }
  c.checks.push_back(deviation_check("zero_transverse_collapse", collapse, 1e-14));
  c.checks.push_back(deviation_check("transverse_relation_residual", residual, 1e-12));
}

void decay(Criterion& c, const SuiteOptions&) {
  const std::vector<double> times{5.0, 10.0, 20.0, 40.0};
  const std::vector<std::pair<double, cplx>> cases{{0.0, cplx(0.0, 0.5)}, {0.5, cplx(-0.4, 0.2)}};
  for (std::size_t k = 0; k < cases.size(); ++k) {
    PacketSpec spec;
    spec.width = 3.0;
    spec.center = cases[k].first;
    spec.weight_plus = 1.0;
    spec.weight_minus = cases[k].second;
    const DecayReport r = null_decay_check(generate_packet(spec), times, 2);
    double slack = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < r.weighted.size(); ++i) slack = std::min(slack, r.weighted[i - 1] - r.weighted[i]);
    c.checks.push_back(above("packet" + std::to_string(k) + "_weighted_sup_decreasing", slack, 0.0));
  }
}

struct Entry {
  const char* title;
  double budget;
  void (*run)(Criterion&, const SuiteOptions&);
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r{
      {"spinor identities", 1.0, spinor_identities},
      {"unitarity of U", 5.0, unitarity},
      {"residue oracles", 30.0, residues},
      {"diagonalization", 120.0, diagonalization},
      {"matrix spectral facts", 1.0, matrix_facts},
      {"three-way pairing crosscheck", 600.0, crosscheck},
      {"hamiltonian relation", 5.0, hamiltonian},
      {"kernel and cpt structure", 10.0, cpt_structure},
      {"m-finiteness violation", 10.0, m_finiteness},
      {"thermal weights", 1.0, thermal},
      {"4d reduction", 5.0, reduction_4d},
      {"null decay", 120.0, decay},
  };
  return r;
}

}  // namespace

bool Criterion::passed() const {
  if (!failure.empty() || checks.empty()) return false;
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

double Criterion::worst_ratio() const {
  double w = 0.0;
  for (const Check& c : checks)
    if (!c.threshold) w = std::max(w, c.tolerance > 0.0 ? c.deviation / c.tolerance : (c.deviation > 0.0 ? INFINITY : 0.0));
  return w;
}

int criterion_count() { return int(registry().size()); }

Criterion run_criterion(int id, const SuiteOptions& options) {
  if (id < 1 || id > criterion_count()) fail(errc::out_of_range, "unknown criterion " + std::to_string(id));
  const Entry& e = registry()[std::size_t(id - 1)];
  Criterion c;
  c.id = id;
  c.title = e.title;
  c.budget = e.budget;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    e.run(c, options);
  } catch (const std::exception& ex) {
    c.failure = ex.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  for (Check& k : c.checks) {
    if (k.threshold) {
      k.pass = k.deviation < 0.0;
      continue;
    }
    if (options.tolerance) k.tolerance = *options.tolerance;
    k.pass = k.deviation <= k.tolerance;
  }
  if (options.enforce_budget && c.seconds > c.budget) {
    Check t = above("runtime_within_budget", c.budget, c.seconds);
    t.pass = false;
    c.checks.push_back(t);
  }
  return c;
}

std::vector<Criterion> run_suite(const SuiteOptions& options) {
  std::vector<Criterion> out;
  for (int id = 1; id <= criterion_count(); ++id) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), id) == options.only.end())
      continue;
    out.push_back(run_criterion(id, options));
  }
  return out;
}

std::string suite_report_json(const std::vector<Criterion>& criteria) {
  using nlohmann::json;
  json list = json::array();
  bool all = true;
  for (const Criterion& c : criteria) {
    json checks = json::array();
    for (const Check& k : c.checks)
      checks.push_back({{"name", k.name},
                        {"value", k.value},
                        {"reference", k.reference},
                        {"deviation", k.deviation},
                        {"tolerance", k.threshold ? json(nullptr) : json(k.tolerance)},
                        {"kind", k.threshold ? "threshold" : "bound"},
                        {"pass", k.pass}});
    json entry = {{"id", c.id},
                  {"title", c.title},
                  {"pass", c.passed()},
                  {"budget_seconds", c.budget},
                  {"checks", checks}};
    if (!c.failure.empty()) entry["error"] = c.failure;
    list.push_back(entry);
    all = all && c.passed();
  }
  return json{{"pass", all}, {"criteria", list}}.dump(2);
}

}  // namespace sigop
