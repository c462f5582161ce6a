// SPDX-License-Identifier: Apache-2.0
#include "sigop/minkowski_embedding.hpp"

#include <boost/math/special_functions/legendre.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "parallel.hpp"
#include "sigop/error.hpp"
#include "sigop/signature_operator.hpp"

namespace sigop {

namespace {

constexpr double pi = std::numbers::pi;
constexpr cplx I{0.0, 1.0};

}  // namespace

void validate(const HalfLineDatum& d, double threshold) {
  validate(d.grid);
  if (d.values.size() != d.grid.count) fail(errc::invalid_argument, "datum sample count does not match its grid");
  double top = 0.0;
  for (const auto& v : d.values) {
    if (!v.allFinite()) fail(errc::invalid_argument, "datum samples must be finite");
    top = std::max(top, v.norm());
  }
  if (top == 0.0) return;
  if (d.values.back().norm() > threshold * top) fail(errc::domain_violation, "datum has not decayed at x_max");
  const double cut = std::max(d.grid.x_min, d.grid.dx());
  for (std::size_t i = 0; i < d.values.size() && d.x(i) <= cut * (1.0 + 1e-12); ++i)
    if (d.values[i].norm() > threshold * top)
      fail(errc::domain_violation, "datum has not decayed at the inner cutoff near x = 0");
}

HalfLineDatum gaussian_bump(const HalfLineGrid& grid, double center, double width, const Spinor2& spinor) {
  validate(grid);
  if (!(width > 0.0)) fail(errc::invalid_argument, "bump width must be positive");
  HalfLineDatum d{grid, std::vector<Spinor2>(grid.count)};
  for (std::size_t i = 0; i < grid.count; ++i) {
    const double u = (d.x(i) - center) / width;
    d.values[i] = std::exp(-u * u) * spinor;
  }
  return d;
}

cplx half_line_inner(const HalfLineDatum& a, const HalfLineDatum& b) {
  if (a.values.size() != b.values.size() || a.grid.x_max != b.grid.x_max)
    fail(errc::grid_mismatch, "half-line data on different grids");
  cplx acc = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) acc += a.values[i].dot(b.values[i]);
  return 2.0 * pi * a.grid.dx() * acc;
}

ShellAmplitude extend_by_zero(const HalfLineDatum& d, double mass, const RapidityGrid& grid, double threshold) {
  validate(d, threshold);
  const std::size_t n = d.grid.count;
  const double dx = d.grid.dx();
  SpinorSamples full{-double(n) * dx, dx, std::vector<Spinor2>(2 * n + 1, Spinor2::Zero())};
  for (std::size_t i = 0; i < n; ++i) full.values[n + 1 + i] = d.values[i];
  return amplitude_from_initial_data(full, mass, grid, threshold);
}

HalfLineDatum restrict_to_halfline(const ShellAmplitude& g, const HalfLineGrid& grid) {
  validate(grid);
  const double dx = grid.dx();
  return {grid, reconstruct_line(g, 0.0, dx, dx, grid.count).values};
}

ShellAmplitude cpt_transform(const ShellAmplitude& g) {
  ShellAmplitude out = g;
  for (std::size_t j = 0; j < g.plus.size(); ++j) {
    out.plus[j] = I * g.minus[j];
    out.minus[j] = I * g.plus[j];
  }
  return out;
}

ShellAmplitude cpt_transform_plain(const ShellAmplitude& g) {
  ShellAmplitude out = g;
  std::swap(out.plus, out.minus);
  return out;
}

ShellAmplitude translate(const ShellAmplitude& g, double shift) {
  if (!std::isfinite(shift)) fail(errc::invalid_argument, "shift must be finite");
  // the phase k shift must stay resolved on the rapidity grid over the support of g
  double top = 0.0;
  for (int s : {1, -1})
    for (const cplx& v : g.branch(s)) top = std::max(top, std::abs(v));
  double step = 0.0;
  for (int s : {1, -1})
    for (std::size_t j = 0; j < g.grid.n; ++j)
      if (std::abs(g.branch(s)[j]) > 1e-13 * top)
        step = std::max(step, g.mass * std::cosh(g.grid.alpha(j)) * std::abs(shift) * g.grid.h());
  if (step > pi) fail(errc::out_of_range, "translation phase is not resolved on the rapidity grid");
  ShellAmplitude out = g;
  for (int s : {1, -1})
    for (std::size_t j = 0; j < g.grid.n; ++j) {
      const double k = g.mass * s * std::sinh(g.grid.alpha(j));
      out.branch(s)[j] *= std::polar(1.0, -k * shift);
    }
  return out;
}

double left_leakage(const ShellAmplitude& g, const HalfLineGrid& grid, double x_cut) {
  validate(grid);
  const double dx = grid.dx();
  const SpinorSamples right = reconstruct_line(g, 0.0, dx, dx, grid.count);
  const SpinorSamples left = reconstruct_line(g, 0.0, -grid.x_max, dx, grid.count);
  double top = 0.0, leak = 0.0;
  for (const auto& v : right.values) top = std::max(top, v.norm());
  for (std::size_t i = 0; i < left.size(); ++i)
    if (left.x(i) <= -x_cut) leak = std::max(leak, left.values[i].norm());
  if (top == 0.0) return leak == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return leak / top;
}

ShellAmplitude apply_intrinsic_S(const ShellAmplitude& g_wedge, const HalfLineGrid& grid, double threshold) {
  if (left_leakage(g_wedge, grid) > threshold)
    fail(errc::not_embedded, "amplitude does not vanish on x < 0 at t = 0");
  const RapiditySpectrum sg = apply_relative_S(to_rapidity_spectrum(g_wedge));
  return from_rapidity_spectrum(apply_L(sg));
}

void validate(const WedgeQuadratureGrid& grid) {
  if (!(grid.t_max > 0.0) || !(grid.x_max > grid.t_max)) fail(errc::invalid_argument, "need 0 < t_max < x_max");
  if (grid.t_panels == 0 || grid.y_panels == 0 || grid.points == 0 || grid.refine == 0)
    fail(errc::invalid_argument, "wedge grid counts must be positive");
  if (!(grid.tail_tolerance > 0.0)) fail(errc::invalid_argument, "tail tolerance must be positive");
}

GaussRule composite_gauss(double a, double b, std::size_t panels, std::size_t points) {
  // nonnegative zeros of P_n, ascending
  const auto zeros = boost::math::legendre_p_zeros<double>(int(points));
  std::vector<double> x, w;
  for (auto it = zeros.rbegin(); it != zeros.rend(); ++it)
    if (*it != 0.0) x.push_back(-*it);
  for (double z : zeros) x.push_back(z);
  for (double z : x) {
    const double d = boost::math::legendre_p_prime(int(points), z);
    w.push_back(2.0 / ((1.0 - z * z) * d * d));
  }
  GaussRule rule;
  const double len = (b - a) / double(panels);
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + double(p) * len, mid = lo + 0.5 * len;
    for (std::size_t i = 0; i < x.size(); ++i) {
      rule.x.push_back(mid + 0.5 * len * x[i]);
      rule.w.push_back(0.5 * len * w[i]);
    }
  }
  return rule;
}

namespace {

struct PreparedBranch {
  Eigen::VectorXd omega, k;
  Eigen::Matrix<cplx, 2, Eigen::Dynamic> coeff;  // (s / 4 pi) h g f_c
  Eigen::MatrixXcd F;                             // e^{i k y}
};

struct Prepared {
  PreparedBranch branch[2];
};

Prepared prepare(const ShellAmplitude& g0, std::size_t refine, const GaussRule& y) {
  const ShellAmplitude g = upsample_amplitude(g0, refine);
  double top = 0.0;
  for (int s : {1, -1})
    for (const auto& v : g.branch(s)) top = std::max(top, std::abs(v));
  Prepared p;
  const double h = g.grid.h();
  for (int b = 0; b < 2; ++b) {
    const int s = b == 0 ? 1 : -1;
    const auto& src = g.branch(s);
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < src.size(); ++j)
      if (std::abs(src[j]) > 1e-13 * top) keep.push_back(j);
    auto& pb = p.branch[b];
    const auto na = Eigen::Index(keep.size());
    pb.omega.resize(na);
    pb.k.resize(na);
    pb.coeff.resize(2, na);
    pb.F.resize(na, Eigen::Index(y.x.size()));
    for (Eigen::Index i = 0; i < na; ++i) {
      const auto pt = make_shell_point(s, g.grid.alpha(keep[std::size_t(i)]), g.mass);
      const Spinor2 f = basis_spinor(pt);
      const cplx c = double(s) / (4.0 * pi) * h * src[keep[std::size_t(i)]];
      pb.omega(i) = pt.omega();
      pb.k(i) = pt.k();
      pb.coeff(0, i) = c * f(0);
      pb.coeff(1, i) = c * f(1);
      for (std::size_t q = 0; q < y.x.size(); ++q) pb.F(i, Eigen::Index(q)) = std::polar(1.0, pt.k() * y.x[q]);
    }
  }
  return p;
}

// Rows [0, nt) hold component 0, rows [nt, 2 nt) component 1, at t = ts[i], x = |t| + y.
Eigen::MatrixXcd field_block(const Prepared& p, const double* ts, std::size_t nt, std::size_t ny) {
  Eigen::MatrixXcd psi = Eigen::MatrixXcd::Zero(Eigen::Index(2 * nt), Eigen::Index(ny));
  for (const auto& pb : p.branch) {
    const Eigen::Index na = pb.omega.size();
    if (na == 0) continue;
    Eigen::MatrixXcd L(Eigen::Index(2 * nt), na);
    for (std::size_t i = 0; i < nt; ++i) {
      const double t = ts[i], at = std::abs(t);
      for (Eigen::Index j = 0; j < na; ++j) {
        const cplx e = std::polar(1.0, -(pb.omega(j) * t - pb.k(j) * at));
        L(Eigen::Index(i), j) = pb.coeff(0, j) * e;
        L(Eigen::Index(nt + i), j) = pb.coeff(1, j) * e;
      }
    }
    psi.noalias() += L * pb.F;
  }
  return psi;
}

struct PairPartial {
  cplx value = 0.0;
  double y_tail = 0.0;
  double rho_first = 0.0;  // sum_y w_y |integrand| at the first t node of the block
  double rho_last = 0.0;
};

}  // namespace

WedgeGram wedge_gram(const std::vector<ShellAmplitude>& packets, const WedgeQuadratureGrid& grid, bool check_tail) {
  validate(grid);
  const std::size_t np = packets.size();
  if (np == 0) return {};
  for (const auto& g : packets) {
    if (!(g.grid == packets[0].grid) || g.mass != packets[0].mass)
      fail(errc::grid_mismatch, "packets must share grid and mass");
  }
  const GaussRule t = composite_gauss(-grid.t_max, grid.t_max, grid.t_panels, grid.points);
  const GaussRule y = composite_gauss(0.0, grid.y_max(), grid.y_panels, grid.points);
  const std::size_t ny = y.x.size(), bt = grid.points, nblocks = grid.t_panels;
  const std::size_t y_last = ny - grid.points;

  std::vector<Prepared> prep(np);
  detail::parallel_for(np, [&](std::size_t i) { prep[i] = prepare(packets[i], grid.refine, y); });

  const std::size_t npairs = np * (np + 1) / 2;
  std::vector<std::vector<PairPartial>> partial(nblocks, std::vector<PairPartial>(npairs));
  detail::parallel_for(nblocks, [&](std::size_t b) {
    const double* ts = t.x.data() + b * bt;
    const double* wt = t.w.data() + b * bt;
    std::vector<Eigen::MatrixXcd> psi(np);
    for (std::size_t i = 0; i < np; ++i) psi[i] = field_block(prep[i], ts, bt, ny);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < np; ++i)
      for (std::size_t j = i; j < np; ++j, ++idx) {
        const auto& a = psi[i];
        const auto& c = psi[j];
        std::vector<cplx> row(bt);
        std::vector<double> rho(bt), tail(bt);
        for (std::size_t q = 0; q < ny; ++q) {
          const auto Q = Eigen::Index(q);
          for (std::size_t r = 0; r < bt; ++r) {
            const auto R = Eigen::Index(r), R1 = Eigen::Index(bt + r);
            const cplx v = std::conj(a(R, Q)) * c(R1, Q) + std::conj(a(R1, Q)) * c(R, Q);
            row[r] += y.w[q] * v;
            const double av = y.w[q] * std::abs(v);
            rho[r] += av;
            if (q >= y_last) tail[r] += av;
          }
        }
        PairPartial pp;
        for (std::size_t r = 0; r < bt; ++r) {
          pp.value += wt[r] * row[r];
          pp.y_tail += wt[r] * tail[r];
        }
        pp.rho_first = rho.front();
        pp.rho_last = rho.back();
        partial[b][idx] = pp;
      }
  });

  WedgeGram out;
  out.entries.assign(np, std::vector<WedgeResult>(np));
  std::size_t idx = 0;
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = i; j < np; ++j, ++idx) {
      WedgeResult r;
      double y_tail = 0.0;
      for (std::size_t b = 0; b < nblocks; ++b) {
        r.value += partial[b][idx].value;
        y_tail += partial[b][idx].y_tail;
      }
      // integrand ~ |t|^{-4} from the p = 2 null decay of both factors
      const double t_tail = (partial[0][idx].rho_first + partial[nblocks - 1][idx].rho_last) * grid.t_max / 3.0;
      r.tail_bound = t_tail + y_tail;
      r.nodes = grid.nodes();
      r.t_max = grid.t_max;
      r.x_max = grid.x_max;
      if (check_tail) {
        const double scale = std::max(std::abs(r.value), std::sqrt(hilbert_norm2(packets[i]) * hilbert_norm2(packets[j])) /
                                                             packets[i].mass);
        if (r.tail_bound > grid.tail_tolerance * scale)
          fail(errc::tail_bound, "wedge truncation tail exceeds the requested tolerance");
      }
      out.entries[i][j] = r;
      if (i != j) {
        r.value = std::conj(r.value);
        out.entries[j][i] = r;
      }
    }
  return out;
}

WedgeResult wedge_inner_oracle(const ShellAmplitude& g, const ShellAmplitude& gt, const WedgeQuadratureGrid& grid) {
  return wedge_gram({g, gt}, grid).entries[0][1];
}

DecayReport null_decay_check(const ShellAmplitude& g, const std::vector<double>& times, int p, double x_extent,
                             std::size_t samples) {
  if (p < 0) fail(errc::invalid_argument, "decay exponent must be non-negative");
  if (!(x_extent > 0.0) || samples < 2) fail(errc::invalid_argument, "invalid spatial scan");
  DecayReport r;
  r.p = p;
  r.times = times;
  for (double t : times) {
    const double dx = x_extent / double(samples - 1);
    const SpinorSamples line = reconstruct_line(g, t, std::abs(t), dx, samples);
    double sup = 0.0;
    for (const auto& v : line.values) sup = std::max(sup, v.norm());
    r.sup_norm.push_back(sup);
    r.weighted.push_back(sup * (1.0 + std::pow(std::abs(t), p)));
  }
  r.bound = r.weighted.empty() ? 0.0 : *std::max_element(r.weighted.begin(), r.weighted.end());
  r.non_increasing = true;
  for (std::size_t i = 1; i < r.weighted.size(); ++i)
    if (r.weighted[i] > r.weighted[i - 1]) r.non_increasing = false;
  return r;
}

std::vector<RayleighEntry> rayleigh_quotient_scan(const PacketSpec& spec, const std::vector<double>& shifts,
                                                  const RapidityGrid& grid) {
  const ShellAmplitude base = generate_packet(spec, grid);
  std::vector<RayleighEntry> out;
  for (double n : shifts) {
    const ShellAmplitude g = translate(base, n);
    RayleighEntry e;
    e.shift = n;
    e.norm2 = hilbert_norm2(g);
    e.pairing = spectral_pairing(g, g);
    e.quotient = std::abs(e.pairing) / e.norm2;
    out.push_back(e);
  }
  return out;
}

RindlerPoint rindler_coords(double t, double x) {
  if (!(std::abs(t) < x) || !std::isfinite(x)) fail(errc::out_of_range, "point is outside the open wedge |t| < x");
  return {std::atanh(t / x), std::sqrt((x - t) * (x + t))};
}

std::pair<double, double> from_rindler(const RindlerPoint& p) {
  if (!(p.rho > 0.0) || !std::isfinite(p.tau)) fail(errc::out_of_range, "radial coordinate must be positive");
  return {p.rho * std::sinh(p.tau), p.rho * std::cosh(p.tau)};
}

}  // namespace sigop
