#include "landau/collision.hpp"

#include <cmath>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace landau {

ConvolutionWorkspace::ConvolutionWorkspace(const KernelSet& kernels)
    : kernels_(&kernels), grid_(&kernels.grid()), fft_(kernels.fft()) {
  pad_ = alloc_real(fft_->real_size());
  ghat_ = alloc_complex(fft_->complex_size());
  for (auto& b : fhat_) b = alloc_complex(fft_->complex_size());
  mul_ = alloc_complex(fft_->complex_size());
  inv_ = alloc_real(fft_->real_size());
}

void ConvolutionWorkspace::forward(const ArrayXd& values, fftw_complex* out) {
  const int n = grid_->n();
  const int m = fft_->m();
  std::memset(pad_.get(), 0, sizeof(double) * fft_->real_size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double* src = values.data() + grid_->index(i, j, 0);
      double* dst = pad_.get() + (static_cast<std::size_t>(i) * m + j) * m;
      std::memcpy(dst, src, sizeof(double) * n);
    }
  fft_->forward(pad_.get(), out);
}

void ConvolutionWorkspace::convolve_spectrum(const fftw_complex* kernel_hat,
                                             const fftw_complex* g_hat, ArrayXd& out) {
  const std::size_t csz = fft_->complex_size();
  for (std::size_t p = 0; p < csz; ++p) {
    const double kr = kernel_hat[p][0], ki = kernel_hat[p][1];
    const double gr = g_hat[p][0], gi = g_hat[p][1];
    mul_[p][0] = kr * gr - ki * gi;
    mul_[p][1] = kr * gi + ki * gr;
  }
  convolve_accumulated(mul_.get(), out);
}

void ConvolutionWorkspace::convolve_accumulated(fftw_complex* product_hat, ArrayXd& out) {
  const int n = grid_->n();
  const int m = fft_->m();
  fft_->backward(product_hat, inv_.get());
  const double scale = grid_->cell_volume() / (static_cast<double>(m) * m * m);
  out.resize(grid_->size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double* src = inv_.get() + (static_cast<std::size_t>(i) * m + j) * m;
      double* dst = out.data() + grid_->index(i, j, 0);
      for (int k = 0; k < n; ++k) dst[k] = src[k] * scale;
    }
}

CoefficientFields convolve_fields(const KernelSet& kernels, ConvolutionWorkspace& ws,
                                  const Field& g) {
  if (!g.grid->same_as(kernels.grid())) throw InvalidParameter("convolve_fields: grid mismatch");
  CoefficientFields cf;
  cf.grid = g.grid;
  ws.forward(g.values, ws.ghat());
  for (int comp = 0; comp < 6; ++comp)
    ws.convolve_spectrum(kernels.a_spectrum(comp), ws.ghat(), cf.abar[comp]);
  for (int comp = 0; comp < 3; ++comp)
    ws.convolve_spectrum(kernels.b_spectrum(comp), ws.ghat(), cf.bbar[comp]);
  ws.convolve_spectrum(kernels.c_spectrum(), ws.ghat(), cf.cbar);
  return cf;
}

namespace {

// Central difference along one axis with zero extension.
inline double d0(const ArrayXd& v, const Grid& g, int i, int j, int k, int axis) {
  const int n = g.n();
  int ip = i, jp = j, kp = k, im = i, jm = j, km = k;
  (axis == 0 ? ip : axis == 1 ? jp : kp) += 1;
  (axis == 0 ? im : axis == 1 ? jm : km) -= 1;
  const double up = (ip < n && jp < n && kp < n) ? v[g.index(ip, jp, kp)] : 0.0;
  const double um = (im >= 0 && jm >= 0 && km >= 0) ? v[g.index(im, jm, km)] : 0.0;
  return (up - um) / (2.0 * g.spacing());
}

Field divergence_no_outer_flux(const Grid& g, std::array<ArrayXd, 3>& G) {
  const int n = g.n();
  // No flux through the outer cell layer: keeps the telescoping mass sum exact
  // whatever the tail values are.
  for (int axis = 0; axis < 3; ++axis) {
    ArrayXd& Gi = G[axis];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (i == 0 || i == n - 1 || j == 0 || j == n - 1 || k == 0 || k == n - 1)
            Gi[g.index(i, j, k)] = 0.0;
  }
  Field out(g);
  const double inv2h = 1.0 / (2.0 * g.spacing());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double d = 0.0;
        d += ((i + 1 < n) ? G[0][g.index(i + 1, j, k)] : 0.0) -
             ((i > 0) ? G[0][g.index(i - 1, j, k)] : 0.0);
        d += ((j + 1 < n) ? G[1][g.index(i, j + 1, k)] : 0.0) -
             ((j > 0) ? G[1][g.index(i, j - 1, k)] : 0.0);
        d += ((k + 1 < n) ? G[2][g.index(i, j, k + 1)] : 0.0) -
             ((k > 0) ? G[2][g.index(i, j, k - 1)] : 0.0);
        out.values[g.index(i, j, k)] = d * inv2h;
      }
  return out;
}

}  // namespace

Field apply_Q(const CoefficientFields& coeffs, const Field& f) {
  if (coeffs.grid != f.grid && !coeffs.grid->same_as(*f.grid))
    throw InvalidParameter("apply_Q: grid mismatch");
  const Grid& g = *f.grid;
  const int n = g.n();
  std::array<ArrayXd, 3> G;
  for (auto& Gi : G) Gi = ArrayXd::Zero(g.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Eigen::Index p = g.index(i, j, k);
        const double df[3] = {d0(f.values, g, i, j, k, 0), d0(f.values, g, i, j, k, 1),
                              d0(f.values, g, i, j, k, 2)};
        for (int ci = 0; ci < 3; ++ci) {
          double flux = -coeffs.bbar[ci][p] * f.values[p];
          for (int cj = 0; cj < 3; ++cj) flux += coeffs.abar[sym_index(ci, cj)][p] * df[cj];
          G[ci][p] = flux;
        }
      }
  return divergence_no_outer_flux(g, G);
}

Field apply_Q_expanded(const CoefficientFields& coeffs, const Field& f) {
  const Grid& g = *f.grid;
  const int n = g.n();
  const double h = g.spacing();
  Field out(g);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Eigen::Index p = g.index(i, j, k);
        auto at = [&](int ii, int jj, int kk) -> double {
          if (ii < 0 || jj < 0 || kk < 0 || ii >= n || jj >= n || kk >= n) return 0.0;
          return f.values[g.index(ii, jj, kk)];
        };
        const double fc = at(i, j, k);
        double q = -coeffs.cbar[p] * fc;
        // second derivatives
        const int d[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        for (int ax = 0; ax < 3; ++ax) {
          const double s = at(i + d[ax][0], j + d[ax][1], k + d[ax][2]) - 2.0 * fc +
                           at(i - d[ax][0], j - d[ax][1], k - d[ax][2]);
          q += coeffs.abar[sym_index(ax, ax)][p] * s / (h * h);
        }
        for (int ax = 0; ax < 3; ++ax)
          for (int bx = ax + 1; bx < 3; ++bx) {
            const int pi = d[ax][0] + d[bx][0], pj = d[ax][1] + d[bx][1], pk = d[ax][2] + d[bx][2];
            const int mi = d[ax][0] - d[bx][0], mj = d[ax][1] - d[bx][1], mk = d[ax][2] - d[bx][2];
            const double cross = (at(i + pi, j + pj, k + pk) + at(i - pi, j - pj, k - pk) -
                                  at(i + mi, j + mj, k + mk) - at(i - mi, j - mj, k - mk)) /
                                 (4.0 * h * h);
            q += 2.0 * coeffs.abar[sym_index(ax, bx)][p] * cross;
          }
        out.values[p] = q;
      }
  return out;
}

Field apply_Q_conservative(const KernelSet& kernels, ConvolutionWorkspace& ws, const Field& f,
                           const Field& mu_ref, const ConservativeQOptions& opt) {
  if (!f.grid->same_as(kernels.grid()))
    throw InvalidParameter("apply_Q_conservative: grid mismatch");
  const Grid& g = *f.grid;
  const int n = g.n();
  const double u_cap = opt.u_cap > 0 ? opt.u_cap : 4.0 * g.half_width();

  // u = grad log max(f, theta mu_ref); the Maxwellian reference keeps the far
  // tail drift at the exact Gaussian value -v and removes the floor flip-flop.
  ArrayXd logf(g.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (Eigen::Index p = 0; p < g.size(); ++p)
    logf[p] = std::log(std::max(f.values[p], opt.theta * mu_ref.values[p]));

  std::array<ArrayXd, 3> u;
  std::array<ArrayXd, 3> fu;
  for (int ax = 0; ax < 3; ++ax) {
    u[ax] = ArrayXd::Zero(g.size());
    fu[ax] = ArrayXd::Zero(g.size());
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Eigen::Index p = g.index(i, j, k);
        for (int ax = 0; ax < 3; ++ax) {
          // One-sided at the box boundary would look outside the lattice; the
          // outer-layer flux is zeroed below anyway, so clamp to interior pairs.
          int ip = i + (ax == 0), jp = j + (ax == 1), kp = k + (ax == 2);
          int im = i - (ax == 0), jm = j - (ax == 1), km = k - (ax == 2);
          double val = 0.0;
          if (ip < n && jp < n && kp < n && im >= 0 && jm >= 0 && km >= 0)
            val = (logf[g.index(ip, jp, kp)] - logf[g.index(im, jm, km)]) / (2.0 * g.spacing());
          val = std::min(u_cap, std::max(-u_cap, val));
          u[ax][p] = val;
          fu[ax][p] = f.values[p] * val;
        }
      }

  // Spectra: f and the three drift sources f u_j.
  ws.forward(f.values, ws.ghat());
  for (int ax = 0; ax < 3; ++ax) ws.forward(fu[ax], ws.fhat(ax));

  // abar_ij = a_ij * f.
  std::array<ArrayXd, 6> abar;
  for (int comp = 0; comp < 6; ++comp)
    ws.convolve_spectrum(kernels.a_spectrum(comp), ws.ghat(), abar[comp]);

  // drift_i = sum_j a_ij * (f u_j), accumulated in spectral space.
  const std::size_t csz = kernels.fft()->complex_size();
  ComplexBuf acc = alloc_complex(csz);
  std::array<ArrayXd, 3> G;
  for (int ci = 0; ci < 3; ++ci) {
    std::memset(acc.get(), 0, sizeof(fftw_complex) * csz);
    for (int cj = 0; cj < 3; ++cj) {
      const fftw_complex* K = kernels.a_spectrum(sym_index(ci, cj));
      const fftw_complex* F = ws.fhat(cj);
      for (std::size_t p = 0; p < csz; ++p) {
        acc[p][0] += K[p][0] * F[p][0] - K[p][1] * F[p][1];
        acc[p][1] += K[p][0] * F[p][1] + K[p][1] * F[p][0];
      }
    }
    ArrayXd drift;
    ws.convolve_accumulated(acc.get(), drift);
    G[ci] = ArrayXd::Zero(g.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (Eigen::Index p = 0; p < g.size(); ++p) {
      double flux = -f.values[p] * drift[p];
      for (int cj = 0; cj < 3; ++cj) flux += abar[sym_index(ci, cj)][p] * fu[cj][p];
      G[ci][p] = flux;
    }
  }
  return divergence_no_outer_flux(g, G);
}

Field apply_Q_conservative(const KernelSet& kernels, ConvolutionWorkspace& ws, const Field& f) {
  // Maxwellian reference with the discrete moments of f.
  const double rho = integrate(f);
  if (rho <= 0) throw InvalidParameter("apply_Q_conservative: nonpositive mass");
  Vec3 u = Vec3::Zero();
  ArrayXd tmp(f.values.size());
  for (int ax = 0; ax < 3; ++ax) {
    for (Eigen::Index p = 0; p < f.values.size(); ++p)
      tmp[p] = f.grid->velocity(p)[ax] * f.values[p];
    u[ax] = f.grid->cell_volume() * pairwise_sum(tmp) / rho;
  }
  for (Eigen::Index p = 0; p < f.values.size(); ++p)
    tmp[p] = (f.grid->velocity(p) - u).squaredNorm() * f.values[p];
  const double T = f.grid->cell_volume() * pairwise_sum(tmp) / (3.0 * rho);
  Field mu_ref = discretize_maxwellian(*f.grid, rho, u, T);
  return apply_Q_conservative(kernels, ws, f, mu_ref);
}

double weak_form_moment(const KernelSet& kernels, const Field& f, const TestFunction& phi,
                        bool force) {
  const Grid& g = *f.grid;
  const int n = g.n();
  if (n > 12 && !force)
    throw InvalidParameter("weak_form_moment: grid too large (n > 12); pass force to override");
  const Eigen::Index N = g.size();
  std::vector<Vec3> grads(N);
  std::vector<Eigen::Matrix3d> hesss(N);
  for (Eigen::Index p = 0; p < N; ++p) {
    const Vec3 v = g.velocity(p);
    grads[p] = phi.grad(v);
    hesss[p] = phi.hess(v);
  }
  ArrayXd partial(N);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (Eigen::Index p = 0; p < N; ++p) {
    const auto [pi, pj, pk] = g.unravel(p);
    double acc = 0.0;
    for (Eigen::Index q = 0; q < N; ++q) {
      const auto [qi, qj, qk] = g.unravel(q);
      const int di = pi - qi, dj = pj - qj, dk = pk - qk;
      const double ff = f.values[p] * f.values[q];
      if (ff == 0.0) continue;
      double term = 0.0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          term += 0.5 * kernels.a_at(sym_index(i, j), di, dj, dk) *
                  (hesss[p](i, j) + hesss[q](i, j));
      for (int i = 0; i < 3; ++i)
        term += kernels.b_at(i, di, dj, dk) * (grads[p][i] - grads[q][i]);
      acc += term * ff;
    }
    partial[p] = acc;
  }
  const double h3 = g.cell_volume();
  return h3 * h3 * pairwise_sum(partial);
}

}  // namespace landau
