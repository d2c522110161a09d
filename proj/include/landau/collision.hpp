#pragma once

#include <array>
#include <functional>
#include <memory>

#include "landau/grid.hpp"
#include "landau/kernels.hpp"

namespace landau {

// Convolved coefficient fields on the primary grid:
//   abar = a*g (6 symmetric components), bbar = b*g, cbar = c*g.
struct CoefficientFields {
  const Grid* grid = nullptr;
  std::array<ArrayXd, 6> abar;
  std::array<ArrayXd, 3> bbar;
  ArrayXd cbar;

  Eigen::Matrix3d abar_matrix(Eigen::Index p) const {
    Eigen::Matrix3d m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = abar[sym_index(i, j)][p];
    return m;
  }
};

// Scratch buffers and FFT plans for zero-padded linear convolution on one grid.
// Each simulation owns one; not safe to share between concurrent simulations.
class ConvolutionWorkspace {
 public:
  ConvolutionWorkspace(const KernelSet& kernels);

  const Grid& grid() const { return *grid_; }

  // Forward transform of a primary-grid field, zero padded to (2n)^3.
  void forward(const ArrayXd& values, fftw_complex* out);
  // out(v) = h^3 * (kernel * g)(v) restricted to the primary window.
  void convolve_spectrum(const fftw_complex* kernel_hat, const fftw_complex* g_hat, ArrayXd& out);
  // Inverse transform of an already-multiplied spectrum, same scaling and window.
  void convolve_accumulated(fftw_complex* product_hat, ArrayXd& out);

  fftw_complex* ghat() { return ghat_.get(); }
  fftw_complex* fhat(int j) { return fhat_[j].get(); }

 private:
  const KernelSet* kernels_;
  const Grid* grid_;
  std::shared_ptr<const Fft3> fft_;
  RealBuf pad_;
  ComplexBuf ghat_;
  std::array<ComplexBuf, 3> fhat_;
  ComplexBuf mul_;
  RealBuf inv_;
};

// Exact discrete linear convolution of every kernel component with g.
CoefficientFields convolve_fields(const KernelSet& kernels, ConvolutionWorkspace& ws,
                                  const Field& g);

// Bilinear divergence-form evaluation
//   Q(g,f) = div( abar_g grad f - bbar_g f )
// with central differences, zero extension, and no flux through the outer cell layer.
Field apply_Q(const CoefficientFields& coeffs, const Field& f);

// Expanded (non-conservative) form abar_ij d_ij f - cbar f; cross-check path only.
Field apply_Q_expanded(const CoefficientFields& coeffs, const Field& f);

// Conservative self-collision Q(f,f) in Landau log form:
//   G_i = sum_j (a_ij*f) f u_j - f (a_ij*(f u_j)),   u = grad log max(f, theta mu_ref),
// which annihilates sampled Maxwellians exactly and conserves mass, momentum and
// energy to roundoff (pair antisymmetry plus a(z) z = 0 at every sample).
struct ConservativeQOptions {
  double theta = 1e-14;   // tail reference level, relative to mu_ref
  double u_cap = 0.0;     // 0 -> 4 * L
};

Field apply_Q_conservative(const KernelSet& kernels, ConvolutionWorkspace& ws, const Field& f,
                           const Field& mu_ref, const ConservativeQOptions& opt = {});

// Convenience: mu_ref from the discrete moments of f itself.
Field apply_Q_conservative(const KernelSet& kernels, ConvolutionWorkspace& ws, const Field& f);

// Test function with analytic derivatives for the weak-form oracle.
struct TestFunction {
  std::function<Vec3(const Vec3&)> grad;
  std::function<Eigen::Matrix3d(const Vec3&)> hess;
};

// O(N^6) double-sum weak form of int Q(f,f) phi:
//   1/2 sum a_ij(v-w)(d_ij phi(v) + d_ij phi(w)) f(w) f(v) h^6
//   +   sum b_i(v-w)(d_i phi(v) - d_i phi(w)) f(w) f(v) h^6
// Guarded to n <= 12 unless force is set.
double weak_form_moment(const KernelSet& kernels, const Field& f, const TestFunction& phi,
                        bool force = false);

}  // namespace landau
