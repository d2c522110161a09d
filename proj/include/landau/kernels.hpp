#pragma once

#include <array>
#include <memory>

#include "landau/fft.hpp"
#include "landau/grid.hpp"

namespace landau {

// Index into the six independent components of a symmetric 3x3 matrix,
// ordered (00, 01, 02, 11, 12, 22).
inline int sym_index(int i, int j) {
  static constexpr int map[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
  return map[i][j];
}

// Collision kernels sampled on the doubled difference lattice [-2L, 2L):
//   a_ij(z) = |z|^{gamma+2} (delta_ij - z_i z_j / |z|^2)
//   b_i(z)  = -2 |z|^gamma z_i
//   c(z)    = -2 (gamma+3) |z|^gamma
// The origin cell carries exact cell averages: b = 0 (odd symmetry),
// a = (2/3) avg(|z|^{gamma+2}) I (isotropy of the projector), c from avg(|z|^gamma).
// Forward spectra of every component are cached for zero-padded linear convolution.
class KernelSet {
 public:
  KernelSet(const Grid& grid, double gamma);

  const Grid& grid() const { return *grid_; }
  double gamma() const { return gamma_; }
  int m() const { return m_; }

  // Sample lookup by lattice offset d in [-n, n-1]^3.
  double a_at(int comp, int di, int dj, int dk) const {
    return a_[comp][wrap_index(di, dj, dk)];
  }
  double b_at(int comp, int di, int dj, int dk) const {
    return b_[comp][wrap_index(di, dj, dk)];
  }
  double c_at(int di, int dj, int dk) const { return c_[wrap_index(di, dj, dk)]; }

  const double* a_samples(int comp) const { return a_[comp].get(); }
  const double* b_samples(int comp) const { return b_[comp].get(); }
  const double* c_samples() const { return c_.get(); }

  const fftw_complex* a_spectrum(int comp) const { return a_hat_[comp].get(); }
  const fftw_complex* b_spectrum(int comp) const { return b_hat_[comp].get(); }
  const fftw_complex* c_spectrum() const { return c_hat_.get(); }

  std::shared_ptr<const Fft3> fft() const { return fft_; }

  double origin_avg_a() const { return avg_gamma2_; }
  double origin_avg_c() const { return avg_gamma_; }

  std::size_t wrap_index(int di, int dj, int dk) const {
    const int m = m_;
    const std::size_t i = static_cast<std::size_t>((di % m + m) % m);
    const std::size_t j = static_cast<std::size_t>((dj % m + m) % m);
    const std::size_t k = static_cast<std::size_t>((dk % m + m) % m);
    return (i * m + j) * m + k;
  }

 private:
  const Grid* grid_;
  double gamma_;
  int m_;
  double avg_gamma_, avg_gamma2_;
  std::array<RealBuf, 6> a_;
  std::array<RealBuf, 3> b_;
  RealBuf c_;
  std::array<ComplexBuf, 6> a_hat_;
  std::array<ComplexBuf, 3> b_hat_;
  ComplexBuf c_hat_;
  std::shared_ptr<const Fft3> fft_;
};

KernelSet sample_kernels(const Grid& grid, double gamma);

}  // namespace landau
