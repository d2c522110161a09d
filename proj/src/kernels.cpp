#include "landau/kernels.hpp"

#include <cmath>
#include <cstring>

#include "landau/quadrature.hpp"

namespace landau {

KernelSet::KernelSet(const Grid& grid, double gamma) : grid_(&grid), gamma_(gamma) {
  if (gamma <= -2.0 || gamma >= 0.0)
    throw InvalidParameter("kernels: gamma must lie in (-2, 0), got " + std::to_string(gamma));
  const int n = grid.n();
  m_ = 2 * n;
  const double h = grid.spacing();
  const std::size_t sz = static_cast<std::size_t>(m_) * m_ * m_;

  avg_gamma_ = cell_average_power(gamma, h);
  avg_gamma2_ = cell_average_power(gamma + 2.0, h);

  for (auto& buf : a_) buf = alloc_real(sz);
  for (auto& buf : b_) buf = alloc_real(sz);
  c_ = alloc_real(sz);

  // Offsets d in [-n, n-1]; stored wrapped so convolution output lands on the
  // primary window without aliasing.
  for (int di = -n; di < n; ++di)
    for (int dj = -n; dj < n; ++dj)
      for (int dk = -n; dk < n; ++dk) {
        const std::size_t p = wrap_index(di, dj, dk);
        const double z[3] = {di * h, dj * h, dk * h};
        const double r2 = z[0] * z[0] + z[1] * z[1] + z[2] * z[2];
        if (di == 0 && dj == 0 && dk == 0) {
          const double iso = (2.0 / 3.0) * avg_gamma2_;
          for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) a_[sym_index(i, j)][p] = (i == j) ? iso : 0.0;
          for (int i = 0; i < 3; ++i) b_[i][p] = 0.0;
          c_[p] = -2.0 * (gamma + 3.0) * avg_gamma_;
          continue;
        }
        const double w = std::pow(r2, 0.5 * (gamma + 2.0));
        const double wg = std::pow(r2, 0.5 * gamma);
        for (int i = 0; i < 3; ++i)
          for (int j = i; j < 3; ++j) {
            const double proj = (i == j ? 1.0 : 0.0) - z[i] * z[j] / r2;
            a_[sym_index(i, j)][p] = w * proj;
          }
        for (int i = 0; i < 3; ++i) b_[i][p] = -2.0 * wg * z[i];
        c_[p] = -2.0 * (gamma + 3.0) * wg;
      }

  fft_ = std::make_shared<Fft3>(m_);
  const std::size_t csz = fft_->complex_size();
  auto scratch = alloc_real(sz);
  auto transform = [&](const RealBuf& src) {
    auto out = alloc_complex(csz);
    std::memcpy(scratch.get(), src.get(), sizeof(double) * sz);
    fft_->forward(scratch.get(), out.get());
    return out;
  };
  for (int comp = 0; comp < 6; ++comp) a_hat_[comp] = transform(a_[comp]);
  for (int comp = 0; comp < 3; ++comp) b_hat_[comp] = transform(b_[comp]);
  c_hat_ = transform(c_);
}

KernelSet sample_kernels(const Grid& grid, double gamma) { return KernelSet(grid, gamma); }

}  // namespace landau
