#include "landau/fft.hpp"

#include <cstring>
#include <mutex>

namespace landau {

namespace {
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

Fft3::Fft3(int m) : m_(m) {
  std::lock_guard<std::mutex> lock(planner_mutex());
  rbuf_ = static_cast<double*>(fftw_malloc(sizeof(double) * real_size()));
  cbuf_ = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * complex_size()));
  fwd_ = fftw_plan_dft_r2c_3d(m_, m_, m_, rbuf_, cbuf_, FFTW_ESTIMATE);
  bwd_ = fftw_plan_dft_c2r_3d(m_, m_, m_, cbuf_, rbuf_, FFTW_ESTIMATE);
}

Fft3::~Fft3() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  if (fwd_) fftw_destroy_plan(fwd_);
  if (bwd_) fftw_destroy_plan(bwd_);
  fftw_free(rbuf_);
  fftw_free(cbuf_);
}

void Fft3::forward(double* in, fftw_complex* out) const { fftw_execute_dft_r2c(fwd_, in, out); }

void Fft3::backward(fftw_complex* in, double* out) const { fftw_execute_dft_c2r(bwd_, in, out); }

RealBuf alloc_real(std::size_t n) {
  return RealBuf(static_cast<double*>(fftw_malloc(sizeof(double) * n)));
}
ComplexBuf alloc_complex(std::size_t n) {
  return ComplexBuf(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n)));
}

}  // namespace landau
