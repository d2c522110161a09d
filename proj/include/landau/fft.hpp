#pragma once

#include <fftw3.h>

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

namespace landau {

// Real-to-complex 3D transforms on the doubled (2n)^3 lattice. Plans are created
// with FFTW_ESTIMATE so results are bit-identical across runs; execution uses the
// new-array interface and is safe to call concurrently on distinct buffers.
class Fft3 {
 public:
  explicit Fft3(int m);
  ~Fft3();
  Fft3(const Fft3&) = delete;
  Fft3& operator=(const Fft3&) = delete;

  int m() const { return m_; }
  std::size_t real_size() const { return static_cast<std::size_t>(m_) * m_ * m_; }
  std::size_t complex_size() const { return static_cast<std::size_t>(m_) * m_ * (m_ / 2 + 1); }

  void forward(double* in, fftw_complex* out) const;
  void backward(fftw_complex* in, double* out) const;  // unnormalized (scale by 1/m^3)

 private:
  int m_;
  fftw_plan fwd_ = nullptr;
  fftw_plan bwd_ = nullptr;
  double* rbuf_ = nullptr;
  fftw_complex* cbuf_ = nullptr;
};

struct FftwDeleter {
  void operator()(void* p) const { fftw_free(p); }
};
using RealBuf = std::unique_ptr<double[], FftwDeleter>;
using ComplexBuf = std::unique_ptr<fftw_complex[], FftwDeleter>;

RealBuf alloc_real(std::size_t n);
ComplexBuf alloc_complex(std::size_t n);

}  // namespace landau
