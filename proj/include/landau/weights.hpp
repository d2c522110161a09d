#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "landau/grid.hpp"

namespace landau {

struct WeightValidation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Velocity weight m(v). Polynomial <v>^k, stretched exponential exp(kappa <v>^s),
// or mu(v)^{-1/2} for the conjugated Gaussian-weighted space.
class WeightSpec {
 public:
  enum class Kind { Polynomial, StretchedExp, InverseSqrtMaxwellian };

  static WeightSpec polynomial(double k) {
    if (k < 0) throw WeightValidation("polynomial weight needs k >= 0");
    WeightSpec w;
    w.kind_ = Kind::Polynomial;
    w.k_ = k;
    return w;
  }
  static WeightSpec stretched_exp(double kappa, double s) {
    if (kappa <= 0) throw WeightValidation("stretched-exp weight needs kappa > 0");
    if (s <= 0 || s >= 2) throw WeightValidation("stretched-exp weight needs 0 < s < 2");
    WeightSpec w;
    w.kind_ = Kind::StretchedExp;
    w.kappa_ = kappa;
    w.s_ = s;
    return w;
  }
  static WeightSpec inverse_sqrt_maxwellian() {
    WeightSpec w;
    w.kind_ = Kind::InverseSqrtMaxwellian;
    return w;
  }

  Kind kind() const { return kind_; }
  double k() const { return k_; }
  double kappa() const { return kappa_; }
  double s() const { return s_; }

  // Context rules. A stretched exponential entering the linearized theory must
  // satisfy s + gamma > 0; one entering moment propagation must satisfy s < 2 + gamma.
  void validate_linearized(double gamma) const {
    if (kind_ == Kind::StretchedExp && s_ + gamma <= 0)
      throw WeightValidation("s+gamma <= 0 violates the stretched-exponential weight assumption (s=" +
                             std::to_string(s_) + ", gamma=" + std::to_string(gamma) + ")");
  }
  void validate_moment(double gamma) const {
    if (kind_ == Kind::StretchedExp && s_ >= 2.0 + gamma)
      throw WeightValidation("s >= 2+gamma: stretched-exponential moment cannot propagate");
  }

  double operator()(const Vec3& v) const {
    const double r2 = v.squaredNorm();
    switch (kind_) {
      case Kind::Polynomial:
        return std::pow(1.0 + r2, 0.5 * k_);
      case Kind::StretchedExp:
        return std::exp(kappa_ * std::pow(1.0 + r2, 0.5 * s_));
      case Kind::InverseSqrtMaxwellian:
        return std::pow(2.0 * M_PI, 0.75) * std::exp(r2 / 4.0);
    }
    return 1.0;
  }
  double at_radius(double r) const { return (*this)(Vec3(r, 0, 0)); }

  // Canonical CSV column key, e.g. L1_k4 or L1_exp_k0.1_s0.75.
  std::string key_fragment() const;

 private:
  Kind kind_ = Kind::Polynomial;
  double k_ = 0.0;
  double kappa_ = 0.0;
  double s_ = 0.0;
};

}  // namespace landau
