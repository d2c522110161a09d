#pragma once

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace landau {

using Eigen::ArrayXd;
using Vec3 = Eigen::Vector3d;

struct InvalidParameter : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Truncated cell-centered velocity lattice on [-L, L)^3.
// Coordinates v_i = -L + (i + 1/2) h, h = 2L/n, ordered lexicographically in (i, j, k).
class Grid {
 public:
  Grid(int n_per_axis, double half_width);

  int n() const { return n_; }
  double half_width() const { return L_; }
  double spacing() const { return h_; }
  double cell_volume() const { return h_ * h_ * h_; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(n_) * n_ * n_; }

  double axis_coord(int i) const { return coords_[i]; }
  const std::vector<double>& axis_coords() const { return coords_; }

  Eigen::Index index(int i, int j, int k) const {
    return (static_cast<Eigen::Index>(i) * n_ + j) * n_ + k;
  }
  std::array<int, 3> unravel(Eigen::Index p) const {
    const int k = static_cast<int>(p % n_);
    const int j = static_cast<int>((p / n_) % n_);
    const int i = static_cast<int>(p / (static_cast<Eigen::Index>(n_) * n_));
    return {i, j, k};
  }
  Vec3 velocity(Eigen::Index p) const {
    const auto ijk = unravel(p);
    return {coords_[ijk[0]], coords_[ijk[1]], coords_[ijk[2]]};
  }

  bool same_as(const Grid& other) const { return n_ == other.n_ && L_ == other.L_; }

 private:
  int n_;
  double L_;
  double h_;
  std::vector<double> coords_;
};

// Scalar distribution sampled at cell centers. Values are densities
// (probability mass per velocity volume).
struct Field {
  const Grid* grid = nullptr;
  ArrayXd values;

  Field() = default;
  explicit Field(const Grid& g) : grid(&g), values(ArrayXd::Zero(g.size())) {}
  Field(const Grid& g, ArrayXd v) : grid(&g), values(std::move(v)) {
    if (values.size() != g.size()) throw InvalidParameter("field size does not match grid");
  }

  double& operator()(int i, int j, int k) { return values[grid->index(i, j, k)]; }
  double operator()(int i, int j, int k) const { return values[grid->index(i, j, k)]; }
};

Grid build_grid(int n, double L);

// Pairwise (cascade) summation in a fixed order; bit-stable across runs.
double pairwise_sum(const double* data, Eigen::Index size);
double pairwise_sum(const ArrayXd& a);

// Pointwise evaluation of mu_{rho,u,T}(v) = rho (2 pi T)^{-3/2} exp(-|v-u|^2 / 2T).
// Warns via the returned flag when the analytic tail mass outside the box exceeds 1e-8 rho.
Field discretize_maxwellian(const Grid& grid, double rho, const Vec3& u, double T,
                            bool* tail_warning = nullptr);

struct MixtureComponent {
  double weight;
  Vec3 u;
  double T;
};

// Affine velocity rescaling so that the mixture has (rho, u, T) = (1, 0, 1).
std::vector<MixtureComponent> standardize_mixture(const std::vector<MixtureComponent>& comps);

Field discretize_mixture(const Grid& grid, const std::vector<MixtureComponent>& comps);

// Midpoint quadrature h^3 sum w(v) f(v) with pairwise summation.
double integrate(const Field& f);
double integrate_weighted(const Field& f, const std::function<double(const Vec3&)>& w);

// Second-order central differences, zero extension outside the box.
std::array<Field, 3> gradient(const Field& f);
Field divergence(const std::array<Field, 3>& g);

}  // namespace landau
