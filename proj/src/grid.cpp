#include "landau/grid.hpp"

#include <cmath>
#include <functional>

namespace landau {

Grid::Grid(int n_per_axis, double half_width) : n_(n_per_axis), L_(half_width) {
  if (n_ < 2) throw InvalidParameter("grid: n must be >= 2, got " + std::to_string(n_));
  if (L_ <= 0) throw InvalidParameter("grid: L must be > 0");
  h_ = 2.0 * L_ / n_;
  coords_.resize(n_);
  for (int i = 0; i < n_; ++i) coords_[i] = -L_ + (i + 0.5) * h_;
}

Grid build_grid(int n, double L) { return Grid(n, L); }

double pairwise_sum(const double* data, Eigen::Index size) {
  if (size <= 32) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < size; ++i) s += data[i];
    return s;
  }
  const Eigen::Index half = size / 2;
  return pairwise_sum(data, half) + pairwise_sum(data + half, size - half);
}

double pairwise_sum(const ArrayXd& a) { return pairwise_sum(a.data(), a.size()); }

Field discretize_maxwellian(const Grid& grid, double rho, const Vec3& u, double T,
                            bool* tail_warning) {
  if (rho <= 0) throw InvalidParameter("maxwellian: rho must be > 0");
  if (T <= 0) throw InvalidParameter("maxwellian: T must be > 0");
  Field f(grid);
  const double norm = rho / std::pow(2.0 * M_PI * T, 1.5);
  const int n = grid.n();
  for (int i = 0; i < n; ++i) {
    const double dx = grid.axis_coord(i) - u[0];
    for (int j = 0; j < n; ++j) {
      const double dy = grid.axis_coord(j) - u[1];
      for (int k = 0; k < n; ++k) {
        const double dz = grid.axis_coord(k) - u[2];
        f.values[grid.index(i, j, k)] = norm * std::exp(-(dx * dx + dy * dy + dz * dz) / (2.0 * T));
      }
    }
  }
  if (tail_warning) {
    // 1D tail bound per axis: mass outside [-L, L] of a component with center u, temp T.
    double outside = 0.0;
    for (int ax = 0; ax < 3; ++ax) {
      const double sigma = std::sqrt(T);
      const double a = (grid.half_width() - std::abs(u[ax])) / sigma;
      outside += std::erfc(a / std::sqrt(2.0));
    }
    *tail_warning = outside * rho > 1e-8 * rho;
  }
  return f;
}

std::vector<MixtureComponent> standardize_mixture(const std::vector<MixtureComponent>& comps) {
  if (comps.empty()) throw InvalidParameter("mixture: empty component list");
  double rho = 0.0;
  for (const auto& c : comps) {
    if (c.weight <= 0) throw InvalidParameter("mixture: nonpositive weight");
    if (c.T <= 0) throw InvalidParameter("mixture: nonpositive temperature");
    rho += c.weight;
  }
  Vec3 u_mix = Vec3::Zero();
  for (const auto& c : comps) u_mix += (c.weight / rho) * c.u;
  // T = (1/3 rho) int |v - u|^2 f = (1/3 rho) sum_k w_k (3 T_k + |u_k - u|^2)
  double T_mix = 0.0;
  for (const auto& c : comps) T_mix += c.weight * (3.0 * c.T + (c.u - u_mix).squaredNorm());
  T_mix /= 3.0 * rho;
  const double s = std::sqrt(T_mix);
  std::vector<MixtureComponent> out;
  out.reserve(comps.size());
  for (const auto& c : comps) out.push_back({c.weight / rho, (c.u - u_mix) / s, c.T / T_mix});
  return out;
}

Field discretize_mixture(const Grid& grid, const std::vector<MixtureComponent>& comps) {
  Field f(grid);
  for (const auto& c : comps) {
    Field g = discretize_maxwellian(grid, c.weight, c.u, c.T);
    f.values += g.values;
  }
  return f;
}

double integrate(const Field& f) { return f.grid->cell_volume() * pairwise_sum(f.values); }

double integrate_weighted(const Field& f, const std::function<double(const Vec3&)>& w) {
  ArrayXd tmp(f.values.size());
  for (Eigen::Index p = 0; p < f.values.size(); ++p) tmp[p] = w(f.grid->velocity(p)) * f.values[p];
  return f.grid->cell_volume() * pairwise_sum(tmp);
}

std::array<Field, 3> gradient(const Field& f) {
  const Grid& g = *f.grid;
  const int n = g.n();
  const double inv2h = 1.0 / (2.0 * g.spacing());
  std::array<Field, 3> out{Field(g), Field(g), Field(g)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Eigen::Index p = g.index(i, j, k);
        const double xp = (i + 1 < n) ? f.values[g.index(i + 1, j, k)] : 0.0;
        const double xm = (i > 0) ? f.values[g.index(i - 1, j, k)] : 0.0;
        const double yp = (j + 1 < n) ? f.values[g.index(i, j + 1, k)] : 0.0;
        const double ym = (j > 0) ? f.values[g.index(i, j - 1, k)] : 0.0;
        const double zp = (k + 1 < n) ? f.values[g.index(i, j, k + 1)] : 0.0;
        const double zm = (k > 0) ? f.values[g.index(i, j, k - 1)] : 0.0;
        out[0].values[p] = (xp - xm) * inv2h;
        out[1].values[p] = (yp - ym) * inv2h;
        out[2].values[p] = (zp - zm) * inv2h;
      }
  return out;
}

Field divergence(const std::array<Field, 3>& gv) {
  const Grid& g = *gv[0].grid;
  const int n = g.n();
  const double inv2h = 1.0 / (2.0 * g.spacing());
  Field out(g);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Eigen::Index p = g.index(i, j, k);
        double d = 0.0;
        d += ((i + 1 < n) ? gv[0].values[g.index(i + 1, j, k)] : 0.0) -
             ((i > 0) ? gv[0].values[g.index(i - 1, j, k)] : 0.0);
        d += ((j + 1 < n) ? gv[1].values[g.index(i, j + 1, k)] : 0.0) -
             ((j > 0) ? gv[1].values[g.index(i, j - 1, k)] : 0.0);
        d += ((k + 1 < n) ? gv[2].values[g.index(i, j, k + 1)] : 0.0) -
             ((k > 0) ? gv[2].values[g.index(i, j, k - 1)] : 0.0);
        out.values[p] = d * inv2h;
      }
  return out;
}

}  // namespace landau
