#include "landau/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "landau/grid.hpp"

namespace landau {

namespace {

// 7-point Gauss-Lobatto with the embedded 4-point Kronrod-style estimate
// (Gander & Gautschi's adaptlob nodes).
struct LobattoResult {
  double coarse;
  double fine;
};

LobattoResult lobatto_pair(const std::function<double(double)>& f, double a, double b) {
  const double m = 0.5 * (a + b);
  const double hh = 0.5 * (b - a);
  const double alpha = std::sqrt(2.0 / 3.0);
  const double beta = 1.0 / std::sqrt(5.0);
  const double x1 = m - alpha * hh, x2 = m - beta * hh, x3 = m, x4 = m + beta * hh,
               x5 = m + alpha * hh;
  const double fa = f(a), fb = f(b);
  const double f1 = f(x1), f2 = f(x2), f3 = f(x3), f4 = f(x4), f5 = f(x5);
  const double coarse = (hh / 6.0) * (fa + fb + 5.0 * (f2 + f4));
  const double fine =
      (hh / 1470.0) * (77.0 * (fa + fb) + 432.0 * (f1 + f5) + 625.0 * (f2 + f4) + 672.0 * f3);
  return {coarse, fine};
}

double adapt(const std::function<double(double)>& f, double a, double b, double tol_abs,
             int depth, int max_depth) {
  const auto r = lobatto_pair(f, a, b);
  if (depth >= max_depth || std::abs(r.fine - r.coarse) <= tol_abs) return r.fine;
  const double m = 0.5 * (a + b);
  return adapt(f, a, m, 0.5 * tol_abs, depth + 1, max_depth) +
         adapt(f, m, b, 0.5 * tol_abs, depth + 1, max_depth);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, int max_depth) {
  if (a == b) return 0.0;
  const auto r0 = lobatto_pair(f, a, b);
  double scale = std::abs(r0.fine);
  if (scale == 0.0) scale = 1.0;
  return adapt(f, a, b, rel_tol * scale, 0, max_depth);
}

double cell_average_power(double exponent, double h, double rel_tol) {
  if (exponent <= -3.0) throw InvalidParameter("cell_average_power: exponent must be > -3");
  if (h <= 0.0) throw InvalidParameter("cell_average_power: h must be > 0");
  const double e = exponent;
  // Smooth 2D integrand over the unit-cube face, nested 1D quadratures.
  auto inner = [&](double x) {
    return integrate_adaptive(
        [&](double y) { return std::pow(x * x + y * y + 0.25, 0.5 * e); }, 0.0, 0.5,
        0.1 * rel_tol);
  };
  const double face = 4.0 * integrate_adaptive(inner, 0.0, 0.5, 0.1 * rel_tol);
  return std::pow(h, e) * 3.0 / (e + 3.0) * face;
}

}  // namespace landau
