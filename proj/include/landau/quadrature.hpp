#pragma once

#include <functional>

namespace landau {

// Adaptive Gauss-Lobatto quadrature of f on [a, b] to a relative tolerance.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol = 1e-10, int max_depth = 48);

// (1/h^3) int_{[-h/2,h/2]^3} |z|^e dz for e > -3.
// Reduced to the exact ball part plus a smooth 2D face integral:
//   h^e [ 4 pi (1/2)^{e+3} / (e+3)  +  ... ]  ==  h^e * 3/(e+3) * int_{[-1/2,1/2]^2} (x^2+y^2+1/4)^{e/2} dx dy
double cell_average_power(double exponent, double h, double rel_tol = 1e-8);

}  // namespace landau
