#pragma once

#include "csdeconv/grid.hpp"

namespace csdeconv {

// Square radial Gaussian PSF of side 2*radius+1: entry(dx, dy) proportional to
// exp(-(dx^2 + dy^2) / (2 sigma^2)), normalized to unit sum after clipping.
Kernel gaussian_kernel(double sigma, int radius);

// True iff k(dx,dy) == k(-dx,-dy) and k(dx,dy) == k(dy,dx) everywhere within tol.
// Transpose symmetry is only meaningful for square kernels; non-square kernels
// fail it by definition.
bool is_symmetric(const Kernel& k, double tol);

}  // namespace csdeconv
