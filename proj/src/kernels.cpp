#include "csdeconv/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace csdeconv {

Kernel gaussian_kernel(double sigma, int radius) {
    if (!(sigma > 0.0)) {
        throw std::invalid_argument("gaussian sigma must be positive");
    }
    if (radius < 1) {
        throw std::invalid_argument("gaussian radius must be at least 1");
    }
    const int side = 2 * radius + 1;
    Kernel k(side, side);
    const double inv_two_sigma_sq = 1.0 / (2.0 * sigma * sigma);
    for (int dy = -radius; dy <= radius; ++dy) {
        for (int dx = -radius; dx <= radius; ++dx) {
            // Same expression for equal dx^2+dy^2, so radial symmetry is exact.
            k.at(dx, dy) = std::exp(-(static_cast<double>(dx) * dx + static_cast<double>(dy) * dy) *
                                    inv_two_sigma_sq);
        }
    }
    k.normalize();
    return k;
}

bool is_symmetric(const Kernel& k, double tol) {
    for (int dy = -k.radius_y(); dy <= k.radius_y(); ++dy) {
        for (int dx = -k.radius_x(); dx <= k.radius_x(); ++dx) {
            if (std::abs(k.at(dx, dy) - k.at(-dx, -dy)) > tol) return false;
        }
    }
    if (k.side_x != k.side_y) return false;
    for (int dy = -k.radius_y(); dy <= k.radius_y(); ++dy) {
        for (int dx = -k.radius_x(); dx <= k.radius_x(); ++dx) {
            if (std::abs(k.at(dx, dy) - k.at(dy, dx)) > tol) return false;
        }
    }
    return true;
}

}  // namespace csdeconv
