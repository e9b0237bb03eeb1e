#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace csdeconv {

// Dense row-major 2D raster of doubles, (row = y, col = x) indexing.
// Used both for images (observed h, truth g, reconstructions) and for
// dimensionless weight fields; the two share shape and arithmetic.
struct Field2D {
    int width = 0;
    int height = 0;
    std::vector<double> data;

    Field2D() = default;
    Field2D(int w, int h, double fill = 0.0);

    double& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
    double at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }

    std::size_t size() const { return data.size(); }
    bool same_shape(const Field2D& other) const {
        return width == other.width && height == other.height;
    }
};

using Image = Field2D;
using WeightField = Field2D;

// Small dense PSF with odd side lengths, anchored at its geometric center.
// Kernels produced by this library are normalized to unit sum.
struct Kernel {
    int side_x = 0;
    int side_y = 0;
    std::vector<double> data;  // row-major, side_y rows of side_x entries

    Kernel() = default;
    Kernel(int sx, int sy);  // throws unless both sides are odd and positive

    int radius_x() const { return side_x / 2; }
    int radius_y() const { return side_y / 2; }

    // Offsets relative to the center anchor: dx in [-radius_x, radius_x].
    double& at(int dx, int dy) {
        return data[static_cast<std::size_t>(dy + radius_y()) * side_x + (dx + radius_x())];
    }
    double at(int dx, int dy) const {
        return data[static_cast<std::size_t>(dy + radius_y()) * side_x + (dx + radius_x())];
    }

    double sum() const;
    void normalize();  // divides by sum(); throws when the sum is too close to zero
};

// Root mean square over all entries: sqrt(mean(f^2)). Throws on empty input.
double rms_norm(const Field2D& f);

// Pointwise division with a positive clamp on near-zero denominators:
//   den >  eps  ->  num / den
//   den in [-eps, eps] -> num / eps
//   den < -eps  ->  num / den
Field2D guarded_divide(const Field2D& num, const Field2D& den, double eps);

Field2D add(const Field2D& a, const Field2D& b);
Field2D sub(const Field2D& a, const Field2D& b);
Field2D mul(const Field2D& a, const Field2D& b);
Field2D scale(const Field2D& a, double c);

bool is_finite(const Field2D& f);

inline Field2D operator+(const Field2D& a, const Field2D& b) { return add(a, b); }
inline Field2D operator-(const Field2D& a, const Field2D& b) { return sub(a, b); }
inline Field2D operator*(const Field2D& a, const Field2D& b) { return mul(a, b); }
inline Field2D operator*(double c, const Field2D& a) { return scale(a, c); }
inline Field2D operator*(const Field2D& a, double c) { return scale(a, c); }

}  // namespace csdeconv
