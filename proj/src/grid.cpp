#include "csdeconv/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace csdeconv {

namespace {

void require_same_shape(const Field2D& a, const Field2D& b) {
    if (!a.same_shape(b)) {
        throw std::invalid_argument("shape mismatch: " + std::to_string(a.width) + "x" +
                                    std::to_string(a.height) + " vs " + std::to_string(b.width) +
                                    "x" + std::to_string(b.height));
    }
}

}  // namespace

Field2D::Field2D(int w, int h, double fill) : width(w), height(h) {
    if (w < 1 || h < 1) {
        throw std::invalid_argument("field dimensions must be positive");
    }
    data.assign(static_cast<std::size_t>(w) * h, fill);
}

Kernel::Kernel(int sx, int sy) : side_x(sx), side_y(sy) {
    if (sx < 1 || sy < 1 || sx % 2 == 0 || sy % 2 == 0) {
        throw std::invalid_argument("kernel side lengths must be odd and positive");
    }
    data.assign(static_cast<std::size_t>(sx) * sy, 0.0);
}

double Kernel::sum() const {
    double s = 0.0;
    for (double v : data) s += v;
    return s;
}

void Kernel::normalize() {
    const double s = sum();
    if (std::abs(s) < 1e-12) {
        throw std::runtime_error("kernel sum too close to zero, cannot normalize");
    }
    for (double& v : data) v /= s;
}

double rms_norm(const Field2D& f) {
    if (f.data.empty()) {
        throw std::invalid_argument("empty input");
    }
    double acc = 0.0;
    for (double v : f.data) acc += v * v;
    return std::sqrt(acc / static_cast<double>(f.data.size()));
}

Field2D guarded_divide(const Field2D& num, const Field2D& den, double eps) {
    require_same_shape(num, den);
    if (!(eps > 0.0)) {
        throw std::invalid_argument("guard epsilon must be positive");
    }
    Field2D out(num.width, num.height);
    for (std::size_t i = 0; i < num.data.size(); ++i) {
        const double d = den.data[i];
        const double effective = (d > eps || d < -eps) ? d : eps;
        out.data[i] = num.data[i] / effective;
    }
    return out;
}

Field2D add(const Field2D& a, const Field2D& b) {
    require_same_shape(a, b);
    Field2D out(a.width, a.height);
    for (std::size_t i = 0; i < a.data.size(); ++i) out.data[i] = a.data[i] + b.data[i];
    return out;
}

Field2D sub(const Field2D& a, const Field2D& b) {
    require_same_shape(a, b);
    Field2D out(a.width, a.height);
    for (std::size_t i = 0; i < a.data.size(); ++i) out.data[i] = a.data[i] - b.data[i];
    return out;
}

Field2D mul(const Field2D& a, const Field2D& b) {
    require_same_shape(a, b);
    Field2D out(a.width, a.height);
    for (std::size_t i = 0; i < a.data.size(); ++i) out.data[i] = a.data[i] * b.data[i];
    return out;
}

Field2D scale(const Field2D& a, double c) {
    Field2D out(a.width, a.height);
    for (std::size_t i = 0; i < a.data.size(); ++i) out.data[i] = a.data[i] * c;
    return out;
}

bool is_finite(const Field2D& f) {
    for (double v : f.data) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

}  // namespace csdeconv
