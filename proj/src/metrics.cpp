#include "csdeconv/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace csdeconv {

namespace {

double spectrum_magnitude_rms(const Spectrum& s) {
    double acc = 0.0;
    for (const auto& c : s.data) acc += std::norm(c);
    return std::sqrt(acc / static_cast<double>(s.data.size()));
}

}  // namespace

double relative_error(const Image& g_truth, const Image& g_n) {
    if (!g_truth.same_shape(g_n)) {
        throw std::invalid_argument("shape mismatch between truth and reconstruction");
    }
    const double truth_norm = rms_norm(g_truth);
    if (truth_norm == 0.0) {
        throw std::invalid_argument("relative error undefined for all-zero truth");
    }
    return rms_norm(sub(g_truth, g_n)) / truth_norm;
}

double ftr(const Image& g_truth, const Image& g_n) {
    if (!g_truth.same_shape(g_n)) {
        throw std::invalid_argument("shape mismatch between truth and reconstruction");
    }
    const double truth_norm = spectrum_magnitude_rms(fft2(g_truth));
    if (truth_norm == 0.0) {
        throw std::invalid_argument("FTR undefined for all-zero truth");
    }
    return 1.0 - spectrum_magnitude_rms(fft2(g_n)) / truth_norm;
}

ResidualField residual_field_from_reconstruction(const Image& h, const Kernel& k,
                                                 const Image& g_n, double eps) {
    if (!h.same_shape(g_n)) {
        throw std::invalid_argument("shape mismatch between observed image and reconstruction");
    }
    const Image reblurred = convolve(g_n, k);
    ResidualField out;
    out.value = Field2D(h.width, h.height);
    out.mask = Field2D(h.width, h.height);
    for (std::size_t i = 0; i < h.data.size(); ++i) {
        if (h.data[i] < eps) {
            out.value.data[i] = 0.0;
            out.mask.data[i] = 0.0;
        } else {
            out.value.data[i] = 1.0 - reblurred.data[i] / h.data[i];
            out.mask.data[i] = 1.0;
        }
    }
    return out;
}

ResidualField residual_field(const Image& h, const Kernel& k, const WeightField& rho_n,
                             double eps) {
    if (!h.same_shape(rho_n)) {
        throw std::invalid_argument("shape mismatch between observed image and weight field");
    }
    return residual_field_from_reconstruction(h, k, mul(rho_n, h), eps);
}

double omega_reach(double alpha) {
    if (!(alpha > 0.0)) {
        throw std::invalid_argument("undefined reach");
    }
    return 1.0 / alpha;
}

Image ftr_spectrum_image(const Image& g_truth, const Image& g_n, double eps) {
    if (!g_truth.same_shape(g_n)) {
        throw std::invalid_argument("shape mismatch between truth and reconstruction");
    }
    const Spectrum st = fft2(g_truth);
    const Spectrum sn = fft2(g_n);
    Image out(g_truth.width, g_truth.height);
    const int cx = g_truth.width / 2;
    const int cy = g_truth.height / 2;
    for (int ky = 0; ky < g_truth.height; ++ky) {
        for (int kx = 0; kx < g_truth.width; ++kx) {
            const double denom = std::max(std::abs(st.at(kx, ky)), eps);
            const double v = 1.0 - std::abs(sn.at(kx, ky)) / denom;
            const int px = (kx + cx) % g_truth.width;
            const int py = (ky + cy) % g_truth.height;
            out.at(px, py) = std::clamp(v, 0.0, 1.0);
        }
    }
    return out;
}

}  // namespace csdeconv
