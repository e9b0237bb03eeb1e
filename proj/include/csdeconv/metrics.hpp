#pragma once

#include "csdeconv/fourier.hpp"
#include "csdeconv/grid.hpp"

namespace csdeconv {

// Per-iteration record emitted by the deconvolution driver. rel_err and ftr
// are NaN when no ground truth was supplied.
struct IterationTrace {
    int n = 0;
    double alpha_n = 0.0;
    double rel_err = 0.0;
    double ftr = 0.0;
    double residual_rms = 0.0;
    double wall_ms = 0.0;
};

// rms(g_truth - g_n) / rms(g_truth). Throws when the truth is all-zero.
double relative_error(const Image& g_truth, const Image& g_n);

// 1 - rms(|fft(g_n)|) / rms(|fft(g_truth)|): the Fourier-transform-ratio
// recovery measure. 0 for a perfect reconstruction, 1 for an empty one.
double ftr(const Image& g_truth, const Image& g_n);

// Pointwise truth-free residual estimate: 1 - (k * (rho_n h)) / h.
// Points where h < eps carry no information; they are reported as 0 and
// flagged as 0 in the companion mask (1 elsewhere).
struct ResidualField {
    WeightField value;
    WeightField mask;
};

ResidualField residual_field(const Image& h, const Kernel& k, const WeightField& rho_n,
                             double eps);

// Same residual computed directly from a reconstruction g_n = rho_n * h.
ResidualField residual_field_from_reconstruction(const Image& h, const Kernel& k,
                                                 const Image& g_n, double eps);

// Spectral reach 1/alpha; throws for alpha <= 0.
double omega_reach(double alpha);

// Per-frequency map of 1 - |fft(g_n)| / max(|fft(g_truth)|, eps), DC shifted
// to the raster center, clipped to [0,1] for export.
Image ftr_spectrum_image(const Image& g_truth, const Image& g_n, double eps = 1e-12);

}  // namespace csdeconv
