#pragma once

#include <complex>
#include <vector>

#include "csdeconv/grid.hpp"

namespace csdeconv {

// Full complex DFT coefficient grid with DC at index (0,0), same dimensions
// as the source image.
struct Spectrum {
    int width = 0;
    int height = 0;
    std::vector<std::complex<double>> data;

    Spectrum() = default;
    Spectrum(int w, int h);

    std::complex<double>& at(int kx, int ky) {
        return data[static_cast<std::size_t>(ky) * width + kx];
    }
    std::complex<double> at(int kx, int ky) const {
        return data[static_cast<std::size_t>(ky) * width + kx];
    }
};

// Unnormalized forward 2D DFT.
Spectrum fft2(const Image& img);

// Inverse 2D DFT with 1/(W*H) normalization; the imaginary residue is discarded.
Image ifft2(const Spectrum& s);

// Circular (periodic-boundary) convolution: the kernel is zero-padded to the
// image size with its center anchor wrapped to (0,0), multiplied in the
// frequency domain and transformed back. Throws when the kernel does not fit
// inside the image.
Image convolve(const Image& img, const Kernel& k);

// log(1 + |F|) magnitude display image with DC shifted to the raster center.
Image power_spectrum_image(const Image& img);

// Pads a kernel into a W x H grid with the center anchor wrapped to (0,0).
Image pad_kernel_circular(const Kernel& k, int width, int height);

}  // namespace csdeconv
