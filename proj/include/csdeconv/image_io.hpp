#pragma once

#include <string>

#include "csdeconv/grid.hpp"

namespace csdeconv {

// Loads a grayscale raster. PGM (P2/P5, maxval up to 65535) and grayscale
// PNG (8 or 16 bit) are supported; sample values map to [0,1] by dividing by
// maxval. Color or alpha PNG input fails with "grayscale required".
Image load_image(const std::string& path);

// Saves a raster, clamping to [0,1] and scaling to maxval with half-to-even
// rounding. The format follows the extension: .pgm writes binary P5 and
// accepts any maxval in [1, 65535]; .png writes 8- or 16-bit grayscale and
// requires maxval 255 or 65535.
void save_image(const Image& img, const std::string& path, int maxval = 65535);

void save_pgm(const Image& img, const std::string& path, int maxval = 65535, bool ascii = false);
void save_png(const Image& img, const std::string& path, int bit_depth = 16);

// Plain-text kernel grid: first line "W H", then H rows of W reals. The
// loader normalizes to unit sum, warning on stderr when the stored sum
// deviates from 1 by more than 1e-6; a sum already within 1e-12 of 1 is kept
// bit-exact. pre_normalization_sum, when non-null, receives the stored sum.
Kernel load_kernel(const std::string& path, double* pre_normalization_sum = nullptr);

// Writes the kernel grid at 17 significant digits so a save/load cycle of a
// unit-sum kernel is bit-exact.
void save_kernel(const Kernel& k, const std::string& path);

}  // namespace csdeconv
