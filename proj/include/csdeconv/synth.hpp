#pragma once

#include <cstdint>

#include "csdeconv/grid.hpp"

namespace csdeconv {

// Deterministic smooth test image: a seeded sum of low-frequency sinusoids,
// affinely mapped into [0.1, 1.0] so the background never vanishes.
Image synth_image(int width, int height, std::uint64_t seed);

}  // namespace csdeconv
