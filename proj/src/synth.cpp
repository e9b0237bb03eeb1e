#include "csdeconv/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace csdeconv {

Image synth_image(int width, int height, std::uint64_t seed) {
    if (width < 1 || height < 1) {
        throw std::invalid_argument("image dimensions must be positive");
    }

    std::mt19937_64 rng(seed);
    // Raw-word uniform in [0,1) so the stream does not depend on any
    // library's distribution implementation.
    auto u01 = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    constexpr int kModes = 8;
    constexpr int kMaxFrequency = 8;

    struct Mode {
        int kx;
        int ky;
        double amplitude;
        double phase;
    };
    Mode modes[kModes];
    for (int i = 0; i < kModes; ++i) {
        int kx = 0;
        int ky = 0;
        do {
            kx = static_cast<int>(u01() * (kMaxFrequency + 1));
            ky = static_cast<int>(u01() * (kMaxFrequency + 1));
        } while (kx == 0 && ky == 0);
        const double amplitude = (0.5 + 0.5 * u01()) / (1.0 + 0.5 * i);
        const double phase = 2.0 * std::numbers::pi * u01();
        modes[i] = Mode{kx, ky, amplitude, phase};
    }

    Image img(width, height);
    const double two_pi = 2.0 * std::numbers::pi;
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            double v = 0.0;
            for (const Mode& m : modes) {
                v += m.amplitude * std::cos(two_pi * (static_cast<double>(m.kx) * x / width +
                                                      static_cast<double>(m.ky) * y / height) +
                                            m.phase);
            }
            img.at(x, y) = v;
        }
    }

    double lo = img.data[0];
    double hi = img.data[0];
    for (double v : img.data) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (hi - lo < 1e-30) {
        for (double& v : img.data) v = 0.5;
        return img;
    }
    const double out_lo = 0.1;
    const double out_hi = 1.0;
    const double gain = (out_hi - out_lo) / (hi - lo);
    for (double& v : img.data) v = out_lo + (v - lo) * gain;
    return img;
}

}  // namespace csdeconv
