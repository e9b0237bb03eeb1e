#include "csdeconv/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace csdeconv {

namespace {

// One cached FFTW plan per (width, height, direction), executing on dedicated
// aligned buffers. FFTW_ESTIMATE keeps plan selection independent of runtime
// measurements, so repeated transforms of equal inputs are bit-identical.
class PlanCache {
public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    void transform(int w, int h, int sign, const std::complex<double>* in,
                   std::complex<double>* out) {
        std::lock_guard<std::mutex> lock(mutex_);
        Entry& e = entry(w, h, sign);
        std::memcpy(e.in, in, sizeof(fftw_complex) * static_cast<std::size_t>(w) * h);
        fftw_execute(e.plan);
        std::memcpy(out, e.out, sizeof(fftw_complex) * static_cast<std::size_t>(w) * h);
    }

    ~PlanCache() {
        for (auto& [key, e] : entries_) {
            fftw_destroy_plan(e.plan);
            fftw_free(e.in);
            fftw_free(e.out);
        }
    }

private:
    struct Entry {
        fftw_plan plan = nullptr;
        fftw_complex* in = nullptr;
        fftw_complex* out = nullptr;
    };

    Entry& entry(int w, int h, int sign) {
        const auto key = std::make_tuple(w, h, sign);
        auto it = entries_.find(key);
        if (it != entries_.end()) return it->second;

        Entry e;
        const std::size_t n = static_cast<std::size_t>(w) * h;
        e.in = fftw_alloc_complex(n);
        e.out = fftw_alloc_complex(n);
        if (e.in == nullptr || e.out == nullptr) {
            throw std::bad_alloc();
        }
        // fftw_plan_dft_2d takes the slow dimension first: rows = height.
        e.plan = fftw_plan_dft_2d(h, w, e.in, e.out, sign, FFTW_ESTIMATE);
        if (e.plan == nullptr) {
            throw std::runtime_error("FFT plan creation failed");
        }
        return entries_.emplace(key, e).first->second;
    }

    std::mutex mutex_;
    std::map<std::tuple<int, int, int>, Entry> entries_;
};

// Most-recently-used kernel spectra. Deconvolution drivers apply the same
// kernel thousands of times; recomputing its transform each call would double
// the FFT count.
class KernelSpectrumCache {
public:
    static KernelSpectrumCache& instance() {
        static KernelSpectrumCache cache;
        return cache;
    }

    const Spectrum& get(const Kernel& k, int width, int height) {
        std::lock_guard<std::mutex> lock(mutex_);
        for (auto& e : entries_) {
            if (e.width == width && e.height == height && e.kernel.side_x == k.side_x &&
                e.kernel.side_y == k.side_y && e.kernel.data == k.data) {
                return e.spectrum;
            }
        }
        if (entries_.size() >= 8) entries_.erase(entries_.begin());
        entries_.push_back(Entry{width, height, k, fft2(pad_kernel_circular(k, width, height))});
        return entries_.back().spectrum;
    }

private:
    struct Entry {
        int width;
        int height;
        Kernel kernel;
        Spectrum spectrum;
    };
    std::mutex mutex_;
    std::vector<Entry> entries_;
};

}  // namespace

Spectrum::Spectrum(int w, int h) : width(w), height(h) {
    if (w < 1 || h < 1) {
        throw std::invalid_argument("spectrum dimensions must be positive");
    }
    data.assign(static_cast<std::size_t>(w) * h, {0.0, 0.0});
}

Spectrum fft2(const Image& img) {
    if (img.width < 1 || img.height < 1 || img.data.empty()) {
        throw std::invalid_argument("fft2 requires a nonempty image");
    }
    Spectrum s(img.width, img.height);
    std::vector<std::complex<double>> in(img.data.size());
    for (std::size_t i = 0; i < img.data.size(); ++i) in[i] = {img.data[i], 0.0};
    PlanCache::instance().transform(img.width, img.height, FFTW_FORWARD, in.data(), s.data.data());
    return s;
}

Image ifft2(const Spectrum& s) {
    if (s.width < 1 || s.height < 1 || s.data.empty()) {
        throw std::invalid_argument("ifft2 requires a nonempty spectrum");
    }
    std::vector<std::complex<double>> out(s.data.size());
    PlanCache::instance().transform(s.width, s.height, FFTW_BACKWARD, s.data.data(), out.data());
    Image img(s.width, s.height);
    const double norm = 1.0 / (static_cast<double>(s.width) * s.height);
    for (std::size_t i = 0; i < out.size(); ++i) img.data[i] = out[i].real() * norm;
    return img;
}

Image pad_kernel_circular(const Kernel& k, int width, int height) {
    Image padded(width, height, 0.0);
    for (int dy = -k.radius_y(); dy <= k.radius_y(); ++dy) {
        for (int dx = -k.radius_x(); dx <= k.radius_x(); ++dx) {
            const int x = ((dx % width) + width) % width;
            const int y = ((dy % height) + height) % height;
            padded.at(x, y) += k.at(dx, dy);
        }
    }
    return padded;
}

Image convolve(const Image& img, const Kernel& k) {
    if (k.side_x > img.width || k.side_y > img.height) {
        throw std::invalid_argument("kernel larger than image");
    }
    const Spectrum& kspec = KernelSpectrumCache::instance().get(k, img.width, img.height);
    Spectrum ispec = fft2(img);
    for (std::size_t i = 0; i < ispec.data.size(); ++i) ispec.data[i] *= kspec.data[i];
    return ifft2(ispec);
}

Image power_spectrum_image(const Image& img) {
    const Spectrum s = fft2(img);
    Image out(img.width, img.height);
    const int cx = img.width / 2;
    const int cy = img.height / 2;
    for (int ky = 0; ky < img.height; ++ky) {
        for (int kx = 0; kx < img.width; ++kx) {
            const int px = (kx + cx) % img.width;
            const int py = (ky + cy) % img.height;
            out.at(px, py) = std::log1p(std::abs(s.at(kx, ky)));
        }
    }
    return out;
}

}  // namespace csdeconv
