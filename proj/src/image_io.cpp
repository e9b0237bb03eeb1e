#include "csdeconv/image_io.hpp"

#include <png.h>

#include <cctype>
#include <cfenv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace csdeconv {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& why) {
    throw std::runtime_error(path + ": " + why);
}

bool has_suffix(const std::string& s, const std::string& suffix) {
    if (s.size() < suffix.size()) return false;
    return std::equal(suffix.rbegin(), suffix.rend(), s.rbegin(),
                      [](char a, char b) { return std::tolower(a) == std::tolower(b); });
}

int quantize(double v, int maxval) {
    const double clamped = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
    // nearbyint under the default rounding mode gives round-half-to-even.
    return static_cast<int>(std::nearbyint(clamped * maxval));
}

// PGM header tokens are separated by whitespace and may be interleaved with
// '#' comment lines.
class PnmTokenizer {
public:
    explicit PnmTokenizer(std::istream& in) : in_(in) {}

    std::string next(const std::string& path) {
        std::string token;
        int c = in_.get();
        while (c != EOF) {
            if (c == '#') {
                while (c != EOF && c != '\n') c = in_.get();
            } else if (std::isspace(c)) {
                c = in_.get();
            } else {
                break;
            }
        }
        if (c == EOF) fail(path, "malformed header: unexpected end of file");
        while (c != EOF && !std::isspace(c) && c != '#') {
            token.push_back(static_cast<char>(c));
            c = in_.get();
        }
        if (c == '#') in_.unget();
        return token;
    }

    long next_int(const std::string& path) {
        const std::string token = next(path);
        try {
            std::size_t pos = 0;
            const long value = std::stol(token, &pos);
            if (pos != token.size()) throw std::invalid_argument(token);
            return value;
        } catch (const std::exception&) {
            fail(path, "malformed header: expected integer, got '" + token + "'");
        }
    }

private:
    std::istream& in_;
};

Image load_pgm(std::istream& in, const std::string& path) {
    PnmTokenizer tok(in);
    const std::string magic = tok.next(path);
    if (magic != "P2" && magic != "P5") fail(path, "malformed header: not a P2/P5 PGM");
    const long width = tok.next_int(path);
    const long height = tok.next_int(path);
    const long maxval = tok.next_int(path);
    if (width < 1 || height < 1) fail(path, "malformed header: nonpositive dimensions");
    if (maxval < 1 || maxval > 65535) fail(path, "unsupported bit depth: maxval " +
                                                     std::to_string(maxval));

    Image img(static_cast<int>(width), static_cast<int>(height));
    const double scale = 1.0 / static_cast<double>(maxval);
    const std::size_t count = img.data.size();

    if (magic == "P2") {
        for (std::size_t i = 0; i < count; ++i) {
            const long v = tok.next_int(path);
            if (v < 0 || v > maxval) fail(path, "sample out of range");
            img.data[i] = static_cast<double>(v) * scale;
        }
        return img;
    }

    // P5: exactly one whitespace byte separates the header from the samples.
    const std::size_t bytes_per_sample = maxval > 255 ? 2 : 1;
    std::vector<unsigned char> raw(count * bytes_per_sample);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (static_cast<std::size_t>(in.gcount()) != raw.size()) fail(path, "truncated pixel data");
    for (std::size_t i = 0; i < count; ++i) {
        long v;
        if (bytes_per_sample == 2) {
            v = (static_cast<long>(raw[2 * i]) << 8) | raw[2 * i + 1];  // big-endian
        } else {
            v = raw[i];
        }
        if (v > maxval) fail(path, "sample out of range");
        img.data[i] = static_cast<double>(v) * scale;
    }
    return img;
}

struct PngReadCloser {
    png_structp png = nullptr;
    png_infop info = nullptr;
    std::FILE* fp = nullptr;
    ~PngReadCloser() {
        if (png != nullptr) png_destroy_read_struct(&png, info != nullptr ? &info : nullptr, nullptr);
        if (fp != nullptr) std::fclose(fp);
    }
};

Image load_png_file(const std::string& path) {
    PngReadCloser s;
    s.fp = std::fopen(path.c_str(), "rb");
    if (s.fp == nullptr) fail(path, "cannot open file");

    s.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (s.png == nullptr) fail(path, "libpng init failed");
    s.info = png_create_info_struct(s.png);
    if (s.info == nullptr) fail(path, "libpng init failed");
    if (setjmp(png_jmpbuf(s.png))) fail(path, "malformed PNG");

    png_init_io(s.png, s.fp);
    png_read_info(s.png, s.info);

    const png_byte color_type = png_get_color_type(s.png, s.info);
    png_byte bit_depth = png_get_bit_depth(s.png, s.info);
    if (color_type != PNG_COLOR_TYPE_GRAY) fail(path, "grayscale required");

    if (bit_depth < 8) {
        png_set_expand_gray_1_2_4_to_8(s.png);
        bit_depth = 8;
    }
    if (bit_depth == 16) png_set_swap(s.png);  // native little-endian samples
    png_set_interlace_handling(s.png);
    png_read_update_info(s.png, s.info);

    const png_uint_32 width = png_get_image_width(s.png, s.info);
    const png_uint_32 height = png_get_image_height(s.png, s.info);
    if (width < 1 || height < 1) fail(path, "malformed PNG: empty image");

    const std::size_t rowbytes = png_get_rowbytes(s.png, s.info);
    std::vector<unsigned char> pixels(rowbytes * height);
    std::vector<png_bytep> rows(height);
    for (png_uint_32 y = 0; y < height; ++y) rows[y] = pixels.data() + y * rowbytes;
    png_read_image(s.png, rows.data());
    png_read_end(s.png, nullptr);

    Image img(static_cast<int>(width), static_cast<int>(height));
    const int maxval = bit_depth == 16 ? 65535 : 255;
    const double scale = 1.0 / maxval;
    for (png_uint_32 y = 0; y < height; ++y) {
        for (png_uint_32 x = 0; x < width; ++x) {
            long v;
            if (bit_depth == 16) {
                const std::uint16_t* row16 = reinterpret_cast<const std::uint16_t*>(rows[y]);
                v = row16[x];
            } else {
                v = rows[y][x];
            }
            img.at(static_cast<int>(x), static_cast<int>(y)) = static_cast<double>(v) * scale;
        }
    }
    return img;
}

struct PngWriteCloser {
    png_structp png = nullptr;
    png_infop info = nullptr;
    std::FILE* fp = nullptr;
    ~PngWriteCloser() {
        if (png != nullptr) png_destroy_write_struct(&png, info != nullptr ? &info : nullptr);
        if (fp != nullptr) std::fclose(fp);
    }
};

}  // namespace

Image load_image(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "cannot open file");
    const int c0 = in.peek();
    if (c0 == 'P') {
        return load_pgm(in, path);
    }
    in.close();
    return load_png_file(path);
}

void save_pgm(const Image& img, const std::string& path, int maxval, bool ascii) {
    if (maxval < 1 || maxval > 65535) {
        throw std::invalid_argument("maxval must lie in [1, 65535]");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(path, "cannot create file");
    out << (ascii ? "P2" : "P5") << "\n" << img.width << " " << img.height << "\n" << maxval
        << "\n";
    if (ascii) {
        for (int y = 0; y < img.height; ++y) {
            for (int x = 0; x < img.width; ++x) {
                out << quantize(img.at(x, y), maxval) << (x + 1 == img.width ? "" : " ");
            }
            out << "\n";
        }
    } else if (maxval > 255) {
        std::vector<unsigned char> raw(img.data.size() * 2);
        for (std::size_t i = 0; i < img.data.size(); ++i) {
            const int v = quantize(img.data[i], maxval);
            raw[2 * i] = static_cast<unsigned char>((v >> 8) & 0xff);
            raw[2 * i + 1] = static_cast<unsigned char>(v & 0xff);
        }
        out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    } else {
        std::vector<unsigned char> raw(img.data.size());
        for (std::size_t i = 0; i < img.data.size(); ++i) {
            raw[i] = static_cast<unsigned char>(quantize(img.data[i], maxval));
        }
        out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    }
    if (!out) fail(path, "write failed");
}

void save_png(const Image& img, const std::string& path, int bit_depth) {
    if (bit_depth != 8 && bit_depth != 16) {
        throw std::invalid_argument("PNG bit depth must be 8 or 16");
    }
    PngWriteCloser s;
    s.fp = std::fopen(path.c_str(), "wb");
    if (s.fp == nullptr) fail(path, "cannot create file");
    s.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (s.png == nullptr) fail(path, "libpng init failed");
    s.info = png_create_info_struct(s.png);
    if (s.info == nullptr) fail(path, "libpng init failed");
    if (setjmp(png_jmpbuf(s.png))) fail(path, "write failed");

    png_init_io(s.png, s.fp);
    png_set_IHDR(s.png, s.info, static_cast<png_uint_32>(img.width),
                 static_cast<png_uint_32>(img.height), bit_depth, PNG_COLOR_TYPE_GRAY,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(s.png, s.info);

    const int maxval = bit_depth == 16 ? 65535 : 255;
    if (bit_depth == 16) {
        std::vector<std::uint16_t> row(static_cast<std::size_t>(img.width));
        for (int y = 0; y < img.height; ++y) {
            for (int x = 0; x < img.width; ++x) {
                const int v = quantize(img.at(x, y), maxval);
                row[static_cast<std::size_t>(x)] =
                    static_cast<std::uint16_t>(((v & 0xff) << 8) | ((v >> 8) & 0xff));
            }
            png_write_row(s.png, reinterpret_cast<png_bytep>(row.data()));
        }
    } else {
        std::vector<unsigned char> row(static_cast<std::size_t>(img.width));
        for (int y = 0; y < img.height; ++y) {
            for (int x = 0; x < img.width; ++x) {
                row[static_cast<std::size_t>(x)] =
                    static_cast<unsigned char>(quantize(img.at(x, y), maxval));
            }
            png_write_row(s.png, row.data());
        }
    }
    png_write_end(s.png, nullptr);
}

void save_image(const Image& img, const std::string& path, int maxval) {
    if (has_suffix(path, ".png")) {
        if (maxval == 255) {
            save_png(img, path, 8);
        } else if (maxval == 65535) {
            save_png(img, path, 16);
        } else {
            throw std::invalid_argument("PNG output requires maxval 255 or 65535");
        }
        return;
    }
    if (has_suffix(path, ".pgm")) {
        save_pgm(img, path, maxval, false);
        return;
    }
    throw std::invalid_argument(path + ": unsupported image extension (use .pgm or .png)");
}

Kernel load_kernel(const std::string& path, double* pre_normalization_sum) {
    std::ifstream in(path);
    if (!in) fail(path, "cannot open file");
    long w = 0;
    long h = 0;
    if (!(in >> w >> h)) fail(path, "malformed kernel header");
    if (w < 1 || h < 1) fail(path, "kernel side lengths must be positive");
    if (w % 2 == 0 || h % 2 == 0) fail(path, "kernel side lengths must be odd");

    Kernel k(static_cast<int>(w), static_cast<int>(h));
    for (std::size_t i = 0; i < k.data.size(); ++i) {
        if (!(in >> k.data[i])) fail(path, "non-numeric or missing kernel entry");
    }
    const double sum = k.sum();
    if (pre_normalization_sum != nullptr) *pre_normalization_sum = sum;
    if (std::abs(sum) < 1e-12) fail(path, "kernel sum too close to zero, cannot normalize");
    if (std::abs(sum - 1.0) > 1e-6) {
        std::cerr << "warning: " << path << ": kernel sum " << sum << " normalized to 1\n";
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        k.normalize();
    }
    return k;
}

void save_kernel(const Kernel& k, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(path, "cannot create file");
    out << k.side_x << " " << k.side_y << "\n";
    char buf[64];
    for (int row = 0; row < k.side_y; ++row) {
        for (int col = 0; col < k.side_x; ++col) {
            std::snprintf(buf, sizeof(buf), "%.17g",
                          k.data[static_cast<std::size_t>(row) * k.side_x + col]);
            out << buf << (col + 1 == k.side_x ? "" : " ");
        }
        out << "\n";
    }
    if (!out) fail(path, "write failed");
}

}  // namespace csdeconv
