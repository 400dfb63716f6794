#include "ssri/frame.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <png.h>

namespace ssri {

Frame::Frame(int w, int h, double fill)
    : width(w), height(h), data(static_cast<size_t>(w) * h, fill) {
    if (w < 2 || h < 2) throw std::invalid_argument("frame dimensions must be >= 2");
}

void validate(const Frame& f) {
    if (f.width < 2 || f.height < 2)
        throw std::invalid_argument("frame dimensions must be >= 2");
    if (f.data.size() != static_cast<size_t>(f.width) * f.height)
        throw std::invalid_argument("frame data length does not match dimensions");
    for (double v : f.data)
        if (!std::isfinite(v)) throw std::invalid_argument("frame contains non-finite values");
}

SegmentGrid make_grid(const Frame& f, int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid must have rows, cols >= 1");
    if (f.height % rows != 0 || f.width % cols != 0)
        throw std::invalid_argument("grid does not tile frame exactly");
    return SegmentGrid{rows, cols, f.width / cols, f.height / rows};
}

double frame_power(const Frame& f) {
    double s = 0.0;
    for (double v : f.data) s += v * v;
    return s;
}

bool all_zero(const Frame& f) {
    return std::all_of(f.data.begin(), f.data.end(), [](double v) { return v == 0.0; });
}

Frame normalize_power(const Frame& f) {
    double p = frame_power(f);
    if (p == 0.0) throw std::runtime_error("zero-power frame");
    Frame out = f;
    double inv = 1.0 / std::sqrt(p);
    for (double& v : out.data) v *= inv;
    return out;
}

Frame extract_segment(const Frame& f, const SegmentGrid& grid, int row, int col) {
    if (grid.rows * grid.segment_height != f.height || grid.cols * grid.segment_width != f.width)
        throw std::invalid_argument("grid does not tile frame exactly");
    if (row < 0 || row >= grid.rows || col < 0 || col >= grid.cols)
        throw std::out_of_range("segment index out of bounds");
    Frame out(grid.segment_width, grid.segment_height);
    int r0 = row * grid.segment_height;
    int c0 = col * grid.segment_width;
    for (int r = 0; r < grid.segment_height; ++r)
        for (int c = 0; c < grid.segment_width; ++c)
            out.at(r, c) = f.at(r0 + r, c0 + c);
    return out;
}

Frame circshift(const Frame& f, int row_shift, int col_shift) {
    Frame out(f.width, f.height);
    auto wrap = [](int i, int n) { return ((i % n) + n) % n; };
    for (int r = 0; r < f.height; ++r) {
        int rr = wrap(r + row_shift, f.height);
        for (int c = 0; c < f.width; ++c)
            out.at(rr, wrap(c + col_shift, f.width)) = f.at(r, c);
    }
    return out;
}

// ---- PGM ----

namespace {

int pgm_next_token(std::istream& in, std::string& tok) {
    tok.clear();
    int ch = in.get();
    while (ch != EOF) {
        if (ch == '#') {
            while (ch != EOF && ch != '\n') ch = in.get();
        } else if (!std::isspace(ch)) {
            break;
        }
        ch = in.get();
    }
    while (ch != EOF && !std::isspace(ch)) {
        tok.push_back(static_cast<char>(ch));
        ch = in.get();
    }
    return tok.empty() ? EOF : 0;
}

long pgm_int(std::istream& in, const char* what) {
    std::string tok;
    if (pgm_next_token(in, tok) == EOF) throw std::runtime_error(std::string("pgm: missing ") + what);
    try {
        return std::stol(tok);
    } catch (...) {
        throw std::runtime_error(std::string("pgm: bad ") + what);
    }
}

} // namespace

Frame load_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    char m0 = 0, m1 = 0;
    in.get(m0);
    in.get(m1);
    if (m0 != 'P' || m1 != '5') throw std::runtime_error("unsupported format (expected binary PGM P5): " + path);
    long w = pgm_int(in, "width");
    long h = pgm_int(in, "height");
    long maxval = pgm_int(in, "maxval");
    if (w < 2 || h < 2) throw std::runtime_error("pgm: zero or degenerate dimensions");
    if (maxval < 1 || maxval > 65535) throw std::runtime_error("pgm: unsupported maxval");
    // single whitespace byte separates header from raster
    Frame out(static_cast<int>(w), static_cast<int>(h));
    size_t n = out.data.size();
    if (maxval < 256) {
        std::vector<uint8_t> buf(n);
        in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(n));
        if (static_cast<size_t>(in.gcount()) != n) throw std::runtime_error("pgm: truncated raster");
        for (size_t i = 0; i < n; ++i) out.data[i] = buf[i] / static_cast<double>(maxval);
    } else {
        std::vector<uint8_t> buf(n * 2);
        in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(n * 2));
        if (static_cast<size_t>(in.gcount()) != n * 2) throw std::runtime_error("pgm: truncated raster");
        for (size_t i = 0; i < n; ++i) {
            unsigned v = (static_cast<unsigned>(buf[2 * i]) << 8) | buf[2 * i + 1]; // big-endian
            out.data[i] = v / static_cast<double>(maxval);
        }
    }
    return out;
}

PgmScale save_pgm8(const Frame& f, const std::string& path) {
    validate(f);
    auto [mn_it, mx_it] = std::minmax_element(f.data.begin(), f.data.end());
    PgmScale scale{*mn_it, *mx_it};
    double span = scale.max - scale.min;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << "P5\n" << f.width << " " << f.height << "\n255\n";
    std::vector<uint8_t> buf(f.data.size());
    for (size_t i = 0; i < f.data.size(); ++i) {
        double v = span > 0.0 ? (f.data[i] - scale.min) / span : 0.0;
        buf[i] = static_cast<uint8_t>(std::lround(v * 255.0));
    }
    out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
    return scale;
}

// ---- PNG ----

Frame load_png(const std::string& path) {
    FILE* fp = std::fopen(path.c_str(), "rb");
    if (!fp) throw std::runtime_error("cannot open file: " + path);

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        if (png) png_destroy_read_struct(&png, &info, nullptr);
        std::fclose(fp);
        throw std::runtime_error("png: initialization failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        std::fclose(fp);
        throw std::runtime_error("png: decode error: " + path);
    }
    png_init_io(png, fp);
    png_read_info(png, info);

    png_uint_32 w = png_get_image_width(png, info);
    png_uint_32 h = png_get_image_height(png, info);
    int depth = png_get_bit_depth(png, info);
    int color = png_get_color_type(png, info);

    if (color != PNG_COLOR_TYPE_GRAY) {
        png_destroy_read_struct(&png, &info, nullptr);
        std::fclose(fp);
        throw std::runtime_error("unsupported format (PNG must be grayscale): " + path);
    }
    if (w < 2 || h < 2) {
        png_destroy_read_struct(&png, &info, nullptr);
        std::fclose(fp);
        throw std::runtime_error("png: zero or degenerate dimensions");
    }
    if (depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    png_read_update_info(png, info);
    depth = png_get_bit_depth(png, info);

    size_t rowbytes = png_get_rowbytes(png, info);
    std::vector<uint8_t> raster(rowbytes * h);
    std::vector<png_bytep> rows(h);
    for (png_uint_32 r = 0; r < h; ++r) rows[r] = raster.data() + r * rowbytes;
    png_read_image(png, rows.data());
    png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(fp);

    Frame out(static_cast<int>(w), static_cast<int>(h));
    if (depth == 8) {
        for (size_t i = 0; i < out.data.size(); ++i) out.data[i] = raster[i] / 255.0;
    } else {
        // 16-bit samples are stored big-endian in the PNG stream
        for (size_t i = 0; i < out.data.size(); ++i) {
            unsigned v = (static_cast<unsigned>(raster[2 * i]) << 8) | raster[2 * i + 1];
            out.data[i] = v / 65535.0;
        }
    }
    return out;
}

Frame load_frame(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    unsigned char magic[2] = {0, 0};
    in.read(reinterpret_cast<char*>(magic), 2);
    in.close();
    if (magic[0] == 'P' && magic[1] == '5') return load_pgm(path);
    if (magic[0] == 0x89 && magic[1] == 'P') return load_png(path);
    throw std::runtime_error("unsupported format (expected PGM P5 or PNG): " + path);
}

} // namespace ssri
