#include "ssri/spectral.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

#include <fftw3.h>

namespace ssri {

ComplexField::ComplexField(int w, int h)
    : width(w), height(h), data(static_cast<size_t>(w) * h) {
    if (w < 2 || h < 2) throw std::invalid_argument("field dimensions must be >= 2");
}

namespace {

// FFTW plan creation/destruction is not thread-safe; execution is.
std::mutex& fftw_mutex() {
    static std::mutex m;
    return m;
}

// Transforms `in` (already in DC-at-index-0 layout) in place.
void fftw_transform(ComplexField& buf, int sign) {
    fftw_complex* p = reinterpret_cast<fftw_complex*>(buf.data.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        plan = fftw_plan_dft_2d(buf.height, buf.width, p, p, sign, FFTW_ESTIMATE);
    }
    if (!plan) throw std::runtime_error("fftw plan creation failed");
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        fftw_destroy_plan(plan);
    }
}

// out[(r + dr) mod H][(c + dc) mod W] = in[r][c]
template <typename Src, typename Dst, typename Get>
void shifted_copy(const Src& in, Dst& out, int dr, int dc, Get get) {
    int h = in.height, w = in.width;
    for (int r = 0; r < h; ++r) {
        int rr = (r + dr) % h;
        for (int c = 0; c < w; ++c) {
            int cc = (c + dc) % w;
            out.data[static_cast<size_t>(rr) * w + cc] = get(in, r, c);
        }
    }
}

} // namespace

ComplexField dft2_centered(const Frame& frame) {
    validate(frame);
    int w = frame.width, h = frame.height;
    ComplexField buf(w, h);
    // ifftshift: move the centered origin pixel to index 0
    int dr = h - h / 2, dc = w - w / 2;
    shifted_copy(frame, buf, dr, dc,
                 [](const Frame& f, int r, int c) { return std::complex<double>(f.at(r, c), 0.0); });
    fftw_transform(buf, FFTW_FORWARD);
    double scale = 1.0 / std::sqrt(static_cast<double>(w) * h);
    for (auto& v : buf.data) v *= scale;
    // fftshift: put DC on the centered origin pixel
    ComplexField out(w, h);
    shifted_copy(buf, out, h / 2, w / 2,
                 [](const ComplexField& f, int r, int c) { return f.at(r, c); });
    return out;
}

ComplexField idft2_centered(const ComplexField& field) {
    int w = field.width, h = field.height;
    if (w < 2 || h < 2 || field.data.size() != static_cast<size_t>(w) * h)
        throw std::invalid_argument("invalid complex field");
    ComplexField buf(w, h);
    int dr = h - h / 2, dc = w - w / 2;
    shifted_copy(field, buf, dr, dc,
                 [](const ComplexField& f, int r, int c) { return f.at(r, c); });
    fftw_transform(buf, FFTW_BACKWARD);
    double scale = 1.0 / std::sqrt(static_cast<double>(w) * h);
    for (auto& v : buf.data) v *= scale;
    ComplexField out(w, h);
    shifted_copy(buf, out, h / 2, w / 2,
                 [](const ComplexField& f, int r, int c) { return f.at(r, c); });
    return out;
}

Frame magnitude(const ComplexField& field) {
    Frame out(field.width, field.height);
    for (size_t i = 0; i < field.data.size(); ++i) out.data[i] = std::abs(field.data[i]);
    return out;
}

Frame power_spectrum(const ComplexField& field) {
    Frame out(field.width, field.height);
    for (size_t i = 0; i < field.data.size(); ++i) out.data[i] = std::norm(field.data[i]);
    return out;
}

} // namespace ssri
