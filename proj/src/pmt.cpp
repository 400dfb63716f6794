#include "ssri/pmt.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "ssri/spectral.hpp"

namespace ssri {

double PmtParams::delta_rho() const { return std::log(r_max / r0) / n_rho; }
double PmtParams::delta_theta() const { return 2.0 * std::numbers::pi / n_theta; }

PmtParams PmtParams::defaults_for(int width, int height) {
    PmtParams p;
    p.r_max = std::min(width, height) / 2.0 - 1.0;
    return p;
}

void PmtParams::validate() const {
    if (!(r0 > 0.0)) throw std::invalid_argument("pmt params: r0 must be > 0");
    if (!(r_max > r0)) throw std::invalid_argument("pmt params: r0 must be < r_max");
    if (n_rho < 8 || n_theta < 8) throw std::invalid_argument("pmt params: n_rho and n_theta must be >= 8");
}

void PmtParams::validate_for(int width, int height) const {
    validate();
    double half = std::min(width, height) / 2.0;
    if (r_max > half)
        throw std::invalid_argument("pmt params: r_max exceeds inscribed half-extent of frame");
}

namespace {

// Bilinear sample with edge clamping; spectra are defined on the full grid,
// so boundary samples interpolate with whatever values exist.
double sample_bilinear(const Frame& f, double row, double col) {
    int r0i = static_cast<int>(std::floor(row));
    int c0i = static_cast<int>(std::floor(col));
    double fr = row - r0i;
    double fc = col - c0i;
    auto clamp_r = [&](int r) { return std::clamp(r, 0, f.height - 1); };
    auto clamp_c = [&](int c) { return std::clamp(c, 0, f.width - 1); };
    double v00 = f.at(clamp_r(r0i), clamp_c(c0i));
    double v01 = f.at(clamp_r(r0i), clamp_c(c0i + 1));
    double v10 = f.at(clamp_r(r0i + 1), clamp_c(c0i));
    double v11 = f.at(clamp_r(r0i + 1), clamp_c(c0i + 1));
    return (1 - fr) * ((1 - fc) * v00 + fc * v01) + fr * ((1 - fc) * v10 + fc * v11);
}

} // namespace

PmtSignature log_polar_transform(const Frame& mag, const PmtParams& params) {
    validate(mag);
    params.validate_for(mag.width, mag.height);

    PmtSignature sig;
    sig.params = params;
    sig.data.assign(static_cast<size_t>(params.n_theta) * params.n_rho, 0.0);

    double drho = params.delta_rho();
    double dtheta = params.delta_theta();
    double oc = mag.origin_col();
    double orow = mag.origin_row();

    double power = 0.0;
    for (int t = 0; t < params.n_theta; ++t) {
        double theta = (t + 0.5) * dtheta;
        double ct = std::cos(theta), st = std::sin(theta);
        for (int p = 0; p < params.n_rho; ++p) {
            double r = params.r0 * std::exp((p + 0.5) * drho);
            // centered coords, y up: col = x + W/2, row = H/2 - y
            double col = oc + r * ct;
            double row = orow - r * st;
            double v = sample_bilinear(mag, row, col);
            sig.at(t, p) = v;
            power += v * v;
        }
    }
    if (power == 0.0) throw std::runtime_error("zero-power signature");
    double inv = 1.0 / std::sqrt(power);
    for (double& v : sig.data) v *= inv;
    return sig;
}

PmtSignature pmt(const Frame& frame, const PmtParams& params) {
    return log_polar_transform(magnitude(dft2_centered(frame)), params);
}

Frame signature_frame(const PmtSignature& sig) {
    Frame out(sig.params.n_rho, sig.params.n_theta);
    out.data = sig.data;
    return out;
}

namespace {

void put_u32(std::ofstream& out, uint32_t v) {
    uint8_t b[4] = {static_cast<uint8_t>(v), static_cast<uint8_t>(v >> 8),
                    static_cast<uint8_t>(v >> 16), static_cast<uint8_t>(v >> 24)};
    out.write(reinterpret_cast<const char*>(b), 4);
}

uint32_t get_u32(std::ifstream& in) {
    uint8_t b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    return static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8) |
           (static_cast<uint32_t>(b[2]) << 16) | (static_cast<uint32_t>(b[3]) << 24);
}

} // namespace

void save_signature(const PmtSignature& sig, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out.write("PMT1", 4);
    put_u32(out, static_cast<uint32_t>(sig.params.n_rho));
    put_u32(out, static_cast<uint32_t>(sig.params.n_theta));
    put_u32(out, 0); // reserved, pads the header to 16 bytes
    static_assert(sizeof(double) == 8);
    out.write(reinterpret_cast<const char*>(sig.data.data()),
              static_cast<std::streamsize>(sig.data.size() * 8));
    if (!out) throw std::runtime_error("write failed: " + path);
}

PmtSignature load_signature(const std::string& path, const PmtParams& params) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    char magic[4];
    in.read(magic, 4);
    if (std::memcmp(magic, "PMT1", 4) != 0) throw std::runtime_error("bad signature magic: " + path);
    uint32_t n_rho = get_u32(in);
    uint32_t n_theta = get_u32(in);
    get_u32(in); // reserved
    if (n_rho != static_cast<uint32_t>(params.n_rho) || n_theta != static_cast<uint32_t>(params.n_theta))
        throw std::runtime_error("signature dimensions do not match params: " + path);
    PmtSignature sig;
    sig.params = params;
    sig.data.resize(static_cast<size_t>(n_rho) * n_theta);
    in.read(reinterpret_cast<char*>(sig.data.data()), static_cast<std::streamsize>(sig.data.size() * 8));
    if (static_cast<size_t>(in.gcount()) != sig.data.size() * 8)
        throw std::runtime_error("truncated signature file: " + path);
    return sig;
}

} // namespace ssri
