#pragma once

#include <string>
#include <vector>

#include "ssri/frame.hpp"

namespace ssri {

/// Log-polar sampling parameters for the spectrum annulus r0 <= r < r_max.
/// r0 sets the lowest spatial frequency retained; the disk r < r0 blocks DC.
struct PmtParams {
    double r0 = 3.0;
    double r_max = 0.0;
    int n_rho = 128;
    int n_theta = 128;

    double delta_rho() const;   // ln(r_max/r0) / n_rho
    double delta_theta() const; // 2*pi / n_theta

    /// r0 = 3, r_max = min(w,h)/2 - 1, 128x128 bins.
    static PmtParams defaults_for(int width, int height);

    void validate() const;
    /// Also checks r_max against the inscribed half-extent of a width x height frame.
    void validate_for(int width, int height) const;

    bool operator==(const PmtParams&) const = default;
};

/// Log-polar signature of one image region: n_theta rows (theta, counterclockwise
/// from +x) by n_rho columns (rho = ln(r/r0)). Power-normalized, all values >= 0.
/// A signature produced as an empty-segment placeholder is all-zero instead.
struct PmtSignature {
    PmtParams params;
    std::vector<double> data; // row-major, n_theta x n_rho

    double& at(int t, int p) { return data[static_cast<size_t>(t) * params.n_rho + p]; }
    double at(int t, int p) const { return data[static_cast<size_t>(t) * params.n_rho + p]; }
};

/// Resamples a centered spectrum magnitude onto the log-polar grid.
/// Bin (t, p) samples at r = r0*exp((p+0.5)*drho), theta = (t+0.5)*dtheta,
/// bilinear interpolation in centered coordinates. Result is power-normalized.
/// Throws "zero-power signature" when the sampled annulus is all zero.
PmtSignature log_polar_transform(const Frame& mag, const PmtParams& params);

/// The full invariant signature: log_polar_transform(magnitude(dft2_centered(frame))).
PmtSignature pmt(const Frame& frame, const PmtParams& params);

/// The signature grid as a Frame (n_rho wide, n_theta tall) for dumps and tiling.
Frame signature_frame(const PmtSignature& sig);

/// Flat binary cache format: 16-byte header (magic "PMT1", n_rho u32, n_theta u32,
/// reserved u32, little-endian) followed by row-major float64 data.
void save_signature(const PmtSignature& sig, const std::string& path);
PmtSignature load_signature(const std::string& path, const PmtParams& params);

} // namespace ssri
