#pragma once

#include <string>
#include <vector>

#include "ssri/frame.hpp"
#include "ssri/pmt.hpp"
#include "ssri/segmentation.hpp"

namespace ssri {

/// Placement of the reference tile and query tiles inside the joint frame.
/// Coordinates are centered (x right, y up); separations tile_center - ref_center
/// are where each tile's correlation peaks land in the output plane.
///
/// The joint frame is sized so that no cross-correlation content wraps around
/// the DFT boundary and every tile's patch window lies inside the plane. Query
/// tiles are arranged transposed relative to the sheet frame (grid rows run
/// along x, grid cols along y): stacking a column of near-identical signatures
/// along theta would merge their correlation supports into one flat ridge and
/// destroy per-tile peak localization.
struct JointGeometry {
    int joint_width = 0;
    int joint_height = 0;
    int tile_width = 0;  // n_rho
    int tile_height = 0; // n_theta
    int grid_rows = 0;
    int grid_cols = 0;
    int gap = 0;

    std::pair<double, double> ref_center;               // (x, y)
    std::vector<std::pair<double, double>> tile_centers; // row-major tile order
    std::pair<int, int> tile_pitch;                      // (dx, dy) between adjacent tiles

    // array-index anchors (top-left corners), used for exact placement
    int ref_row0 = 0, ref_col0 = 0;
    std::vector<std::pair<int, int>> tile_anchor; // (row0, col0) per tile

    int tile_count() const { return grid_rows * grid_cols; }
};

struct JointInput {
    Frame joint;
    JointGeometry geometry;
};

/// Builds the two-section display input: reference signature on the left,
/// query tiles on the right, zero elsewhere.
JointInput compose_joint_input(const PmtSignature& ref, const SignatureSheet& sheet);

/// The joint frame with only the reference / only the query section present.
Frame compose_ref_only(const PmtSignature& ref, const JointGeometry& geom);
Frame compose_query_only(const SignatureSheet& sheet, const JointGeometry& geom);

/// JPS of the joint input minus the two self-intensity spectra. Equals
/// 2*Re(F_ref * conj(F_query)) elementwise; only the cross term survives.
Frame balanced_jps(const Frame& joint, const Frame& ref_only, const Frame& query_only);

/// Correlation surface with peak normalization anchored so that a joint input
/// of (ref, ref) reads 1.0 at the separation vector.
struct CorrelationPlane {
    Frame data;
    JointGeometry geometry;
    double normalization = 1.0;
};

/// Magnitude of the inverse transform of a (balanced or raw) power spectrum.
CorrelationPlane correlation_plane(const Frame& jps, const JointGeometry& geom);

struct TilePatch {
    int tile_index = 0;
    Frame patch; // tile-sized window centered on the tile's separation vector
};

/// Carves the +separation half-plane into per-tile windows.
std::vector<TilePatch> extract_tile_correlations(const CorrelationPlane& plane);

/// Full pipeline: compose, three forward transforms, subtraction (unless
/// balanced=false, which leaves the raw JPS), inverse transform.
CorrelationPlane run_jtc(const PmtSignature& ref, const SignatureSheet& sheet, bool balanced = true);

std::string geometry_json(const JointGeometry& geom);

} // namespace ssri
