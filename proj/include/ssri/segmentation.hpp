#pragma once

#include <string>
#include <vector>

#include "ssri/frame.hpp"
#include "ssri/pmt.hpp"

namespace ssri {

/// Per-segment invariant signatures of one frame, all sharing one PmtParams,
/// plus the packed tiling used as the correlator query input.
struct SignatureSheet {
    SegmentGrid grid;
    PmtParams params;
    std::vector<PmtSignature> signatures; // row-major, grid.rows x grid.cols
    std::vector<uint8_t> empty;           // 1 where the segment was all-zero
    Frame sheet_frame;                    // (rows*n_theta) tall x (cols*n_rho) wide

    int tile_count() const { return grid.rows * grid.cols; }
};

/// Splits the frame, power-normalizes each nonempty segment, and computes its
/// PMT independently. All-zero segments yield an all-zero placeholder
/// signature flagged empty rather than an error.
SignatureSheet segment_pmt(const Frame& frame, const SegmentGrid& grid, const PmtParams& params);

/// Deterministic row-major tiling of signatures into one frame.
/// All signatures must share params.
Frame build_sheet_frame(const std::vector<PmtSignature>& signatures, const SegmentGrid& grid);

/// Recovers tile (row, col) of a sheet frame; exact inverse of the tiling.
Frame slice_sheet_tile(const Frame& sheet_frame, const SegmentGrid& grid, const PmtParams& params,
                       int row, int col);

/// Segment geometry and per-tile empty flags.
std::string sheet_manifest_json(const SignatureSheet& sheet);

} // namespace ssri
