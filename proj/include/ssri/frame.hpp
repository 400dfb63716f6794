#pragma once

#include <string>
#include <vector>

namespace ssri {

/// Real-valued 2D intensity grid, row-major.
///
/// Centered coordinates: x = col - width/2, y = height/2 - row (y increases
/// upward). For even dimensions the origin is the pixel just below-right of
/// the geometric center, index (height/2, width/2).
struct Frame {
    int width = 0;
    int height = 0;
    std::vector<double> data;

    Frame() = default;
    Frame(int w, int h, double fill = 0.0);

    double& at(int row, int col) { return data[static_cast<size_t>(row) * width + col]; }
    double at(int row, int col) const { return data[static_cast<size_t>(row) * width + col]; }

    int origin_row() const { return height / 2; }
    int origin_col() const { return width / 2; }
};

/// Throws std::invalid_argument on dimension/data-size mismatch or non-finite values.
void validate(const Frame& f);

/// Regular tiling of a parent frame. rows*segment_height and cols*segment_width
/// must cover the parent exactly; partial segments are rejected.
struct SegmentGrid {
    int rows = 1;
    int cols = 1;
    int segment_width = 0;
    int segment_height = 0;
};

/// Derives segment dimensions for a rows x cols grid over `f`.
/// Throws if the frame is not exactly divisible.
SegmentGrid make_grid(const Frame& f, int rows, int cols);

double frame_power(const Frame& f);
bool all_zero(const Frame& f);

/// Scales so the sum of squared values is 1. Throws on an all-zero frame
/// ("zero-power frame").
Frame normalize_power(const Frame& f);

/// Axis-aligned sub-rectangle at grid cell (row, col). The segment's own
/// centered origin is the segment center (the local zero point).
Frame extract_segment(const Frame& f, const SegmentGrid& grid, int row, int col);

/// Circular shift: content at (r, c) moves to ((r+row_shift) mod H, (c+col_shift) mod W).
Frame circshift(const Frame& f, int row_shift, int col_shift);

// ---- image I/O ----

/// Loads a grayscale image (binary PGM P5 8/16-bit, or grayscale PNG 8/16-bit),
/// values scaled linearly to [0,1]. Dispatches on magic bytes.
Frame load_frame(const std::string& path);

Frame load_pgm(const std::string& path);
Frame load_png(const std::string& path);

struct PgmScale {
    double min = 0.0;
    double max = 0.0;
};

/// Writes an 8-bit binary PGM, linearly scaled to the data min/max.
/// Returns the scale used so callers can record it.
PgmScale save_pgm8(const Frame& f, const std::string& path);

} // namespace ssri
