#pragma once

#include <string>
#include <vector>

#include "ssri/frame.hpp"

namespace ssri {

/// Parametric binary test objects. square/cross/ring have 4-fold (or full)
/// rotational symmetry; wedge is a scalene right triangle with no symmetry,
/// used wherever a rotation angle must be recoverable from the signature.
enum class ObjectKind { square, cross, ring, wedge };

const char* kind_name(ObjectKind k);
ObjectKind kind_from_name(const std::string& name);

/// Binary (0/1) object centered on a canvas x canvas frame.
///   square: filled axis-aligned square of side `size`
///   cross:  two crossed bars, length `size`, width size/4
///   ring:   annulus, outer radius size/2, inner radius size/4
///   wedge:  right triangle with legs size and 0.6*size
Frame make_object(ObjectKind kind, int size, int canvas);

/// Scale by alpha about the center, rotate by phi counterclockwise about the
/// center, then translate by (dx, dy) in centered y-up coordinates; bilinear.
/// Throws if the transformed content would clip the canvas bounds.
Frame transform_object(const Frame& obj, double dx, double dy, double phi, double alpha);

struct Placement {
    int row = 0;
    int col = 0;
    ObjectKind kind = ObjectKind::square;
    double dx = 0.0, dy = 0.0; // intra-segment shift, px
    double phi = 0.0;          // rotation, radians ccw
    double alpha = 1.0;        // scale factor
};

struct SceneSpec {
    SegmentGrid grid;
    std::vector<Placement> placements; // at most one per cell
    int object_size = 32;
};

/// Throws on duplicate cells, out-of-grid indices, or placements whose
/// transformed bounding box would leave the segment.
void validate_spec(const SceneSpec& spec);

/// Composites all placements onto one frame. Power normalization is left to
/// the segmentation stage.
Frame render_scene(const SceneSpec& spec);

/// The 3-column x 4-row evaluation grid: columns A/B/C hold square, cross,
/// ring; row 1 original, row 2 rotated by phi, row 3 scaled by alpha, row 4
/// both. The ring column is the designated query column.
SceneSpec figure3_spec(double phi = 40.0 * 3.14159265358979323846 / 180.0, double alpha = 0.7);

/// Single object in a 1x1 grid, for parameter sweeps.
SceneSpec single_object_spec(ObjectKind kind, int segment, int size,
                             double dx, double dy, double phi, double alpha);

std::string manifest_json(const SceneSpec& spec);
SceneSpec manifest_from_json(const std::string& text);

} // namespace ssri
