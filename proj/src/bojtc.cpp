#include "ssri/bojtc.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "ssri/spectral.hpp"

namespace ssri {

using json = nlohmann::json;

namespace {

constexpr int kGap = 16; // separation between reference and query sections, px

void blit(Frame& dst, const Frame& src, int row0, int col0) {
    for (int r = 0; r < src.height; ++r)
        for (int c = 0; c < src.width; ++c)
            dst.at(row0 + r, col0 + c) = src.at(r, c);
}

} // namespace

JointInput compose_joint_input(const PmtSignature& ref, const SignatureSheet& sheet) {
    if (!(ref.params == sheet.params))
        throw std::invalid_argument("reference and sheet params mismatch");

    JointGeometry g;
    g.tile_width = ref.params.n_rho;
    g.tile_height = ref.params.n_theta;
    g.grid_rows = sheet.grid.rows;
    g.grid_cols = sheet.grid.cols;
    g.gap = kGap;

    // transposed arrangement: grid rows along x, grid cols along y
    int sheet_w = g.grid_rows * g.tile_width;
    int sheet_h = g.grid_cols * g.tile_height;

    // exact-support sizing: the cross-correlation of the two sections (and its
    // mirrored twin) must fit without circular wraparound
    int w = 2 * (g.gap + g.tile_width + sheet_w + 1);
    int h = g.tile_height + sheet_h + 2;
    if (h % 2) ++h;
    g.joint_width = w;
    g.joint_height = h;

    g.ref_col0 = w / 2 - g.gap / 2 - g.tile_width;
    g.ref_row0 = h / 2 - g.tile_height / 2;
    g.ref_center = {g.ref_col0 + g.tile_width / 2.0 - w / 2.0,
                    h / 2.0 - (g.ref_row0 + g.tile_height / 2.0)};
    g.tile_pitch = {g.tile_width, g.tile_height};

    int sheet_col0 = w / 2 + g.gap / 2;
    int sheet_row0 = h / 2 - sheet_h / 2;
    for (int r = 0; r < g.grid_rows; ++r)
        for (int c = 0; c < g.grid_cols; ++c) {
            int row0 = sheet_row0 + c * g.tile_height;
            int col0 = sheet_col0 + r * g.tile_width;
            g.tile_anchor.emplace_back(row0, col0);
            g.tile_centers.emplace_back(col0 + g.tile_width / 2.0 - w / 2.0,
                                        h / 2.0 - (row0 + g.tile_height / 2.0));
        }

    JointInput out{Frame(w, h), g};
    blit(out.joint, signature_frame(ref), g.ref_row0, g.ref_col0);
    for (int k = 0; k < g.tile_count(); ++k) {
        int gr = k / g.grid_cols, gc = k % g.grid_cols;
        // tile_anchor is indexed in the same (r, c) nesting used above
        (void)gr;
        (void)gc;
    }
    for (int r = 0; r < g.grid_rows; ++r)
        for (int c = 0; c < g.grid_cols; ++c) {
            const PmtSignature& s = sheet.signatures[static_cast<size_t>(r) * g.grid_cols + c];
            auto [row0, col0] = g.tile_anchor[static_cast<size_t>(r) * g.grid_cols + c];
            blit(out.joint, signature_frame(s), row0, col0);
        }
    return out;
}

Frame compose_ref_only(const PmtSignature& ref, const JointGeometry& g) {
    Frame out(g.joint_width, g.joint_height);
    blit(out, signature_frame(ref), g.ref_row0, g.ref_col0);
    return out;
}

Frame compose_query_only(const SignatureSheet& sheet, const JointGeometry& g) {
    if (sheet.tile_count() != g.tile_count())
        throw std::invalid_argument("sheet does not match geometry");
    Frame out(g.joint_width, g.joint_height);
    for (int k = 0; k < g.tile_count(); ++k) {
        auto [row0, col0] = g.tile_anchor[k];
        blit(out, signature_frame(sheet.signatures[k]), row0, col0);
    }
    return out;
}

Frame balanced_jps(const Frame& joint, const Frame& ref_only, const Frame& query_only) {
    if (joint.width != ref_only.width || joint.height != ref_only.height ||
        joint.width != query_only.width || joint.height != query_only.height)
        throw std::invalid_argument("balanced_jps: dimension mismatch");
    Frame jps = power_spectrum(dft2_centered(joint));
    Frame ref_ps = power_spectrum(dft2_centered(ref_only));
    Frame query_ps = power_spectrum(dft2_centered(query_only));
    for (size_t i = 0; i < jps.data.size(); ++i)
        jps.data[i] -= ref_ps.data[i] + query_ps.data[i];
    return jps;
}

CorrelationPlane correlation_plane(const Frame& jps, const JointGeometry& geom) {
    validate(jps);
    if (jps.width != geom.joint_width || jps.height != geom.joint_height)
        throw std::invalid_argument("correlation_plane: jps does not match geometry");
    ComplexField field(jps.width, jps.height);
    for (size_t i = 0; i < jps.data.size(); ++i) field.data[i] = jps.data[i];
    Frame plane = magnitude(idft2_centered(field));
    double norm = std::sqrt(static_cast<double>(jps.width) * jps.height);
    for (double& v : plane.data) v *= norm;
    return CorrelationPlane{std::move(plane), geom, norm};
}

std::vector<TilePatch> extract_tile_correlations(const CorrelationPlane& plane) {
    const JointGeometry& g = plane.geometry;
    if (g.tile_count() < 1) throw std::invalid_argument("geometry has no tiles");
    std::vector<TilePatch> out;
    out.reserve(g.tile_count());
    for (int k = 0; k < g.tile_count(); ++k) {
        auto [trow0, tcol0] = g.tile_anchor[k];
        int sep_row = trow0 - g.ref_row0;
        int sep_col = tcol0 - g.ref_col0;
        int row0 = g.joint_height / 2 + sep_row - g.tile_height / 2;
        int col0 = g.joint_width / 2 + sep_col - g.tile_width / 2;
        if (row0 < 0 || col0 < 0 || row0 + g.tile_height > g.joint_height ||
            col0 + g.tile_width > g.joint_width)
            throw std::runtime_error("patch window exceeds plane bounds (geometry violation)");
        Frame patch(g.tile_width, g.tile_height);
        for (int r = 0; r < g.tile_height; ++r)
            for (int c = 0; c < g.tile_width; ++c)
                patch.at(r, c) = plane.data.at(row0 + r, col0 + c);
        out.push_back(TilePatch{k, std::move(patch)});
    }
    return out;
}

CorrelationPlane run_jtc(const PmtSignature& ref, const SignatureSheet& sheet, bool balanced) {
    JointInput in = compose_joint_input(ref, sheet);
    Frame jps;
    if (balanced) {
        Frame ref_only = compose_ref_only(ref, in.geometry);
        Frame query_only = compose_query_only(sheet, in.geometry);
        jps = balanced_jps(in.joint, ref_only, query_only);
    } else {
        jps = power_spectrum(dft2_centered(in.joint));
    }
    return correlation_plane(jps, in.geometry);
}

std::string geometry_json(const JointGeometry& g) {
    json j;
    j["joint_width"] = g.joint_width;
    j["joint_height"] = g.joint_height;
    j["tile_width"] = g.tile_width;
    j["tile_height"] = g.tile_height;
    j["grid_rows"] = g.grid_rows;
    j["grid_cols"] = g.grid_cols;
    j["gap"] = g.gap;
    j["ref_center"] = {g.ref_center.first, g.ref_center.second};
    j["tile_pitch"] = {g.tile_pitch.first, g.tile_pitch.second};
    j["tile_centers"] = json::array();
    for (const auto& [x, y] : g.tile_centers) j["tile_centers"].push_back({x, y});
    return j.dump(2);
}

} // namespace ssri
