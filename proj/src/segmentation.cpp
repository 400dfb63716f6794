#include "ssri/segmentation.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ssri {

using json = nlohmann::json;

SignatureSheet segment_pmt(const Frame& frame, const SegmentGrid& grid, const PmtParams& params) {
    validate(frame);
    if (grid.rows * grid.segment_height != frame.height ||
        grid.cols * grid.segment_width != frame.width)
        throw std::invalid_argument("grid does not tile frame exactly");
    params.validate_for(grid.segment_width, grid.segment_height);

    SignatureSheet sheet;
    sheet.grid = grid;
    sheet.params = params;
    sheet.signatures.reserve(static_cast<size_t>(grid.rows) * grid.cols);
    sheet.empty.reserve(sheet.signatures.capacity());

    for (int r = 0; r < grid.rows; ++r) {
        for (int c = 0; c < grid.cols; ++c) {
            Frame seg = extract_segment(frame, grid, r, c);
            if (all_zero(seg)) {
                PmtSignature placeholder;
                placeholder.params = params;
                placeholder.data.assign(static_cast<size_t>(params.n_theta) * params.n_rho, 0.0);
                sheet.signatures.push_back(std::move(placeholder));
                sheet.empty.push_back(1);
            } else {
                sheet.signatures.push_back(pmt(normalize_power(seg), params));
                sheet.empty.push_back(0);
            }
        }
    }
    sheet.sheet_frame = build_sheet_frame(sheet.signatures, grid);
    return sheet;
}

Frame build_sheet_frame(const std::vector<PmtSignature>& signatures, const SegmentGrid& grid) {
    if (signatures.empty()) throw std::invalid_argument("no signatures to tile");
    if (signatures.size() != static_cast<size_t>(grid.rows) * grid.cols)
        throw std::invalid_argument("signature count does not match grid");
    const PmtParams& p = signatures.front().params;
    for (const auto& s : signatures)
        if (!(s.params == p)) throw std::invalid_argument("signatures have mixed params");

    Frame out(grid.cols * p.n_rho, grid.rows * p.n_theta);
    for (int r = 0; r < grid.rows; ++r)
        for (int c = 0; c < grid.cols; ++c) {
            const PmtSignature& s = signatures[static_cast<size_t>(r) * grid.cols + c];
            int r0 = r * p.n_theta, c0 = c * p.n_rho;
            for (int t = 0; t < p.n_theta; ++t)
                for (int q = 0; q < p.n_rho; ++q)
                    out.at(r0 + t, c0 + q) = s.at(t, q);
        }
    return out;
}

Frame slice_sheet_tile(const Frame& sheet_frame, const SegmentGrid& grid, const PmtParams& params,
                       int row, int col) {
    SegmentGrid tiles{grid.rows, grid.cols, params.n_rho, params.n_theta};
    return extract_segment(sheet_frame, tiles, row, col);
}

std::string sheet_manifest_json(const SignatureSheet& sheet) {
    json j;
    j["grid"] = {{"rows", sheet.grid.rows},
                 {"cols", sheet.grid.cols},
                 {"segment_width", sheet.grid.segment_width},
                 {"segment_height", sheet.grid.segment_height}};
    j["tile"] = {{"n_rho", sheet.params.n_rho},
                 {"n_theta", sheet.params.n_theta},
                 {"r0", sheet.params.r0},
                 {"r_max", sheet.params.r_max}};
    j["tiles"] = json::array();
    for (int k = 0; k < sheet.tile_count(); ++k)
        j["tiles"].push_back({{"index", k},
                              {"row", k / sheet.grid.cols},
                              {"col", k % sheet.grid.cols},
                              {"empty", sheet.empty[k] != 0}});
    return j.dump(2);
}

} // namespace ssri
