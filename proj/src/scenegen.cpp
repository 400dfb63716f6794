#include "ssri/scenegen.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ssri {

using json = nlohmann::json;

const char* kind_name(ObjectKind k) {
    switch (k) {
        case ObjectKind::square: return "square";
        case ObjectKind::cross: return "cross";
        case ObjectKind::ring: return "ring";
        case ObjectKind::wedge: return "wedge";
    }
    return "?";
}

ObjectKind kind_from_name(const std::string& name) {
    if (name == "square") return ObjectKind::square;
    if (name == "cross") return ObjectKind::cross;
    if (name == "ring") return ObjectKind::ring;
    if (name == "wedge") return ObjectKind::wedge;
    throw std::invalid_argument("unknown object kind: " + name);
}

Frame make_object(ObjectKind kind, int size, int canvas) {
    if (size >= canvas) throw std::invalid_argument("object size must be smaller than canvas");
    if (size < 4) throw std::invalid_argument("object size must be >= 4");
    Frame out(canvas, canvas);
    double half = size / 2.0;
    for (int r = 0; r < canvas; ++r) {
        double y = out.origin_row() - r;
        for (int c = 0; c < canvas; ++c) {
            double x = c - out.origin_col();
            bool on = false;
            switch (kind) {
                case ObjectKind::square:
                    on = std::abs(x) < half && std::abs(y) < half;
                    break;
                case ObjectKind::cross: {
                    double bw = size / 8.0; // half of the size/4 bar width
                    on = (std::abs(x) < bw && std::abs(y) < half) ||
                         (std::abs(y) < bw && std::abs(x) < half);
                    break;
                }
                case ObjectKind::ring: {
                    double rr = std::hypot(x, y);
                    on = rr < half && rr >= size / 4.0;
                    break;
                }
                case ObjectKind::wedge: {
                    // scalene right triangle: legs along +x and +y from the corner
                    double a = size;       // horizontal leg
                    double b = 0.6 * size; // vertical leg
                    double xx = x + a / 2.0, yy = y + b / 2.0;
                    on = xx >= 0 && yy >= 0 && (xx / a + yy / b) < 1.0;
                    break;
                }
            }
            if (on) out.at(r, c) = 1.0;
        }
    }
    return out;
}

namespace {

double sample_bilinear_zero(const Frame& f, double row, double col) {
    int r0 = static_cast<int>(std::floor(row));
    int c0 = static_cast<int>(std::floor(col));
    double fr = row - r0, fc = col - c0;
    auto px = [&](int r, int c) -> double {
        if (r < 0 || r >= f.height || c < 0 || c >= f.width) return 0.0;
        return f.at(r, c);
    };
    return (1 - fr) * ((1 - fc) * px(r0, c0) + fc * px(r0, c0 + 1)) +
           fr * ((1 - fc) * px(r0 + 1, c0) + fc * px(r0 + 1, c0 + 1));
}

struct Bbox {
    double xmin, xmax, ymin, ymax;
};

// Bounding box of nonzero content in centered coordinates.
Bbox content_bbox(const Frame& f) {
    Bbox b{1e300, -1e300, 1e300, -1e300};
    for (int r = 0; r < f.height; ++r)
        for (int c = 0; c < f.width; ++c)
            if (f.at(r, c) != 0.0) {
                double x = c - f.origin_col();
                double y = f.origin_row() - r;
                b.xmin = std::min(b.xmin, x);
                b.xmax = std::max(b.xmax, x);
                b.ymin = std::min(b.ymin, y);
                b.ymax = std::max(b.ymax, y);
            }
    return b;
}

Bbox transformed_bbox(const Bbox& b, double dx, double dy, double phi, double alpha) {
    Bbox out{1e300, -1e300, 1e300, -1e300};
    double cs = std::cos(phi), sn = std::sin(phi);
    double xs[2] = {b.xmin, b.xmax}, ys[2] = {b.ymin, b.ymax};
    for (double x : xs)
        for (double y : ys) {
            double sxp = alpha * x, syp = alpha * y;
            double rx = cs * sxp - sn * syp;
            double ry = sn * sxp + cs * syp;
            out.xmin = std::min(out.xmin, rx + dx);
            out.xmax = std::max(out.xmax, rx + dx);
            out.ymin = std::min(out.ymin, ry + dy);
            out.ymax = std::max(out.ymax, ry + dy);
        }
    return out;
}

void check_fits(const Bbox& b, int width, int height, const char* what) {
    // one pixel of slack for the bilinear footprint
    double xlo = -width / 2.0 + 1, xhi = width / 2.0 - 2;
    double ylo = -height / 2.0 + 2, yhi = height / 2.0 - 1;
    if (b.xmin < xlo || b.xmax > xhi || b.ymin < ylo || b.ymax > yhi)
        throw std::runtime_error(std::string(what) + ": transformed content clipped by bounds");
}

} // namespace

Frame transform_object(const Frame& obj, double dx, double dy, double phi, double alpha) {
    validate(obj);
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be > 0");
    if (dx == 0.0 && dy == 0.0 && phi == 0.0 && alpha == 1.0) return obj;

    check_fits(transformed_bbox(content_bbox(obj), dx, dy, phi, alpha), obj.width, obj.height,
               "transform_object");

    Frame out(obj.width, obj.height);
    // inverse map: p = R(-phi) * (q - t) / alpha
    double cs = std::cos(-phi), sn = std::sin(-phi);
    for (int r = 0; r < out.height; ++r) {
        double y = out.origin_row() - r - dy;
        for (int c = 0; c < out.width; ++c) {
            double x = c - out.origin_col() - dx;
            double sx = (cs * x - sn * y) / alpha;
            double sy = (sn * x + cs * y) / alpha;
            double srow = obj.origin_row() - sy;
            double scol = obj.origin_col() + sx;
            out.at(r, c) = sample_bilinear_zero(obj, srow, scol);
        }
    }
    return out;
}

void validate_spec(const SceneSpec& spec) {
    if (spec.grid.rows < 1 || spec.grid.cols < 1 || spec.grid.segment_width < 2 ||
        spec.grid.segment_height < 2)
        throw std::invalid_argument("scene spec: invalid grid");
    std::set<std::pair<int, int>> used;
    for (const auto& p : spec.placements) {
        if (p.row < 0 || p.row >= spec.grid.rows || p.col < 0 || p.col >= spec.grid.cols)
            throw std::invalid_argument("scene spec: placement outside grid");
        if (!used.insert({p.row, p.col}).second)
            throw std::invalid_argument("scene spec: duplicate placement in one cell");
        double half = spec.object_size / 2.0;
        Bbox b{-half, half, -half, half};
        check_fits(transformed_bbox(b, p.dx, p.dy, p.phi, p.alpha), spec.grid.segment_width,
                   spec.grid.segment_height, "scene spec");
    }
}

Frame render_scene(const SceneSpec& spec) {
    validate_spec(spec);
    Frame out(spec.grid.cols * spec.grid.segment_width, spec.grid.rows * spec.grid.segment_height);
    for (const auto& p : spec.placements) {
        Frame obj = make_object(p.kind, spec.object_size, std::min(spec.grid.segment_width,
                                                                   spec.grid.segment_height));
        Frame seg = transform_object(obj, p.dx, p.dy, p.phi, p.alpha);
        int r0 = p.row * spec.grid.segment_height + (spec.grid.segment_height - seg.height) / 2;
        int c0 = p.col * spec.grid.segment_width + (spec.grid.segment_width - seg.width) / 2;
        for (int r = 0; r < seg.height; ++r)
            for (int c = 0; c < seg.width; ++c)
                out.at(r0 + r, c0 + c) += seg.at(r, c);
    }
    return out;
}

SceneSpec figure3_spec(double phi, double alpha) {
    SceneSpec spec;
    spec.grid = SegmentGrid{4, 3, 128, 128};
    spec.object_size = 32;
    ObjectKind cols[3] = {ObjectKind::square, ObjectKind::cross, ObjectKind::ring};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 3; ++c) {
            Placement p;
            p.row = r;
            p.col = c;
            p.kind = cols[c];
            // deterministic small intra-segment shifts, away from clipping
            p.dx = ((r * 5 + c * 3) % 15) - 7;
            p.dy = ((r * 3 + c * 7) % 13) - 6;
            p.phi = (r == 1 || r == 3) ? phi : 0.0;
            p.alpha = (r == 2 || r == 3) ? alpha : 1.0;
            spec.placements.push_back(p);
        }
    return spec;
}

SceneSpec single_object_spec(ObjectKind kind, int segment, int size, double dx, double dy,
                             double phi, double alpha) {
    SceneSpec spec;
    spec.grid = SegmentGrid{1, 1, segment, segment};
    spec.object_size = size;
    spec.placements.push_back(Placement{0, 0, kind, dx, dy, phi, alpha});
    return spec;
}

std::string manifest_json(const SceneSpec& spec) {
    json j;
    j["grid"] = {{"rows", spec.grid.rows},
                 {"cols", spec.grid.cols},
                 {"segment_width", spec.grid.segment_width},
                 {"segment_height", spec.grid.segment_height}};
    j["object_size"] = spec.object_size;
    j["placements"] = json::array();
    for (const auto& p : spec.placements)
        j["placements"].push_back({{"row", p.row},
                                   {"col", p.col},
                                   {"kind", kind_name(p.kind)},
                                   {"dx", p.dx},
                                   {"dy", p.dy},
                                   {"phi", p.phi},
                                   {"alpha", p.alpha}});
    return j.dump(2);
}

SceneSpec manifest_from_json(const std::string& text) {
    json j = json::parse(text);
    SceneSpec spec;
    spec.grid.rows = j.at("grid").at("rows").get<int>();
    spec.grid.cols = j.at("grid").at("cols").get<int>();
    spec.grid.segment_width = j.at("grid").at("segment_width").get<int>();
    spec.grid.segment_height = j.at("grid").at("segment_height").get<int>();
    spec.object_size = j.at("object_size").get<int>();
    for (const auto& e : j.at("placements")) {
        Placement p;
        p.row = e.at("row").get<int>();
        p.col = e.at("col").get<int>();
        p.kind = kind_from_name(e.at("kind").get<std::string>());
        p.dx = e.at("dx").get<double>();
        p.dy = e.at("dy").get<double>();
        p.phi = e.at("phi").get<double>();
        p.alpha = e.at("alpha").get<double>();
        spec.placements.push_back(p);
    }
    return spec;
}

} // namespace ssri
