#include "stressforge/svg.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace stressforge {

namespace {

constexpr double kViewHalf = 8.0;
constexpr double kScale = 60.0;
constexpr double kCenter = 500.0;
constexpr double kFarParam = 80.0;
constexpr int kArcSamples = 96;

const char* family_color(int family) {
    switch (family) {
    case 0: return "#8ecaff"; // light blue: v1 v2 v3
    case 1: return "#1f4f9e"; // dark blue: v1 v2 v4
    case 2: return "#a6e6a6"; // light green: v1 v3 v4
    case 3: return "#1d7a2c"; // dark green: v2 v3 v4
    default: return "#000000";
    }
}

struct Vec2 {
    double x, y;
};

/// Chart point -> sphere -> stereographic image from (0,0,-1) on z = 1.
Vec2 project(ChartTag chart, double x, double y) {
    double nx = x, ny = y, nz = 1.0;
    if (chart == ChartTag::MinusChart) {
        nx = -x;
        ny = -y;
        nz = -1.0;
    }
    double norm = std::sqrt(nx * nx + ny * ny + nz * nz);
    double X = nx / norm, Y = ny / norm, Z = nz / norm;
    double t = 2.0 / (Z + 1.0);
    return {X * t, Y * t};
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string svg_coord(const Vec2& p) {
    double sx = kCenter + kScale * p.x;
    double sy = kCenter - kScale * p.y;
    return fmt(sx) + "," + fmt(sy);
}

double clamp_radius(const Vec2& p) { return std::hypot(p.x, p.y); }

double y_break_value(ChartTag chart, int idx) {
    return chart == ChartTag::PlusChart ? static_cast<double>(idx - 1)
                                        : static_cast<double>(idx);
}

/// Polyline of a chart arc cell in projected coordinates.
std::string arc_path(const Lambda4Cell& cell) {
    const bool vertical = (cell.xpos & 1) != 0;
    double fixed, lo, hi;
    if (vertical) {
        fixed = cell.xpos == 1 ? 0.0 : 1.0;
        switch (cell.ypos) {
        case 0: lo = y_break_value(cell.chart, 0) - kFarParam; hi = y_break_value(cell.chart, 0); break;
        case 2: lo = y_break_value(cell.chart, 0); hi = y_break_value(cell.chart, 1); break;
        default: lo = y_break_value(cell.chart, 1); hi = y_break_value(cell.chart, 1) + kFarParam; break;
        }
    } else {
        fixed = y_break_value(cell.chart, cell.ypos == 1 ? 0 : 1);
        switch (cell.xpos) {
        case 0: lo = -kFarParam; hi = 0.0; break;
        case 2: lo = 0.0; hi = 1.0; break;
        default: lo = 1.0; hi = 1.0 + kFarParam; break;
        }
    }
    std::string d;
    for (int i = 0; i <= kArcSamples; ++i) {
        // Quadratic spacing pushes samples toward the finite end of
        // unbounded arcs so the projected curve stays smooth.
        double u = static_cast<double>(i) / kArcSamples;
        double t = lo + (hi - lo) * u;
        Vec2 p = vertical ? project(cell.chart, fixed, t) : project(cell.chart, t, fixed);
        if (clamp_radius(p) > kViewHalf * 1.2) continue;
        d += (d.empty() ? "M" : " L") + svg_coord(p);
    }
    return d;
}

} // namespace

std::string lambda4_svg(const Lambda4Complex& complex) {
    if (complex.cells.empty())
        throw Error(ErrorKind::Schema, "empty cell complex");

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" "
           "viewBox=\"0 0 1000 1000\">\n";
    svg += "<metadata>{\"arc_groups\":{";
    for (int f = 0; f < 4; ++f) {
        svg += std::string("\"") + kCollinearFamily[f] +
               "\":" + std::to_string(complex.arc_group_counts[f]);
        if (f < 3) svg += ",";
    }
    svg += "},\"faces\":" + std::to_string(complex.merged_face_count) +
           ",\"arcs\":" + std::to_string(complex.stratum_arc_count) + "}</metadata>\n";
    svg += "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";

    // Equator: dashed black circle of stereographic radius 2.
    svg += "<circle cx=\"" + fmt(kCenter) + "\" cy=\"" + fmt(kCenter) + "\" r=\"" +
           fmt(2.0 * kScale) +
           "\" fill=\"none\" stroke=\"black\" stroke-dasharray=\"8,6\" stroke-width=\"1.5\"/>\n";

    for (const Lambda4Cell& cell : complex.cells) {
        if (cell.kind != Lambda4Cell::Kind::ChartArc) continue;
        std::string d = arc_path(cell);
        if (d.empty()) continue;
        svg += "<path d=\"" + d + "\" fill=\"none\" stroke=\"" +
               family_color(cell.condition_family) + "\" stroke-width=\"2.5\"><title>" +
               cell.stratum_id + " (" + kCollinearFamily[cell.condition_family] +
               " collinear)</title></path>\n";
    }

    for (const Lambda4Cell& cell : complex.cells) {
        if (cell.kind != Lambda4Cell::Kind::ChartFace) continue;
        const FormalConfiguration& fc = *cell.sample;
        Vec2 p = project(cell.chart, fc.x.to_double(), fc.y.to_double());
        if (clamp_radius(p) > kViewHalf) continue;
        svg += "<text x=\"" + fmt(kCenter + kScale * p.x) + "\" y=\"" +
               fmt(kCenter - kScale * p.y) +
               "\" font-size=\"16\" text-anchor=\"middle\" fill=\"#333\">" + cell.stratum_id +
               "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

void export_svg(const Lambda4Complex& complex, const std::string& path) {
    std::string svg = lambda4_svg(complex);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
    out << svg;
}

} // namespace stressforge
