#include "stressforge/formal.hpp"

namespace stressforge {

const char* chart_name(ChartTag tag) {
    switch (tag) {
    case ChartTag::PlusChart: return "plus";
    case ChartTag::MinusChart: return "minus";
    case ChartTag::DegeneratePlus: return "degenerate-plus";
    case ChartTag::DegenerateMinus: return "degenerate-minus";
    case ChartTag::PlusInfinity: return "plus-infinity";
    case ChartTag::MinusInfinity: return "minus-infinity";
    }
    return "unknown";
}

Configuration FormalConfiguration::realize() const {
    const Rational zero(0), one(1);
    switch (tag) {
    case ChartTag::PlusChart:
        return Configuration(2, {{zero, zero}, {one, zero}, {x, y}, {x, y + one}});
    case ChartTag::MinusChart:
        return Configuration(2, {{zero, zero}, {one, zero}, {x, y}, {x, y - one}});
    case ChartTag::DegeneratePlus:
        return Configuration(2, {{zero, zero}, {one, zero}, {zero, one}, {x, one}});
    case ChartTag::DegenerateMinus:
        return Configuration(2, {{zero, zero}, {one, zero}, {zero, -one}, {x, -one}});
    case ChartTag::PlusInfinity:
    case ChartTag::MinusInfinity:
        throw Error(ErrorKind::NotNormalizable, "infinity charts are not realizable");
    }
    throw Error(ErrorKind::Schema, "bad chart");
}

FormalConfiguration normalize_formal(const Configuration& p) {
    if (p.dimension != 2 || p.size() != 4)
        throw Error(ErrorKind::NotNormalizable, "normal form needs four planar points");
    const Point& v1 = p.at(1);
    const Point& v2 = p.at(2);
    const Point& v3 = p.at(3);
    const Point& v4 = p.at(4);

    const Rational ux = v2[0] - v1[0], uy = v2[1] - v1[1];
    if (ux.is_zero() && uy.is_zero())
        throw Error(ErrorKind::NotNormalizable, "v1 = v2");
    const Rational wx = v4[0] - v3[0], wy = v4[1] - v3[1];
    const Rational det_uw = det2(ux, uy, wx, wy);

    if (!det_uw.is_zero()) {
        // Nondegenerate charts: L(u) = (1,0), L(w) = (0,s), s = sgn det(u,w),
        // so L = [[wy,-wx],[-s*uy,s*ux]] / det(u,w) and det L = s/det > 0.
        const Rational s(det_uw.sign());
        const Rational rx = v3[0] - v1[0], ry = v3[1] - v1[1];
        const Rational x = (wy * rx - wx * ry) / det_uw;
        const Rational y = s * (ux * ry - uy * rx) / det_uw;
        return FormalConfiguration::chart(
            s.sign() > 0 ? ChartTag::PlusChart : ChartTag::MinusChart, x, y);
    }

    // v4 - v3 parallel to v2 - v1 (or v3 = v4): degenerate charts.
    if (wx.is_zero() && wy.is_zero())
        throw Error(ErrorKind::NotNormalizable, "v3 = v4 is a deeper degeneracy");
    const Rational rx = v3[0] - v1[0], ry = v3[1] - v1[1];
    const Rational det_ur = det2(ux, uy, rx, ry);
    if (det_ur.is_zero())
        throw Error(ErrorKind::NotNormalizable,
                    "parallel segments with v1, v2, v3 collinear is a deeper degeneracy");
    const Rational s(det_ur.sign());
    // L(u) = (1,0), L(v3-v1) = (0,s); then T(v4) = (delta, +-1).
    const Rational qx = v4[0] - v1[0], qy = v4[1] - v1[1];
    const Rational delta = (ry * qx - rx * qy) / det_ur;
    return FormalConfiguration::degenerate(
        s.sign() > 0 ? ChartTag::DegeneratePlus : ChartTag::DegenerateMinus, delta);
}

} // namespace stressforge
