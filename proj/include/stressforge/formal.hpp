#pragma once

#include "stressforge/model.hpp"

namespace stressforge {

enum class ChartTag {
    PlusChart,      // v1=(0,0) v2=(1,0) v3=(x,y)   v4=(x,y+1)
    MinusChart,     // v1=(0,0) v2=(1,0) v3=(x,y)   v4=(x,y-1)
    DegeneratePlus, // v1=(0,0) v2=(1,0) v3=(0,1)   v4=(delta,1)
    DegenerateMinus,// v1=(0,0) v2=(1,0) v3=(0,-1)  v4=(delta,-1)
    PlusInfinity,   // closure point, not realizable by a finite configuration
    MinusInfinity,
};

const char* chart_name(ChartTag tag);

/// Chart-tagged normal form of a four point configuration under
/// orientation-preserving affine maps.
struct FormalConfiguration {
    ChartTag tag = ChartTag::PlusChart;
    Rational x; // chart coordinate, or delta for the degenerate charts
    Rational y; // unused for degenerate charts

    static FormalConfiguration chart(ChartTag t, Rational x, Rational y) {
        return FormalConfiguration{t, std::move(x), std::move(y)};
    }
    static FormalConfiguration degenerate(ChartTag t, Rational delta) {
        return FormalConfiguration{t, std::move(delta), Rational(0)};
    }

    bool realizable() const {
        return tag != ChartTag::PlusInfinity && tag != ChartTag::MinusInfinity;
    }

    /// The literal four point configuration of the chart formulas.
    Configuration realize() const;

    friend bool operator==(const FormalConfiguration& a, const FormalConfiguration& b) = default;
};

/// The unique formal configuration a codimension <= 1 four point
/// configuration deforms to. The linear part maps v2-v1 to (1,0) and v4-v3
/// to (0,+-1) with the sign making the determinant positive; the degenerate
/// charts take over when v4-v3 is parallel to v2-v1.
FormalConfiguration normalize_formal(const Configuration& p);

} // namespace stressforge
