#pragma once

#include "stressforge/lambda4.hpp"

namespace stressforge {

/// Product cell complex over the parallelism-refined Lambda4 base: base
/// cells carry the arrangement of the six lines through pairs of the four
/// base points in the fiber plane of the fifth point. Fiber cells are keyed
/// by their sign vector against the six pair functionals, which is an
/// affine invariant, so cells over adjacent base cells match by key.
struct Lambda5Census {
    int top_count = 0;    // merged full-dimension strata
    int codim1_count = 0; // merged codimension-1 strata

    struct BaseCell {
        int id = 0;
        int dim = 0;
        enum class Kind { Chart, EquatorArc, EquatorVertex } kind = Kind::Chart;
        ChartTag chart = ChartTag::PlusChart;
        std::string chart_sigma; // chart cells: signs against the 6 chart lines
        int equator_index = -1;
        std::string desc;
        std::optional<Configuration> sample; // 4 points; ideal vertices have none
    };

    struct Cell {
        int base_id = 0;
        std::string fiber_sigma; // signs against the 6 pair functionals
        int dim = 0;             // base dim + fiber dim
        int class_id = -1;       // stratum class after merging
        int signature_dim = 0;   // dim W at the sample
    };

    std::vector<BaseCell> base_cells;
    std::vector<Cell> cells;

    int refined_faces = 0, refined_arcs = 0, refined_vertices = 0;
    /// Fiber 2-cell count over every refined generic base face (must be 18).
    std::vector<int> face_fiber_cells;
};

/// Computes the census once; deterministic and cached.
const Lambda5Census& lambda5_census();

} // namespace stressforge
