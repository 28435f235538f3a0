#pragma once

#include <optional>

#include "stressforge/formal.hpp"
#include "stressforge/signature.hpp"

namespace stressforge {

/// Names of the four collinearity condition families, indexed 0..3.
extern const char* const kCollinearFamily[4];

struct Lambda4Cell {
    enum class Kind { ChartFace, ChartArc, ChartVertex, EquatorArc, EquatorVertex };

    int id = 0;
    int dim = 0;
    Kind kind = Kind::ChartFace;
    std::string desc;

    // Chart cells: position of (x, y) against the two breakpoints per axis,
    // 0 below, 1 on the lower line, 2 between, 3 on the upper line, 4 above.
    ChartTag chart = ChartTag::PlusChart;
    int xpos = 0, ypos = 0;

    // Equator cells: quadrant index 0..3 (arcs) or direction index (vertices).
    int equator_index = -1;

    std::optional<FormalConfiguration> sample;
    std::optional<FiberSignature> signature;

    /// Stratum id after merging ("f1".."f14", "a1".."a24"); bookkeeping
    /// cells (equator, chart vertices) carry the id of the stratum that
    /// absorbed them, or empty when none.
    std::string stratum_id;
    bool is_stratum = false;
    int condition_family = -1;
};

struct Lambda4Complex {
    std::vector<Lambda4Cell> cells;

    int merged_face_count = 0; // 14
    int stratum_arc_count = 0; // 24
    std::array<int, 4> arc_group_counts{};

    // Raw sphere complex for the Euler check: chart cells plus the equator
    // subdivision.
    int raw_vertices = 0, raw_edges = 0, raw_faces = 0;
    int euler_characteristic() const { return raw_vertices - raw_edges + raw_faces; }

    const Lambda4Cell* find(int id) const {
        return id >= 0 && id < static_cast<int>(cells.size()) ? &cells[id] : nullptr;
    }
};

/// The sphere of formal four point configurations with its codimension 0/1
/// stratification: 14 faces and 24 arcs after merging across the equator.
const Lambda4Complex& lambda4_arrangement();

struct K4CellRef {
    std::string cell_id;
    std::string kind;      // "face" or "arc"
    std::string condition; // arc cells: collinearity family, e.g. "v1v2v3"
    std::string chart_desc;
};

/// Locates a codimension <= 1 four point configuration in the Lambda4
/// complex and returns the merged cell it belongs to.
K4CellRef classify_k4(const Configuration& p);

} // namespace stressforge
