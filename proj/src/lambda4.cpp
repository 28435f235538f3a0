#include "stressforge/lambda4.hpp"

#include <functional>
#include <map>

namespace stressforge {

const char* const kCollinearFamily[4] = {"v1v2v3", "v1v2v4", "v1v3v4", "v2v3v4"};

namespace {

// Breakpoints per chart: x against {0,1}; y against {-1,0} (plus chart) or
// {0,1} (minus chart), ascending.
Rational x_break(int i) { return Rational(i); } // 0 -> 0, 1 -> 1
Rational y_break(ChartTag chart, int i) {
    if (chart == ChartTag::PlusChart) return Rational(i - 1); // -1, 0
    return Rational(i); // 0, 1
}

int position_index(const Rational& v, const Rational& b0, const Rational& b1) {
    if (v < b0) return 0;
    if (v == b0) return 1;
    if (v < b1) return 2;
    if (v == b1) return 3;
    return 4;
}

Rational sample_coord(int pos, const Rational& b0, const Rational& b1) {
    switch (pos) {
    case 0: return b0 - Rational(1);
    case 1: return b0;
    case 2: return (b0 + b1) / Rational(2);
    case 3: return b1;
    default: return b1 + Rational(1);
    }
}

/// Condition family of the line a chart arc lies on.
int family_of(ChartTag chart, bool on_x_line, int line_pos) {
    if (on_x_line) return line_pos == 1 ? 2 : 3;        // x=0 v1v3v4, x=1 v2v3v4
    if (chart == ChartTag::PlusChart) return line_pos == 1 ? 1 : 0; // y=-1, y=0
    return line_pos == 1 ? 0 : 1;                       // minus: y=0, y=1
}

FiberSignature signature_of(const Configuration& cfg) {
    return fiber_signature(make_framework(Graph::complete(4), cfg));
}

struct EquatorSpec {
    // Equator arcs indexed by (branch, sign of delta):
    // 0: P_{delta,+} delta<0, 1: P_{delta,+} delta>0,
    // 2: P_{delta,-} delta<0, 3: P_{delta,-} delta>0.
    //
    // A plus-chart escape direction (dx,dy) limits onto P_{-dx/dy, sgn dy};
    // a minus-chart one onto P_{+dx/dy, sgn dy}. The interior direction of
    // each arc, per chart, follows from that rule.
    static std::array<int, 2> interior_dir(int arc, ChartTag chart) {
        const Rational delta = arc_sample(arc).x; // representative delta
        const bool upper = arc < 2;
        long p = delta.num().get_si(), q = delta.den().get_si();
        if (chart == ChartTag::PlusChart) return upper ? std::array<int, 2>{-(int)p, (int)q}
                                                       : std::array<int, 2>{(int)p, -(int)q};
        return upper ? std::array<int, 2>{(int)p, (int)q}
                     : std::array<int, 2>{-(int)p, -(int)q};
    }
    /// Formal configuration of the equator arc sample.
    static FormalConfiguration arc_sample(int arc) {
        switch (arc) {
        case 0: return FormalConfiguration::degenerate(ChartTag::DegeneratePlus, Rational(-1));
        case 1: return FormalConfiguration::degenerate(ChartTag::DegeneratePlus, Rational(1));
        case 2: return FormalConfiguration::degenerate(ChartTag::DegenerateMinus, Rational(-1));
        default: return FormalConfiguration::degenerate(ChartTag::DegenerateMinus, Rational(1));
        }
    }
};

/// Chart face whose open region contains the given point.
int face_index(ChartTag chart, const Rational& x, const Rational& y) {
    int xp = position_index(x, x_break(0), x_break(1));
    int yp = position_index(y, y_break(chart, 0), y_break(chart, 1));
    return xp * 8 + yp; // unique key, caller matches against cells
}

Lambda4Complex build() {
    Lambda4Complex c;
    auto add = [&](Lambda4Cell cell) {
        cell.id = static_cast<int>(c.cells.size());
        c.cells.push_back(std::move(cell));
        return cell.id;
    };

    // Chart cells of both hemispheres.
    for (ChartTag chart : {ChartTag::PlusChart, ChartTag::MinusChart}) {
        for (int xp = 0; xp <= 4; ++xp) {
            for (int yp = 0; yp <= 4; ++yp) {
                Lambda4Cell cell;
                cell.chart = chart;
                cell.xpos = xp;
                cell.ypos = yp;
                const bool xline = (xp & 1) != 0, yline = (yp & 1) != 0;
                cell.dim = 2 - (xline ? 1 : 0) - (yline ? 1 : 0);
                cell.kind = cell.dim == 2 ? Lambda4Cell::Kind::ChartFace
                          : cell.dim == 1 ? Lambda4Cell::Kind::ChartArc
                                          : Lambda4Cell::Kind::ChartVertex;
                Rational sx = sample_coord(xp, x_break(0), x_break(1));
                Rational sy = sample_coord(yp, y_break(chart, 0), y_break(chart, 1));
                cell.sample = FormalConfiguration::chart(chart, sx, sy);
                cell.desc = std::string(chart == ChartTag::PlusChart ? "plus" : "minus") +
                            ":x" + std::to_string(xp) + ":y" + std::to_string(yp);
                if (cell.kind == Lambda4Cell::Kind::ChartArc)
                    cell.condition_family = family_of(chart, xline, xline ? xp : yp);
                if (cell.kind != Lambda4Cell::Kind::ChartVertex)
                    cell.signature = signature_of(cell.sample->realize());
                add(std::move(cell));
            }
        }
    }

    // Equator: 4 quadrant arcs and 4 special vertices.
    for (int q = 0; q < 4; ++q) {
        Lambda4Cell cell;
        cell.kind = Lambda4Cell::Kind::EquatorArc;
        cell.dim = 1;
        cell.equator_index = q;
        cell.sample = EquatorSpec::arc_sample(q);
        cell.signature = signature_of(cell.sample->realize());
        cell.desc = "equator:q" + std::to_string(q);
        cell.chart = cell.sample->tag;
        add(std::move(cell));
    }
    for (int v = 0; v < 4; ++v) {
        Lambda4Cell cell;
        cell.kind = Lambda4Cell::Kind::EquatorVertex;
        cell.dim = 0;
        cell.equator_index = v;
        switch (v) {
        case 0: cell.chart = ChartTag::PlusInfinity; cell.desc = "equator:P+inf"; break;
        case 1:
            cell.chart = ChartTag::DegeneratePlus;
            cell.sample = FormalConfiguration::degenerate(ChartTag::DegeneratePlus, Rational(0));
            cell.desc = "equator:P0+";
            break;
        case 2: cell.chart = ChartTag::MinusInfinity; cell.desc = "equator:P-inf"; break;
        default:
            cell.chart = ChartTag::DegenerateMinus;
            cell.sample = FormalConfiguration::degenerate(ChartTag::DegenerateMinus, Rational(0));
            cell.desc = "equator:P0-";
            break;
        }
        add(std::move(cell));
    }

    // Merge faces across equator arcs. The plus-side face of a quadrant arc
    // is the unbounded face containing R*dir; the minus-side face contains
    // R*(-dir) in minus chart coordinates.
    std::vector<int> owner(c.cells.size());
    for (std::size_t i = 0; i < c.cells.size(); ++i) owner[i] = static_cast<int>(i);
    std::function<int(int)> root = [&](int a) {
        while (owner[a] != a) a = owner[a] = owner[owner[a]];
        return a;
    };
    auto join = [&](int a, int b) { owner[root(a)] = root(b); };

    const Rational big(1024);
    auto face_at = [&](ChartTag chart, const Rational& x, const Rational& y) {
        for (const Lambda4Cell& cell : c.cells) {
            if (cell.kind != Lambda4Cell::Kind::ChartFace || cell.chart != chart) continue;
            if (face_index(chart, x, y) == cell.xpos * 8 + cell.ypos) return cell.id;
        }
        throw Error(ErrorKind::Schema, "no chart face for sample point");
    };

    for (const Lambda4Cell& cell : c.cells) {
        if (cell.kind != Lambda4Cell::Kind::EquatorArc) continue;
        auto pd = EquatorSpec::interior_dir(cell.equator_index, ChartTag::PlusChart);
        auto md = EquatorSpec::interior_dir(cell.equator_index, ChartTag::MinusChart);
        int plus_face = face_at(ChartTag::PlusChart, big * Rational(pd[0]), big * Rational(pd[1]));
        int minus_face = face_at(ChartTag::MinusChart, big * Rational(md[0]), big * Rational(md[1]));
        join(cell.id, plus_face);
        join(minus_face, plus_face);
    }

    // Stratum ids: merged faces then arcs, in deterministic raw-id order.
    std::map<int, std::string> face_names;
    for (Lambda4Cell& cell : c.cells) {
        if (cell.kind != Lambda4Cell::Kind::ChartFace) continue;
        int r = root(cell.id);
        if (!face_names.count(r))
            face_names[r] = "f" + std::to_string(face_names.size() + 1);
        cell.stratum_id = face_names[r];
        cell.is_stratum = true;
    }
    for (Lambda4Cell& cell : c.cells) {
        if (cell.kind == Lambda4Cell::Kind::EquatorArc) {
            cell.stratum_id = face_names[root(cell.id)];
            cell.is_stratum = false; // interior bookkeeping of a merged face
        }
    }
    c.merged_face_count = static_cast<int>(face_names.size());

    int arc_no = 0;
    for (Lambda4Cell& cell : c.cells) {
        if (cell.kind != Lambda4Cell::Kind::ChartArc) continue;
        cell.stratum_id = "a" + std::to_string(++arc_no);
        cell.is_stratum = true;
        ++c.arc_group_counts[cell.condition_family];
    }
    c.stratum_arc_count = arc_no;

    // Raw sphere complex counts: 8 chart vertices + 4 equator vertices,
    // 24 chart arcs + 4 equator arcs, 18 chart faces.
    for (const Lambda4Cell& cell : c.cells) {
        switch (cell.kind) {
        case Lambda4Cell::Kind::ChartFace: ++c.raw_faces; break;
        case Lambda4Cell::Kind::ChartArc:
        case Lambda4Cell::Kind::EquatorArc: ++c.raw_edges; break;
        case Lambda4Cell::Kind::ChartVertex:
        case Lambda4Cell::Kind::EquatorVertex: ++c.raw_vertices; break;
        }
    }
    return c;
}

} // namespace

const Lambda4Complex& lambda4_arrangement() {
    static Lambda4Complex complex = build();
    return complex;
}

K4CellRef classify_k4(const Configuration& p) {
    if (p.size() != 4 || p.dimension != 2)
        throw Error(ErrorKind::Schema, "classify_k4 needs four planar points");
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            if (p.at(i) == p.at(j))
                throw Error(ErrorKind::DeeperDegeneracy, "coincident points");

    FormalConfiguration fc;
    try {
        fc = normalize_formal(p);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotNormalizable)
            throw Error(ErrorKind::DeeperDegeneracy, e.what());
        throw;
    }

    const Lambda4Complex& c = lambda4_arrangement();

    if (fc.tag == ChartTag::DegeneratePlus || fc.tag == ChartTag::DegenerateMinus) {
        // Equator point: interior to the merged face of its quadrant.
        if (fc.x.is_zero())
            throw Error(ErrorKind::DeeperDegeneracy, "coincident points on the equator");
        const int quadrant =
            (fc.tag == ChartTag::DegeneratePlus ? 0 : 2) + (fc.x.sign() > 0 ? 1 : 0);
        for (const Lambda4Cell& cell : c.cells) {
            if (cell.kind == Lambda4Cell::Kind::EquatorArc && cell.equator_index == quadrant)
                return {cell.stratum_id, "face", "", cell.desc};
        }
        throw Error(ErrorKind::Schema, "equator cell missing");
    }

    ChartTag chart = fc.tag;
    int xp = position_index(fc.x, x_break(0), x_break(1));
    int yp = position_index(fc.y, y_break(chart, 0), y_break(chart, 1));
    if ((xp & 1) && (yp & 1))
        throw Error(ErrorKind::DeeperDegeneracy, "two independent degeneracies");
    for (const Lambda4Cell& cell : c.cells) {
        if (cell.kind == Lambda4Cell::Kind::ChartVertex) continue;
        if (cell.chart == chart && cell.xpos == xp && cell.ypos == yp &&
            (cell.kind == Lambda4Cell::Kind::ChartFace ||
             cell.kind == Lambda4Cell::Kind::ChartArc)) {
            K4CellRef ref;
            ref.cell_id = cell.stratum_id;
            ref.kind = cell.kind == Lambda4Cell::Kind::ChartFace ? "face" : "arc";
            if (cell.condition_family >= 0)
                ref.condition = kCollinearFamily[cell.condition_family];
            ref.chart_desc = cell.desc;
            return ref;
        }
    }
    throw Error(ErrorKind::Schema, "no Lambda4 cell matched");
}

} // namespace stressforge
