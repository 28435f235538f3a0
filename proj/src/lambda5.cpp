#include "stressforge/lambda5.hpp"

#include <functional>
#include <map>

#include "stressforge/parallel.hpp"

namespace stressforge {

namespace {

using arrangement::AffineFunctional;

/// The six chart condition lines: four collinearity loci and the two finite
/// parallelism loci. The third parallelism family (v1v2 || v3v4) is the
/// equator itself.
std::vector<AffineFunctional> chart_lines(ChartTag chart) {
    const Rational one(1), zero(0);
    if (chart == ChartTag::PlusChart) {
        return {
            {zero, one, zero},        // y      : v1 v2 v3 collinear
            {zero, one, one},         // y + 1  : v1 v2 v4 collinear
            {one, zero, zero},        // x      : v1 v3 v4 collinear
            {one, zero, -one},        // x - 1  : v2 v3 v4 collinear
            {one, one, zero},         // x + y  : v1v3 || v2v4
            {-one, one, one},         // y - x + 1 : v1v4 || v2v3
        };
    }
    return {
        {zero, one, zero},  // y
        {zero, one, -one},  // y - 1
        {one, zero, zero},  // x
        {one, zero, -one},  // x - 1
        {-one, one, zero},  // y - x : v1v3 || v2v4
        {one, one, -one},   // x + y - 1 : v1v4 || v2v3
    };
}

int sigma_dim(const std::string& sigma, const std::vector<AffineFunctional>& funcs) {
    // 2 minus the rank of the gradients of the active zero constraints.
    std::vector<std::array<Rational, 2>> grads;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (sigma[i] != '0') continue;
        if (funcs[i][0].is_zero() && funcs[i][1].is_zero()) continue; // dead functional
        grads.push_back({funcs[i][0], funcs[i][1]});
    }
    if (grads.empty()) return 2;
    for (std::size_t i = 1; i < grads.size(); ++i)
        if (!(grads[0][0] * grads[i][1] - grads[0][1] * grads[i][0]).is_zero()) return 0;
    return 1;
}

/// sub <= sup in the face order: sub agrees with sup except for extra zeros.
bool sigma_below(const std::string& sub, const std::string& sup) {
    for (std::size_t i = 0; i < sub.size(); ++i)
        if (sub[i] != sup[i] && sub[i] != '0') return false;
    return true;
}

/// Direction d lies in the recession cone of the closure of the chart cell.
bool recession_contains(const std::string& sigma, const std::vector<AffineFunctional>& funcs,
                        const std::array<int, 2>& d) {
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        Rational v = funcs[i][0] * Rational(d[0]) + funcs[i][1] * Rational(d[1]);
        if (sigma[i] == '0' && !v.is_zero()) return false;
        if (sigma[i] == '+' && v.sign() < 0) return false;
        if (sigma[i] == '-' && v.sign() > 0) return false;
    }
    return true;
}

/// Fiber functionals: for each pair {i,j} in lexicographic order, the sign
/// of det(p_j - p_i, q - p_i) as an affine functional of q.
std::vector<AffineFunctional> fiber_functionals(const Configuration& base) {
    std::vector<AffineFunctional> funcs;
    for (int i = 1; i <= 4; ++i) {
        for (int j = i + 1; j <= 4; ++j) {
            const Point& a = base.at(i);
            const Point& b = base.at(j);
            Rational ux = b[0] - a[0], uy = b[1] - a[1];
            funcs.push_back({-uy, ux, uy * a[0] - ux * a[1]});
        }
    }
    return funcs;
}

// The equator circle, walked cyclically: the upper branch P_{delta,+} with
// delta running -inf..+inf, an ideal point, the lower branch P_{delta,-},
// and back. Vertices 0 and 4 are the ideal points; vertices 1,2,3 are
// P_{-1,+}, P_{0,+}, P_{1,+} and 5,6,7 their lower counterparts. Arc k
// joins vertices k and k+1 (mod 8).

/// Formal configuration of the equator vertex, or nullopt for the ideal
/// vertices.
std::optional<FormalConfiguration> equator_vertex_sample(int index) {
    switch (index) {
    case 1: return FormalConfiguration::degenerate(ChartTag::DegeneratePlus, Rational(-1));
    case 2: return FormalConfiguration::degenerate(ChartTag::DegeneratePlus, Rational(0));
    case 3: return FormalConfiguration::degenerate(ChartTag::DegeneratePlus, Rational(1));
    case 5: return FormalConfiguration::degenerate(ChartTag::DegenerateMinus, Rational(-1));
    case 6: return FormalConfiguration::degenerate(ChartTag::DegenerateMinus, Rational(0));
    case 7: return FormalConfiguration::degenerate(ChartTag::DegenerateMinus, Rational(1));
    default: return std::nullopt;
    }
}

FormalConfiguration equator_arc_sample(int index) {
    switch (index) {
    case 0: return FormalConfiguration::degenerate(ChartTag::DegeneratePlus, Rational(-2));
    case 1: return FormalConfiguration::degenerate(ChartTag::DegeneratePlus, Rational(-1, 2));
    case 2: return FormalConfiguration::degenerate(ChartTag::DegeneratePlus, Rational(1, 2));
    case 3: return FormalConfiguration::degenerate(ChartTag::DegeneratePlus, Rational(2));
    case 4: return FormalConfiguration::degenerate(ChartTag::DegenerateMinus, Rational(-2));
    case 5: return FormalConfiguration::degenerate(ChartTag::DegenerateMinus, Rational(-1, 2));
    case 6: return FormalConfiguration::degenerate(ChartTag::DegenerateMinus, Rational(1, 2));
    default: return FormalConfiguration::degenerate(ChartTag::DegenerateMinus, Rational(2));
    }
}

/// Chart escape direction corresponding to the equator point P_{delta,+-}:
/// a plus-chart direction (dx,dy) limits onto P_{-dx/dy, sgn dy}, a
/// minus-chart one onto P_{+dx/dy, sgn dy}.
std::array<int, 2> equator_chart_dir(ChartTag chart, bool upper, const Rational& delta) {
    const int p = static_cast<int>(delta.num().get_si());
    const int q = static_cast<int>(delta.den().get_si());
    if (chart == ChartTag::PlusChart) return upper ? std::array<int, 2>{-p, q}
                                                   : std::array<int, 2>{p, -q};
    return upper ? std::array<int, 2>{p, q} : std::array<int, 2>{-p, -q};
}

/// Delta interval of equator arc k; infinite ends map to the horizontal
/// chart directions.
struct ArcSpan {
    bool upper;
    bool has_lo, has_hi;
    Rational lo, hi;
};

ArcSpan arc_span(int k) {
    const bool upper = k < 4;
    switch (k % 4) {
    case 0: return {upper, false, true, Rational(0), Rational(-1)};
    case 1: return {upper, true, true, Rational(-1), Rational(0)};
    case 2: return {upper, true, true, Rational(0), Rational(1)};
    default: return {upper, true, false, Rational(1), Rational(0)};
    }
}

/// Endpoint + interior directions of arc k in the given chart (the closed
/// angular sector the adjacency test must cover).
std::vector<std::array<int, 2>> arc_sector_dirs(int k, ChartTag chart) {
    const ArcSpan span = arc_span(k);
    std::vector<std::array<int, 2>> dirs;
    auto horizontal = [&](bool toward_minus_inf) -> std::array<int, 2> {
        // delta -> -inf or +inf: the chart direction degenerates to (+-1, 0).
        const bool plus_chart = chart == ChartTag::PlusChart;
        int sx;
        if (span.upper) sx = (toward_minus_inf ? 1 : -1) * (plus_chart ? 1 : -1);
        else sx = (toward_minus_inf ? -1 : 1) * (plus_chart ? 1 : -1);
        return {sx, 0};
    };
    dirs.push_back(span.has_lo ? equator_chart_dir(chart, span.upper, span.lo)
                               : horizontal(true));
    dirs.push_back(span.has_hi ? equator_chart_dir(chart, span.upper, span.hi)
                               : horizontal(false));
    dirs.push_back(equator_chart_dir(chart, span.upper, equator_arc_sample(k).x));
    return dirs;
}

struct FiberComplex {
    std::vector<AffineFunctional> funcs;
    std::map<std::string, Point> cells; // sigma -> sample
    std::map<std::string, int> dims;
};

FiberComplex build_fiber(const Configuration& base) {
    FiberComplex fc;
    fc.funcs = fiber_functionals(base);
    fc.cells = arrangement::affine_sign_cells(fc.funcs);
    for (const auto& [sigma, sample] : fc.cells) fc.dims[sigma] = sigma_dim(sigma, fc.funcs);
    return fc;
}

std::string project_dead_pairs(const std::string& sigma, const Configuration& base) {
    std::string out = sigma;
    int e = 0;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j, ++e)
            if (base.at(i) == base.at(j)) out[e] = '0';
    return out;
}

Lambda5Census build_census() {
    Lambda5Census census;
    using BaseCell = Lambda5Census::BaseCell;

    // ----- Base complex: two refined charts plus the subdivided equator.
    std::map<int, std::vector<AffineFunctional>> base_funcs; // chart cells only
    for (ChartTag chart : {ChartTag::PlusChart, ChartTag::MinusChart}) {
        auto funcs = chart_lines(chart);
        auto cells = arrangement::affine_sign_cells(funcs);
        for (const auto& [sigma, pt] : cells) {
            BaseCell b;
            b.id = static_cast<int>(census.base_cells.size());
            b.kind = BaseCell::Kind::Chart;
            b.chart = chart;
            b.chart_sigma = sigma;
            b.dim = sigma_dim(sigma, funcs);
            b.desc = std::string(chart == ChartTag::PlusChart ? "plus:" : "minus:") + sigma;
            b.sample = FormalConfiguration::chart(chart, pt[0], pt[1]).realize();
            base_funcs[b.id] = funcs;
            census.base_cells.push_back(std::move(b));
        }
    }
    for (int k = 0; k < 8; ++k) {
        BaseCell b;
        b.id = static_cast<int>(census.base_cells.size());
        b.kind = BaseCell::Kind::EquatorArc;
        b.dim = 1;
        b.equator_index = k;
        FormalConfiguration fc = equator_arc_sample(k);
        b.chart = fc.tag;
        b.desc = "equator-arc:" + std::to_string(k);
        b.sample = fc.realize();
        census.base_cells.push_back(std::move(b));
    }
    for (int k = 0; k < 8; ++k) {
        BaseCell b;
        b.id = static_cast<int>(census.base_cells.size());
        b.kind = BaseCell::Kind::EquatorVertex;
        b.dim = 0;
        b.equator_index = k;
        b.desc = "equator-vertex:" + std::to_string(k);
        if (auto fc = equator_vertex_sample(k)) {
            b.chart = fc->tag;
            b.sample = fc->realize();
        } else {
            b.chart = k == 0 ? ChartTag::PlusInfinity : ChartTag::MinusInfinity;
        }
        census.base_cells.push_back(std::move(b));
    }

    for (const BaseCell& b : census.base_cells) {
        if (b.kind == BaseCell::Kind::Chart) {
            if (b.dim == 2) ++census.refined_faces;
            else if (b.dim == 1) ++census.refined_arcs;
            else ++census.refined_vertices;
        } else if (b.kind == BaseCell::Kind::EquatorArc) {
            ++census.refined_arcs;
        } else {
            ++census.refined_vertices;
        }
    }

    // Base drop-1 incidences (super -> sub).
    std::vector<std::pair<int, int>> base_inc;
    for (const BaseCell& a : census.base_cells) {
        for (const BaseCell& b : census.base_cells) {
            if (a.id == b.id || a.dim != b.dim + 1) continue;
            if (a.kind == BaseCell::Kind::Chart && b.kind == BaseCell::Kind::Chart) {
                if (a.chart == b.chart && sigma_below(b.chart_sigma, a.chart_sigma))
                    base_inc.emplace_back(a.id, b.id);
            } else if (a.kind == BaseCell::Kind::Chart &&
                       b.kind == BaseCell::Kind::EquatorArc) {
                const auto& funcs = base_funcs.at(a.id);
                bool inside = true;
                for (const auto& d : arc_sector_dirs(b.equator_index, a.chart))
                    if (!recession_contains(a.chart_sigma, funcs, d)) inside = false;
                if (inside) base_inc.emplace_back(a.id, b.id);
            } else if (a.kind == BaseCell::Kind::Chart &&
                       b.kind == BaseCell::Kind::EquatorVertex) {
                if (!b.sample) continue; // ideal vertices carry no cells
                const auto& funcs = base_funcs.at(a.id);
                const bool upper = b.equator_index < 4;
                const Rational delta = equator_vertex_sample(b.equator_index)->x;
                if (recession_contains(a.chart_sigma, funcs,
                                       equator_chart_dir(a.chart, upper, delta)))
                    base_inc.emplace_back(a.id, b.id);
            } else if (a.kind == BaseCell::Kind::EquatorArc &&
                       b.kind == BaseCell::Kind::EquatorVertex) {
                if (b.equator_index == a.equator_index ||
                    b.equator_index == (a.equator_index + 1) % 8)
                    base_inc.emplace_back(a.id, b.id);
            }
        }
    }

    // ----- Fiber complexes and product cells of dimension >= 2.
    std::vector<FiberComplex> fibers(census.base_cells.size());
    for (const BaseCell& b : census.base_cells)
        if (b.sample) fibers[b.id] = build_fiber(*b.sample);

    std::map<std::pair<int, std::string>, int> index;
    for (const BaseCell& b : census.base_cells) {
        if (!b.sample) continue;
        if (b.dim == 2) census.face_fiber_cells.push_back(0);
        for (const auto& [sigma, sample] : fibers[b.id].cells) {
            const int fd = fibers[b.id].dims.at(sigma);
            if (b.dim == 2 && fd == 2) ++census.face_fiber_cells.back();
            const int dim = b.dim + fd;
            if (dim < 2) continue;
            Lambda5Census::Cell cell;
            cell.base_id = b.id;
            cell.fiber_sigma = sigma;
            cell.dim = dim;
            index[{b.id, sigma}] = static_cast<int>(census.cells.size());
            census.cells.push_back(std::move(cell));
        }
    }

    // ----- Signatures at every product cell sample (deterministic fan-out).
    std::vector<FiberSignature> sigs(census.cells.size());
    const Graph k5 = Graph::complete(5);
    parallel_for(static_cast<int>(census.cells.size()), [&](int i) {
        const auto& cell = census.cells[i];
        const BaseCell& b = census.base_cells[cell.base_id];
        std::vector<Point> pts = b.sample->points;
        pts.push_back(fibers[cell.base_id].cells.at(cell.fiber_sigma));
        sigs[i] = fiber_signature(make_framework(k5, Configuration(2, pts)));
        census.cells[i].signature_dim = sigs[i].dimension;
    });

    // ----- Union-find over equal-signature drop-1 incidences.
    std::vector<int> parent(census.cells.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> root = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    auto unite = [&](int a, int b) { parent[root(a)] = root(b); };

    // (A) same base cell, fiber face relation with one dimension drop.
    for (const auto& [key, ci] : index) {
        const auto& [bid, sigma] = key;
        const auto& fc = fibers[bid];
        const int fd = fc.dims.at(sigma);
        for (const auto& [sub, sample2] : fc.cells) {
            if (fc.dims.at(sub) != fd - 1 || !sigma_below(sub, sigma)) continue;
            auto it = index.find({bid, sub});
            if (it == index.end()) continue;
            if (sigs[ci] == sigs[it->second]) unite(ci, it->second);
        }
    }
    // (B) base wall crossing at the same fiber sign vector.
    for (const auto& [sup, sub] : base_inc) {
        if (!census.base_cells[sub].sample) continue;
        const Configuration& sub_sample = *census.base_cells[sub].sample;
        for (const auto& [sigma, sample] : fibers[sup].cells) {
            std::string proj = project_dead_pairs(sigma, sub_sample);
            auto a = index.find({sup, sigma});
            auto b = index.find({sub, proj});
            if (a == index.end() || b == index.end()) continue;
            if (fibers[sup].dims.at(sigma) != fibers[sub].dims.at(proj)) continue;
            if (sigs[a->second] == sigs[b->second]) unite(a->second, b->second);
        }
    }

    // ----- Count merged classes by their maximal dimension.
    std::map<int, int> class_max_dim;
    std::map<int, int> class_ids;
    for (std::size_t i = 0; i < census.cells.size(); ++i) {
        int r = root(static_cast<int>(i));
        auto [it, fresh] = class_max_dim.try_emplace(r, census.cells[i].dim);
        if (!fresh) it->second = std::max(it->second, census.cells[i].dim);
    }
    int next_class = 0;
    for (auto& [r, dim] : class_max_dim) class_ids[r] = next_class++;
    for (std::size_t i = 0; i < census.cells.size(); ++i)
        census.cells[i].class_id = class_ids[root(static_cast<int>(i))];

    for (const auto& [r, dim] : class_max_dim) {
        if (dim == 4) ++census.top_count;
        else if (dim == 3) ++census.codim1_count;
    }
    return census;
}

} // namespace

const Lambda5Census& lambda5_census() {
    static Lambda5Census census = build_census();
    return census;
}

} // namespace stressforge
