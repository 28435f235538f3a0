#include "stressforge/stress.hpp"

#include "stressforge/projective.hpp"

namespace stressforge {

RationalMatrix equilibrium_matrix(const Framework& f) {
    const int d = f.dimension();
    const int n = f.vertex_count();
    const auto edges = f.graph.edges();
    RationalMatrix m(d * n, static_cast<int>(edges.size()));
    for (int col = 0; col < static_cast<int>(edges.size()); ++col) {
        const Edge& e = edges[col];
        const Point& pi = f.configuration.at(e.a);
        const Point& pj = f.configuration.at(e.b);
        for (int k = 0; k < d; ++k) {
            m.at((e.a - 1) * d + k, col) = pj[k] - pi[k];
            m.at((e.b - 1) * d + k, col) = pi[k] - pj[k];
        }
    }
    return m;
}

StressSpace self_stress_space(const Framework& f) {
    KernelBasis kb = kernel_basis(equilibrium_matrix(f));
    StressSpace space;
    space.framework = f;
    space.basis.reserve(kb.vectors.size());
    for (auto& v : kb.vectors) space.basis.emplace_back(f.graph, std::move(v));
    return space;
}

std::vector<Point> load_residual(const Framework& f, const StressAssignment& w,
                                 const Load& load) {
    const int d = f.dimension();
    const int n = f.vertex_count();
    if (static_cast<int>(load.vectors.size()) != n)
        throw Error(ErrorKind::DimensionMismatch, "load needs one vector per vertex");
    std::vector<Point> residual(n, Point(d, Rational(0)));
    for (int i = 1; i <= n; ++i) {
        Point r = load.vectors[i - 1];
        if (static_cast<int>(r.size()) != d)
            throw Error(ErrorKind::DimensionMismatch, "load vector arity != dimension");
        for (const Edge& e : f.graph.edges()) {
            if (!e.contains(i)) continue;
            const int j = e.other(i);
            const Rational wij = w.weight(i, j);
            if (wij.is_zero()) continue;
            for (int k = 0; k < d; ++k)
                r[k] += wij * (f.configuration.at(j)[k] - f.configuration.at(i)[k]);
        }
        residual[i - 1] = std::move(r);
    }
    return residual;
}

bool resolves_load(const Framework& f, const StressAssignment& w, const Load& load) {
    for (const Point& r : load_residual(f, w, load))
        for (const Rational& x : r)
            if (!x.is_zero()) return false;
    return true;
}

namespace {

bool collinear3(const Point& a, const Point& b, const Point& c) {
    if (a.size() == 2) {
        return det2(b[0] - a[0], b[1] - a[1], c[0] - a[0], c[1] - a[1]).is_zero();
    }
    // 3D: cross product of the difference vectors vanishes.
    Point u = sub(b, a), v = sub(c, a);
    return (u[1] * v[2] - u[2] * v[1]).is_zero() &&
           (u[2] * v[0] - u[0] * v[2]).is_zero() &&
           (u[0] * v[1] - u[1] * v[0]).is_zero();
}

void require_general_position(const std::array<Point, 4>& pts) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (pts[i] == pts[j])
                throw Error(ErrorKind::DegeneratePosition, "coincident points");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k)
                if (collinear3(pts[i], pts[j], pts[k]))
                    throw Error(ErrorKind::DegeneratePosition, "three collinear points");
}

Atom make_atom(const std::array<int, 4>& labels, const Framework& k4) {
    StressSpace s = self_stress_space(k4);
    if (s.dimension() != 1)
        throw Error(ErrorKind::DegeneratePosition, "K4 stress space dimension != 1");
    return Atom{labels, s.basis[0]};
}

} // namespace

Atom atom_stress(const std::array<Point, 4>& pts) {
    if (pts[0].size() != 2)
        throw Error(ErrorKind::UnsupportedDimension, "atom_stress takes planar points");
    require_general_position(pts);
    Framework k4 = make_framework(
        Graph::complete(4), Configuration(2, {pts[0], pts[1], pts[2], pts[3]}));
    return make_atom({1, 2, 3, 4}, k4);
}

Atom plane_atom_3d(const std::array<Point, 4>& pts) {
    if (pts[0].size() != 3)
        throw Error(ErrorKind::UnsupportedDimension, "plane_atom_3d takes 3D points");
    Point u = sub(pts[1], pts[0]), v = sub(pts[2], pts[0]), w = sub(pts[3], pts[0]);
    Rational vol = u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
                   u[2] * (v[0] * w[1] - v[1] * w[0]);
    if (!vol.is_zero())
        throw Error(ErrorKind::NonCoplanar, "points are not coplanar; stress space is trivial");
    require_general_position(pts);
    Framework k4 = make_framework(
        Graph::complete(4), Configuration(3, {pts[0], pts[1], pts[2], pts[3]}));
    return make_atom({1, 2, 3, 4}, k4);
}

std::vector<std::pair<Atom, Rational>>
atom_decomposition(const Framework& f, const StressAssignment& w) {
    const int n = f.vertex_count();
    if (f.dimension() != 2)
        throw Error(ErrorKind::UnsupportedDimension, "atom decomposition is planar");
    if (!(f.graph == Graph::complete(n)))
        throw Error(ErrorKind::Schema, "atom decomposition needs a complete graph");

    const auto edges = f.graph.edges();
    const int m = static_cast<int>(edges.size());

    // Atoms of all 4-subsets in lexicographic order; degenerate subsets skipped.
    std::vector<Atom> atoms;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d) {
                    std::array<Point, 4> pts = {f.configuration.at(a), f.configuration.at(b),
                                                f.configuration.at(c), f.configuration.at(d)};
                    try {
                        Atom local = atom_stress(pts);
                        RationalVec lifted(m, Rational(0));
                        std::array<int, 4> labels = {a, b, c, d};
                        for (int col = 0; col < m; ++col) {
                            auto pos = [&](int lbl) {
                                for (int i = 0; i < 4; ++i)
                                    if (labels[i] == lbl) return i + 1;
                                return 0;
                            };
                            int pa = pos(edges[col].a), pb = pos(edges[col].b);
                            if (pa && pb) lifted[col] = local.stress.weight(pa, pb);
                        }
                        atoms.push_back(Atom{labels, StressAssignment(f.graph, lifted)});
                    } catch (const Error& e) {
                        if (e.kind() != ErrorKind::DegeneratePosition) throw;
                    }
                }
    if (atoms.empty())
        throw Error(ErrorKind::DegenerateSubset, "no atoms available at this configuration");

    // Solve [A | w] by elimination; pivot columns are chosen left to right in
    // lexicographic atom order, free coefficients stay zero. That is the
    // greedy minimal-support choice.
    const int na = static_cast<int>(atoms.size());
    RationalMatrix sys(m, na + 1);
    for (int col = 0; col < na; ++col)
        for (int row = 0; row < m; ++row) sys.at(row, col) = atoms[col].stress.weights()[row];
    for (int row = 0; row < m; ++row) sys.at(row, na) = w.weights()[row];

    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < na && r < m; ++c) {
        int pr = -1;
        for (int i = r; i < m; ++i)
            if (!sys.at(i, c).is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        for (int j = 0; j <= na; ++j) std::swap(sys.at(r, j), sys.at(pr, j));
        Rational inv = Rational(1) / sys.at(r, c);
        for (int j = c; j <= na; ++j) sys.at(r, j) *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == r || sys.at(i, c).is_zero()) continue;
            Rational factor = sys.at(i, c);
            for (int j = c; j <= na; ++j) sys.at(i, j) -= factor * sys.at(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < m; ++i)
        if (!sys.at(i, na).is_zero())
            throw Error(ErrorKind::DegenerateSubset,
                        "stress is not in the span of the available atoms");

    std::vector<std::pair<Atom, Rational>> result;
    for (int i = 0; i < r; ++i) {
        Rational coeff = sys.at(i, na);
        if (!coeff.is_zero()) result.emplace_back(atoms[pivot_col[i]], coeff);
    }
    return result;
}

} // namespace stressforge
