#include "stressforge/surgery.hpp"

#include "stressforge/projective.hpp"

namespace stressforge {

namespace {

bool stress_nonzero_on_edge(const StressSpace& s, const Edge& e) {
    for (const StressAssignment& b : s.basis)
        if (!b.weight(e.a, e.b).is_zero()) return true;
    return false;
}

bool non_collinear(const ProjectivePoint& a, const ProjectivePoint& b,
                   const ProjectivePoint& c) {
    return !collinear(a, b, c);
}

} // namespace

SurgeryVerdict edge_exchange_check(const Graph& g, const Graph& h, const Edge& e1,
                                   const Edge& e2, const Configuration& p) {
    SurgeryVerdict v;
    if (!h.has_edge(e1.a, e1.b) || !h.has_edge(e2.a, e2.b))
        throw Error(ErrorKind::SiteMismatch, "e1 and e2 must be edges of H");
    for (const Edge& e : h.edges())
        if (!g.has_edge(e.a, e.b))
            throw Error(ErrorKind::SiteMismatch, "H must be a subgraph of G");

    StressSpace hs = self_stress_space(make_framework(h, p));
    v.check("dim W(H,P) = 1", hs.dimension() == 1);
    if (hs.dimension() == 1) {
        v.check("stress nonzero on e1", !hs.basis[0].weight(e1.a, e1.b).is_zero());
        v.check("stress nonzero on e2", !hs.basis[0].weight(e2.a, e2.b).is_zero());
    }
    v.dim_before = stress_space_dimension(make_framework(g.without_edge(e1), p));
    v.dim_after = stress_space_dimension(make_framework(g.without_edge(e2), p));
    return v;
}

std::pair<Framework, SurgeryVerdict> two_sum(const Framework& f1, const Edge& edge1,
                                             const Framework& f2, const Edge& edge2) {
    if (f1.dimension() != 2 || f2.dimension() != 2)
        throw Error(ErrorKind::UnsupportedDimension, "the 2-sum is planar");
    if (!f1.graph.has_edge(edge1.a, edge1.b) || !f2.graph.has_edge(edge2.a, edge2.b))
        throw Error(ErrorKind::SiteMismatch, "identified edges must exist");

    SurgeryVerdict v;
    StressSpace s1 = self_stress_space(f1);
    StressSpace s2 = self_stress_space(f2);
    if (!stress_nonzero_on_edge(s1, edge1))
        throw Error(ErrorKind::ZeroStressOnEdge, "f1 has no stress nonzero on edge1");
    if (!stress_nonzero_on_edge(s2, edge2))
        throw Error(ErrorKind::ZeroStressOnEdge, "f2 has no stress nonzero on edge2");
    v.check("stress nonzero on identified edge (f1)", true);
    v.check("stress nonzero on identified edge (f2)", true);

    // Orientation-preserving similarity z -> a*z + b (complex form) mapping
    // the segment p2 q2 onto p1 q1.
    const Point& p1 = f1.configuration.at(edge1.a);
    const Point& q1 = f1.configuration.at(edge1.b);
    const Point& p2 = f2.configuration.at(edge2.a);
    const Point& q2 = f2.configuration.at(edge2.b);
    const Rational dx1 = q1[0] - p1[0], dy1 = q1[1] - p1[1];
    const Rational dx2 = q2[0] - p2[0], dy2 = q2[1] - p2[1];
    const Rational denom = dx2 * dx2 + dy2 * dy2;
    if (denom.is_zero())
        throw Error(ErrorKind::DegeneratePosition, "identified edge of f2 has zero length");
    const Rational ar = (dx1 * dx2 + dy1 * dy2) / denom;
    const Rational ai = (dy1 * dx2 - dx1 * dy2) / denom;
    auto map2 = [&](const Point& z) -> Point {
        Rational zx = z[0] - p2[0], zy = z[1] - p2[1];
        return {ar * zx - ai * zy + p1[0], ai * zx + ar * zy + p1[1]};
    };

    // Relabel f2: edge endpoints onto edge1's endpoints, the rest appended
    // in label order after f1's vertices.
    const int n1 = f1.vertex_count();
    std::map<int, int> relabel{{edge2.a, edge1.a}, {edge2.b, edge1.b}};
    int next = n1;
    for (int i = 1; i <= f2.vertex_count(); ++i)
        if (!relabel.count(i)) relabel[i] = ++next;

    Graph g(next);
    std::vector<Point> pts(next);
    for (int i = 1; i <= n1; ++i) pts[i - 1] = f1.configuration.at(i);
    for (int i = 1; i <= f2.vertex_count(); ++i) pts[relabel[i] - 1] = map2(f2.configuration.at(i));
    for (const Edge& e : f1.graph.edges())
        if (!(e == edge1)) g.add_edge(e.a, e.b);
    for (const Edge& e : f2.graph.edges())
        if (!(e == edge2)) g.add_edge(relabel[e.a], relabel[e.b]);

    Framework sum = make_framework(g, Configuration(2, pts));
    v.dim_before = s1.dimension() + s2.dimension() - 1;
    v.dim_after = stress_space_dimension(sum);
    v.check("dim W(G1+G2) = dim W(G1) + dim W(G2) - 1", v.dim_before == v.dim_after);
    return {sum, v};
}

std::pair<Framework, SurgeryVerdict> surgery1_apply(const Framework& f, const SurgerySite& site) {
    if (f.dimension() != 2)
        throw Error(ErrorKind::UnsupportedDimension, "Surgery I is planar");
    const int a = site.at("a"), b = site.at("b");
    const int x = site.at("x"), y = site.at("y"), w = site.at("w");
    for (auto [e1, e2] : {std::pair{a, x}, {b, y}, {a, w}, {b, w}, {a, b}})
        if (!f.graph.has_edge(e1, e2))
            throw Error(ErrorKind::SiteMismatch, "Surgery I pattern edge missing");
    if (f.graph.degree(a) != 3 || f.graph.degree(b) != 3)
        throw Error(ErrorKind::SiteMismatch, "contracted vertices must have degree 3");

    const ProjectivePoint pa = to_projective(f.configuration.at(a));
    const ProjectivePoint pb = to_projective(f.configuration.at(b));
    const ProjectivePoint px = to_projective(f.configuration.at(x));
    const ProjectivePoint py = to_projective(f.configuration.at(y));
    const ProjectivePoint pw = to_projective(f.configuration.at(w));
    if (pa == px || pb == py)
        throw Error(ErrorKind::UndefinedIntersection, "construction line undefined");
    ProjectiveLine la = line_through(px, pa);
    ProjectiveLine lb = line_through(py, pb);
    if (la == lb)
        throw Error(ErrorKind::UndefinedIntersection, "construction lines coincide");
    ProjectivePoint p = intersection(la, lb);
    if (p.at_infinity())
        throw Error(ErrorKind::UndefinedIntersection, "new vertex would be at infinity");
    // The crossed intersection q = line(x,b) ^ line(y,a) enters only the
    // non-collinearity preconditions and may be at infinity.
    if (px == pb || py == pa)
        throw Error(ErrorKind::UndefinedIntersection, "crossed construction line undefined");
    ProjectiveLine lxb = line_through(px, pb);
    ProjectiveLine lya = line_through(py, pa);
    if (lxb == lya)
        throw Error(ErrorKind::UndefinedIntersection, "crossed construction lines coincide");
    ProjectivePoint q = intersection(lxb, lya);

    SurgeryVerdict v;
    v.check("(p,x,y) not collinear", non_collinear(p, px, py));
    v.check("(q,x,y) not collinear", non_collinear(q, px, py));
    v.check("(p,x,w) not collinear", non_collinear(p, px, pw));
    v.check("(q,y,w) not collinear", non_collinear(q, py, pw));
    v.check("(x,y,w) not collinear", non_collinear(px, py, pw));
    if (!v.preconditions_ok)
        throw Error(ErrorKind::CollinearityPrecondition,
                    "Surgery I non-collinearity precondition failed");

    // Rewrite: remove a and b, append p; a-x becomes p-x, b-y becomes p-y,
    // the shared neighbor w attaches to p.
    const int n = f.vertex_count();
    std::map<int, int> relabel;
    int next = 0;
    for (int i = 1; i <= n; ++i)
        if (i != a && i != b) relabel[i] = ++next;
    const int p_label = ++next;

    Graph g(next);
    std::vector<Point> pts(next);
    for (int i = 1; i <= n; ++i)
        if (i != a && i != b) pts[relabel[i] - 1] = f.configuration.at(i);
    pts[p_label - 1] = p.affine();
    for (const Edge& e : f.graph.edges()) {
        const bool ha = e.contains(a), hb = e.contains(b);
        if (ha && hb) continue; // the contracted edge
        if (!ha && !hb) {
            g.add_edge(relabel[e.a], relabel[e.b]);
        } else {
            const int other = ha ? e.other(a) : e.other(b);
            g.add_edge(relabel[other], p_label);
        }
    }
    Framework out = make_framework(g, Configuration(2, pts));
    v.dim_before = stress_space_dimension(f);
    v.dim_after = stress_space_dimension(out);
    return {out, v};
}

SurgeryVerdict surgery2_verify(const Framework& f1, const Framework& f2,
                               const SurgerySite& site) {
    if (f1.dimension() != 2 || f2.dimension() != 2)
        throw Error(ErrorKind::UnsupportedDimension, "Surgery II is planar");
    auto pt1 = [&](const std::string& role) {
        int lbl = site.at(role);
        if (lbl < 1 || lbl > f1.vertex_count())
            throw Error(ErrorKind::SiteMismatch, "role " + role + " outside f1");
        return to_projective(f1.configuration.at(lbl));
    };
    auto pt2 = [&](const std::string& role) {
        int lbl = site.at(role);
        if (lbl < 1 || lbl > f2.vertex_count())
            throw Error(ErrorKind::SiteMismatch, "role " + role + " outside f2");
        return to_projective(f2.configuration.at(lbl));
    };
    // p, q live in the before framework; r, s in the after framework; the
    // shared vertices v1, v4 must agree in both configurations.
    const ProjectivePoint p = pt1("p"), q = pt1("q");
    const ProjectivePoint r = pt2("r"), s = pt2("s");
    const ProjectivePoint v1a = pt1("v1"), v4a = pt1("v4");
    const ProjectivePoint v1b = pt2("v1"), v4b = pt2("v4");
    if (!(v1a == v1b) || !(v4a == v4b))
        throw Error(ErrorKind::SiteMismatch, "v1/v4 positions differ between the frameworks");

    SurgeryVerdict v;
    v.check("(p,q,v1) not collinear", non_collinear(p, q, v1a));
    v.check("(p,v1,v4) not collinear", non_collinear(p, v1a, v4a));
    v.check("(r,v1,v4) not collinear", non_collinear(r, v1b, v4b));
    v.check("(q,v1,v4) not collinear", non_collinear(q, v1a, v4a));
    v.check("(s,v1,v4) not collinear", non_collinear(s, v1b, v4b));
    v.check("(r,s,v4) not collinear", non_collinear(r, s, v4b));
    v.dim_before = stress_space_dimension(f1);
    v.dim_after = stress_space_dimension(f2);
    return v;
}

namespace {

struct Plane {
    // a x + b y + c z + d = 0
    Rational a, b, c, d;

    bool valid() const { return !(a.is_zero() && b.is_zero() && c.is_zero()); }
    Rational eval(const Point& p) const { return a * p[0] + b * p[1] + c * p[2] + d; }

    static Plane through(const Point& p, const Point& q, const Point& r) {
        Point u = sub(q, p), v = sub(r, p);
        Rational nx = u[1] * v[2] - u[2] * v[1];
        Rational ny = u[2] * v[0] - u[0] * v[2];
        Rational nz = u[0] * v[1] - u[1] * v[0];
        return Plane{nx, ny, nz, -(nx * p[0] + ny * p[1] + nz * p[2])};
    }

    bool same_as(const Plane& o) const {
        // Proportional coefficient rows.
        std::array<Rational, 4> x = {a, b, c, d}, y = {o.a, o.b, o.c, o.d};
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (!(x[i] * y[j] - x[j] * y[i]).is_zero()) return false;
        return true;
    }
};

} // namespace

std::pair<Framework, SurgeryVerdict> surgery3d_verify(const Framework& f1,
                                                      const SurgerySite& site) {
    if (f1.dimension() != 3)
        throw Error(ErrorKind::UnsupportedDimension, "the plane surgery is 3D");
    const int v2 = site.at("v2"), v3 = site.at("v3"), v4 = site.at("v4");
    const std::array<std::array<int, 3>, 3> spokes = {{
        {v2, site.at("e1"), site.at("e2")},
        {v3, site.at("e3"), site.at("e4")},
        {v4, site.at("e5"), site.at("e6")},
    }};
    for (auto [i, j] : {std::pair{v2, v3}, {v2, v4}, {v3, v4}})
        if (!f1.graph.has_edge(i, j))
            throw Error(ErrorKind::SiteMismatch, "triangle edge missing");
    for (const auto& [apex, o1, o2] : spokes)
        if (!f1.graph.has_edge(apex, o1) || !f1.graph.has_edge(apex, o2))
            throw Error(ErrorKind::SiteMismatch, "external edge missing");

    const Plane pi1 =
        Plane::through(f1.configuration.at(v2), f1.configuration.at(v3), f1.configuration.at(v4));
    if (!pi1.valid())
        throw Error(ErrorKind::DegeneratePlane, "triangle v2 v3 v4 is degenerate");

    std::array<Plane, 3> planes;
    for (int k = 0; k < 3; ++k) {
        const auto& [apex, o1, o2] = spokes[k];
        planes[k] = Plane::through(f1.configuration.at(apex), f1.configuration.at(o1),
                                   f1.configuration.at(o2));
        if (!planes[k].valid())
            throw Error(ErrorKind::DegeneratePlane,
                        "external edges at v" + std::to_string(apex) + " span no plane");
        if (planes[k].same_as(pi1))
            throw Error(ErrorKind::DegeneratePlane, "external plane coincides with pi1");
    }

    // v1 = pi2 ^ pi3 ^ pi4, required to be a single point.
    RationalMatrix lhs(3, 3);
    RationalVec rhs(3);
    for (int k = 0; k < 3; ++k) {
        lhs.at(k, 0) = planes[k].a;
        lhs.at(k, 1) = planes[k].b;
        lhs.at(k, 2) = planes[k].c;
        rhs[k] = -planes[k].d;
    }
    Rational det = lhs.at(0, 0) * (lhs.at(1, 1) * lhs.at(2, 2) - lhs.at(1, 2) * lhs.at(2, 1)) -
                   lhs.at(0, 1) * (lhs.at(1, 0) * lhs.at(2, 2) - lhs.at(1, 2) * lhs.at(2, 0)) +
                   lhs.at(0, 2) * (lhs.at(1, 0) * lhs.at(2, 1) - lhs.at(1, 1) * lhs.at(2, 0));
    if (det.is_zero())
        throw Error(ErrorKind::NonPointIntersection,
                    "the three external planes do not meet in a single point");
    // Cramer solve.
    auto det3x3 = [](const std::array<RationalVec, 3>& col) {
        return col[0][0] * (col[1][1] * col[2][2] - col[1][2] * col[2][1]) -
               col[1][0] * (col[0][1] * col[2][2] - col[0][2] * col[2][1]) +
               col[2][0] * (col[0][1] * col[1][2] - col[0][2] * col[1][1]);
    };
    std::array<RationalVec, 3> cols;
    for (int c = 0; c < 3; ++c) cols[c] = {lhs.at(0, c), lhs.at(1, c), lhs.at(2, c)};
    Point v1_pos(3);
    for (int c = 0; c < 3; ++c) {
        auto t = cols;
        t[c] = rhs;
        v1_pos[c] = det3x3(t) / det;
    }

    SurgeryVerdict v;
    v.check("v1 lies in the triangle plane pi1", pi1.eval(v1_pos).is_zero());

    // After framework: remove the triangle edges, add v1 joined to v2,v3,v4.
    const int n = f1.vertex_count();
    Graph g(n + 1);
    for (const Edge& e : f1.graph.edges()) {
        const bool tri = (e == Edge(v2, v3)) || (e == Edge(v2, v4)) || (e == Edge(v3, v4));
        if (!tri) g.add_edge(e.a, e.b);
    }
    const int v1_label = n + 1;
    for (int t : {v2, v3, v4}) g.add_edge(v1_label, t);
    std::vector<Point> pts = f1.configuration.points;
    pts.push_back(v1_pos);
    Framework out = make_framework(g, Configuration(3, pts));

    v.dim_before = stress_space_dimension(f1);
    v.dim_after = stress_space_dimension(out);
    return {out, v};
}

} // namespace stressforge
