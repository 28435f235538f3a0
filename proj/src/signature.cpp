#include "stressforge/signature.hpp"

#include <algorithm>

namespace stressforge {

namespace {

char sign_char(const Rational& v) {
    int s = v.sign();
    return s > 0 ? '+' : (s < 0 ? '-' : '0');
}

} // namespace

SignVector negated(const SignVector& s) {
    SignVector out = s;
    for (char& c : out) {
        if (c == '+') c = '-';
        else if (c == '-') c = '+';
    }
    return out;
}

namespace arrangement {

namespace {

std::string signs_at(const std::vector<AffineFunctional>& funcs, const Rational& x,
                     const Rational& y) {
    std::string s;
    s.reserve(funcs.size());
    for (const auto& f : funcs) s.push_back(sign_char(f[0] * x + f[1] * y + f[2]));
    return s;
}

std::vector<Rational> with_between(std::vector<Rational> vals) {
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    if (vals.empty()) return {Rational(0)};
    std::vector<Rational> out;
    out.push_back(vals.front() - Rational(1));
    for (std::size_t i = 0; i < vals.size(); ++i) {
        out.push_back(vals[i]);
        if (i + 1 < vals.size()) out.push_back((vals[i] + vals[i + 1]) / Rational(2));
    }
    out.push_back(vals.back() + Rational(1));
    return out;
}

} // namespace

std::map<std::string, Point> affine_sign_cells(const std::vector<AffineFunctional>& funcs) {
    // Distinct lines among the nonconstant functionals, canonicalized.
    std::set<std::array<Rational, 3>> lines;
    for (const auto& f : funcs) {
        if (f[0].is_zero() && f[1].is_zero()) continue;
        std::array<Rational, 3> l = f;
        const Rational lead = !l[0].is_zero() ? l[0] : l[1];
        for (auto& v : l) v /= lead;
        lines.insert(l);
    }

    // Sweep abscissas: vertical-line positions and pairwise intersections.
    std::vector<Rational> xs;
    std::vector<std::array<Rational, 3>> ls(lines.begin(), lines.end());
    for (const auto& l : ls)
        if (l[1].is_zero()) xs.push_back(-l[2] / l[0]);
    for (std::size_t i = 0; i < ls.size(); ++i) {
        for (std::size_t j = i + 1; j < ls.size(); ++j) {
            Rational d = ls[i][0] * ls[j][1] - ls[j][0] * ls[i][1];
            if (d.is_zero()) continue;
            xs.push_back((ls[i][1] * ls[j][2] - ls[j][1] * ls[i][2]) / d);
        }
    }

    std::map<std::string, Point> cells;
    for (const Rational& x0 : with_between(std::move(xs))) {
        std::vector<Rational> roots;
        for (const auto& f : funcs) {
            if (f[1].is_zero()) continue;
            roots.push_back(-(f[0] * x0 + f[2]) / f[1]);
        }
        for (const Rational& y0 : with_between(std::move(roots))) {
            std::string s = signs_at(funcs, x0, y0);
            cells.emplace(std::move(s), Point{x0, y0});
        }
    }
    return cells;
}

namespace {

using Dir = std::array<mpz_class, 2>;

Dir primitive_dir(const Rational& dx, const Rational& dy) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), dx.den().get_mpz_t(), dy.den().get_mpz_t());
    mpz_class a = dx.num() * (l / dx.den());
    mpz_class b = dy.num() * (l / dy.den());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (g != 0) {
        a /= g;
        b /= g;
    }
    return {a, b};
}

int half_plane(const Dir& d) {
    if (sgn(d[1]) > 0 || (sgn(d[1]) == 0 && sgn(d[0]) > 0)) return 0;
    return 1;
}

mpz_class cross(const Dir& u, const Dir& v) { return u[0] * v[1] - u[1] * v[0]; }

bool angle_less(const Dir& u, const Dir& v) {
    int hu = half_plane(u), hv = half_plane(v);
    if (hu != hv) return hu < hv;
    return sgn(cross(u, v)) > 0;
}

} // namespace

std::set<std::string> central_plane_signs(const std::vector<std::array<Rational, 2>>& funcs) {
    std::set<std::string> out;
    auto eval = [&](const Dir& d) {
        std::string s;
        s.reserve(funcs.size());
        for (const auto& f : funcs)
            s.push_back(sign_char(f[0] * Rational(d[0]) + f[1] * Rational(d[1])));
        return s;
    };

    out.insert(std::string(funcs.size(), '0')); // origin

    std::vector<Dir> rays;
    for (const auto& f : funcs) {
        if (f[0].is_zero() && f[1].is_zero()) continue;
        Dir d = primitive_dir(f[1], -f[0]);
        rays.push_back(d);
        rays.push_back({-d[0], -d[1]});
    }
    if (rays.empty()) return out;
    std::sort(rays.begin(), rays.end(), angle_less);
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());

    const std::size_t k = rays.size();
    for (std::size_t i = 0; i < k; ++i) {
        out.insert(eval(rays[i]));
        const Dir& u = rays[i];
        const Dir& v = rays[(i + 1) % k];
        Dir mid;
        if (sgn(cross(u, v)) != 0) {
            mid = {u[0] + v[0], u[1] + v[1]};
        } else {
            // Opposite rays: the sector is an open half plane.
            mid = {-u[1], u[0]};
        }
        out.insert(eval(mid));
    }
    return out;
}

} // namespace arrangement

namespace {

bool all_edges_coincident(const Framework& f) {
    for (const Edge& e : f.graph.edges())
        if (!(f.configuration.at(e.a) == f.configuration.at(e.b))) return false;
    return true;
}

void full_cube(std::set<SignVector>& out, std::string& cur, std::size_t i) {
    if (i == cur.size()) {
        out.insert(cur);
        return;
    }
    for (char c : {'-', '0', '+'}) {
        cur[i] = c;
        full_cube(out, cur, i + 1);
    }
}

} // namespace

std::set<SignVector> covectors(const StressSpace& space) {
    const int k = space.dimension();
    const std::size_t m = space.framework.graph.edges().size();
    std::set<SignVector> out;

    if (k > 3) {
        if (all_edges_coincident(space.framework) && m <= 12) {
            std::string cur(m, '0');
            full_cube(out, cur, 0);
            return out;
        }
        throw Error(ErrorKind::UnsupportedDimension,
                    "covector enumeration supports k <= 3 (or coincident components)");
    }

    out.insert(SignVector(m, '0'));
    if (k == 0) return out;

    if (k == 1) {
        SignVector s;
        s.reserve(m);
        for (const Rational& w : space.basis[0].weights()) s.push_back(sign_char(w));
        out.insert(s);
        out.insert(negated(s));
        return out;
    }

    if (k == 2) {
        std::vector<std::array<Rational, 2>> funcs(m);
        for (std::size_t e = 0; e < m; ++e)
            funcs[e] = {space.basis[0].weights()[e], space.basis[1].weights()[e]};
        auto signs = arrangement::central_plane_signs(funcs);
        out.insert(signs.begin(), signs.end());
        return out;
    }

    // k == 3: split coefficient space into the affine chart z = 1, its
    // antipode, and the central plane z = 0.
    std::vector<arrangement::AffineFunctional> chart(m);
    std::vector<std::array<Rational, 2>> plane(m);
    for (std::size_t e = 0; e < m; ++e) {
        chart[e] = {space.basis[0].weights()[e], space.basis[1].weights()[e],
                    space.basis[2].weights()[e]};
        plane[e] = {space.basis[0].weights()[e], space.basis[1].weights()[e]};
    }
    for (const auto& [s, sample] : arrangement::affine_sign_cells(chart)) {
        out.insert(s);
        out.insert(negated(s));
    }
    auto central = arrangement::central_plane_signs(plane);
    out.insert(central.begin(), central.end());
    return out;
}

FiberSignature fiber_signature(const Framework& f) {
    StressSpace space = self_stress_space(f);
    FiberSignature sig;
    sig.edges = f.graph.edges();
    sig.dimension = space.dimension();
    sig.covectors = covectors(space);
    for (std::size_t e = 0; e < sig.edges.size(); ++e) {
        bool all_zero = true;
        for (const StressAssignment& b : space.basis)
            if (!b.weights()[e].is_zero()) {
                all_zero = false;
                break;
            }
        if (all_zero) sig.zero_edges.push_back(sig.edges[e]);
    }
    return sig;
}

bool fibers_equivalent(const FiberSignature& a, const FiberSignature& b) {
    if (a.edges != b.edges)
        throw Error(ErrorKind::GraphMismatch, "signatures over different graphs");
    return a.dimension == b.dimension && a.covectors == b.covectors;
}

} // namespace stressforge
