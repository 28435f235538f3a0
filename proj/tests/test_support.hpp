#pragma once

#include <random>

#include "stressforge/matrix.hpp"
#include "stressforge/model.hpp"
#include "stressforge/projective.hpp"
#include "stressforge/signature.hpp"
#include "stressforge/surgery.hpp"

// Independent oracles for the test suite. These deliberately avoid the
// library's elimination and cell-enumeration code paths.
namespace oracle {

using stressforge::Point;
using stressforge::Rational;
using stressforge::RationalMatrix;
using stressforge::RationalVec;

/// Plain rational Gauss-Jordan rank (no Bareiss, no pivonting tricks).
inline int gauss_rank(RationalMatrix m) {
    int rank = 0;
    for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows(); ++r)
            if (!m.at(r, c).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (int cc = 0; cc < m.cols(); ++cc) std::swap(m.at(rank, cc), m.at(pivot, cc));
        for (int r = 0; r < m.rows(); ++r) {
            if (r == rank || m.at(r, c).is_zero()) continue;
            Rational f = m.at(r, c) / m.at(rank, c);
            for (int cc = 0; cc < m.cols(); ++cc) m.at(r, cc) -= f * m.at(rank, cc);
        }
        ++rank;
    }
    return rank;
}

/// Determinant by Laplace expansion along the first row.
inline Rational laplace_det(const std::vector<RationalVec>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 1) return m[0][0];
    Rational det;
    for (int c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<RationalVec> minor;
        for (int r = 1; r < n; ++r) {
            RationalVec row;
            for (int cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            minor.push_back(std::move(row));
        }
        Rational term = m[0][c] * laplace_det(minor);
        det += (c % 2 == 0) ? term : -term;
    }
    return det;
}

/// Brute-force covector oracle for k <= 2: sign vectors sampled on a
/// rational direction grid (all primitive vectors up to a bound, which by
/// the mediant argument hits every sector once the bound exceeds twice the
/// largest functional entry) plus every functional kernel line and zero.
inline std::set<std::string> covectors_k2_grid(const std::vector<RationalVec>& basis,
                                               long bound) {
    const std::size_t m = basis[0].size();
    const int k = static_cast<int>(basis.size());
    std::set<std::string> out;
    auto eval = [&](const Rational& c1, const Rational& c2) {
        std::string s;
        for (std::size_t e = 0; e < m; ++e) {
            Rational v = c1 * basis[0][e];
            if (k > 1) v += c2 * basis[1][e];
            int sg = v.sign();
            s.push_back(sg > 0 ? '+' : (sg < 0 ? '-' : '0'));
        }
        return s;
    };
    out.insert(eval(Rational(0), Rational(0)));
    if (k == 1) {
        out.insert(eval(Rational(1), Rational(0)));
        out.insert(eval(Rational(-1), Rational(0)));
        return out;
    }
    for (long a = -bound; a <= bound; ++a)
        for (long b = -bound; b <= bound; ++b) {
            if (a == 0 && b == 0) continue;
            out.insert(eval(Rational(a), Rational(b)));
        }
    // Kernel directions of each functional.
    for (std::size_t e = 0; e < m; ++e) {
        Rational fa = basis[0][e], fb = basis[1][e];
        if (fa.is_zero() && fb.is_zero()) continue;
        out.insert(eval(fb, -fa));
        out.insert(eval(-fb, fa));
    }
    return out;
}

inline long rand_int(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Rational rand_rational(std::mt19937_64& rng, long range = 10, long den = 4) {
    return Rational(rand_int(rng, -range, range), rand_int(rng, 1, den));
}

inline Point rand_point2(std::mt19937_64& rng, long range = 10, long den = 4) {
    return {rand_rational(rng, range, den), rand_rational(rng, range, den)};
}

/// Random planar configuration with no coincidences and no collinear
/// triples.
inline stressforge::Configuration generic_config2(std::mt19937_64& rng, int n) {
    using stressforge::collinear;
    for (;;) {
        std::vector<Point> pts;
        for (int i = 0; i < n; ++i) pts.push_back(rand_point2(rng));
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if (pts[i] == pts[j]) ok = false;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                for (int l = j + 1; l < n && ok; ++l)
                    if (collinear(pts[i], pts[j], pts[l])) ok = false;
        if (ok) return stressforge::Configuration(2, pts);
    }
}

/// Random invertible affine map applied to a configuration (planar).
inline stressforge::Configuration random_affine_image(std::mt19937_64& rng,
                                                      const stressforge::Configuration& cfg,
                                                      bool orientation_preserving = false) {
    for (;;) {
        Rational a = rand_rational(rng, 5, 3), b = rand_rational(rng, 5, 3);
        Rational c = rand_rational(rng, 5, 3), d = rand_rational(rng, 5, 3);
        Rational det = a * d - b * c;
        if (det.is_zero()) continue;
        if (orientation_preserving && det.sign() < 0) continue;
        Rational tx = rand_rational(rng, 8, 3), ty = rand_rational(rng, 8, 3);
        std::vector<Point> pts;
        for (const Point& p : cfg.points)
            pts.push_back({a * p[0] + b * p[1] + tx, c * p[0] + d * p[1] + ty});
        return stressforge::Configuration(2, pts);
    }
}

/// A 3D plane-surgery site: triangle v2 v3 v4 in the plane z = 0, an apex
/// v1 (in or off that plane), planes pi_k through v1 and v_k with a
/// vertical tilt, and the opposite octahedron triangle m2 m3 m4 placed on
/// the pairwise plane intersection lines.
struct OctaSite {
    stressforge::Framework framework;
    stressforge::SurgerySite site;
};

inline OctaSite make_octahedron(std::mt19937_64& rng, bool v1_in_plane) {
    using namespace stressforge;
    for (;;) {
        auto r3 = [&](long range) {
            return Rational(rand_int(rng, -range, range), rand_int(rng, 1, 3));
        };
        Point v2 = {r3(6), r3(6), Rational(0)};
        Point v3 = {r3(6), r3(6), Rational(0)};
        Point v4 = {r3(6), r3(6), Rational(0)};
        Point v1 = {r3(4), r3(4), v1_in_plane ? Rational(0) : Rational(1) + r3(2).abs()};
        // The four cone points must be in general position within z = 0 when
        // the apex is coplanar (the plane atom needs it).
        auto col2 = [](const Point& a, const Point& b, const Point& c) {
            return ((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])).is_zero();
        };
        if (col2(v2, v3, v4)) continue;
        if (v1_in_plane &&
            (col2(v1, v2, v3) || col2(v1, v2, v4) || col2(v1, v3, v4) || v1 == v2 ||
             v1 == v3 || v1 == v4))
            continue;
        if (v2 == v3 || v2 == v4 || v3 == v4) continue;
        std::array<Point, 3> tri = {v2, v3, v4};
        std::array<Point, 3> tilt;
        for (int k = 0; k < 3; ++k)
            tilt[k] = {tri[k][0] + r3(3), tri[k][1] + r3(3), Rational(1) + r3(2).abs()};
        auto plane_normal = [&](const Point& a, const Point& b, const Point& c) -> Point {
            Point u = sub(b, a), v = sub(c, a);
            return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                    u[0] * v[1] - u[1] * v[0]};
        };
        std::array<Point, 3> normals;
        for (int k = 0; k < 3; ++k) normals[k] = plane_normal(v1, tri[k], tilt[k]);
        auto cross = [](const Point& a, const Point& b) -> Point {
            return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                    a[0] * b[1] - a[1] * b[0]};
        };
        std::array<Point, 3> m;
        bool ok = true;
        for (int k = 0; k < 3; ++k) {
            Point d = cross(normals[(k + 1) % 3], normals[(k + 2) % 3]);
            if (d[0].is_zero() && d[1].is_zero() && d[2].is_zero()) {
                ok = false;
            } else {
                Rational s = Rational(k + 2) / Rational(2);
                m[k] = {v1[0] + s * d[0], v1[1] + s * d[1], v1[2] + s * d[2]};
            }
        }
        if (!ok) continue;

        Graph g(6);
        for (auto [a, b] : {std::pair{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6},
                            {1, 5}, {1, 6}, {2, 4}, {2, 6}, {3, 4}, {3, 5}})
            g.add_edge(a, b);
        try {
            Framework f = make_framework(g, Configuration(3, {v2, v3, v4, m[0], m[1], m[2]}));
            SurgerySite site;
            site.roles = {{"v2", 1}, {"v3", 2}, {"v4", 3},
                          {"e1", 5}, {"e2", 6}, {"e3", 4}, {"e4", 6}, {"e5", 4}, {"e6", 5}};
            return {std::move(f), std::move(site)};
        } catch (const stressforge::Error&) {
            continue;
        }
    }
}

} // namespace oracle
