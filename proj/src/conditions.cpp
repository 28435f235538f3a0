#include "stressforge/conditions.hpp"

#include <algorithm>

namespace stressforge {

UniversalSet universal_set(const Configuration& p, int m, int cap) {
    if (p.dimension != 2)
        throw Error(ErrorKind::UnsupportedDimension, "universal sets are planar");
    if (m > cap)
        throw Error(ErrorKind::CapExceeded,
                    "universal set level " + std::to_string(m) + " exceeds cap " +
                        std::to_string(cap));
    UniversalSet u;
    u.level = m;
    for (const Point& pt : p.points) {
        ProjectivePoint q = to_projective(pt);
        if (!u.contains(q)) u.points.emplace_back(q);
    }
    for (int round = 0; round < m; ++round) {
        const int sz = u.size();
        std::vector<UniversalSet::Entry> added;
        for (int i = 0; i < sz; ++i)
            for (int j = i + 1; j < sz; ++j) {
                if (u.points[i].point == u.points[j].point) continue;
                for (int k = i; k < sz; ++k)
                    for (int l = k + 1; l < sz; ++l) {
                        if (k == i && l <= j) continue;
                        if (k == i || k == j || l == i || l == j) continue;
                        if (u.points[k].point == u.points[l].point) continue;
                        ProjectiveLine l1 = line_through(u.points[i].point, u.points[j].point);
                        ProjectiveLine l2 = line_through(u.points[k].point, u.points[l].point);
                        if (l1 == l2) continue;
                        ProjectivePoint x = intersection(l1, l2);
                        bool known = u.contains(x);
                        for (const auto& e : added)
                            if (e.point == x) known = true;
                        if (!known) added.emplace_back(x, std::array<int, 4>{i, j, k, l});
                    }
            }
        for (auto& e : added) u.points.push_back(std::move(e));
    }
    return u;
}

const char* condition_name(ConditionKind k) {
    switch (k) {
    case ConditionKind::Collinear3: return "collinear3";
    case ConditionKind::Concurrent3Lines: return "concurrent3";
    case ConditionKind::Conic6: return "conic6";
    case ConditionKind::K7ConstructedConcurrency: return "k7-concurrency";
    case ConditionKind::K7ConstructedConic: return "k7-conic";
    }
    return "unknown";
}

std::optional<ConditionKind> condition_by_name(const std::string& name) {
    for (ConditionKind k : {ConditionKind::Collinear3, ConditionKind::Concurrent3Lines,
                            ConditionKind::Conic6, ConditionKind::K7ConstructedConcurrency,
                            ConditionKind::K7ConstructedConic}) {
        if (name == condition_name(k)) return k;
    }
    return std::nullopt;
}

int condition_arity(ConditionKind k) {
    switch (k) {
    case ConditionKind::Collinear3: return 3;
    case ConditionKind::Concurrent3Lines: return 6;
    case ConditionKind::Conic6: return 6;
    case ConditionKind::K7ConstructedConcurrency: return 7;
    case ConditionKind::K7ConstructedConic: return 7;
    }
    return 0;
}

ConditionId ConditionId::standard(ConditionKind k) {
    ConditionId id;
    id.kind = k;
    for (int i = 1; i <= condition_arity(k); ++i) id.roles["v" + std::to_string(i)] = i;
    return id;
}

namespace {

std::vector<int> resolve_roles(const ConditionId& id, const Configuration& p) {
    const int arity = condition_arity(id.kind);
    std::vector<int> labels(arity);
    std::set<int> seen;
    for (int i = 1; i <= arity; ++i) {
        auto it = id.roles.find("v" + std::to_string(i));
        if (it == id.roles.end())
            throw Error(ErrorKind::Schema, "missing role v" + std::to_string(i));
        int lbl = it->second;
        if (lbl < 1 || lbl > p.size())
            throw Error(ErrorKind::Schema, "role label out of range");
        if (!seen.insert(lbl).second)
            throw Error(ErrorKind::Schema, "role bindings must be injective");
        labels[i - 1] = lbl;
    }
    return labels;
}

ProjectiveLine vertex_line(const Configuration& p, int a, int b) {
    ProjectivePoint pa = to_projective(p.at(a)), pb = to_projective(p.at(b));
    if (pa == pb)
        throw Error(ErrorKind::DegenerateConstruction,
                    "line through coincident vertices v" + std::to_string(a) + ", v" +
                        std::to_string(b));
    return line_through(pa, pb);
}

bool conic_through(const std::array<ProjectivePoint, 6>& pts) { return on_conic(pts); }

} // namespace

ConditionResult check_condition(const ConditionId& id, const Configuration& p) {
    if (p.dimension != 2)
        throw Error(ErrorKind::UnsupportedDimension, "conditions are planar");
    std::vector<int> v = resolve_roles(id, p);
    ConditionResult res;
    switch (id.kind) {
    case ConditionKind::Collinear3: {
        res.holds = collinear(p.at(v[0]), p.at(v[1]), p.at(v[2]));
        return res;
    }
    case ConditionKind::Concurrent3Lines: {
        ProjectiveLine l1 = vertex_line(p, v[0], v[1]);
        ProjectiveLine l2 = vertex_line(p, v[2], v[3]);
        ProjectiveLine l3 = vertex_line(p, v[4], v[5]);
        try {
            res.holds = concurrent(l1, l2, l3);
        } catch (const Error& e) {
            throw Error(ErrorKind::DegenerateConstruction, e.what());
        }
        return res;
    }
    case ConditionKind::Conic6: {
        std::array<ProjectivePoint, 6> pts = {
            to_projective(p.at(v[0])), to_projective(p.at(v[1])), to_projective(p.at(v[2])),
            to_projective(p.at(v[3])), to_projective(p.at(v[4])), to_projective(p.at(v[5]))};
        res.holds = conic_through(pts);
        return res;
    }
    case ConditionKind::K7ConstructedConcurrency: {
        ProjectiveLine c1 = vertex_line(p, v[1], v[5]); // v2 v6
        ProjectiveLine c2 = vertex_line(p, v[2], v[6]); // v3 v7
        if (c1 == c2)
            throw Error(ErrorKind::DegenerateConstruction, "construction lines coincide");
        ProjectivePoint pt = intersection(c1, c2);
        res.constructed.emplace_back("p", pt);
        ProjectiveLine l1 = vertex_line(p, v[0], v[1]); // v1 v2
        ProjectiveLine l2 = vertex_line(p, v[2], v[3]); // v3 v4
        ProjectivePoint v5 = to_projective(p.at(v[4]));
        if (v5 == pt)
            throw Error(ErrorKind::DegenerateConstruction, "constructed point equals v5");
        ProjectiveLine l3 = line_through(v5, pt);
        try {
            res.holds = concurrent(l1, l2, l3);
        } catch (const Error& e) {
            throw Error(ErrorKind::DegenerateConstruction, e.what());
        }
        return res;
    }
    case ConditionKind::K7ConstructedConic: {
        ProjectiveLine c1 = vertex_line(p, v[0], v[5]); // v1 v6
        ProjectiveLine c2 = vertex_line(p, v[2], v[6]); // v3 v7
        if (c1 == c2)
            throw Error(ErrorKind::DegenerateConstruction, "construction lines coincide");
        ProjectivePoint pt = intersection(c1, c2);
        res.constructed.emplace_back("p", pt);
        std::array<ProjectivePoint, 6> pts = {
            to_projective(p.at(v[0])), to_projective(p.at(v[1])), to_projective(p.at(v[2])),
            to_projective(p.at(v[3])), to_projective(p.at(v[4])), pt};
        res.holds = conic_through(pts);
        return res;
    }
    }
    throw Error(ErrorKind::Schema, "unknown condition");
}

namespace {

std::array<int, 6> canonical_hexagon(const std::array<int, 6>& perm) {
    std::array<int, 6> best = perm;
    for (int refl = 0; refl < 2; ++refl) {
        std::array<int, 6> base = perm;
        if (refl) std::reverse(base.begin(), base.end());
        for (int rot = 0; rot < 6; ++rot) {
            std::array<int, 6> img;
            for (int i = 0; i < 6; ++i) img[i] = base[(i + rot) % 6];
            if (img < best) best = img;
        }
    }
    return best;
}

} // namespace

std::vector<PascalInstance> pascal_witnesses(const std::array<Point, 6>& pts) {
    std::set<std::array<int, 6>> schemes;
    std::array<int, 6> perm = {1, 2, 3, 4, 5, 6};
    std::sort(perm.begin(), perm.end());
    do {
        schemes.insert(canonical_hexagon(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<PascalInstance> out;
    out.reserve(schemes.size());
    for (const auto& s : schemes) {
        PascalInstance inst;
        inst.permutation = s;
        auto at = [&](int role) { return to_projective(pts[s[role] - 1]); };
        try {
            auto side = [&](int i, int j) {
                ProjectivePoint a = at(i), b = at(j);
                if (a == b)
                    throw Error(ErrorKind::DegenerateConstruction, "hexagon side undefined");
                return line_through(a, b);
            };
            ProjectiveLine s12 = side(0, 1), s45 = side(3, 4);
            ProjectiveLine s23 = side(1, 2), s56 = side(4, 5);
            ProjectiveLine s34 = side(2, 3), s61 = side(5, 0);
            if (s12 == s45 || s23 == s56 || s34 == s61)
                throw Error(ErrorKind::DegenerateConstruction, "opposite sides coincide");
            std::array<ProjectivePoint, 3> triple = {
                intersection(s12, s45), intersection(s23, s56), intersection(s34, s61)};
            inst.collinear = collinear(triple[0], triple[1], triple[2]);
            inst.triple = triple;
        } catch (const Error& e) {
            inst.degeneracy = e.what();
        }
        out.push_back(std::move(inst));
    }
    return out;
}

namespace {

long rand_int(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational rand_rational(std::mt19937_64& rng, int range, int den) {
    return Rational(rand_int(rng, -range, range), rand_int(rng, 1, den));
}

/// Parameter for placing a point on a segment line, away from 0 and 1.
Rational rand_parameter(std::mt19937_64& rng) {
    for (;;) {
        Rational t(rand_int(rng, -8, 8), rand_int(rng, 1, 5));
        if (!t.is_zero() && t != Rational(1)) return t;
    }
}

Point along(const Point& a, const Point& b, const Rational& t) {
    return {a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])};
}

bool generic_apart_from(const Configuration& p, const std::set<std::array<int, 3>>& allowed) {
    const int n = p.size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (p.at(i) == p.at(j)) return false;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                if (allowed.count({i, j, k})) continue;
                if (collinear(p.at(i), p.at(j), p.at(k))) return false;
            }
    return true;
}

std::set<std::array<int, 3>> allowed_collinear(const ConditionId& id) {
    std::set<std::array<int, 3>> allowed;
    if (id.kind == ConditionKind::Collinear3) {
        std::array<int, 3> t = {id.roles.at("v1"), id.roles.at("v2"), id.roles.at("v3")};
        std::sort(t.begin(), t.end());
        allowed.insert(t);
    }
    return allowed;
}

Point circle_point(const Rational& t) {
    // Rational parameterization of the unit circle.
    Rational t2 = t * t;
    Rational den = t2 + Rational(1);
    return {(Rational(1) - t2) / den, Rational(2) * t / den};
}

} // namespace

Point random_rational_point(std::mt19937_64& rng, int dim, int range, int den) {
    Point p(dim);
    for (int i = 0; i < dim; ++i) p[i] = rand_rational(rng, range, den);
    return p;
}

Configuration on_condition_sample(const ConditionId& id, int n, std::uint64_t seed) {
    if (n < condition_arity(id.kind))
        throw Error(ErrorKind::Schema, "sample size below condition arity");
    auto allowed = allowed_collinear(id);
    for (std::uint64_t attempt = 0;; ++attempt) {
        std::mt19937_64 rng(seed + attempt * 0x9e3779b9ULL);
        std::vector<Point> pts(n);
        for (int i = 0; i < n; ++i) pts[i] = random_rational_point(rng, 2);
        auto role = [&](const char* r) -> Point& { return pts[id.roles.at(r) - 1]; };
        try {
            switch (id.kind) {
            case ConditionKind::Collinear3:
                role("v3") = along(role("v1"), role("v2"), rand_parameter(rng));
                break;
            case ConditionKind::Concurrent3Lines: {
                ProjectiveLine l1 = line_through(to_projective(role("v1")), to_projective(role("v2")));
                ProjectiveLine l2 = line_through(to_projective(role("v3")), to_projective(role("v4")));
                if (l1 == l2) continue;
                ProjectivePoint c = intersection(l1, l2);
                if (c.at_infinity()) continue;
                role("v6") = along(role("v5"), c.affine(), rand_parameter(rng));
                break;
            }
            case ConditionKind::Conic6: {
                // Six distinct circle points pushed through a random invertible
                // affine map.
                std::set<Rational> ts;
                while (static_cast<int>(ts.size()) < 6) ts.insert(rand_rational(rng, 9, 3));
                Rational a = rand_rational(rng, 4, 2), b = rand_rational(rng, 4, 2);
                Rational c = rand_rational(rng, 4, 2), d = rand_rational(rng, 4, 2);
                if ((a * d - b * c).is_zero()) continue;
                int i = 0;
                for (const Rational& t : ts) {
                    Point q = circle_point(t);
                    pts[id.roles.at("v" + std::to_string(i + 1)) - 1] = {a * q[0] + b * q[1],
                                                                         c * q[0] + d * q[1]};
                    ++i;
                }
                break;
            }
            case ConditionKind::K7ConstructedConcurrency: {
                ProjectiveLine l1 = line_through(to_projective(role("v1")), to_projective(role("v2")));
                ProjectiveLine l2 = line_through(to_projective(role("v3")), to_projective(role("v4")));
                if (l1 == l2) continue;
                ProjectivePoint c = intersection(l1, l2);
                if (c.at_infinity()) continue;
                Point p = along(role("v5"), c.affine(), rand_parameter(rng));
                role("v6") = along(role("v2"), p, rand_parameter(rng));
                role("v7") = along(role("v3"), p, rand_parameter(rng));
                break;
            }
            case ConditionKind::K7ConstructedConic: {
                std::set<Rational> ts;
                while (static_cast<int>(ts.size()) < 6) ts.insert(rand_rational(rng, 9, 3));
                Rational a = rand_rational(rng, 4, 2), b = rand_rational(rng, 4, 2);
                Rational c = rand_rational(rng, 4, 2), d = rand_rational(rng, 4, 2);
                if ((a * d - b * c).is_zero()) continue;
                std::vector<Point> conic;
                for (const Rational& t : ts) {
                    Point q = circle_point(t);
                    conic.push_back({a * q[0] + b * q[1], c * q[0] + d * q[1]});
                }
                for (int i = 0; i < 5; ++i)
                    pts[id.roles.at("v" + std::to_string(i + 1)) - 1] = conic[i];
                const Point& p = conic[5];
                role("v6") = along(role("v1"), p, rand_parameter(rng));
                role("v7") = along(role("v3"), p, rand_parameter(rng));
                break;
            }
            }
            Configuration cfg(2, pts);
            if (!generic_apart_from(cfg, allowed)) continue;
            if (!check_condition(id, cfg).holds) continue;
            return cfg;
        } catch (const Error&) {
            continue;
        }
    }
}

Configuration off_condition_sample(const ConditionId& id, int n, std::uint64_t seed) {
    if (n < condition_arity(id.kind))
        throw Error(ErrorKind::Schema, "sample size below condition arity");
    for (std::uint64_t attempt = 0;; ++attempt) {
        std::mt19937_64 rng(seed + 0xabcdefULL + attempt * 0x9e3779b9ULL);
        std::vector<Point> pts(n);
        for (int i = 0; i < n; ++i) pts[i] = random_rational_point(rng, 2);
        try {
            Configuration cfg(2, pts);
            if (!generic_apart_from(cfg, {})) continue;
            if (check_condition(id, cfg).holds) continue;
            return cfg;
        } catch (const Error&) {
            continue;
        }
    }
}

} // namespace stressforge
