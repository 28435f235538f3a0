// Acceptance suite: one check per criterion, each printed as a PASS/FAIL
// line with the measured values and runtime. The process exits with the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "stressforge/conditions.hpp"
#include "stressforge/lambda5.hpp"
#include "stressforge/model_io.hpp"
#include "stressforge/strata.hpp"
#include "stressforge/witness.hpp"
#include "test_support.hpp"

using namespace stressforge;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
    std::string name;
    Clock::time_point start = Clock::now();
    bool ok = true;
    std::ostringstream detail;

    explicit Criterion(std::string n) : name(std::move(n)) {}

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << "    failed: " << what << "\n";
        }
    }

    void finish(double budget_seconds) {
        double elapsed =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count() /
            1000.0;
        if (elapsed > budget_seconds) {
            ok = false;
            detail << "    failed: runtime " << elapsed << "s exceeds budget " << budget_seconds
                   << "s\n";
        }
        std::printf("%s %s (%.2fs)\n", ok ? "PASS" : "FAIL", name.c_str(), elapsed);
        std::fputs(detail.str().c_str(), stdout);
        std::fflush(stdout);
        if (!ok) ++failures;
    }
};

std::string table_str(const std::map<int, long>& t) {
    std::string s = "{";
    for (const auto& [d, c] : t) s += std::to_string(d) + ":" + std::to_string(c) + " ";
    return s + "}";
}

void criterion1() {
    Criterion c("c1 K3 strata table");
    auto table = strata_table(3).table.by_dimension;
    std::map<int, long> want{{2, 1}, {4, 3}, {5, 3}, {6, 2}};
    c.expect(table == want, "got " + table_str(table) + ", want " + table_str(want));
    c.finish(1.0);
}

void criterion2() {
    Criterion c("c2 K4 strata table");
    auto table = strata_table(4).table.by_dimension;
    std::map<int, long> want{{2, 1}, {4, 7}, {5, 18}, {6, 24}, {7, 24}, {8, 14}};
    c.expect(table == want, "got " + table_str(table) + ", want " + table_str(want));
    c.finish(5.0);
}

void criterion3() {
    Criterion c("c3 Lambda4 complex");
    const Lambda4Complex& l4 = lambda4_arrangement();
    c.expect(l4.merged_face_count == 14,
             "faces = " + std::to_string(l4.merged_face_count) + ", want 14");
    c.expect(l4.stratum_arc_count == 24,
             "arcs = " + std::to_string(l4.stratum_arc_count) + ", want 24");
    c.expect(l4.arc_group_counts == std::array<int, 4>{6, 6, 6, 6}, "arc groups != 4 x 6");
    c.expect(l4.euler_characteristic() == 2,
             "Euler characteristic = " + std::to_string(l4.euler_characteristic()));
    c.finish(1.0);
}

void criterion4() {
    Criterion c("c4 Lambda5 census (264 / 600 / 18)");
    const Lambda5Census& l5 = lambda5_census();
    c.expect(l5.top_count == 264, "top = " + std::to_string(l5.top_count) + ", want 264");
    c.expect(l5.codim1_count == 600,
             "codim-1 = " + std::to_string(l5.codim1_count) + ", want 600");
    bool all18 = !l5.face_fiber_cells.empty();
    for (int k : l5.face_fiber_cells)
        if (k != 18) all18 = false;
    c.expect(all18, "some generic base face has a fiber cell count != 18");
    c.finish(600.0);
}

void criterion5() {
    Criterion c("c5 K5 strata table with per-type subtotals");
    CensusReport r = strata_table(5);
    std::map<int, long> want{{2, 1},   {4, 15},  {5, 75}, {6, 170},
                             {7, 300}, {8, 810}, {9, 600}, {10, 264}};
    c.expect(r.table.by_dimension == want,
             "got " + table_str(r.table.by_dimension) + ", want " + table_str(want));

    std::map<std::pair<int, std::string>, long> bullets;
    for (const CensusBullet& b : r.bullets) bullets[{b.dimension, b.type_key}] = b.count;
    auto bullet = [&](int dim, const std::string& key, long want_count) {
        long got = bullets.count({dim, key}) ? bullets[{dim, key}] : 0;
        c.expect(got == want_count, "dim " + std::to_string(dim) + " " + key + " = " +
                                        std::to_string(got) + ", want " +
                                        std::to_string(want_count));
    };
    bullet(10, "c[];l[]", 264);
    bullet(9, "c[];l[3]", 600);
    bullet(8, "c[];l[3,3]", 270);
    bullet(8, "c[];l[4]", 120);
    bullet(8, "c[2];l[]", 420); // two points coincide
    bullet(7, "c[2];l[3]", 60);
    bullet(7, "c[2];l[4]", 180);
    bullet(7, "c[];l[5]", 60);
    bullet(6, "c[3];l[]", 20);
    bullet(6, "c[2];l[5]", 120);
    bullet(6, "c[2,2];l[]", 30);
    bullet(5, "c[3];l[5]", 30);
    bullet(5, "c[2,2];l[5]", 45);
    bullet(4, "c[3,2];l[]", 10);
    bullet(4, "c[4];l[]", 5);
    bullet(2, "c[5];l[]", 1);
    c.finish(900.0);
}

void criterion6() {
    Criterion c("c6 stress space spot checks");
    std::mt19937_64 rng(2026);
    int k4_ok = 0, k5_ok = 0;
    for (int i = 0; i < 100; ++i) {
        Framework f = make_framework(Graph::complete(4), oracle::generic_config2(rng, 4));
        if (stress_space_dimension(f) == 1) ++k4_ok;
    }
    for (int i = 0; i < 100; ++i) {
        Framework f = make_framework(Graph::complete(5), oracle::generic_config2(rng, 5));
        if (stress_space_dimension(f) == 3) ++k5_ok;
    }
    c.expect(k4_ok == 100, "generic K4 dim 1 in " + std::to_string(k4_ok) + "/100");
    c.expect(k5_ok == 100, "generic K5 dim 3 in " + std::to_string(k5_ok) + "/100");

    Framework collinear = make_framework(Graph::complete(4),
                                         config2({{Rational(0), Rational(0)},
                                                  {Rational(1), Rational(0)},
                                                  {Rational(3), Rational(0)},
                                                  {Rational(0), Rational(2)}}));
    StressSpace s = self_stress_space(collinear);
    c.expect(s.dimension() == 1, "three-collinear K4 dim != 1");
    bool apex_zero = true;
    for (int i : {1, 2, 3})
        if (!s.basis[0].weight(i, 4).is_zero()) apex_zero = false;
    c.expect(apex_zero, "apex edge stress not identically zero");
    c.finish(5.0);
}

void criterion7() {
    Criterion c("c7 Pascal coherence (200 + 200 sextuples)");
    ConditionId conic = ConditionId::standard(ConditionKind::Conic6);
    int disagreements = 0, nondegenerate = 0;
    auto run = [&](const Configuration& cfg, bool expect_conic) {
        std::array<Point, 6> pts;
        for (int i = 0; i < 6; ++i) pts[i] = cfg.at(i + 1);
        bool conic_holds = on_conic(pts);
        if (conic_holds != expect_conic) ++disagreements;
        for (const PascalInstance& inst : pascal_witnesses(pts)) {
            if (!inst.degeneracy.empty()) continue;
            ++nondegenerate;
            if (inst.collinear != conic_holds) ++disagreements;
        }
    };
    for (int i = 0; i < 200; ++i) run(on_condition_sample(conic, 6, 9000 + i), true);
    for (int i = 0; i < 200; ++i) run(off_condition_sample(conic, 6, 19000 + i), false);
    c.expect(disagreements == 0,
             std::to_string(disagreements) + " Pascal/conic disagreements");
    c.expect(nondegenerate > 20000, "too many degenerate Pascal instances");
    c.finish(30.0);
}

void criterion8() {
    Criterion c("c8 witness search for the K6 concurrency and conic strata");
    for (ConditionKind kind : {ConditionKind::Concurrent3Lines, ConditionKind::Conic6}) {
        ConditionId id = ConditionId::standard(kind);
        std::vector<Configuration> on, off;
        for (int i = 0; i < 3; ++i) {
            on.push_back(on_condition_sample(id, 6, 31000 + i));
            off.push_back(off_condition_sample(id, 6, 32000 + i));
        }
        std::vector<Graph> found = witness_subgraph_search(6, id, on, off);
        c.expect(!found.empty(),
                 std::string(condition_name(kind)) + ": empty witness list");
        int bad = 0;
        for (const Graph& g : found) {
            for (int i = 0; i < 20; ++i) {
                if (stress_space_dimension(
                        Framework{g, on_condition_sample(id, 6, 33000 + i)}) != 1)
                    ++bad;
                if (stress_space_dimension(
                        Framework{g, off_condition_sample(id, 6, 34000 + i)}) != 0)
                    ++bad;
            }
        }
        c.expect(bad == 0, std::string(condition_name(kind)) + ": " + std::to_string(bad) +
                               " re-verification failures over " +
                               std::to_string(found.size()) + " witnesses");
    }
    c.finish(120.0);
}

void criterion9() {
    Criterion c("c9 surgery suite");
    std::mt19937_64 rng(41);
    int law_ok = 0;
    for (int i = 0; i < 100; ++i) {
        Framework f1 = make_framework(Graph::complete(4), oracle::generic_config2(rng, 4));
        Framework f2 = make_framework(Graph::complete(4), oracle::generic_config2(rng, 4));
        Edge e1(1 + static_cast<int>(rng() % 3), 4);
        Edge e2(1, 2 + static_cast<int>(rng() % 3));
        auto [sum, v] = two_sum(f1, e1, f2, e2);
        if (v.preconditions_ok && v.dims_equal()) ++law_ok;
    }
    c.expect(law_ok == 100, "2-sum law held in " + std::to_string(law_ok) + "/100");

    int exchange_ok = 0, tried = 0;
    Graph k5 = Graph::complete(5);
    Graph h(5);
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) h.add_edge(i, j);
    while (tried < 100) {
        Configuration cfg = oracle::generic_config2(rng, 5);
        Edge e1(1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 4));
        Edge e2(1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 4));
        if (e1.a == e1.b || e2.a == e2.b || e1 == e2) continue;
        SurgeryVerdict v = edge_exchange_check(k5, h, e1, e2, cfg);
        if (!v.preconditions_ok) continue;
        ++tried;
        if (v.dims_equal()) ++exchange_ok;
    }
    c.expect(exchange_ok == 100,
             "edge exchange dims equal in " + std::to_string(exchange_ok) + "/100");

    // The worked Surgery I example: the 7-vertex witness contracts to the
    // two-triangles-plus-matching graph; dim 1 exactly on the stratum.
    Graph g7(7);
    for (auto [a, b] : {std::pair{2, 3}, {1, 4}, {1, 5}, {4, 5}, {1, 2}, {3, 4},
                        {2, 6}, {3, 7}, {5, 6}, {5, 7}, {6, 7}})
        g7.add_edge(a, b);
    SurgerySite site;
    site.roles = {{"a", 6}, {"b", 7}, {"x", 2}, {"y", 3}, {"w", 5}};
    ConditionId cond = ConditionId::standard(ConditionKind::K7ConstructedConcurrency);
    int on_ok = 0;
    for (int i = 0; i < 20; ++i) {
        Framework f{g7, on_condition_sample(cond, 7, 51000 + i)};
        try {
            auto [after, v] = surgery1_apply(f, site);
            if (v.dim_before == 1 && v.dim_after == 1) ++on_ok;
        } catch (const Error&) {
        }
    }
    c.expect(on_ok == 20, "Surgery I on-stratum dim 1 in " + std::to_string(on_ok) + "/20");
    int off_ok = 0;
    for (int i = 0; i < 50; ++i) {
        Framework f{g7, off_condition_sample(cond, 7, 52000 + i)};
        try {
            auto [after, v] = surgery1_apply(f, site);
            if (v.dim_before == 0 && v.dim_after == 0) ++off_ok;
        } catch (const Error&) {
        }
    }
    c.expect(off_ok == 50,
             "Surgery I generic controls dim 0 in " + std::to_string(off_ok) + "/50");
    c.finish(60.0);
}

void criterion10() {
    Criterion c("c10 3D plane surgery");
    std::mt19937_64 rng(59);
    int coplanar_ok = 0;
    for (int i = 0; i < 100; ++i) {
        Rational a = oracle::rand_rational(rng, 3, 2), b = oracle::rand_rational(rng, 3, 2);
        Rational d = oracle::rand_rational(rng, 5, 2);
        std::array<Point, 4> pts;
        Configuration planar = oracle::generic_config2(rng, 4);
        for (int k = 0; k < 4; ++k) {
            const Point& p = planar.at(k + 1);
            pts[k] = {p[0], p[1], a * p[0] + b * p[1] + d};
        }
        try {
            Atom atom = plane_atom_3d(pts);
            if (!atom.stress.is_zero()) ++coplanar_ok;
        } catch (const Error&) {
        }
    }
    c.expect(coplanar_ok == 100,
             "coplanar plane atom dim 1 in " + std::to_string(coplanar_ok) + "/100");

    int skew_ok = 0;
    for (int i = 0; i < 100; ++i) {
        std::array<Point, 4> pts;
        for (Point& p : pts)
            p = {oracle::rand_rational(rng), oracle::rand_rational(rng),
                 oracle::rand_rational(rng)};
        Point u = sub(pts[1], pts[0]), v = sub(pts[2], pts[0]), w = sub(pts[3], pts[0]);
        Rational vol = u[0] * (v[1] * w[2] - v[2] * w[1]) -
                       u[1] * (v[0] * w[2] - v[2] * w[0]) +
                       u[2] * (v[0] * w[1] - v[1] * w[0]);
        if (vol.is_zero()) {
            --i;
            continue;
        }
        Framework f = make_framework(Graph::complete(4),
                                     Configuration(3, {pts[0], pts[1], pts[2], pts[3]}));
        if (stress_space_dimension(f) == 0) ++skew_ok;
    }
    c.expect(skew_ok == 100, "non-coplanar K4 dim 0 in " + std::to_string(skew_ok) + "/100");

    int sites_ok = 0, cancel_checked = 0;
    for (int i = 0; i < 20; ++i) {
        oracle::OctaSite octa = oracle::make_octahedron(rng, true);
        auto [after, v] = surgery3d_verify(octa.framework, octa.site);
        if (v.preconditions_ok && v.dims_equal()) ++sites_ok;
        StressSpace s = self_stress_space(octa.framework);
        if (s.dimension() == 0) continue;
        const StressAssignment& w1 = s.basis[0];
        if (w1.weight(1, 2).is_zero()) continue;
        Point v1 = after.configuration.at(after.vertex_count());
        Atom atom = plane_atom_3d({v1, octa.framework.configuration.at(1),
                                   octa.framework.configuration.at(2),
                                   octa.framework.configuration.at(3)});
        Rational lambda = -w1.weight(1, 2) / atom.stress.weight(2, 3);
        if ((w1.weight(1, 3) + lambda * atom.stress.weight(2, 4)).is_zero() &&
            (w1.weight(2, 3) + lambda * atom.stress.weight(3, 4)).is_zero())
            ++cancel_checked;
        else
            c.expect(false, "triangle stress cancellation residual nonzero");
    }
    c.expect(sites_ok == 20, "dims equal on " + std::to_string(sites_ok) + "/20 valid sites");
    c.expect(cancel_checked > 0, "no stressed site exercised the cancellation identity");
    c.finish(30.0);
}

void criterion11() {
    Criterion c("c11 property suites");
    std::mt19937_64 rng(61);

    Configuration base = oracle::generic_config2(rng, 5);
    FiberSignature sig = fiber_signature(make_framework(Graph::complete(5), base));
    int affine_ok = 0;
    for (int i = 0; i < 100; ++i) {
        Configuration img = oracle::random_affine_image(rng, base);
        if (fibers_equivalent(sig, fiber_signature(make_framework(Graph::complete(5), img))))
            ++affine_ok;
    }
    c.expect(affine_ok == 100, "affine invariance in " + std::to_string(affine_ok) + "/100");

    bool closed = true;
    for (int i = 0; i < 20; ++i) {
        int n = 4 + static_cast<int>(rng() % 2);
        FiberSignature s =
            fiber_signature(make_framework(Graph::complete(n), oracle::generic_config2(rng, n)));
        for (const SignVector& v : s.covectors)
            if (!s.covectors.count(negated(v))) closed = false;
    }
    c.expect(closed, "negation closure violated");

    int agree = 0;
    bool under_only = true;
    for (int i = 0; i < 100; ++i) {
        RationalMatrix m(4 + static_cast<int>(rng() % 3), 4 + static_cast<int>(rng() % 3));
        for (int r = 0; r < m.rows(); ++r)
            for (int col = 0; col < m.cols(); ++col)
                m.at(r, col) = oracle::rand_rational(rng, 6, 5);
        int exact = exact_rank(m);
        int modular = rank_mod_p(m, primes::random_prime_62(rng(), 0));
        if (modular > exact) under_only = false;
        if (modular == exact) ++agree;
    }
    c.expect(agree >= 99, "modular rank agreed in " + std::to_string(agree) + "/100");
    c.expect(under_only, "modular rank exceeded the exact rank");

    auto run_cli = [&](const std::string& threads) {
        std::string cmd = "STRESSFORGE_THREADS=" + threads + " " + STRESSFORGE_CLI_PATH +
                          " census --n 4 2>/dev/null";
        FILE* pipe = popen(cmd.c_str(), "r");
        std::string out;
        if (pipe) {
            char buf[4096];
            std::size_t got;
            while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
            pclose(pipe);
        }
        return out;
    };
    std::string one = run_cli("1");
    std::string four = run_cli("4");
    c.expect(!one.empty() && one == four,
             "census report differs between STRESSFORGE_THREADS=1 and 4");
    c.finish(60.0);
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    std::printf("%d of 11 criteria failed\n", failures);
    return failures;
}
