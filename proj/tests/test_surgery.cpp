#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stressforge/conditions.hpp"
#include "stressforge/surgery.hpp"
#include "test_support.hpp"

using namespace stressforge;

namespace {

Configuration unit_square() {
    return config2({{Rational(0), Rational(0)},
                    {Rational(1), Rational(0)},
                    {Rational(1), Rational(1)},
                    {Rational(0), Rational(1)}});
}

/// The 7-vertex graph of the worked Surgery I example: contracting v6, v7
/// toward p = v2v6 ^ v3v7 yields the two-triangles-plus-matching witness
/// whose stress condition is "v1v2, v3v4, v5p concurrent".
Framework k7_witness(const Configuration& cfg) {
    Graph g(7);
    for (auto [a, b] : {std::pair{2, 3}, {1, 4}, {1, 5}, {4, 5}, {1, 2}, {3, 4},
                        {2, 6}, {3, 7}, {5, 6}, {5, 7}, {6, 7}})
        g.add_edge(a, b);
    return make_framework(g, cfg);
}

SurgerySite k7_site() {
    SurgerySite site;
    site.roles = {{"a", 6}, {"b", 7}, {"x", 2}, {"y", 3}, {"w", 5}};
    return site;
}

} // namespace

TEST_CASE("edge exchange on the square") {
    Graph k4 = Graph::complete(4);
    SurgeryVerdict v = edge_exchange_check(k4, k4, Edge(1, 2), Edge(1, 3), unit_square());
    CHECK(v.preconditions_ok);
    CHECK(v.dims_equal());

    // dim W(H,P) = 0 fails the precondition.
    std::mt19937_64 rng(71);
    Graph tri(4);
    tri.add_edge(1, 2);
    tri.add_edge(2, 3);
    tri.add_edge(1, 3);
    SurgeryVerdict bad =
        edge_exchange_check(k4, tri, Edge(1, 2), Edge(2, 3), oracle::generic_config2(rng, 4));
    CHECK_FALSE(bad.preconditions_ok);

    // Generator vanishing on an apex edge of the collinear K4.
    Configuration collinear = config2({{Rational(0), Rational(0)},
                                       {Rational(1), Rational(0)},
                                       {Rational(3), Rational(0)},
                                       {Rational(0), Rational(2)}});
    SurgeryVerdict apex = edge_exchange_check(k4, k4, Edge(1, 4), Edge(1, 2), collinear);
    CHECK_FALSE(apex.preconditions_ok);
}

TEST_CASE("edge exchange dims equal on random valid instances") {
    std::mt19937_64 rng(73);
    Graph k5 = Graph::complete(5);
    int done = 0;
    while (done < 30) {
        Configuration cfg = oracle::generic_config2(rng, 5);
        // H: the K4 on labels 1..4 inside K5.
        Graph h(5);
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j) h.add_edge(i, j);
        Edge e1(1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 4));
        Edge e2(1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 4));
        if (e1.a == e1.b || e2.a == e2.b || e1 == e2) continue;
        SurgeryVerdict v = edge_exchange_check(k5, h, e1, e2, cfg);
        if (!v.preconditions_ok) continue;
        CHECK(v.dims_equal());
        ++done;
    }
}

TEST_CASE("two_sum of two atoms") {
    std::mt19937_64 rng(79);
    Framework f1 = make_framework(Graph::complete(4), oracle::generic_config2(rng, 4));
    Framework f2 = make_framework(Graph::complete(4), oracle::generic_config2(rng, 4));
    auto [sum, v] = two_sum(f1, Edge(1, 2), f2, Edge(3, 4));
    CHECK(sum.vertex_count() == 6);
    CHECK(sum.graph.edge_count() == 10); // 6 + 6 - 2 identified copies
    CHECK(v.preconditions_ok);
    CHECK(v.dims_equal());
    CHECK(v.dim_after == 1); // 1 + 1 - 1

    // The identified edge is gone, the rest of both graphs is present.
    CHECK_FALSE(sum.graph.has_edge(1, 2));
    CHECK(sum.graph.has_edge(1, 3));
}

TEST_CASE("two_sum of a stressed prism with an atom") {
    // A prism (two triangles plus a matching) carries a stress exactly when
    // the three matching lines concur; glue an atom onto a stressed one.
    ConditionId conc = ConditionId::standard(ConditionKind::Concurrent3Lines);
    Graph prism(6);
    for (auto [a, b] : {std::pair{1, 3}, {3, 5}, {1, 5}, {2, 4}, {4, 6}, {2, 6},
                        {1, 2}, {3, 4}, {5, 6}})
        prism.add_edge(a, b);
    std::mt19937_64 rng(107);
    for (int seed = 0; seed < 50; ++seed) {
        Framework prism_f{prism, on_condition_sample(conc, 6, 4000 + seed)};
        StressSpace s = self_stress_space(prism_f);
        if (s.dimension() != 1 || s.basis[0].weight(1, 3).is_zero()) continue;
        Framework atom = make_framework(Graph::complete(4), oracle::generic_config2(rng, 4));
        auto [sum, v] = two_sum(prism_f, Edge(1, 3), atom, Edge(1, 2));
        CHECK(sum.vertex_count() == 8);
        CHECK(v.preconditions_ok);
        CHECK(v.dims_equal());
        CHECK(v.dim_after == 1);
        return;
    }
    FAIL("no stressed prism sample found");
}

TEST_CASE("two_sum dimension law on random valid pairs") {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 30; ++trial) {
        Framework f1 = make_framework(Graph::complete(4), oracle::generic_config2(rng, 4));
        Framework f2 = make_framework(Graph::complete(4), oracle::generic_config2(rng, 4));
        Edge e1(1 + static_cast<int>(rng() % 3), 4);
        Edge e2(1, 2 + static_cast<int>(rng() % 3));
        auto [sum, v] = two_sum(f1, e1, f2, e2);
        CHECK(v.preconditions_ok);
        CHECK(v.dims_equal());
    }
}

TEST_CASE("two_sum rejects a stressless summand") {
    std::mt19937_64 rng(89);
    Framework atom = make_framework(Graph::complete(4), oracle::generic_config2(rng, 4));
    Graph tri(3);
    tri.add_edge(1, 2);
    tri.add_edge(2, 3);
    tri.add_edge(1, 3);
    Framework triangle = make_framework(tri, oracle::generic_config2(rng, 3));
    CHECK_THROWS_AS(two_sum(atom, Edge(1, 2), triangle, Edge(1, 2)), Error);
}

TEST_CASE("the triangle-with-two-atoms chain gains stress only when the outer "
          "vertices are collinear") {
    // 2-sum of a triangle with two atoms as a graph: triangle {1,2,3} with a
    // K4 hung on edge 12 (new vertices 4,5) and another on edge 13 (6,7),
    // both identified edges removed.
    Graph g(7);
    for (auto [a, b] : {std::pair{2, 3}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {4, 5}})
        g.add_edge(a, b);
    // second atom on edge {1,3}: vertices 6,7; edge 13 stays removed
    Graph h(7);
    for (const Edge& e : g.edges())
        if (!(e == Edge(1, 3))) h.add_edge(e.a, e.b);
    for (auto [a, b] : {std::pair{1, 6}, {1, 7}, {3, 6}, {3, 7}, {6, 7}})
        h.add_edge(a, b);

    std::mt19937_64 rng(97);
    int generic_zero = 0;
    for (int trial = 0; trial < 5; ++trial) {
        Configuration cfg = oracle::generic_config2(rng, 7);
        if (stress_space_dimension(make_framework(h, cfg)) == 0) ++generic_zero;
    }
    CHECK(generic_zero == 5);

    // Force v1, v2, v3 collinear, everything else generic.
    for (int trial = 0; trial < 5; ++trial) {
        Configuration cfg = oracle::generic_config2(rng, 7);
        std::vector<Point> pts = cfg.points;
        Rational t(3, 2);
        pts[2] = {pts[0][0] + t * (pts[1][0] - pts[0][0]),
                  pts[0][1] + t * (pts[1][1] - pts[0][1])};
        CHECK(stress_space_dimension(make_framework(h, Configuration(2, pts))) == 1);
    }
}

TEST_CASE("surgery I reproduces the worked example") {
    ConditionId cond = ConditionId::standard(ConditionKind::K7ConstructedConcurrency);

    // On the stratum: dim 1 before and after.
    Framework on = k7_witness(on_condition_sample(cond, 7, 1001));
    auto [after_on, v_on] = surgery1_apply(on, k7_site());
    CHECK(v_on.preconditions_ok);
    CHECK(after_on.vertex_count() == 6);
    CHECK(v_on.dim_before == 1);
    CHECK(v_on.dim_after == 1);

    // The contracted framework is the two-triangles-plus-matching graph.
    CHECK(after_on.graph.edge_count() == 9);
    for (auto [a, b] : {std::pair{2, 3}, {2, 6}, {3, 6}, {1, 4}, {1, 5}, {4, 5},
                        {1, 2}, {3, 4}, {5, 6}})
        CHECK(after_on.graph.has_edge(a, b));

    // Generic: dim 0 on both sides.
    Framework off = k7_witness(off_condition_sample(cond, 7, 1002));
    auto [after_off, v_off] = surgery1_apply(off, k7_site());
    CHECK(v_off.preconditions_ok);
    CHECK(v_off.dim_before == 0);
    CHECK(v_off.dim_after == 0);
}

TEST_CASE("surgery I precondition failures") {
    ConditionId cond = ConditionId::standard(ConditionKind::K7ConstructedConcurrency);
    Configuration cfg = off_condition_sample(cond, 7, 1003);
    // Force (x, y, w) = (v2, v3, v5) collinear.
    std::vector<Point> pts = cfg.points;
    Rational t(2, 3);
    pts[4] = {pts[1][0] + t * (pts[2][0] - pts[1][0]),
              pts[1][1] + t * (pts[2][1] - pts[1][1])};
    CHECK_THROWS_AS(surgery1_apply(k7_witness(Configuration(2, pts)), k7_site()), Error);

    SurgerySite wrong;
    wrong.roles = {{"a", 1}, {"b", 7}, {"x", 2}, {"y", 3}, {"w", 5}};
    CHECK_THROWS_AS(surgery1_apply(k7_witness(cfg), wrong), Error);
}

TEST_CASE("surgery I dimension equality on 100 random valid sites") {
    ConditionId cond = ConditionId::standard(ConditionKind::K7ConstructedConcurrency);
    int done = 0;
    for (int seed = 0; done < 100 && seed < 500; ++seed) {
        Configuration cfg = seed % 2 ? on_condition_sample(cond, 7, 2000 + seed)
                                     : off_condition_sample(cond, 7, 2000 + seed);
        try {
            auto [after, v] = surgery1_apply(k7_witness(cfg), k7_site());
            CHECK(v.dims_equal());
            ++done;
        } catch (const Error&) {
            continue; // a precondition failed for this sample; skip
        }
    }
    CHECK(done == 100);
}

TEST_CASE("surgery II verification") {
    // Before/after pair: the square K4 with a side exchanged for the other
    // diagonal; labels 2,3 play p,q in the before and r,s in the after.
    Configuration sq = unit_square();
    Graph before(4), after(4);
    for (auto [a, b] : {std::pair{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}})
        before.add_edge(a, b);
    for (auto [a, b] : {std::pair{1, 2}, {2, 3}, {3, 4}, {1, 4}, {2, 4}})
        after.add_edge(a, b);
    SurgerySite site;
    site.roles = {{"p", 2}, {"q", 3}, {"r", 2}, {"s", 3}, {"v1", 1}, {"v4", 4}};
    SurgeryVerdict v =
        surgery2_verify(make_framework(before, sq), make_framework(after, sq), site);
    CHECK(v.preconditions_ok);
    CHECK(v.dims_equal());

    // (r, s, v4) collinear: precondition reported, dims still computed.
    Configuration degen = config2({{Rational(0), Rational(0)},
                                   {Rational(1), Rational(0)},
                                   {Rational(2), Rational(0)},
                                   {Rational(3), Rational(0)}});
    // positions must match between the frameworks for the shared roles
    SurgeryVerdict bad = surgery2_verify(make_framework(before, degen),
                                         make_framework(after, degen), site);
    CHECK_FALSE(bad.preconditions_ok);

    // Mismatched shared-vertex positions are an error.
    Configuration moved = unit_square();
    moved.points[0][0] += Rational(1, 7);
    CHECK_THROWS_AS(surgery2_verify(make_framework(before, sq),
                                    make_framework(after, moved), site),
                    Error);
}

TEST_CASE("plane atom and 3D surgery") {
    std::mt19937_64 rng(101);

    // Valid sites: the computed apex equals v1 by construction, dims agree.
    int stressed = 0;
    for (int trial = 0; trial < 8; ++trial) {
        oracle::OctaSite octa = oracle::make_octahedron(rng, true);
        auto [after, v] = surgery3d_verify(octa.framework, octa.site);
        CHECK(v.preconditions_ok); // v1 lands in the triangle plane
        CHECK(v.dims_equal());
        if (v.dim_before >= 1) ++stressed;
    }
    CHECK(stressed >= 1); // the coplanar construction carries real stresses

    // Planes meeting off the triangle plane: the cone vertex has valency 3
    // off-plane, so its edges carry no stress.
    for (int trial = 0; trial < 4; ++trial) {
        oracle::OctaSite octa = oracle::make_octahedron(rng, false);
        auto [after, v] = surgery3d_verify(octa.framework, octa.site);
        CHECK_FALSE(v.preconditions_ok);
        const int v1_label = after.vertex_count();
        StressSpace s = self_stress_space(after);
        for (const StressAssignment& w : s.basis)
            for (int t : {1, 2, 3}) CHECK(w.weight(v1_label, t).is_zero());
    }
}

TEST_CASE("3D surgery rejects degenerate planes") {
    // External edges inside the triangle plane make pi2 = pi1.
    Graph g(5);
    for (auto [a, b] : {std::pair{1, 2}, {1, 3}, {2, 3}, {1, 4}, {1, 5}})
        g.add_edge(a, b);
    Configuration cfg(3, {{Rational(0), Rational(0), Rational(0)},
                          {Rational(1), Rational(0), Rational(0)},
                          {Rational(0), Rational(1), Rational(0)},
                          {Rational(2), Rational(1), Rational(0)},
                          {Rational(1), Rational(2), Rational(0)}});
    SurgerySite site;
    site.roles = {{"v2", 1}, {"v3", 2}, {"v4", 3},
                  {"e1", 4}, {"e2", 5}, {"e3", 4}, {"e4", 5}, {"e5", 4}, {"e6", 5}};
    CHECK_THROWS_AS(surgery3d_verify(make_framework(g, cfg), site), Error);
}

TEST_CASE("plane atom cancels the triangle stresses in the 3D surgery") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 20; ++trial) {
        oracle::OctaSite octa = oracle::make_octahedron(rng, true);
        StressSpace s = self_stress_space(octa.framework);
        if (s.dimension() == 0) continue;
        const StressAssignment& w1 = s.basis[0];
        if (w1.weight(1, 2).is_zero()) continue;

        // v1 is the origin of the construction; the four cone points are
        // coplanar by design.
        Point v1 = {Rational(0), Rational(0), Rational(0)};
        // v1 was randomized; recover it as the plane intersection the same
        // way the surgery does: reuse the verify output configuration.
        auto [after, verdict] = surgery3d_verify(octa.framework, octa.site);
        REQUIRE(verdict.preconditions_ok);
        v1 = after.configuration.at(after.vertex_count());

        Atom plane_atom = plane_atom_3d({v1, octa.framework.configuration.at(1),
                                         octa.framework.configuration.at(2),
                                         octa.framework.configuration.at(3)});
        // lambda cancels the v2v3 stress; the other two triangle edges
        // must then cancel exactly as well.
        Rational lambda = -w1.weight(1, 2) / plane_atom.stress.weight(2, 3);
        CHECK((w1.weight(1, 3) + lambda * plane_atom.stress.weight(2, 4)).is_zero());
        CHECK((w1.weight(2, 3) + lambda * plane_atom.stress.weight(3, 4)).is_zero());
        return;
    }
    FAIL("no stressed octahedron found");
}
