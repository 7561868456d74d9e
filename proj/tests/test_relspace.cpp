#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "positroid/reduction.hpp"
#include "positroid/relspace.hpp"
#include "positroid/rng.hpp"

using namespace positroid;

namespace {

// m-valent star: one interior vertex joined to every boundary vertex
BicoloredNetwork<RatFunc> star(int n, Color c, const std::vector<RatFunc>& w) {
    auto g = BicoloredNetwork<RatFunc>::with_boundary(n);
    int v = g.add_vertex(c);
    for (int i = 1; i <= n; ++i) g.add_edge(g.boundary_vertex(i), v, w[static_cast<size_t>(i - 1)]);
    return g;
}

RatFunc rv(const std::string& s) { return RatFunc::variable(Var(s)); }

}  // namespace

TEST_CASE("trivalent black star: the Example relation space") {
    auto g = star(3, Color::Black, {rv("ra"), rv("rb"), rv("rc")});
    auto rel = relation_space(g);
    REQUIRE(rel.defined());
    CHECK(rel.kN == 2);
    auto v = rel.pluckers();
    RatFunc a = rv("ra"), b = rv("rb"), c = rv("rc");
    // (D12, D13, D23) proportional to (1/ab, -1/ac, 1/bc)
    CHECK(v.at({1, 2}) * (RatFunc(Rat(-1)) / (a * c)) == v.at({1, 3}) * (RatFunc(Rat(1)) / (a * b)));
    CHECK(v.at({1, 2}) * (RatFunc(Rat(1)) / (b * c)) == v.at({2, 3}) * (RatFunc(Rat(1)) / (a * b)));
}

TEST_CASE("white star needs no signs") {
    // Rel of a white star equals the planar measurement with no sign twists
    auto p = PlanarNetwork<RatFunc>::with_boundary(4);
    int c = p.add_vertex(Color::White);
    std::vector<int> es;
    for (int i = 1; i <= 4; ++i)
        es.push_back(p.add_edge(p.boundary_vertex(i), c,
                                std::vector<RatFunc>{rv("wa"), rv("wb"), rv("wc"), rv("wd")}
                                    [static_cast<size_t>(i - 1)]));
    for (int i = 1; i <= 4; ++i)
        p.verts[static_cast<size_t>(p.boundary_vertex(i))].rot = {es[static_cast<size_t>(i - 1)]};
    p.verts[static_cast<size_t>(c)].rot = {es[0], es[1], es[2], es[3]};
    auto rel = relation_space(bicolored_of_planar(p));
    REQUIRE(rel.defined());
    CHECK(rel.kN == 1);
    CHECK(proj_eq(rel.pluckers(), p.boundary_measurements()));
}

TEST_CASE("the black-white 4-boundary example matrix") {
    // edges: 1-v, 2-v, v-u, 3-u, 4-u with v black, u white
    auto g = BicoloredNetwork<RatFunc>::with_boundary(4);
    int v = g.add_vertex(Color::Black);
    int u = g.add_vertex(Color::White);
    g.add_edge(g.boundary_vertex(1), v, rv("b1").inv());
    g.add_edge(g.boundary_vertex(2), v, rv("b2").inv());
    g.add_edge(v, u, rv("gam").inv());
    g.add_edge(g.boundary_vertex(3), u, rv("b3").inv());
    g.add_edge(g.boundary_vertex(4), u, rv("b4").inv());
    auto rel = relation_space(g);
    REQUIRE(rel.defined());
    CHECK(rel.kN == 2);
    // relations b1 z1 = b2 z2 = z and b3 z3 + b4 z4 + gam z = 0 span
    // [[b1, -b2, 0, 0], [b1 gam, 0, b3, b4]]
    Mat<RatFunc> want(2, 4);
    want.at(0, 0) = rv("b1");
    want.at(0, 1) = RatFunc() - rv("b2");
    want.at(1, 0) = rv("b1") * rv("gam");
    want.at(1, 2) = rv("b3");
    want.at(1, 3) = rv("b4");
    CHECK(proj_eq(rel.pluckers(), plucker_of(want)));
}

TEST_CASE("expected dimension matches the matching k") {
    Rng rng(3);
    for (const char* w : {"[3,4,5,6]", "[2,5,4,7]", "[3,5,4,6]"}) {
        auto chart = graph_for(parse_window(w));
        std::vector<Rat> vals;
        for (int i = 0; i < chart.dim(); ++i) vals.push_back(rng.positive_rat());
        auto net = network_for(chart, vals);
        auto bic = bicolored_of_planar(net);
        CHECK(bic.expected_k() == net.boundary_k());
    }
}

TEST_CASE("sign vectors: stars and the square graph") {
    // black trivalent star in planar form
    auto p = PlanarNetwork<Rat>::with_boundary(3);
    int c = p.add_vertex(Color::Black);
    std::vector<int> es;
    for (int i = 1; i <= 3; ++i) es.push_back(p.add_edge(p.boundary_vertex(i), c, Rat(1)));
    for (int i = 1; i <= 3; ++i)
        p.verts[static_cast<size_t>(p.boundary_vertex(i))].rot = {es[static_cast<size_t>(i - 1)]};
    p.verts[static_cast<size_t>(c)].rot = {es[0], es[1], es[2]};
    auto eps = sign_vector(p);
    int minus = 0;
    for (size_t e = 0; e < eps.size(); ++e) minus += eps[e] < 0;
    CHECK(minus == 1);  // gauge-equivalent to (1,-1,1)

    auto sq = square_network<Rat>(Rat(1), Rat(1), Rat(1), Rat(1));
    auto eps2 = sign_vector(sq);
    CHECK(eps2.size() == sq.edges.size());
}

TEST_CASE("sign vectors exist across the cells of Bound(2,4)") {
    Rng rng(5);
    int count = 0;
    for (const Baff& f : enumerate_bound(2, 4)) {
        if (count++ % 4 != 0) continue;  // sample a quarter for speed here
        auto chart = graph_for(f);
        std::vector<Rat> vals;
        for (int i = 0; i < chart.dim(); ++i) vals.push_back(rng.positive_rat());
        auto net = network_for(chart, vals).m2_simplify();
        CHECK(sign_vector(net).size() == net.edges.size());
    }
}

TEST_CASE("gluing: formula matches re-elimination") {
    Rng rng(7);
    for (int trial = 0; trial < 6; ++trial) {
        // two stars glued: a white 3-star and a black 3-star on 6 boundary
        auto g = BicoloredNetwork<RatFunc>::with_boundary(6);
        int vb = g.add_vertex(Color::Black);
        int vw = g.add_vertex(Color::White);
        std::string p = "gl" + std::to_string(trial) + "_";
        g.add_edge(g.boundary_vertex(1), vb, rv(p + "a"));
        g.add_edge(g.boundary_vertex(2), vb, RatFunc(Rat(1)));
        g.add_edge(g.boundary_vertex(3), vb, rv(p + "b"));
        g.add_edge(g.boundary_vertex(4), vw, rv(p + "c"));
        g.add_edge(g.boundary_vertex(5), vw, RatFunc(Rat(1)));
        g.add_edge(g.boundary_vertex(6), vw, rv(p + "d"));
        auto rel = relation_space(g);
        REQUIRE(rel.defined());
        auto direct = relation_space(glue(g, 2, 5));
        auto formula = glue_pluckers(rel, 2, 5);
        REQUIRE(direct.defined());
        CHECK(proj_eq(direct.pluckers(), formula));
    }
}

TEST_CASE("gluing detects the dimension drop") {
    // glue the two ends of a single path 1 - black - white - 2: v_1, v_2
    // become dependent: spans degenerate
    auto g = BicoloredNetwork<RatFunc>::with_boundary(2);
    int b = g.add_vertex(Color::Black);
    g.add_edge(g.boundary_vertex(1), b, RatFunc(Rat(1)));
    g.add_edge(g.boundary_vertex(2), b, RatFunc(Rat(1)));
    auto rel = relation_space(g);
    REQUIRE(rel.defined());
    CHECK(rel.kN == 1);
    auto glued = relation_space(glue(g, 1, 2));
    // both boundary variables disappear; kN drops to 0... the glued network
    // has n = 0, k_N = 0, and the empty relation space is defined
    CHECK(glued.n == 0);
}

TEST_CASE("moves preserve the relation space") {
    // base: black star with a degree-2 white vertex spliced in
    auto base = [&](bool with_deg2) {
        auto g = BicoloredNetwork<RatFunc>::with_boundary(3);
        int v = g.add_vertex(Color::Black);
        g.add_edge(g.boundary_vertex(1), v, rv("ma"));
        g.add_edge(g.boundary_vertex(2), v, rv("mb"));
        if (with_deg2) {
            int u = g.add_vertex(Color::White);
            int w2 = g.add_vertex(Color::Black);
            g.add_edge(v, u, rv("mc"));
            g.add_edge(u, w2, rv("md"));
            g.add_edge(g.boundary_vertex(3), w2, rv("me"));
        } else {
            g.add_edge(g.boundary_vertex(3), v, rv("mf"));
        }
        return g;
    };
    auto g = base(true);
    auto rel0 = relation_space(g);
    REQUIRE(rel0.defined());
    // degree-2 removal at the white vertex
    int deg2 = -1;
    for (size_t v = 0; v < g.verts.size(); ++v)
        if (!g.verts[v].boundary && g.verts[v].color == Color::White && g.degree(static_cast<int>(v)) == 2)
            deg2 = static_cast<int>(v);
    REQUIRE(deg2 >= 0);
    auto h = rel_remove_deg2(g, deg2);
    auto rel1 = relation_space(h);
    REQUIRE(rel1.defined());
    CHECK(proj_eq(rel0.pluckers(), rel1.pluckers()));
    // gauge invariance
    auto g2 = g;
    g2.gauge(deg2, rv("mg"));
    auto rel2 = relation_space(g2);
    REQUIRE(rel2.defined());
    CHECK(proj_eq(rel0.pluckers(), rel2.pluckers()));
}

TEST_CASE("same-color glue and parallel reduction preserve Rel") {
    // two black vertices joined by a unit edge, plus boundary legs
    auto g = BicoloredNetwork<RatFunc>::with_boundary(4);
    int b1 = g.add_vertex(Color::Black);
    int b2 = g.add_vertex(Color::Black);
    g.add_edge(g.boundary_vertex(1), b1, rv("na"));
    g.add_edge(g.boundary_vertex(2), b1, rv("nb"));
    g.add_edge(g.boundary_vertex(3), b2, rv("nc"));
    g.add_edge(g.boundary_vertex(4), b2, rv("nd"));
    int mid = g.add_edge(b1, b2, RatFunc(Rat(1)));
    auto rel0 = relation_space(g);
    REQUIRE(rel0.defined());
    auto h = rel_same_color_glue(g, mid);
    auto rel1 = relation_space(h);
    REQUIRE(rel1.defined());
    CHECK(proj_eq(rel0.pluckers(), rel1.pluckers()));

    // parallel reduction
    auto q = BicoloredNetwork<RatFunc>::with_boundary(2);
    int wb = q.add_vertex(Color::White);
    int bb = q.add_vertex(Color::Black);
    q.add_edge(q.boundary_vertex(1), wb, rv("pa"));
    q.add_edge(q.boundary_vertex(2), bb, rv("pb"));
    int p1 = q.add_edge(wb, bb, rv("pc"));
    int p2 = q.add_edge(wb, bb, rv("pd"));
    auto relq = relation_space(q);
    REQUIRE(relq.defined());
    auto q2 = rel_parallel_reduce(q, p1, p2);
    auto relq2 = relation_space(q2);
    REQUIRE(relq2.defined());
    CHECK(proj_eq(relq.pluckers(), relq2.pluckers()));
}

TEST_CASE("square move preserves Rel") {
    auto g = BicoloredNetwork<RatFunc>::with_boundary(4);
    int b1 = g.add_vertex(Color::Black);
    int b2 = g.add_vertex(Color::Black);
    int w1 = g.add_vertex(Color::White);
    int w2 = g.add_vertex(Color::White);
    g.add_edge(g.boundary_vertex(1), b1, RatFunc(Rat(1)));
    g.add_edge(g.boundary_vertex(2), w2, RatFunc(Rat(1)));
    g.add_edge(g.boundary_vertex(3), b2, RatFunc(Rat(1)));
    g.add_edge(g.boundary_vertex(4), w1, RatFunc(Rat(1)));
    g.add_edge(w1, b1, rv("s11"));
    g.add_edge(w2, b1, rv("s12"));
    g.add_edge(w1, b2, rv("s21"));
    g.add_edge(w2, b2, rv("s22"));
    auto rel0 = relation_space(g);
    REQUIRE(rel0.defined());
    auto h = rel_square_move(g, b1, w1, b2, w2);
    auto rel1 = relation_space(h);
    REQUIRE(rel1.defined());
    CHECK(proj_eq(rel0.pluckers(), rel1.pluckers()));
}

TEST_CASE("leaf and dipole removal preserve Rel") {
    auto g = BicoloredNetwork<RatFunc>::with_boundary(2);
    int v = g.add_vertex(Color::Black);
    int leaf = g.add_vertex(Color::White);
    g.add_edge(g.boundary_vertex(1), v, rv("la"));
    g.add_edge(g.boundary_vertex(2), v, rv("lb"));
    g.add_edge(v, leaf, rv("lc"));
    auto rel0 = relation_space(g);
    REQUIRE(rel0.defined());
    auto h = rel_leaf_removal(g, leaf);
    auto rel1 = relation_space(h);
    REQUIRE(rel1.defined());
    CHECK(rel1.kN == rel0.kN);
    CHECK(proj_eq(rel0.pluckers(), rel1.pluckers()));

    auto g2 = g;
    int d1 = g2.add_vertex(Color::Black);
    int d2 = g2.add_vertex(Color::White);
    int de = g2.add_edge(d1, d2, rv("ld"));
    auto rel2 = relation_space(rel_dipole_removal(g2, de));
    REQUIRE(rel2.defined());
    CHECK(proj_eq(rel0.pluckers(), rel2.pluckers()));
}

TEST_CASE("rotation lemma") {
    for (const char* w : {"[3,5,4,6]", "[2,5,4,7]"}) {
        auto chart = graph_for(parse_window(w));
        auto net = symbolic_network_for(chart);
        auto bic = bicolored_of_planar(net);
        auto eps_net = network_for(chart, std::vector<Rat>(static_cast<size_t>(chart.dim()), Rat(1)));
        auto eps = sign_vector(eps_net);
        // apply the signs, then compare chi(Rel(N)) with Rel(rotate(N))
        auto signed_bic = bic;
        for (size_t e = 0; e < signed_bic.edges.size(); ++e)
            if (eps[e] < 0) signed_bic.edges[e].w = RatFunc() - signed_bic.edges[e].w;
        auto rel = relation_space(signed_bic);
        if (!rel.defined()) continue;
        auto rotated = relation_space(rel_rotate(signed_bic));
        REQUIRE(rotated.defined());
        CHECK(proj_eq(cyclic_shift(rel.pluckers()), rotated.pluckers()));
    }
}

TEST_CASE("Thm posgraph holds across Bound(2,4) charts") {
    Rng rng(11);
    int count = 0;
    for (const Baff& f : enumerate_bound(2, 4)) {
        if (count++ % 6 != 0) continue;  // subsample; acceptance runs them all
        auto chart = graph_for(f);
        std::vector<Rat> ones(static_cast<size_t>(chart.dim()), Rat(1));
        auto net = network_for(chart, ones).m2_simplify();
        auto eps = sign_vector(net);  // throws NotRepresentable on failure
        CHECK(eps.size() == net.edges.size());
    }
}
