#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "positroid/network.hpp"
#include "positroid/rng.hpp"

using namespace positroid;

namespace {

PlanarNetwork<Rat> square_rat(long a, long b, long c, long d) {
    return square_network<Rat>(Rat(a), Rat(b), Rat(c), Rat(d));
}

PlanarNetwork<RatFunc> square_sym() {
    return square_network<RatFunc>(RatFunc::variable(Var("sa")), RatFunc::variable(Var("sb")),
                                   RatFunc::variable(Var("sc")), RatFunc::variable(Var("sd")));
}

}  // namespace

TEST_CASE("lollipop network: single matching, torus point") {
    auto g = lollipop_network<Rat>(4, {Color::Black, Color::Black, Color::White, Color::White});
    g.validate();
    auto ms = g.matchings();
    REQUIRE(ms.size() == 1);
    CHECK(g.boundary_subset(ms[0]) == Subset{3, 4});
    auto v = g.boundary_measurements();
    CHECK(proj_eq(v, torus_point<Rat>(4, {3, 4})));
    CHECK(g.face_count() == 1);
    CHECK(g.graph_perm() == Baff::t_of({3, 4}, 4));
    CHECK(g.is_reduced());
}

TEST_CASE("square graph measurement table") {
    auto g = square_sym();
    g.validate();
    CHECK(g.matchings().size() == 7);
    auto v = g.boundary_measurements();
    RatFunc a = RatFunc::variable(Var("sa")), b = RatFunc::variable(Var("sb")),
            c = RatFunc::variable(Var("sc")), d = RatFunc::variable(Var("sd"));
    CHECK(v.at({1, 2}) == a);
    CHECK(v.at({1, 3}) == a * c + b * d);
    CHECK(v.at({1, 4}) == b);
    CHECK(v.at({2, 3}) == d);
    CHECK(v.at({2, 4}) == RatFunc(Rat(1)));
    CHECK(v.at({3, 4}) == c);
    CHECK(check_plucker(v));
    CHECK(g.face_count() == 5);
}

TEST_CASE("square graph trips and permutation") {
    auto g = square_rat(1, 1, 1, 1);
    auto t = g.trips();
    CHECK(t.perm[1] == 3);
    CHECK(t.perm[2] == 4);
    CHECK(t.perm[3] == 1);
    CHECK(t.perm[4] == 2);
    CHECK(t.cycles.empty());
    CHECK(g.graph_perm() == Baff::identity(2, 4));
    CHECK(g.is_reduced());
}

TEST_CASE("face weights multiply to one") {
    auto g = square_sym();
    auto ys = g.face_weights();
    CHECK(ys.size() == 5);
    RatFunc prod(Rat(1));
    for (const auto& y : ys) prod = prod * y;
    CHECK(prod == RatFunc(Rat(1)));
    // the interior face weight is (ac)/(bd) up to inversion
    RatFunc a = RatFunc::variable(Var("sa")), b = RatFunc::variable(Var("sb")),
            c = RatFunc::variable(Var("sc")), d = RatFunc::variable(Var("sd"));
    RatFunc want = (a * c) / (b * d);
    bool found = false;
    for (const auto& y : ys) found = found || y == want || y == want.inv();
    CHECK(found);
    // gauge transformations leave face weights fixed
    auto g2 = square_rat(2, 3, 5, 7);
    auto before = g2.face_weights();
    g2.gauge(4, Rat(11));  // an interior vertex id
    auto after = g2.face_weights();
    CHECK(before == after);
}

TEST_CASE("orientations and matchings biject; flows match matchings") {
    auto g = square_rat(2, 3, 5, 7);
    auto ms = g.matchings();
    CHECK(ms.size() == 7);
    for (const auto& m : ms) {
        auto o = orientation_of_matching(g, m);
        check_perfect(g, o);
        CHECK(matching_of_orientation(g, o) == m);
    }
    // X(N) = X(N-tilde, O) after inverting matched weights
    auto v = g.boundary_measurements();
    auto o = orientation_of_matching(g, ms[2]);
    auto gt = invert_matched_weights(g, o);
    auto w = flow_measurements(gt, o);
    CHECK(proj_eq(v, w));
}

TEST_CASE("lollipop flows: sourceless orientation") {
    auto g = lollipop_network<Rat>(4, {Color::Black, Color::Black, Color::White, Color::White});
    auto ms = g.matchings();
    auto o = orientation_of_matching(g, ms[0]);
    auto gt = invert_matched_weights(g, o);
    auto w = flow_measurements(gt, o);
    CHECK(proj_eq(w, torus_point<Rat>(4, {3, 4})));
}

TEST_CASE("bridge insertion realizes the Chevalley action exactly") {
    Rng rng(7);
    for (int trial = 0; trial < 12; ++trial) {
        auto g = square_rat(rng.int_in(1, 5), rng.int_in(1, 5), rng.int_in(1, 5), rng.int_in(1, 5));
        int i = static_cast<int>(rng.int_in(1, 4));
        Rat a = rng.positive_rat();
        auto before = g.boundary_measurements();
        auto h = g;
        h.add_bridge(i, a);
        h.validate();
        auto after = h.boundary_measurements();
        auto expect = chevalley_x(before, i, a);
        for (size_t idx = 0; idx < after.coords.size(); ++idx)
            CHECK(after.coords[idx] == expect.coords[idx]);
    }
}

TEST_CASE("lollipop insertion shifts labels") {
    auto g = square_rat(1, 2, 3, 4);
    auto before = g.boundary_measurements();
    auto h = g;
    h.add_lollipop(2, Color::Black);
    h.validate();
    CHECK(h.n == 5);
    auto after = h.boundary_measurements();
    // inserting a black lollipop at position 2 inserts a zero column
    for (const Subset& I : all_subsets(5, 2)) {
        if (contains(I, 2)) {
            CHECK(after.at(I) == Rat(0));
        } else {
            Subset J;
            for (int x : I) J.push_back(x > 2 ? x - 1 : x);
            CHECK(after.at(I) == before.at(J));
        }
    }
}

TEST_CASE("M2 contraction preserves the point") {
    auto g = square_rat(2, 3, 5, 7);
    auto h = g;
    h.add_bridge(1, Rat(4));  // creates degree-2 buffers
    auto w1 = h.boundary_measurements();
    auto h2 = h.m2_simplify();
    h2.validate();
    CHECK(proj_eq(h2.boundary_measurements(), w1));
    CHECK(h2.graph_perm() == h.graph_perm());
}

TEST_CASE("M1 spider move preserves the point") {
    auto g = square_sym();
    auto v = g.boundary_measurements();
    // locate the interior quadrilateral face
    std::vector<int> corners;
    for (const auto& f : g.faces()) {
        if (f.size() != 4) continue;
        bool all_interior = true;
        corners.clear();
        for (auto [e, dir] : f) {
            int from = dir == 0 ? g.edges[static_cast<size_t>(e)].u : g.edges[static_cast<size_t>(e)].v;
            all_interior = all_interior && !g.verts[static_cast<size_t>(from)].boundary;
            corners.push_back(from);
        }
        if (all_interior) break;
        corners.clear();
    }
    REQUIRE(corners.size() == 4);
    auto h = g.m1(corners);
    CHECK(proj_eq(h.boundary_measurements(), v));
    CHECK(h.graph_perm() == g.graph_perm());
    CHECK(h.face_count() == g.face_count());

    // unit weights: the inner square carries 1/2 everywhere
    auto gu = square_rat(1, 1, 1, 1);
    std::vector<int> cu;
    for (const auto& f : gu.faces()) {
        if (f.size() != 4) continue;
        bool all_interior = true;
        cu.clear();
        for (auto [e, dir] : f) {
            int from = dir == 0 ? gu.edges[static_cast<size_t>(e)].u : gu.edges[static_cast<size_t>(e)].v;
            all_interior = all_interior && !gu.verts[static_cast<size_t>(from)].boundary;
            cu.push_back(from);
        }
        if (all_interior) break;
        cu.clear();
    }
    auto hu = gu.m1(cu);
    int halves = 0;
    for (const auto& e : hu.edges)
        if (e.alive && e.weight == Rat(1, 2)) ++halves;
    CHECK(halves == 4);
    CHECK(proj_eq(hu.boundary_measurements(), gu.boundary_measurements()));
}

TEST_CASE("R1 parallel merge preserves the point") {
    auto g = PlanarNetwork<Rat>::with_boundary(2);
    int b = g.add_vertex(Color::Black);
    int w = g.add_vertex(Color::White);
    int p1 = g.add_edge(g.boundary_vertex(1), b, Rat(1));
    int p2 = g.add_edge(g.boundary_vertex(2), w, Rat(1));
    int e1 = g.add_edge(b, w, Rat(3));
    int e2 = g.add_edge(b, w, Rat(5));
    g.verts[static_cast<size_t>(g.boundary_vertex(1))].rot = {p1};
    g.verts[static_cast<size_t>(g.boundary_vertex(2))].rot = {p2};
    g.verts[static_cast<size_t>(b)].rot = {p1, e1, e2};
    g.verts[static_cast<size_t>(w)].rot = {p2, e2, e1};
    g.validate();
    auto v = g.boundary_measurements();
    auto h = g.r1(e1, e2);
    CHECK(proj_eq(h.boundary_measurements(), v));
    int live_edges = 0;
    for (const auto& e : h.edges) live_edges += e.alive;
    CHECK(live_edges == 3);
}

TEST_CASE("R2 and R3 preserve the point") {
    auto g = PlanarNetwork<Rat>::with_boundary(2);
    int b = g.add_vertex(Color::Black);
    int w = g.add_vertex(Color::White);
    int leaf = g.add_vertex(Color::Black);
    int p1 = g.add_edge(g.boundary_vertex(1), b, Rat(1));
    int p2 = g.add_edge(g.boundary_vertex(2), b, Rat(1));
    int ew = g.add_edge(b, w, Rat(2));
    int el = g.add_edge(w, leaf, Rat(3));
    g.verts[static_cast<size_t>(g.boundary_vertex(1))].rot = {p1};
    g.verts[static_cast<size_t>(g.boundary_vertex(2))].rot = {p2};
    g.verts[static_cast<size_t>(b)].rot = {p1, ew, p2};
    g.verts[static_cast<size_t>(w)].rot = {ew, el};
    g.verts[static_cast<size_t>(leaf)].rot = {el};
    g.validate();
    auto v = g.boundary_measurements();
    auto h = g.r2(leaf);
    CHECK(proj_eq(h.boundary_measurements(), v));

    // dipole on the side
    auto gd = g;
    int d1 = gd.add_vertex(Color::Black);
    int d2 = gd.add_vertex(Color::White);
    int de = gd.add_edge(d1, d2, Rat(5));
    gd.verts[static_cast<size_t>(d1)].rot = {de};
    gd.verts[static_cast<size_t>(d2)].rot = {de};
    gd.validate();
    auto vd = gd.boundary_measurements();
    auto hd = gd.r3(de);
    CHECK(proj_eq(hd.boundary_measurements(), vd));
}

TEST_CASE("grid network represents the top cell") {
    for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 6}}) {
        std::vector<std::vector<Rat>> w(static_cast<size_t>(k),
                                        std::vector<Rat>(static_cast<size_t>(n - k), Rat(1)));
        auto g = grid_network<Rat>(k, n, w);
        g.validate();
        CHECK(g.graph_perm() == Baff::identity(k, n));
        CHECK(g.is_reduced());
        CHECK(g.face_count() == k * (n - k) + 1);
        auto v = g.boundary_measurements();
        CHECK(is_tnn(v));
        CHECK(matroid_of(v).bases.size() == binomial(n, k));
    }
}

TEST_CASE("grid with distinct weights hits a generic positive point") {
    Rng rng(11);
    std::vector<std::vector<Rat>> w(2, std::vector<Rat>(3));
    for (auto& row : w)
        for (auto& x : row) x = rng.positive_rat();
    auto g = grid_network<Rat>(2, 5, w);
    auto v = g.boundary_measurements();
    CHECK(check_plucker(v));
    CHECK(is_tnn(v));
    CHECK(perm_of_point(representative(v)) == Baff::identity(2, 5));
}

TEST_CASE("spherical network: equatorial measurements factor as a direct sum") {
    Rng rng(13);
    for (int t = 0; t < 15; ++t) {
        auto up = square_rat(rng.int_in(1, 6), rng.int_in(1, 6), rng.int_in(1, 6), rng.int_in(1, 6));
        std::vector<std::vector<Rat>> w(1, std::vector<Rat>(3));
        for (auto& x : w[0]) x = rng.positive_rat();
        auto lo = grid_network<Rat>(1, 4, w);
        auto xu = up.boundary_measurements();
        auto xl = lo.boundary_measurements();
        SphericalNetwork<Rat> s(up, lo);
        auto eq = s.equatorial_measurements();
        auto ds = direct_sum(xu, xl);
        REQUIRE(eq.has_value() == ds.has_value());
        if (eq) CHECK(proj_eq(*eq, *ds));
        // hemisphere normalization kept the hemispheres' own measurements
        CHECK(proj_eq(s.upper.boundary_measurements(), xu));
        CHECK(proj_eq(s.lower.boundary_measurements(), xl));
    }
}

TEST_CASE("spherical network: lollipop lower hemisphere contributes nothing") {
    auto up = square_rat(2, 3, 4, 5);
    auto lo = lollipop_network<Rat>(4, {Color::Black, Color::Black, Color::Black, Color::Black});
    SphericalNetwork<Rat> s(up, lo);
    auto eq = s.equatorial_measurements();
    REQUIRE(eq.has_value());
    CHECK(proj_eq(*eq, up.boundary_measurements()));
}

TEST_CASE("spherical network: overlapping spans give zero") {
    std::vector<std::vector<Rat>> w(1, std::vector<Rat>(1, Rat(1)));
    auto up = grid_network<Rat>(1, 2, w);
    SphericalNetwork<Rat> s(up, up);
    CHECK(!s.equatorial_measurements().has_value());
}

TEST_CASE("symbolic measurements satisfy the Plucker relations identically") {
    auto g = square_sym();
    auto h = g;
    h.add_bridge(2, RatFunc::variable(Var("st")));
    h.add_bridge(4, RatFunc::variable(Var("su")));
    auto v = h.boundary_measurements();
    CHECK(check_plucker(v));
}
