#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "positroid/forms.hpp"
#include "positroid/rng.hpp"

using namespace positroid;

namespace {

std::vector<Rat> random_positive(Rng& rng, int d) {
    std::vector<Rat> v;
    for (int i = 0; i < d; ++i) v.push_back(rng.positive_rat());
    return v;
}

Subset lead_chart(const ChartFamily& fam) {
    size_t idx = 0;
    for (const Subset& I : all_subsets(fam.v.n, fam.v.k)) {
        if (ScalarOps<RatFunc>::nonzero(fam.v.coords[idx])) return I;
        ++idx;
    }
    throw std::logic_error("no chart");
}

}  // namespace

TEST_CASE("coordinate edges: sizes from face counts") {
    auto lolli = lollipop_network<Rat>(4, {Color::Black, Color::Black, Color::White, Color::White});
    CHECK(coordinate_edges(lolli).empty());

    auto sq = square_network<Rat>(Rat(1), Rat(2), Rat(3), Rat(4));
    CHECK(coordinate_edges(sq).size() == 4);
    CHECK(sq.face_count() - 1 == 4);

    std::vector<std::vector<Rat>> w(2, std::vector<Rat>(2, Rat(1)));
    auto grid = grid_network<Rat>(2, 4, w);
    CHECK(coordinate_edges(grid).size() == 4);
}

TEST_CASE("zero-dimensional cells have density one") {
    auto chart = graph_for(Baff::t_of({2, 4}, 4));
    auto fam = bridge_family(chart);
    CHECK(fam.dim() == 0);
    CHECK(density_at(fam, lead_chart(fam), {}, {}) == Rat(1));
}

TEST_CASE("Gr(1,3) top cell: density is 1/(x2 x3) in the Delta_1 chart") {
    auto chart = graph_for(Baff::identity(1, 3));
    auto fam = bridge_family(chart);
    REQUIRE(fam.dim() == 2);
    Subset I{1};
    auto active = choose_active(fam, I);
    REQUIRE(active.size() == 2);
    Rng rng(3);
    int sign = 0;
    for (int t = 0; t < 10; ++t) {
        auto t0 = random_positive(rng, 2);
        Rat rho = density_at(fam, I, active, t0);
        // chart coordinates at t0
        auto x = chart_matrix(fam.v, I);
        auto value_of = [&](Var v) {
            for (size_t i = 0; i < fam.params.size(); ++i)
                if (fam.params[i].id == v.id) return t0[i];
            throw std::logic_error("unknown var");
        };
        Rat x2 = x.at(0, 1).eval(value_of), x3 = x.at(0, 2).eval(value_of);
        Rat prod = rho * x2 * x3;
        CHECK(rat_abs(prod) == Rat(1));
        if (sign == 0) sign = sgn(prod);
        CHECK(sgn(prod) == sign);
    }
}

TEST_CASE("Prop OmegaGr: omega_id = +-omega symbolically for Gr(2,4)") {
    auto chart = graph_for(Baff::identity(2, 4));
    auto fam = bridge_family(chart);
    Subset I{1, 2};
    auto active = choose_active(fam, I);
    REQUIRE(active.size() == 4);
    // symbolic Jacobian
    auto x = chart_matrix(fam.v, I);
    Mat<RatFunc> J(4, 4);
    for (size_t p = 0; p < active.size(); ++p)
        for (size_t q = 0; q < fam.params.size(); ++q)
            J.at(static_cast<int>(p), static_cast<int>(q)) =
                x.at(active[p].first - 1, active[p].second - 1).partial(fam.params[q]);
    RatFunc dj = det_cofactor(J);
    RatFunc prod_t(Rat(1));
    for (Var v : fam.params) prod_t = prod_t * RatFunc::variable(v);
    RatFunc lhs = dj * prod_t;
    RatFunc rhs(Rat(1));
    int n = 4, k = 2;
    for (int i = 1; i <= n; ++i) {
        Subset cyc;
        for (int j = 0; j < k; ++j) cyc.push_back((i - 1 + j) % n + 1);
        std::sort(cyc.begin(), cyc.end());
        rhs = rhs * (fam.v.at(cyc) / fam.v.at(I));
    }
    bool match = lhs == rhs || lhs == (RatFunc() - rhs);
    CHECK(match);
}

TEST_CASE("E'-choice invariance of the density up to sign") {
    auto g = square_network<Rat>(Rat(1), Rat(1), Rat(1), Rat(1));
    auto e1 = coordinate_edges(g);
    // a different grove: feed the edges in reverse by reversing ids through a
    // relabeled copy
    std::vector<int> e2;
    {
        // greedy from the back: build the forest preferring late edges
        std::vector<int> parent(g.verts.size());
        std::vector<char> hasb(g.verts.size(), 0);
        for (size_t i = 0; i < parent.size(); ++i) {
            parent[i] = static_cast<int>(i);
            hasb[i] = g.verts[i].boundary;
        }
        std::function<int(int)> find = [&](int x) {
            while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
            return x;
        };
        for (int e = static_cast<int>(g.edges.size()) - 1; e >= 0; --e) {
            int ru = find(g.edges[static_cast<size_t>(e)].u), rv = find(g.edges[static_cast<size_t>(e)].v);
            if (ru != rv && !(hasb[static_cast<size_t>(ru)] && hasb[static_cast<size_t>(rv)])) {
                parent[static_cast<size_t>(ru)] = rv;
                hasb[static_cast<size_t>(rv)] = hasb[static_cast<size_t>(rv)] || hasb[static_cast<size_t>(ru)];
            } else {
                e2.push_back(e);
            }
        }
        std::sort(e2.begin(), e2.end());
    }
    REQUIRE(e1.size() == e2.size());
    REQUIRE(e1 != e2);
    auto fam1 = eprime_family(g, e1, "fe");
    auto fam2 = eprime_family(g, e2, "ff");
    Subset I = lead_chart(fam1);
    auto active = choose_active(fam1, I);
    auto expo2 = face_exponents(g, e2);
    Rng rng(7);
    int sign = 0;
    for (int trial = 0; trial < 8; ++trial) {
        auto t0 = random_positive(rng, static_cast<int>(e1.size()));
        // concrete network for t0 on E'_1; its face weights give t0' on E'_2
        PlanarNetwork<Rat> num = g;
        for (auto& e : num.edges) e.weight = Rat(1);
        for (size_t i = 0; i < e1.size(); ++i)
            num.edges[static_cast<size_t>(e1[i])].weight = t0[i];
        auto y = num.face_weights();
        auto t0p = eprime_coordinates_of_face_weights(expo2, y);
        // same gauge class: same point; compare densities
        Rat r1 = density_at(fam1, I, active, t0);
        Rat r2 = density_at(fam2, I, active, t0p);
        CHECK(rat_abs(r1) == rat_abs(r2));
        if (sign == 0) sign = sgn(r1) * sgn(r2);
        CHECK(sgn(r1) * sgn(r2) == sign);
        // sanity: the two parametrizations really hit the same point
        PlanarNetwork<Rat> num2 = g;
        for (auto& e : num2.edges) e.weight = Rat(1);
        for (size_t i = 0; i < e2.size(); ++i)
            num2.edges[static_cast<size_t>(e2[i])].weight = t0p[i];
        CHECK(proj_eq(num.boundary_measurements(), num2.boundary_measurements()));
    }
}

TEST_CASE("residues at the covers of the Gr(2,4) top cell") {
    Baff id = Baff::identity(2, 4);
    std::vector<std::vector<Rat>> w(2, std::vector<Rat>(2, Rat(1)));
    auto G = grid_network<Rat>(2, 4, w).m2_simplify();
    REQUIRE(G.is_reduced());
    REQUIRE(cell_perm_of_graph(G) == id);
    Rng rng(11);
    int covers_found = 0;
    for (const Baff& f2 : covers(id)) {
        int e = find_cover_edge(G, f2);
        REQUIRE(e >= 0);
        ++covers_found;
        auto Gdel = delete_edge(G, e);
        auto ep_res = coordinate_edges(Gdel);
        auto fam_res = eprime_family(Gdel, ep_res, "fr" + std::to_string(covers_found));
        auto chart2 = graph_for(f2);
        auto fam2 = bridge_family(chart2);
        REQUIRE(fam_res.dim() == fam2.dim());
        Subset I = lead_chart(fam2);
        auto active = choose_active(fam2, I);
        int sign = 0;
        for (int trial = 0; trial < 20; ++trial) {
            auto t0 = random_positive(rng, fam_res.dim());
            // the sample point, as a matrix
            PlanarNetwork<Rat> num = Gdel;
            for (auto& ed : num.edges) ed.weight = Rat(1);
            for (size_t i = 0; i < ep_res.size(); ++i)
                num.edges[static_cast<size_t>(ep_res[i])].weight = t0[i];
            auto X0 = representative(num.boundary_measurements());
            auto a0 = coordinates(chart2, X0);
            Rat r1 = density_at(fam_res, I, active, t0);
            Rat r2 = density_at(fam2, I, active, a0);
            CHECK(rat_abs(r1) == rat_abs(r2));
            if (sign == 0) sign = sgn(r1) * sgn(r2);
            CHECK(sgn(r1) * sgn(r2) == sign);
        }
    }
    CHECK(covers_found == 4);
}

TEST_CASE("move invariance: grid chart density vs bridge chart density") {
    Baff id = Baff::identity(2, 4);
    std::vector<std::vector<Rat>> w(2, std::vector<Rat>(2, Rat(1)));
    auto G = grid_network<Rat>(2, 4, w).m2_simplify();
    auto ep = coordinate_edges(G);
    auto famg = eprime_family(G, ep, "mg");
    auto chart = graph_for(id);
    auto famb = bridge_family(chart);
    Subset I{1, 2};
    auto active = choose_active(famb, I);
    Rng rng(13);
    int sign = 0;
    for (int trial = 0; trial < 10; ++trial) {
        auto t0 = random_positive(rng, static_cast<int>(ep.size()));
        PlanarNetwork<Rat> num = G;
        for (auto& ed : num.edges) ed.weight = Rat(1);
        for (size_t i = 0; i < ep.size(); ++i) num.edges[static_cast<size_t>(ep[i])].weight = t0[i];
        auto X0 = representative(num.boundary_measurements());
        auto a0 = coordinates(chart, X0);
        Rat r1 = density_at(famg, I, active, t0);
        Rat r2 = density_at(famb, I, active, a0);
        CHECK(rat_abs(r1) == rat_abs(r2));
        if (sign == 0) sign = sgn(r1) * sgn(r2);
        CHECK(sgn(r1) * sgn(r2) == sign);
    }
}

TEST_CASE("one-dimensional cells have residue density +-1") {
    // a length-3 cell of Gr(2,4) is one-dimensional
    for (const Baff& f : enumerate_bound(2, 4)) {
        if (length(f) != 3) continue;
        auto chart = graph_for(f);
        auto fam = bridge_family(chart);
        REQUIRE(fam.dim() == 1);
        Subset I = lead_chart(fam);
        auto active = choose_active(fam, I);
        // density of dlog t against x = c * t is 1/(t * c) ... evaluate and
        // check the residue at t -> 0 of rho * x dx pattern: here just check
        // the density times the coordinate is +-1
        auto x = chart_matrix(fam.v, I);
        RatFunc coord = x.at(active[0].first - 1, active[0].second - 1);
        Rat t0(3, 2);
        auto value_of = [&](Var) { return t0; };
        Rat rho = density_at(fam, I, active, {t0});
        Rat val = coord.eval(value_of);
        CHECK(rat_abs(rho * val) == Rat(1));
        break;
    }
}
