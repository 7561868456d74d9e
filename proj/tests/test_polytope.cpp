#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "positroid/polytope.hpp"
#include "positroid/symfun.hpp"

using namespace positroid;

namespace {

PluckerPolynomial deg2_quadric() {
    //  Delta_124 Delta_356 - Delta_123 Delta_456 on Gr(3,6)
    PluckerPolynomial p;
    p.terms.push_back({Rat(1), {{1, 2, 4}, {3, 5, 6}}});
    p.terms.push_back({Rat(-1), {{1, 2, 3}, {4, 5, 6}}});
    return p;
}

PluckerPolynomial cubic_g() {
    PluckerPolynomial p;
    p.terms.push_back({Rat(1), {{1, 2, 3, 5}, {1, 2, 3, 7}, {4, 6, 8, 9}}});
    p.terms.push_back({Rat(-1), {{1, 2, 3, 4}, {1, 2, 3, 7}, {5, 6, 8, 9}}});
    p.terms.push_back({Rat(-1), {{1, 2, 3, 5}, {1, 2, 3, 6}, {4, 7, 8, 9}}});
    p.terms.push_back({Rat(1), {{1, 2, 3, 4}, {1, 2, 3, 6}, {5, 7, 8, 9}}});
    return p;
}

}  // namespace

TEST_CASE("sampled positive Z and witnesses") {
    Rng rng(3);
    ZMap zm = sample_positive_z(6, 4, 2, rng);
    // all maximal minors positive
    std::vector<int> cols{1, 2, 3, 4};
    for (const Subset& L : all_subsets(6, 4)) CHECK(sgn(minor_of(zm.Z, L, cols)) > 0);
    CHECK(verify_witness(zm.Z, *zm.M));
    // a zero row breaks the k = 1 witness
    Mat<Rat> bad = zm.Z;
    for (int c = 0; c < 4; ++c) bad.at(2, c) = Rat(0);
    Mat<Rat> m1(4, 1);
    m1.at(0, 0) = Rat(1);
    CHECK(!verify_witness(bad, m1));
}

TEST_CASE("zmap is defined on TNN points for witnessed Z") {
    Rng rng(5);
    ZMap zm = sample_positive_z(6, 4, 2, rng);
    auto chart = graph_for(Baff::identity(2, 6));
    for (int t = 0; t < 40; ++t) {
        std::vector<Rat> vals;
        for (int i = 0; i < chart.dim(); ++i) vals.push_back(rng.positive_rat());
        auto x = parametrize(chart, vals);
        auto y = zmap(x, zm.Z);
        CHECK(y.has_value());
    }
    // a point whose row space lies in ker(Z) is exceptional
    Mat<Rat> zsmall(4, 2);
    zsmall.at(0, 0) = Rat(1);
    zsmall.at(1, 1) = Rat(1);  // rows 3,4 zero: e3, e4 in the kernel
    Mat<Rat> x(1, 4);
    x.at(0, 2) = Rat(1);
    CHECK(!zmap(x, zsmall).has_value());
}

TEST_CASE("the deg2 quadric vanishes under psi on the interval cell") {
    Rng rng(7);
    Baff f = parse_window("[2,5,4,7,6,9]");  // intervals [1,2],[3,4],[5,6]
    auto chart = graph_for(f);
    auto p = deg2_quadric();
    for (int t = 0; t < 25; ++t) {
        ZMap zm = sample_positive_z(6, 5, 2, rng);
        std::vector<Rat> vals;
        for (int i = 0; i < chart.dim(); ++i) vals.push_back(rng.positive_rat());
        auto x = parametrize(chart, vals);
        auto y = x * zm.Z;
        CHECK(psi_substitute(p, y, zm.Z) == Rat(0));
    }
    // nonvanishing control: the quadric does not vanish at top-cell points
    int nonzero = 0;
    auto top = graph_for(Baff::identity(2, 6));
    for (int t = 0; t < 5; ++t) {
        ZMap zm = sample_positive_z(6, 5, 2, rng);
        std::vector<Rat> vals;
        for (int i = 0; i < top.dim(); ++i) vals.push_back(rng.positive_rat());
        auto y = parametrize(top, vals) * zm.Z;
        if (!is_zero(psi_substitute(p, y, zm.Z))) ++nonzero;
    }
    CHECK(nonzero == 5);
}

TEST_CASE("the cubic vanishes under psi on its cell") {
    Rng rng(11);
    Baff f = parse_window("[2,3,6,5,8,7,10,9,13]");
    auto chart = graph_for(f);
    auto g = cubic_g();
    for (int t = 0; t < 10; ++t) {
        ZMap zm = sample_positive_z(9, 7, 2, rng);
        std::vector<Rat> vals;
        for (int i = 0; i < chart.dim(); ++i) vals.push_back(rng.positive_rat());
        auto x = parametrize(chart, vals);
        auto y = x * zm.Z;
        CHECK(psi_substitute(g, y, zm.Z) == Rat(0));
    }
}

TEST_CASE("BCFW base cases and k = 1 counts") {
    CHECK(bcfw_cells(0, 7).cells.size() == 1);
    CHECK(bcfw_cells(2, 6).cells.size() == 1);
    CHECK(bcfw_cells(2, 6).cells[0] == Baff::identity(2, 6));
    for (int n = 5; n <= 9; ++n) {
        auto c = bcfw_cells(1, n);
        CHECK(c.cells.size() == static_cast<size_t>((n - 3) * (n - 4) / 2));
        // supports match {1, i-1, i, j-1, j}
        std::vector<Subset> got;
        for (const Baff& f : c.cells) {
            Subset supp;
            for (const Subset& b : positroid_of(f).bases) supp.push_back(b[0]);
            std::sort(supp.begin(), supp.end());
            got.push_back(supp);
        }
        std::sort(got.begin(), got.end());
        CHECK(got == k1_bcfw_simplices(n));
        for (const Baff& f : c.cells) CHECK(length(f) == 1 * (n - 1) - 4);
    }
}

TEST_CASE("BCFW cells are independent at r = k+4") {
    for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 6}, {1, 7}, {2, 7}}) {
        auto c = bcfw_cells(k, n);
        CHECK(!c.cells.empty());
        for (const Baff& f : c.cells) {
            CHECK(length(f) == k * (n - k) - 4 * k);
            CHECK(is_independent(f, k + 4));
        }
    }
}

TEST_CASE("triangulation certificate for small cyclic polytopes") {
    Rng rng(13);
    for (int n = 5; n <= 7; ++n) {
        ZMap zm = sample_positive_z(n, 5, 1, rng);
        auto rep = k1_triangulation_check(n, zm.Z, 300, 42, 1);
        CHECK(rep.clean());
        // deterministic across thread counts
        auto rep4 = k1_triangulation_check(n, zm.Z, 300, 42, 4);
        CHECK(rep.str() == rep4.str());
    }
    // negative control: drop a simplex
    ZMap zm = sample_positive_z(6, 5, 1, rng);
    auto cells = k1_bcfw_simplices(6);
    TriangulationReport rep;
    rep.n = 6;
    rep.cells = cells;
    cells.pop_back();
    int bad = 0;
    for (int s = 0; s < 200; ++s) {
        Rng r2 = Rng::fork(99, static_cast<std::uint64_t>(s));
        std::vector<Rat> x(5, Rat(0));
        for (int row = 0; row < 6; ++row) {
            Rat l = r2.positive_rat(97, 13);
            for (int c = 0; c < 5; ++c) x[static_cast<size_t>(c)] += l * zm.Z.at(row, c);
        }
        bool any = false;
        for (const Subset& cell : cells) any = any || simplex_contains(zm.Z, cell, x) != Containment::Outside;
        if (!any) ++bad;
    }
    CHECK(bad > 0);
}

TEST_CASE("segment forms add up") {
    // r = 2: segment [z1, z3] split at z2
    Mat<Rat> z(3, 2);
    z.at(0, 0) = Rat(1);
    z.at(1, 0) = Rat(1);
    z.at(1, 1) = Rat(1);
    z.at(2, 0) = Rat(1);
    z.at(2, 1) = Rat(2);
    std::vector<Var> xs{Var("fx1"), Var("fx2")};
    auto whole = simplex_form(z, {1, 3}, xs);
    auto sum = triangulation_form_sum(z, {{1, 2}, {2, 3}}, xs);
    CHECK(whole == sum);
}

TEST_CASE("two triangulations of the pentagon agree") {
    // pentagon in P^2: convex position
    Mat<Rat> z(5, 3);
    long pts[5][2] = {{0, 0}, {2, 0}, {3, 2}, {1, 4}, {-1, 2}};
    for (int i = 0; i < 5; ++i) {
        z.at(i, 0) = Rat(1);
        z.at(i, 1) = Rat(pts[i][0]);
        z.at(i, 2) = Rat(pts[i][1]);
    }
    std::vector<Var> xs{Var("px1"), Var("px2"), Var("px3")};
    std::vector<Subset> fan1{{1, 2, 3}, {1, 3, 4}, {1, 4, 5}};
    std::vector<Subset> fan2{{1, 2, 5}, {2, 3, 4}, {2, 4, 5}};
    CHECK(triangulation_form_sum(z, fan1, xs) == triangulation_form_sum(z, fan2, xs));
    // and they agree with the generic facet-fan construction
    auto facets = cyclic_polytope_facets(z);
    CHECK(facets.size() == 5);
    CHECK(fan_triangulation(z, 1) == fan1);
}

TEST_CASE("BCFW k=1 cells and the fan triangulation of C(6,4) have equal forms") {
    Rng rng(17);
    ZMap zm = sample_positive_z(6, 5, 1, rng);
    std::vector<Var> xs{Var("cx1"), Var("cx2"), Var("cx3"), Var("cx4"), Var("cx5")};
    auto bc = k1_bcfw_simplices(6);
    auto fan = fan_triangulation(zm.Z, 1);
    CHECK(triangulation_form_sum(zm.Z, bc, xs) == triangulation_form_sum(zm.Z, fan, xs));
}

TEST_CASE("evenness sign probes") {
    CHECK(satisfies_evenness({2, 3, 6, 7}, 8));
    CHECK(satisfies_evenness({1, 2, 3, 4}, 8));
    CHECK(!satisfies_evenness({1, 2, 4, 6}, 8));
    Rng rng(19);
    ZMap zm = sample_positive_z(8, 6, 2, rng);
    auto rep1 = evenness_sign_probe(zm.Z, 2, {1, 2, 3, 4}, 60, 7, 1);
    CHECK(rep1.fixed_sign());
    auto rep2 = evenness_sign_probe(zm.Z, 2, {2, 3, 6, 7}, 60, 7, 1);
    CHECK(rep2.fixed_sign());
    CHECK(rep2.str() == evenness_sign_probe(zm.Z, 2, {2, 3, 6, 7}, 60, 7, 3).str());
    // a non-evenness subset with a sign change somewhere
    bool mixed_found = false;
    for (const Subset& I : all_subsets(8, 4)) {
        if (satisfies_evenness(I, 8)) continue;
        auto rep = evenness_sign_probe(zm.Z, 2, I, 40, 11, 1);
        if (!rep.fixed_sign()) {
            mixed_found = true;
            break;
        }
    }
    CHECK(mixed_found);
}
