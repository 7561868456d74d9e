#include "positroid/acceptance.hpp"

#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "positroid/forms.hpp"
#include "positroid/io.hpp"
#include "positroid/polytope.hpp"
#include "positroid/reduction.hpp"
#include "positroid/relspace.hpp"
#include "positroid/rng.hpp"
#include "positroid/symfun.hpp"
#include "positroid/tableaux.hpp"
#include "positroid/tl.hpp"

namespace positroid {

namespace {

struct Scorecard {
    std::ostream& out;
    int fails = 0;
    std::ostringstream detail;

    void check(bool ok, const std::string& what) {
        if (!ok) detail << "    violated: " << what << "\n";
    }
    void finish(int num, const std::string& title) {
        bool ok = detail.str().empty();
        out << "criterion " << num << " " << (ok ? "PASS" : "FAIL") << ": " << title << "\n";
        if (!ok) {
            out << detail.str();
            ++fails;
        }
        detail.str("");
    }
};

std::vector<Rat> positive_params(Rng& rng, int d) {
    std::vector<Rat> v;
    for (int i = 0; i < d; ++i) v.push_back(rng.positive_rat());
    return v;
}

PlanarNetwork<RatFunc> square_abcd() {
    return square_network<RatFunc>(RatFunc::variable(Var("a")), RatFunc::variable(Var("b")),
                                   RatFunc::variable(Var("c")), RatFunc::variable(Var("d")));
}

// ---------------------------------------------------------------------- 1
void criterion1(Scorecard& sc) {
    // square graph measurement table
    {
        auto g = square_abcd();
        auto v = g.boundary_measurements();
        RatFunc a = RatFunc::variable(Var("a")), b = RatFunc::variable(Var("b")),
                c = RatFunc::variable(Var("c")), d = RatFunc::variable(Var("d"));
        sc.check(v.at({1, 2}) == a && v.at({1, 3}) == a * c + b * d && v.at({1, 4}) == b &&
                     v.at({2, 3}) == d && v.at({2, 4}) == RatFunc(Rat(1)) && v.at({3, 4}) == c,
                 "square graph table");
        auto t = g.trips();
        sc.check(t.perm[1] == 3 && t.perm[2] == 4 && t.perm[3] == 1 && t.perm[4] == 2,
                 "square graph trip permutation (3,4,1,2)");
    }
    // lollipop point
    {
        auto g = lollipop_network<Rat>(4, {Color::Black, Color::Black, Color::White, Color::White});
        sc.check(proj_eq(g.boundary_measurements(), torus_point<Rat>(4, {3, 4})),
                 "lollipop network represents e_{34}");
    }
    // necklace of [2,4,6,5,7,9]
    sc.check(necklace_of(parse_window("[2,4,6,5,7,9]")).str() == "(13,23,34,46,56,16)",
             "necklace of [2,4,6,5,7,9]");
    // the 3x6 point: f_X, necklace, ranks
    {
        Mat<Rat> m(3, 6);
        long vals[3][6] = {{1, 1, 0, 0, 0, 0}, {0, 1, 4, 6, 0, 0}, {0, 0, 1, 2, 2, 1}};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 6; ++j) m.at(i, j) = Rat(vals[i][j]);
        Baff f = perm_of_point(m);
        sc.check(f.str() == "[4,7,5,8,6,9]", "f_X of the 3x6 point");
        std::vector<Subset> want{{1, 2, 3}, {2, 3, 4}, {1, 3, 4}, {1, 4, 5}, {1, 2, 5}, {1, 2, 6}};
        sc.check(necklace_of_point(plucker_of(m)).subsets == want, "necklace of the 3x6 point");
        auto rm = rank_matrix_of(f);
        sc.check(rm.rank(1, 2) == 2 && rm.rank(5, 6) == 1, "r(1,2)=2 and r(5,6)=1");
    }
    // all ten rows of the Bound(2,4) class table
    {
        auto row = [&](const char* w, const char* tf) {
            sc.check(affine_stanley(parse_window(w)).str() == tf,
                     std::string("class table row ") + w);
        };
        row("[3,4,5,6]", "1");
        row("[3,5,4,6]", "s[1]");
        row("[2,5,4,7]", "s[2] + s[1,1]");
        row("[3,5,6,4]", "s[1,1]");
        row("[5,3,4,6]", "s[2]");
        row("[5,2,4,7]", "s[2,1]");
        row("[5,3,6,4]", "s[2,1]");
        row("[3,6,5,4]", "s[2,1]");
        row("[5,2,7,4]", "s[2,2] + s[2,1,1] - s[1,1,1,1]");
        row("[5,6,3,4]", "s[2,2]");
        sc.check(positroid_class(parse_window("[5,2,7,4]")).p == parse_schur("s[2,2]"),
                 "class of [5,2,7,4] is s22");
    }
    // promotion example and its 6-cycle
    {
        std::vector<RectTableau> cycle{
            RectTableau::of_rows({{1, 1, 3, 4, 4}, {2, 3, 4, 5, 5}, {4, 4, 6, 6, 6}}),
            RectTableau::of_rows({{1, 1, 1, 2, 2}, {3, 4, 4, 5, 5}, {5, 5, 5, 6, 6}}),
            RectTableau::of_rows({{1, 1, 2, 3, 3}, {2, 2, 4, 5, 5}, {6, 6, 6, 6, 6}}),
            RectTableau::of_rows({{1, 1, 1, 1, 1}, {2, 2, 3, 4, 4}, {3, 3, 5, 6, 6}}),
            RectTableau::of_rows({{1, 1, 2, 2, 2}, {2, 2, 3, 3, 5}, {4, 4, 4, 5, 6}}),
            RectTableau::of_rows({{1, 2, 2, 3, 3}, {3, 3, 3, 4, 4}, {5, 5, 5, 6, 6}}),
        };
        bool ok = true;
        for (size_t i = 0; i < 6; ++i) ok = ok && promote(cycle[i], 6) == cycle[(i + 1) % 6];
        sc.check(ok, "promotion 6-cycle");
    }
    // the 14-element Demazure crystal
    {
        auto dem = demazure_crystal({1, 3}, 2, 4);
        sc.check(dem.size() == 14, "14-element crystal B_{13}(2w2)");
    }
    // cyclic Demazure crystal of [2547]: 9 tableaux and the 9-term character
    {
        Baff f = parse_window("[2,5,4,7]");
        auto crystal = cyclic_demazure(f, 2);
        sc.check(crystal.size() == 9, "9 tableaux in B_{[2547]}(2w2)");
        MPoly x1 = MPoly::variable(Var("x1")), x2 = MPoly::variable(Var("x2")),
              x3 = MPoly::variable(Var("x3")), x4 = MPoly::variable(Var("x4"));
        MPoly expect = (x1 * x1 + x1 * x2 + x2 * x2) * (x3 * x3 + x3 * x4 + x4 * x4);
        sc.check(crystal_character(crystal, 4) == expect, "9-term character of V_{[2547]}(2w2)");
    }
    // the five pairings <-> five tableaux
    {
        int full = 0;
        bool ok = true;
        for (const auto& p : all_pairings(3, 6)) {
            if (!p.T.empty() || p.arcs.size() != 3) continue;
            ++full;
            ok = ok && theta_inverse(theta(p), 6) == p;
        }
        sc.check(full == 5 && ok, "five pairings match five tableaux under theta");
    }
    // truncation examples
    {
        auto cls = positroid_class(parse_window("[2,3,4,8,6,7,12]"));
        sc.check(truncate(cls, 5).p == parse_schur("s[1]"), "tau_5 = s1");
        sc.check(truncate(cls, 6).p == parse_schur("s[3] + s[2,1]"), "tau_6 = s3 + s21");
        Baff f2 = parse_window("[4,3,6,5,8,7,10,9]");
        sc.check(truncate(positroid_class(f2), 6).p.coeff({}) == 2 &&
                     affine_stanley(f2).coeff({2, 2}) == 2,
                 "two-to-one s22 coefficient");
        sc.check(is_independent(parse_window("[4,3,6,5,7]"), 4), "[4,3,6,5,7] is independent");
        sc.check(!is_independent(parse_window("[6,3,4,5,7]"), 4), "[6,3,4,5,7] is dependent");
    }
    // trivalent star relation space and its sign vector
    {
        RatFunc a = RatFunc::variable(Var("ta")), b = RatFunc::variable(Var("tb")),
                c = RatFunc::variable(Var("tc"));
        auto g = BicoloredNetwork<RatFunc>::with_boundary(3);
        int v = g.add_vertex(Color::Black);
        g.add_edge(g.boundary_vertex(1), v, a);
        g.add_edge(g.boundary_vertex(2), v, b);
        g.add_edge(g.boundary_vertex(3), v, c);
        auto rel = relation_space(g);
        bool ok = rel.defined();
        if (ok) {
            auto pv = rel.pluckers();
            ok = pv.at({1, 2}) * (RatFunc(Rat(-1)) / (a * c)) ==
                     pv.at({1, 3}) * (RatFunc(Rat(1)) / (a * b)) &&
                 pv.at({1, 2}) * (RatFunc(Rat(1)) / (b * c)) ==
                     pv.at({2, 3}) * (RatFunc(Rat(1)) / (a * b));
        }
        sc.check(ok, "trivalent star relation space");

        auto p = PlanarNetwork<Rat>::with_boundary(3);
        int cvert = p.add_vertex(Color::Black);
        std::vector<int> es;
        for (int i = 1; i <= 3; ++i) es.push_back(p.add_edge(p.boundary_vertex(i), cvert, Rat(1)));
        for (int i = 1; i <= 3; ++i)
            p.verts[static_cast<size_t>(p.boundary_vertex(i))].rot = {es[static_cast<size_t>(i - 1)]};
        p.verts[static_cast<size_t>(cvert)].rot = {es[0], es[1], es[2]};
        auto eps = sign_vector(p);
        sc.check(eps == std::vector<int>{1, -1, 1}, "trivalent star sign vector (1,-1,1)");
    }
    sc.finish(1, "paper-example golden suite");
}

// ---------------------------------------------------------------------- 2
void criterion2(Scorecard& sc, Rng& rng) {
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k <= std::min(3, n); ++k) {
            auto all = enumerate_bound(k, n);
            for (const Baff& f : all) {
                if (!(perm_of(necklace_of(f)) == f)) {
                    sc.check(false, "necklace round trip " + f.str());
                    break;
                }
                CyclicRankMatrix rm = rank_matrix_of(f);
                if (!(perm_of_rank_matrix(rm) == f) ||
                    !(necklace_of_rank_matrix(rm) == necklace_of(f))) {
                    sc.check(false, "rank matrix triple " + f.str());
                    break;
                }
            }
            // Bruhat order vs positroid containment on all pairs
            size_t m = all.size();
            std::vector<CyclicRankMatrix> rms;
            std::vector<std::uint64_t> masks;  // only valid when C(n,k) <= 64
            auto subs = all_subsets(n, k);
            std::map<Subset, int> sub_index;
            for (size_t i = 0; i < subs.size(); ++i) sub_index[subs[i]] = static_cast<int>(i);
            for (const Baff& f : all) {
                rms.push_back(rank_matrix_of(f));
                std::uint64_t mask = 0;
                for (const Subset& b : positroid_of(f).bases)
                    mask |= 1ULL << sub_index[b];
                masks.push_back(mask);
            }
            int bad = 0;
            for (size_t i = 0; i < m; ++i)
                for (size_t j = 0; j < m; ++j) {
                    bool leq = rms[i] <= rms[j];
                    bool cont = (masks[i] & masks[j]) == masks[i];
                    if (leq != cont) ++bad;
                }
            sc.check(bad == 0, "Morder mismatch count " + std::to_string(bad) + " at (" +
                                   std::to_string(k) + "," + std::to_string(n) + ")");
        }
    // Oh's theorem vs the sampling oracle on every cell of Gr(2,4), Gr(2,5)
    for (int n : {4, 5}) {
        for (const Baff& f : enumerate_bound(2, n)) {
            auto chart = graph_for(f);
            auto m = parametrize(chart, positive_params(rng, chart.dim()));
            if (!(matroid_of(plucker_of(m)) == positroid_of(f))) {
                sc.check(false, "Oh cell " + f.str());
                break;
            }
        }
    }
    sc.finish(2, "bijection and order suite (exhaustive, n <= 6, k <= 3)");
}

// random planar bipartite network from a random cell chart, with occasional
// parallel-edge splits so the generated family is not all reduced
PlanarNetwork<Rat> random_network(Rng& rng, int max_interior = 8) {
    while (true) {
        int n = static_cast<int>(rng.int_in(3, 6));
        int k = static_cast<int>(rng.int_in(1, std::min(3, n - 1)));
        auto all = enumerate_bound(k, n);
        const Baff& f = all[rng.below(all.size())];
        auto chart = graph_for(f);
        auto g = network_for(chart, positive_params(rng, chart.dim())).m2_simplify();
        if (static_cast<int>(g.interior_vertices().size()) > max_interior) continue;
        if (rng.below(2)) {
            // split a random interior edge into two parallel edges
            std::vector<int> cands;
            for (size_t e = 0; e < g.edges.size(); ++e) {
                const auto& ed = g.edges[e];
                if (ed.alive && !g.verts[static_cast<size_t>(ed.u)].boundary &&
                    !g.verts[static_cast<size_t>(ed.v)].boundary)
                    cands.push_back(static_cast<int>(e));
            }
            if (!cands.empty()) {
                int e = cands[rng.below(cands.size())];
                Rat w = g.edges[static_cast<size_t>(e)].weight;
                Rat w1 = rng.positive_rat();
                Rat w2 = w - w1;
                if (sgn(w2) > 0) {
                    g.edges[static_cast<size_t>(e)].weight = w1;
                    int ne = g.add_edge(g.edges[static_cast<size_t>(e)].u,
                                        g.edges[static_cast<size_t>(e)].v, w2);
                    for (int v : {g.edges[static_cast<size_t>(e)].u, g.edges[static_cast<size_t>(e)].v}) {
                        auto& rot = g.verts[static_cast<size_t>(v)].rot;
                        rot.insert(std::find(rot.begin(), rot.end(), e), ne);
                    }
                }
            }
        }
        try {
            g.validate();
        } catch (const std::invalid_argument&) {
            continue;
        }
        return g;
    }
}

// ---------------------------------------------------------------------- 3
void criterion3(Scorecard& sc, Rng& rng) {
    // symbolic Plucker relations for 50 random graphs
    int sym_bad = 0;
    for (int t = 0; t < 50; ++t) {
        auto g = random_network(rng);
        auto s = symbolize(g);
        int idx = 0;
        for (auto& e : s.edges)
            if (e.alive) e.weight = RatFunc::variable(Var("c3t" + std::to_string(t) + "e" + std::to_string(idx++)));
        try {
            if (!check_plucker(s.boundary_measurements())) ++sym_bad;
        } catch (const NoMatchings&) {
        }
    }
    sc.check(sym_bad == 0, "symbolic Plucker relations failures: " + std::to_string(sym_bad));

    // move invariance over 200 random applicable moves
    int moves_done = 0, move_bad = 0;
    while (moves_done < 200) {
        auto g = random_network(rng);
        // sometimes plant an R2 site (a forced leaf hanging off an interior
        // white vertex) or an R3 site (a dipole component)
        if (rng.below(3) == 0) {
            std::vector<int> whites;
            for (int v : g.interior_vertices())
                if (g.verts[static_cast<size_t>(v)].color == Color::White) whites.push_back(v);
            if (!whites.empty()) {
                int x = whites[rng.below(whites.size())];
                int B = g.add_vertex(Color::Black);
                int w = g.add_vertex(Color::White);
                int e1 = g.add_edge(B, w, rng.positive_rat());
                int e2 = g.add_edge(B, x, rng.positive_rat());
                g.verts[static_cast<size_t>(B)].rot = {e1, e2};
                g.verts[static_cast<size_t>(w)].rot = {e1};
                g.verts[static_cast<size_t>(x)].rot.push_back(e2);
            }
        } else if (rng.below(3) == 0) {
            int d1 = g.add_vertex(Color::Black);
            int d2 = g.add_vertex(Color::White);
            int de = g.add_edge(d1, d2, rng.positive_rat());
            g.verts[static_cast<size_t>(d1)].rot = {de};
            g.verts[static_cast<size_t>(d2)].rot = {de};
        }
        PluckerVector<Rat> before;
        try {
            g.validate();
            before = g.boundary_measurements();
        } catch (const NoMatchings&) {
            continue;
        } catch (const std::invalid_argument&) {
            continue;
        }
        // collect applicable moves
        std::vector<std::function<PlanarNetwork<Rat>()>> apps;
        for (const auto& face : g.faces()) {
            if (face.size() != 4) continue;
            std::vector<int> corners;
            bool ok = true;
            for (auto [e, dir] : face) {
                int from = dir == 0 ? g.edges[static_cast<size_t>(e)].u : g.edges[static_cast<size_t>(e)].v;
                ok = ok && !g.verts[static_cast<size_t>(from)].boundary;
                corners.push_back(from);
            }
            if (ok && corners.size() == 4)
                apps.push_back([g, corners]() { return g.m1(corners); });
        }
        for (int v : g.interior_vertices())
            if (g.degree(v) == 2) {
                int e1 = g.verts[static_cast<size_t>(v)].rot[0], e2 = g.verts[static_cast<size_t>(v)].rot[1];
                int u1 = g.other_end(e1, v), u2 = g.other_end(e2, v);
                if (u1 != u2 && !(g.verts[static_cast<size_t>(u1)].boundary &&
                                  g.verts[static_cast<size_t>(u2)].boundary))
                    apps.push_back([g, v]() { return g.m2(v); });
            }
        for (size_t e1 = 0; e1 < g.edges.size(); ++e1)
            for (size_t e2 = e1 + 1; e2 < g.edges.size(); ++e2) {
                if (!g.edges[e1].alive || !g.edges[e2].alive) continue;
                const auto &a = g.edges[e1], &b = g.edges[e2];
                if ((a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u))
                    apps.push_back([g, e1, e2]() { return g.r1(static_cast<int>(e1), static_cast<int>(e2)); });
            }
        for (int v : g.interior_vertices()) {
            if (g.degree(v) != 1) continue;
            int u = g.other_end(g.verts[static_cast<size_t>(v)].rot[0], v);
            if (g.verts[static_cast<size_t>(u)].boundary) continue;  // lollipop
            if (g.degree(u) == 1)
                apps.push_back([g, v]() { return g.r3(g.verts[static_cast<size_t>(v)].rot[0]); });
            else
                apps.push_back([g, v]() { return g.r2(v); });
        }
        if (apps.empty()) continue;
        auto h = apps[rng.below(apps.size())]();
        ++moves_done;
        try {
            if (!proj_eq(h.boundary_measurements(), before)) ++move_bad;
        } catch (const NoMatchings&) {
            ++move_bad;
        }
    }
    sc.check(move_bad == 0, "move invariance failures: " + std::to_string(move_bad));

    // flows equal matchings; face weight product = 1
    int flow_bad = 0, face_bad = 0;
    for (int t = 0; t < 20; ++t) {
        auto g = random_network(rng, 6);
        std::vector<std::vector<int>> ms;
        try {
            ms = g.matchings();
        } catch (...) {
            continue;
        }
        if (ms.empty()) continue;
        auto v = g.boundary_measurements();
        auto o = orientation_of_matching(g, ms[rng.below(ms.size())]);
        auto gt = invert_matched_weights(g, o);
        if (!proj_eq(flow_measurements(gt, o), v)) ++flow_bad;
        Rat prod(1);
        for (const Rat& y : g.face_weights()) prod *= y;
        if (!(prod == Rat(1))) ++face_bad;
    }
    sc.check(flow_bad == 0, "flow/matching mismatches: " + std::to_string(flow_bad));
    sc.check(face_bad == 0, "face weight product failures: " + std::to_string(face_bad));

    // #faces - 1 = k(n-k) - length(f) for all graph_for cells of Bound(2,5)
    int dim_bad = 0;
    for (const Baff& f : enumerate_bound(2, 5)) {
        auto chart = graph_for(f);
        auto g = network_for(chart, positive_params(rng, chart.dim()));
        if (g.face_count() - 1 != 2 * 3 - length(f)) ++dim_bad;
        if (!g.is_reduced()) ++dim_bad;
    }
    sc.check(dim_bad == 0, "face count dimension failures: " + std::to_string(dim_bad));
    sc.finish(3, "network suite (symbolic relations, moves, flows, faces)");
}

// ---------------------------------------------------------------------- 4
void criterion4(Scorecard& sc, Rng& rng) {
    long points = 0;
    int bad = 0;
    for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 6}}) {
        for (const Baff& f : enumerate_bound(k, n)) {
            auto chart = graph_for(f);
            auto vals = positive_params(rng, chart.dim());
            auto m = parametrize(chart, vals);
            ++points;
            try {
                auto net = factorize(m);
                if (!proj_eq(net.boundary_measurements(), plucker_of(m))) ++bad;
                if (!(coordinates(chart, m) == vals)) ++bad;
            } catch (const std::exception&) {
                ++bad;
            }
        }
    }
    sc.check(points >= 300, "sampled " + std::to_string(points) + " points");
    sc.check(bad == 0, "round-trip failures: " + std::to_string(bad));
    sc.finish(4, "factorization round trip over Bound(2,4) u Bound(2,5) u Bound(3,6)");
}

// ---------------------------------------------------------------------- 5
void criterion5(Scorecard& sc, Rng& rng) {
    int id_bad = 0;
    for (int t = 0; t < 20; ++t) {
        int n = t % 2 == 0 ? 4 : 6;
        // random cell at this n, symbolic weights
        auto all = enumerate_bound(static_cast<int>(rng.int_in(1, n == 4 ? 2 : 3)), n);
        const Baff& f = all[rng.below(all.size())];
        auto g = symbolic_network_for(graph_for(f));
        int idx = 0;
        for (auto& e : g.edges)
            if (e.alive) e.weight = RatFunc::variable(Var("c5t" + std::to_string(t) + "e" + std::to_string(idx++)));
        auto fs = all_immanants(g);
        auto v = g.boundary_measurements();
        auto subs = all_subsets(n, v.k);
        for (const Subset& I : subs)
            for (const Subset& J : subs) {
                RatFunc rhs;
                for (const auto& p : compatible_pairings(I, J, n)) {
                    auto it = fs.find(p);
                    if (it != fs.end()) rhs = rhs + it->second;
                }
                if (!(v.at(I) * v.at(J) == rhs)) ++id_bad;
            }
    }
    sc.check(id_bad == 0, "TL identity failures: " + std::to_string(id_bad));

    int super_bad = 0;
    for (int t = 0; t < 200; ++t) {
        int n = static_cast<int>(rng.int_in(4, 6));
        int k = static_cast<int>(rng.int_in(1, 3));
        if (k >= n) continue;
        auto all = enumerate_bound(k, n);
        const Baff& f = all[rng.below(all.size())];
        auto chart = graph_for(f);
        auto v = plucker_of(parametrize(chart, positive_params(rng, chart.dim())));
        auto subs = all_subsets(n, k);
        for (const Subset& I : subs)
            for (const Subset& J : subs) {
                SortOps s = sort_ops(I, J);
                if (!(v.at(I) * v.at(J) <= v.at(s.min) * v.at(s.max)) ||
                    !(v.at(s.min) * v.at(s.max) <= v.at(s.sort1) * v.at(s.sort2)))
                    ++super_bad;
            }
    }
    sc.check(super_bad == 0, "supermodularity violations: " + std::to_string(super_bad));
    sc.finish(5, "Temperley-Lieb identity and supermodularity");
}

// ---------------------------------------------------------------------- 6
void criterion6(Scorecard& sc, Rng& rng) {
    int sign_bad = 0, tried = 0;
    for (const Baff& f : enumerate_bound(2, 4)) {
        auto chart = graph_for(f);
        auto net = network_for(chart, std::vector<Rat>(static_cast<size_t>(chart.dim()), Rat(1)))
                       .m2_simplify();
        ++tried;
        try {
            sign_vector(net);
        } catch (const NotRepresentable&) {
            ++sign_bad;
        }
    }
    for (int t = 0; t < 20; ++t) {
        auto g = random_network(rng, 6);
        int edges = 0;
        for (const auto& e : g.edges) edges += e.alive;
        if (edges > 12) continue;
        ++tried;
        try {
            sign_vector(g);
        } catch (const NotRepresentable&) {
            ++sign_bad;
        }
    }
    sc.check(sign_bad == 0, "sign vector failures: " + std::to_string(sign_bad) + " of " +
                                 std::to_string(tried));

    int glue_done = 0, glue_bad = 0, attempts = 0;
    while (glue_done < 100 && attempts < 600) {
        ++attempts;
        int n = static_cast<int>(rng.int_in(4, 5));
        int k = static_cast<int>(rng.int_in(1, 2));
        auto all = enumerate_bound(k, n);
        const Baff& f = all[rng.below(all.size())];
        auto g = symbolic_network_for(graph_for(f));
        int idx = 0;
        for (auto& e : g.edges) {
            if (!e.alive) continue;
            bool boundary_edge = g.verts[static_cast<size_t>(e.u)].boundary ||
                                 g.verts[static_cast<size_t>(e.v)].boundary;
            if (!boundary_edge)
                e.weight = RatFunc::variable(
                    Var("c6a" + std::to_string(attempts) + "e" + std::to_string(idx)));
            ++idx;
        }
        auto bic = bicolored_of_planar(g);
        auto rel = relation_space(bic);
        if (!rel.defined()) continue;
        int a = static_cast<int>(rng.int_in(1, n - 1));
        int b = static_cast<int>(rng.int_in(a + 1, n));
        auto glued = relation_space(glue(bic, a, b));
        if (!glued.defined()) continue;
        if (glued.kN != rel.kN - 1) continue;
        ++glue_done;
        try {
            if (!proj_eq(glued.pluckers(), glue_pluckers(rel, a, b))) ++glue_bad;
        } catch (const std::exception&) {
            ++glue_bad;
        }
    }
    sc.check(glue_done >= 100, "glue instances: " + std::to_string(glue_done));
    sc.check(glue_bad == 0, "glue formula failures: " + std::to_string(glue_bad));
    sc.finish(6, "relation-space sign and gluing suite");
}

// ---------------------------------------------------------------------- 7
bool omegagr_check(int k, int n) {
    auto chart = graph_for(Baff::identity(k, n));
    std::vector<MPoly> vals;
    for (Var v : chart.params) vals.push_back(MPoly::variable(v));
    Mat<MPoly> M = matrix_of_steps(chart.steps, vals);
    auto v = plucker_of(M);
    Subset I;
    for (int i = 1; i <= k; ++i) I.push_back(i);
    MPoly Q = v.at(I);
    int d = chart.dim();
    // numerators of the chart coordinates and their positions
    auto pos = coordinate_positions(k, n, I);
    std::vector<MPoly> P;
    for (auto [r, c] : pos) {
        std::vector<int> t = I;
        t[static_cast<size_t>(r - 1)] = c;
        P.push_back(v.get_tuple(t));
    }
    // Jacobian numerator: row per coordinate, column per parameter
    Mat<MPoly> N(d, d);
    for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) {
            Var a = chart.params[static_cast<size_t>(q)];
            N.at(p, q) = P[static_cast<size_t>(p)].partial(a) * Q - P[static_cast<size_t>(p)] * Q.partial(a);
        }
    MPoly detN = det(N);
    MPoly prod_a(Rat(1));
    for (Var a : chart.params) prod_a *= MPoly::variable(a);
    MPoly lhs = detN * prod_a;
    MPoly rhs(Rat(1));
    for (int i = 1; i <= n; ++i) {
        std::vector<int> cyc;
        for (int j = 0; j < k; ++j) cyc.push_back((i - 1 + j) % n + 1);
        rhs *= v.get_tuple(cyc);
    }
    for (int i = 0; i < 2 * d - n; ++i) rhs *= Q;
    return lhs == rhs || lhs == -rhs;
}

void criterion7(Scorecard& sc, Rng& rng) {
    sc.check(omegagr_check(2, 4), "omega identity for Gr(2,4)");
    sc.check(omegagr_check(2, 5), "omega identity for Gr(2,5)");

    // residues at all covers of the Gr(2,4) top cell, 20 points each
    Baff id = Baff::identity(2, 4);
    std::vector<std::vector<Rat>> w(2, std::vector<Rat>(2, Rat(1)));
    auto G = grid_network<Rat>(2, 4, w).m2_simplify();
    int cover_idx = 0;
    for (const Baff& f2 : covers(id)) {
        ++cover_idx;
        int e = find_cover_edge(G, f2);
        if (e < 0) {
            sc.check(false, "no deletable edge for cover " + f2.str());
            continue;
        }
        auto Gdel = delete_edge(G, e);
        auto ep = coordinate_edges(Gdel);
        auto fam_res = eprime_family(Gdel, ep, "a7r" + std::to_string(cover_idx) + "_");
        auto chart2 = graph_for(f2);
        auto fam2 = bridge_family(chart2);
        Subset I;
        {
            size_t idx = 0;
            for (const Subset& s : all_subsets(4, 2)) {
                if (ScalarOps<RatFunc>::nonzero(fam2.v.coords[idx])) {
                    I = s;
                    break;
                }
                ++idx;
            }
        }
        auto active = choose_active(fam2, I);
        int sign = 0, bad = 0;
        for (int t = 0; t < 20; ++t) {
            auto t0 = positive_params(rng, fam_res.dim());
            PlanarNetwork<Rat> num = Gdel;
            for (auto& ed : num.edges) ed.weight = Rat(1);
            for (size_t i = 0; i < ep.size(); ++i)
                num.edges[static_cast<size_t>(ep[i])].weight = t0[i];
            auto X0 = representative(num.boundary_measurements());
            auto a0 = coordinates(chart2, X0);
            Rat r1 = density_at(fam_res, I, active, t0);
            Rat r2 = density_at(fam2, I, active, a0);
            if (!(rat_abs(r1) == rat_abs(r2))) ++bad;
            int s = sgn(r1) * sgn(r2);
            if (sign == 0) sign = s;
            if (s != sign) ++bad;
        }
        sc.check(bad == 0, "residue at cover " + f2.str() + ": " + std::to_string(bad) +
                               " bad samples");
    }

    // E'-choice and move invariance (grid chart vs bridge chart)
    {
        auto ep = coordinate_edges(G);
        auto famg = eprime_family(G, ep, "a7g_");
        auto chart = graph_for(id);
        auto famb = bridge_family(chart);
        Subset I{1, 2};
        auto active = choose_active(famb, I);
        int sign = 0, bad = 0;
        for (int t = 0; t < 10; ++t) {
            auto t0 = positive_params(rng, static_cast<int>(ep.size()));
            PlanarNetwork<Rat> num = G;
            for (auto& ed : num.edges) ed.weight = Rat(1);
            for (size_t i = 0; i < ep.size(); ++i)
                num.edges[static_cast<size_t>(ep[i])].weight = t0[i];
            auto X0 = representative(num.boundary_measurements());
            auto a0 = coordinates(chart, X0);
            Rat r1 = density_at(famg, I, active, t0);
            Rat r2 = density_at(famb, I, active, a0);
            if (!(rat_abs(r1) == rat_abs(r2))) ++bad;
            int s = sgn(r1) * sgn(r2);
            if (sign == 0) sign = s;
            if (s != sign) ++bad;
        }
        sc.check(bad == 0, "chart-choice invariance: " + std::to_string(bad) + " bad samples");
    }
    sc.finish(7, "canonical form suite (omega identity, residues, invariance)");
}

// ---------------------------------------------------------------------- 8
void criterion8(Scorecard& sc, Rng& rng, int threads, std::uint64_t seed) {
    // deg2 quadric vanishing
    {
        PluckerPolynomial p;
        p.terms.push_back({Rat(1), {{1, 2, 4}, {3, 5, 6}}});
        p.terms.push_back({Rat(-1), {{1, 2, 3}, {4, 5, 6}}});
        Baff f = parse_window("[2,5,4,7,6,9]");
        auto chart = graph_for(f);
        int bad = 0;
        for (int t = 0; t < 100; ++t) {
            ZMap zm = sample_positive_z(6, 5, 2, rng);
            auto x = parametrize(chart, positive_params(rng, chart.dim()));
            if (!is_zero(psi_substitute(p, x * zm.Z, zm.Z))) ++bad;
        }
        sc.check(bad == 0, "deg2 quadric vanishing failures: " + std::to_string(bad));
    }
    // cubic vanishing
    {
        PluckerPolynomial g;
        g.terms.push_back({Rat(1), {{1, 2, 3, 5}, {1, 2, 3, 7}, {4, 6, 8, 9}}});
        g.terms.push_back({Rat(-1), {{1, 2, 3, 4}, {1, 2, 3, 7}, {5, 6, 8, 9}}});
        g.terms.push_back({Rat(-1), {{1, 2, 3, 5}, {1, 2, 3, 6}, {4, 7, 8, 9}}});
        g.terms.push_back({Rat(1), {{1, 2, 3, 4}, {1, 2, 3, 6}, {5, 7, 8, 9}}});
        Baff f = parse_window("[2,3,6,5,8,7,10,9,13]");
        auto chart = graph_for(f);
        int bad = 0;
        for (int t = 0; t < 100; ++t) {
            ZMap zm = sample_positive_z(9, 7, 2, rng);
            auto x = parametrize(chart, positive_params(rng, chart.dim()));
            if (!is_zero(psi_substitute(g, x * zm.Z, zm.Z))) ++bad;
        }
        sc.check(bad == 0, "cubic vanishing failures: " + std::to_string(bad));
    }
    // fixed signs for all evenness subsets, k=2, n=8, m=4
    {
        ZMap zm = sample_positive_z(8, 6, 2, rng);
        int bad = 0, found = 0;
        for (const Subset& I : all_subsets(8, 4)) {
            if (!satisfies_evenness(I, 8)) continue;
            ++found;
            auto rep = evenness_sign_probe(zm.Z, 2, I, 1000, seed + static_cast<std::uint64_t>(found),
                                           threads);
            if (!rep.fixed_sign()) ++bad;
        }
        sc.check(found > 0 && bad == 0, "evenness subsets with mixed signs: " + std::to_string(bad) +
                                            " of " + std::to_string(found));
    }
    // |C(1,n)| and its simplices
    {
        bool ok = true;
        for (int n = 5; n <= 9; ++n) {
            auto c = bcfw_cells(1, n);
            ok = ok && c.cells.size() == static_cast<size_t>((n - 3) * (n - 4) / 2);
            std::vector<Subset> got;
            for (const Baff& f : c.cells) {
                Subset supp;
                for (const Subset& b : positroid_of(f).bases) supp.push_back(b[0]);
                std::sort(supp.begin(), supp.end());
                got.push_back(supp);
            }
            std::sort(got.begin(), got.end());
            ok = ok && got == k1_bcfw_simplices(n);
        }
        sc.check(ok, "k=1 BCFW cells match {1,i-1,i,j-1,j} for n <= 9");
        sc.check(bcfw_cells(2, 6).cells.size() == 1 &&
                     bcfw_cells(2, 6).cells[0] == Baff::identity(2, 6),
                 "C(k,k+4) base case");
    }
    // Monte-Carlo triangulation certificates
    {
        bool ok = true;
        std::string lines;
        for (int n = 6; n <= 8; ++n) {
            ZMap zm = sample_positive_z(n, 5, 1, rng);
            auto rep = k1_triangulation_check(n, zm.Z, 10000, seed + static_cast<std::uint64_t>(n),
                                              threads);
            ok = ok && rep.clean();
            lines += "    " + rep.str() + "\n";
        }
        sc.out << lines;
        sc.check(ok, "triangulation certificate violations");
    }
    // form-sum equality across triangulations
    {
        Mat<Rat> z(5, 3);
        long pts[5][2] = {{0, 0}, {2, 0}, {3, 2}, {1, 4}, {-1, 2}};
        for (int i = 0; i < 5; ++i) {
            z.at(i, 0) = Rat(1);
            z.at(i, 1) = Rat(pts[i][0]);
            z.at(i, 2) = Rat(pts[i][1]);
        }
        std::vector<Var> xs{Var("a8p1"), Var("a8p2"), Var("a8p3")};
        std::vector<Subset> fan1{{1, 2, 3}, {1, 3, 4}, {1, 4, 5}};
        std::vector<Subset> fan2{{1, 2, 5}, {2, 3, 4}, {2, 4, 5}};
        sc.check(triangulation_form_sum(z, fan1, xs) == triangulation_form_sum(z, fan2, xs),
                 "pentagon form sums differ");
        ZMap zm = sample_positive_z(6, 5, 1, rng);
        std::vector<Var> ys{Var("a8c1"), Var("a8c2"), Var("a8c3"), Var("a8c4"), Var("a8c5")};
        sc.check(triangulation_form_sum(zm.Z, k1_bcfw_simplices(6), ys) ==
                     triangulation_form_sum(zm.Z, fan_triangulation(zm.Z, 1), ys),
                 "C(6,4) form sums differ");
    }
    sc.finish(8, "amplituhedron suite (psi vanishing, signs, BCFW, triangulations)");
}

// ---------------------------------------------------------------------- 9
void criterion9(Scorecard& sc, std::uint64_t seed) {
    Rng rng(seed);
    ZMap zm = sample_positive_z(6, 5, 1, rng);
    auto r1 = k1_triangulation_check(6, zm.Z, 2000, seed, 1);
    auto r4 = k1_triangulation_check(6, zm.Z, 2000, seed, 4);
    sc.check(r1.str() == r4.str(), "triangulation reports differ across thread counts");
    ZMap zm2 = sample_positive_z(8, 6, 2, rng);
    auto p1 = evenness_sign_probe(zm2.Z, 2, {1, 2, 3, 4}, 400, seed, 1);
    auto p4 = evenness_sign_probe(zm2.Z, 2, {1, 2, 3, 4}, 400, seed, 4);
    sc.check(p1.str() == p4.str(), "sign-probe reports differ across thread counts");
    sc.finish(9, "determinism across thread counts");
}

}  // namespace

int run_acceptance(std::ostream& out, int threads, std::uint64_t seed) {
    out << "acceptance suite (seed=" << seed << ", threads=" << threads << ")\n";
    Scorecard sc{out, 0, {}};
    Rng rng(seed);
    criterion1(sc);
    criterion2(sc, rng);
    criterion3(sc, rng);
    criterion4(sc, rng);
    criterion5(sc, rng);
    criterion6(sc, rng);
    criterion7(sc, rng);
    criterion8(sc, rng, threads, seed);
    criterion9(sc, seed);
    out << (sc.fails == 0 ? "all criteria passed" : "FAILURES: " + std::to_string(sc.fails))
        << "\n";
    return sc.fails;
}

}  // namespace positroid
