#include "positroid/polytope.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace positroid {

bool verify_witness(const Mat<Rat>& Z, const Mat<Rat>& M) {
    if (Z.cols != M.rows) throw DimensionMismatch();
    int n = Z.rows, k = M.cols;
    if (k > Z.cols) throw DimensionMismatch();
    Mat<Rat> zm = Z * M;
    std::vector<int> cols;
    for (int j = 1; j <= k; ++j) cols.push_back(j);
    for (const Subset& L : all_subsets(n, k))
        if (sgn(minor_of(zm, L, cols)) <= 0) return false;
    return true;
}

namespace {

// totally positive upper-triangular matrix: positive Chevalley generators
// along a reduced word of the longest permutation
Mat<Rat> top_cell_upper(int n, Rng& rng) {
    Mat<Rat> u = Mat<Rat>::identity(n);
    for (int blk = 1; blk < n; ++blk)
        for (int i = blk; i >= 1; --i) u = apply_x(u, i, rng.positive_rat());
    return u;
}

// totally positive point from the grid chart with random positive weights
Mat<Rat> random_tnn_matrix(Rng& rng, int k, int n, int steps) {
    std::vector<std::vector<Rat>> w(static_cast<size_t>(k),
                                    std::vector<Rat>(static_cast<size_t>(n - k)));
    for (auto& row : w)
        for (auto& x : row) x = rng.positive_rat();
    Mat<Rat> m = representative(grid_network<Rat>(k, n, w).boundary_measurements());
    // a few extra pushes vary the representative
    for (int s = 0; s < std::min(steps, 4); ++s) {
        int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1))) + 1;
        m = apply_x(m, i, rng.positive_rat());
    }
    return m;
}

}  // namespace

ZMap sample_positive_z(int n, int r, int k, Rng& rng) {
    Mat<Rat> u = top_cell_upper(n, rng);
    // Z^T = first r rows of u; its flag minors are positive
    ZMap out;
    out.Z = Mat<Rat>(n, r);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < r; ++j) out.Z.at(i, j) = u.at(j, i);
    Mat<Rat> m(r, k);
    for (int j = 0; j < k; ++j) m.at(j, j) = Rat(1);
    out.M = m;
    return out;
}

std::optional<PluckerVector<Rat>> zmap(const Mat<Rat>& x, const Mat<Rat>& z) {
    if (x.cols != z.rows) throw DimensionMismatch();
    Mat<Rat> y = x * z;
    if (rref_rank(y).rank < x.rows) return std::nullopt;
    return plucker_of(y);
}

Rat bracket(const Mat<Rat>& y, const Mat<Rat>& z, const Subset& J) {
    int r = z.cols, k = y.rows;
    if (static_cast<int>(J.size()) != r - k) throw DimensionMismatch();
    Mat<Rat> sq(r, r);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < r; ++j) sq.at(i, j) = y.at(i, j);
    for (size_t i = 0; i < J.size(); ++i)
        for (int j = 0; j < r; ++j)
            sq.at(k + static_cast<int>(i), j) = z.at(J[i] - 1, j);
    return det(sq);
}

Rat psi_substitute(const PluckerPolynomial& p, const Mat<Rat>& y, const Mat<Rat>& z) {
    int n = z.rows;
    Rat total(0);
    for (const auto& t : p.terms) {
        Rat prod = t.c;
        for (const Subset& J : t.minors) prod *= bracket(y, z, complement(J, n));
        total += prod;
    }
    return total;
}

// ---------------------------------------------------------------------------
// BCFW recursion
// ---------------------------------------------------------------------------

namespace {

// insert a lollipop position into a bounded affine permutation (the inverse
// of the deletion used by the reduction plan)
Baff insert_position(const Baff& f, int i, bool coloop) {
    int n = f.n() + 1;
    auto grow = [&](int v) {
        // order embedding of (n-1)-periodic labels into Z minus the class of
        // i mod n: s in [1, n-1] goes to s (below i) or s+1, periodically
        int q = (v - 1) >= 0 ? (v - 1) / (n - 1) : -(((-(v - 1)) + n - 2) / (n - 1));
        int s = v - q * (n - 1);
        return (s < i ? s : s + 1) + q * n;
    };
    std::vector<int> w(static_cast<size_t>(n));
    w[static_cast<size_t>(i - 1)] = coloop ? i + n : i;
    for (int j = 1; j <= f.n(); ++j) {
        int pos = j < i ? j : j + 1;
        w[static_cast<size_t>(pos - 1)] = grow(f(j));
    }
    return Baff(n, std::move(w));
}

// copy interior vertices/edges of src into big; boundary edges are rewired
// to `targets[label-1]`: (>0: big boundary label, <0: interior vertex id
// ~encoded as -1-id)
template <typename K>
void splice_network(PlanarNetwork<K>& big, const PlanarNetwork<K>& src,
                    const std::vector<int>& targets) {
    std::vector<int> vmap(src.verts.size(), -1);
    for (size_t v = 0; v < src.verts.size(); ++v) {
        if (!src.verts[v].alive || src.verts[v].boundary) continue;
        vmap[v] = big.add_vertex(src.verts[v].color);
    }
    for (size_t e = 0; e < src.edges.size(); ++e) {
        if (!src.edges[e].alive) continue;
        const auto& ed = src.edges[e];
        bool ub = src.verts[static_cast<size_t>(ed.u)].boundary;
        bool vb = src.verts[static_cast<size_t>(ed.v)].boundary;
        if (!ub && !vb) {
            int ne = big.add_edge(vmap[static_cast<size_t>(ed.u)], vmap[static_cast<size_t>(ed.v)], ed.weight);
            big.verts[static_cast<size_t>(vmap[static_cast<size_t>(ed.u)])].rot.push_back(ne);
            big.verts[static_cast<size_t>(vmap[static_cast<size_t>(ed.v)])].rot.push_back(ne);
            continue;
        }
        int bnd = ub ? ed.u : ed.v;
        int interior = ub ? ed.v : ed.u;
        int label = src.verts[static_cast<size_t>(bnd)].label;
        int target = targets[static_cast<size_t>(label - 1)];
        int inner = vmap[static_cast<size_t>(interior)];
        if (target > 0) {
            int bv = big.boundary_vertex(target);
            int ne = big.add_edge(bv, inner, ed.weight);
            big.verts[static_cast<size_t>(bv)].rot = {ne};
            big.verts[static_cast<size_t>(inner)].rot.push_back(ne);
        } else {
            int tv = -1 - target;
            Color tc = big.verts[static_cast<size_t>(tv)].color;
            Color ic = big.verts[static_cast<size_t>(inner)].color;
            if (tc != ic) {
                int ne = big.add_edge(tv, inner, ed.weight);
                big.verts[static_cast<size_t>(tv)].rot.push_back(ne);
                big.verts[static_cast<size_t>(inner)].rot.push_back(ne);
            } else {
                int buf = big.add_vertex(opposite(tc));
                int e1 = big.add_edge(tv, buf, ed.weight);
                int e2 = big.add_edge(buf, inner, K(1));
                big.verts[static_cast<size_t>(tv)].rot.push_back(e1);
                big.verts[static_cast<size_t>(buf)].rot = {e1, e2};
                big.verts[static_cast<size_t>(inner)].rot.push_back(e2);
            }
        }
    }
}

}  // namespace

BcfwCellSet bcfw_cells(int k, int n) {
    BcfwCellSet out;
    out.k = k;
    out.n = n;
    if (k == 0) {  // C(0,m) is a single cell for every m
        out.cells.push_back(Baff::identity(0, n));
        return out;
    }
    if (n < k + 4) throw std::invalid_argument("bcfw_cells: need n >= k+4");
    if (n == k + 4) {
        out.cells.push_back(Baff::identity(k, n));
        return out;
    }
    std::set<std::vector<int>> seen;
    auto push = [&](const Baff& f) {
        if (length(f) != k * (n - k) - 4 * k) return;  // not 4k-dimensional
        if (seen.insert(f.window()).second) out.cells.push_back(f);
    };
    // (1): black lollipop at n on C(k, n-1)
    for (const Baff& f : bcfw_cells(k, n - 1).cells) push(insert_position(f, n, false));
    // (2): the bridge-glue of C(k1, j) and C(k2, n-j+2)
    for (int j = 3; j <= n - 2; ++j)
        for (int k1 = 0; k1 <= k - 1; ++k1) {
            int k2 = k - 1 - k1;
            if (k1 > 0 && j < k1 + 4) continue;
            if (k2 > 0 && n - j + 2 < k2 + 4) continue;
            auto c1 = bcfw_cells(k1, j);
            auto c2 = bcfw_cells(k2, n - j + 2);
            for (const Baff& f1 : c1.cells)
                for (const Baff& f2 : c2.cells) {
                    auto g1 = network_for(graph_for(f1),
                                          std::vector<Rat>(static_cast<size_t>(
                                                               k1 * (j - k1) - length(f1)),
                                                           Rat(1)));
                    auto g2 = network_for(graph_for(f2),
                                          std::vector<Rat>(static_cast<size_t>(
                                                               k2 * (n - j + 2 - k2) - length(f2)),
                                                           Rat(1)));
                    PlanarNetwork<Rat> big = PlanarNetwork<Rat>::with_boundary(n);
                    int b1 = big.add_vertex(Color::Black);
                    int b2 = big.add_vertex(Color::Black);
                    int b3 = big.add_vertex(Color::Black);
                    int b4 = big.add_vertex(Color::Black);
                    int b5 = big.add_vertex(Color::Black);
                    int b6 = big.add_vertex(Color::Black);
                    int w1 = big.add_vertex(Color::White);
                    int w2 = big.add_vertex(Color::White);
                    int w3 = big.add_vertex(Color::White);
                    auto link = [&](int a, int b) {
                        int e = big.add_edge(a, b, Rat(1));
                        big.verts[static_cast<size_t>(a)].rot.push_back(e);
                        big.verts[static_cast<size_t>(b)].rot.push_back(e);
                        return e;
                    };
                    auto blink = [&](int label, int v) {
                        int bv = big.boundary_vertex(label);
                        int e = big.add_edge(bv, v, Rat(1));
                        big.verts[static_cast<size_t>(bv)].rot = {e};
                        big.verts[static_cast<size_t>(v)].rot.push_back(e);
                    };
                    blink(1, b1);
                    blink(j - 1, b5);
                    blink(j, b6);
                    blink(n - 1, b3);
                    {
                        int bv = big.boundary_vertex(n);
                        int e = big.add_edge(bv, w2, Rat(1));
                        big.verts[static_cast<size_t>(bv)].rot = {e};
                        big.verts[static_cast<size_t>(w2)].rot.push_back(e);
                    }
                    link(b1, w1);
                    link(b2, w1);
                    link(b4, w1);
                    link(b2, w2);
                    link(b3, w2);
                    link(b5, w3);
                    link(b6, w3);
                    link(b4, w3);
                    // port maps: G1 on {1..j}, G2 on {1..n-j+2}
                    std::vector<int> t1(static_cast<size_t>(j), 0);
                    t1[0] = -1 - b1;
                    for (int p = 2; p <= j - 2; ++p) t1[static_cast<size_t>(p - 1)] = p;
                    t1[static_cast<size_t>(j - 2)] = -1 - b5;
                    t1[static_cast<size_t>(j - 1)] = -1 - b4;
                    std::vector<int> t2(static_cast<size_t>(n - j + 2), 0);
                    t2[0] = -1 - b6;
                    for (int p = 2; p <= n - j - 1; ++p) t2[static_cast<size_t>(p - 1)] = j + p - 1;
                    t2[static_cast<size_t>(n - j - 1)] = -1 - b3;
                    t2[static_cast<size_t>(n - j)] = -1 - b2;
                    t2[static_cast<size_t>(n - j + 1)] = -1 - b4;
                    splice_network(big, g1, t1);
                    splice_network(big, g2, t2);
                    try {
                        push(cell_perm_of_graph(big));
                    } catch (const NoMatchings&) {
                    }
                }
        }
    std::sort(out.cells.begin(), out.cells.end());
    return out;
}

std::vector<Subset> k1_bcfw_simplices(int n) {
    std::vector<Subset> out;
    for (int i = 3; i < n; ++i)
        for (int j = i + 2; j <= n; ++j) {
            Subset s{1, i - 1, i, j - 1, j};
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            out.push_back(s);
        }
    std::sort(out.begin(), out.end());
    return out;
}

Containment simplex_contains(const Mat<Rat>& z, const Subset& I, const std::vector<Rat>& x) {
    int r = z.cols;
    if (static_cast<int>(I.size()) != r) throw DimensionMismatch();
    Mat<Rat> A(r, r);
    for (int row = 0; row < r; ++row)
        for (size_t col = 0; col < I.size(); ++col)
            A.at(row, static_cast<int>(col)) = z.at(I[col] - 1, row);
    std::vector<Rat> lambda;
    try {
        lambda = solve(A, x);
    } catch (const std::domain_error&) {
        return Containment::Outside;
    }
    bool boundary = false;
    for (const Rat& l : lambda) {
        if (sgn(l) < 0) return Containment::Outside;
        if (sgn(l) == 0) boundary = true;
    }
    return boundary ? Containment::Boundary : Containment::Interior;
}

std::string TriangulationReport::str() const {
    std::ostringstream os;
    os << "triangulation-check n=" << n << " seed=" << seed << " samples=" << samples
       << " cells=" << cells.size() << " not-covered=" << not_covered
       << " multiply-covered=" << multiply_covered << " => "
       << (clean() ? "PASS" : "FAIL");
    return os.str();
}

TriangulationReport k1_triangulation_check(int n, const Mat<Rat>& z, int samples,
                                           std::uint64_t seed, int threads) {
    TriangulationReport rep;
    rep.n = n;
    rep.seed = seed;
    rep.samples = samples;
    rep.cells = k1_bcfw_simplices(n);
    if (threads < 1) threads = 1;
    std::vector<int> ncov(static_cast<size_t>(threads), 0), mcov(static_cast<size_t>(threads), 0);
    auto work = [&](int tid) {
        for (int s = tid; s < samples; s += threads) {
            Rng rng = Rng::fork(seed, static_cast<std::uint64_t>(s));
            std::vector<Rat> x(static_cast<size_t>(z.cols), Rat(0));
            for (int row = 0; row < z.rows; ++row) {
                Rat l = rng.positive_rat(97, 13);
                for (int c = 0; c < z.cols; ++c) x[static_cast<size_t>(c)] += l * z.at(row, c);
            }
            int interior = 0, any = 0;
            for (const Subset& cell : rep.cells) {
                Containment c = simplex_contains(z, cell, x);
                if (c != Containment::Outside) ++any;
                if (c == Containment::Interior) ++interior;
            }
            if (any == 0) ++ncov[static_cast<size_t>(tid)];
            if (interior > 1) ++mcov[static_cast<size_t>(tid)];
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& t : pool) t.join();
    }
    for (int t = 0; t < threads; ++t) {
        rep.not_covered += ncov[static_cast<size_t>(t)];
        rep.multiply_covered += mcov[static_cast<size_t>(t)];
    }
    return rep;
}

RatFunc simplex_form(const Mat<Rat>& z, const Subset& I, const std::vector<Var>& xs) {
    int r = z.cols;
    if (static_cast<int>(I.size()) != r || static_cast<int>(xs.size()) != r)
        throw DimensionMismatch();
    Rat d = minor_of(z, I, [&] {
        std::vector<int> cols;
        for (int j = 1; j <= r; ++j) cols.push_back(j);
        return cols;
    }());
    if (is_zero(d)) throw std::invalid_argument("simplex_form: singular simplex");
    // D_i(x): det of Z_I with row i replaced by the variable vector
    MPoly den(Rat(1));
    for (size_t i = 0; i < I.size(); ++i) {
        Mat<MPoly> m(r, r);
        for (size_t row = 0; row < I.size(); ++row)
            for (int c = 0; c < r; ++c)
                m.at(static_cast<int>(row), c) =
                    row == i ? MPoly::variable(xs[static_cast<size_t>(c)])
                             : MPoly(z.at(I[row] - 1, c));
        den *= det(m);
    }
    MPoly xprod(Rat(1));
    for (Var v : xs) xprod *= MPoly::variable(v);
    MPoly num = xprod * MPoly(rat_pow(d, r - 1));
    return RatFunc(num, den);
}

RatFunc triangulation_form_sum(const Mat<Rat>& z, const std::vector<Subset>& cells,
                               const std::vector<Var>& xs) {
    RatFunc total;
    for (const Subset& cell : cells) total = total + simplex_form(z, cell, xs);
    return total;
}

std::vector<Subset> cyclic_polytope_facets(const Mat<Rat>& z) {
    int n = z.rows, r = z.cols;
    std::vector<Subset> out;
    for (const Subset& S : all_subsets(n, r - 1)) {
        // functional vanishing on rows S: kernel of the (r-1) x r system
        Mat<Rat> A(r - 1, r);
        for (size_t i = 0; i < S.size(); ++i)
            for (int c = 0; c < r; ++c) A.at(static_cast<int>(i), c) = z.at(S[i] - 1, c);
        Rref<Rat> rr = rref_rank(A);
        if (rr.rank != r - 1) continue;
        // back-substitute the free column
        std::vector<Rat> phi(static_cast<size_t>(r), Rat(0));
        int free_col = 1;
        std::vector<char> ispivot(static_cast<size_t>(r + 1), 0);
        for (int p : rr.pivot_columns) ispivot[static_cast<size_t>(p)] = 1;
        for (int c = 1; c <= r; ++c)
            if (!ispivot[static_cast<size_t>(c)]) free_col = c;
        phi[static_cast<size_t>(free_col - 1)] = Rat(1);
        for (size_t row = 0; row < rr.pivot_columns.size(); ++row)
            phi[static_cast<size_t>(rr.pivot_columns[row] - 1)] =
                -rr.reduced.at(static_cast<int>(row), free_col - 1);
        int side = 0;
        bool facet = true;
        for (int v = 1; v <= n && facet; ++v) {
            if (contains(S, v)) continue;
            Rat val(0);
            for (int c = 0; c < r; ++c) val += phi[static_cast<size_t>(c)] * z.at(v - 1, c);
            int s = sgn(val);
            if (s == 0) facet = false;
            else if (side == 0) side = s;
            else if (s != side) facet = false;
        }
        if (facet) out.push_back(S);
    }
    return out;
}

std::vector<Subset> fan_triangulation(const Mat<Rat>& z, int apex) {
    std::vector<Subset> out;
    for (const Subset& F : cyclic_polytope_facets(z)) {
        if (contains(F, apex)) continue;
        out.push_back(set_plus(F, apex));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool satisfies_evenness(const Subset& I, int n) {
    Subset comp = complement(I, n);
    for (size_t a = 0; a < comp.size(); ++a)
        for (size_t b = a + 1; b < comp.size(); ++b) {
            int cnt = 0;
            for (int x : I)
                if (x > comp[a] && x < comp[b]) ++cnt;
            if (cnt % 2 != 0) return false;
        }
    return true;
}

std::string SignProbeReport::str() const {
    std::ostringstream os;
    os << "sign-probe I={";
    for (size_t i = 0; i < I.size(); ++i) os << (i ? "," : "") << I[i];
    os << "} samples=" << samples << " positive=" << positive << " negative=" << negative
       << " zero=" << zero << " => " << (fixed_sign() ? "FIXED" : "MIXED");
    return os.str();
}

SignProbeReport evenness_sign_probe(const Mat<Rat>& z, int k, const Subset& I, int samples,
                                    std::uint64_t seed, int threads) {
    SignProbeReport rep;
    rep.I = I;
    rep.samples = samples;
    int n = z.rows;
    if (threads < 1) threads = 1;
    std::vector<int> pos(static_cast<size_t>(threads), 0), neg(static_cast<size_t>(threads), 0),
        zer(static_cast<size_t>(threads), 0);
    auto work = [&](int tid) {
        for (int s = tid; s < samples; s += threads) {
            Rng rng = Rng::fork(seed, static_cast<std::uint64_t>(s));
            Mat<Rat> x = random_tnn_matrix(rng, k, n, 2 * n);
            Mat<Rat> y = x * z;
            Rat val = bracket(y, z, I);
            int sg = sgn(val);
            if (sg > 0) ++pos[static_cast<size_t>(tid)];
            else if (sg < 0) ++neg[static_cast<size_t>(tid)];
            else ++zer[static_cast<size_t>(tid)];
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& t : pool) t.join();
    }
    for (int t = 0; t < threads; ++t) {
        rep.positive += pos[static_cast<size_t>(t)];
        rep.negative += neg[static_cast<size_t>(t)];
        rep.zero += zer[static_cast<size_t>(t)];
    }
    return rep;
}

}  // namespace positroid
