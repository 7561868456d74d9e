#ifndef POSITROID_RELSPACE_HPP
#define POSITROID_RELSPACE_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "positroid/matrix.hpp"
#include "positroid/network.hpp"
#include "positroid/plucker.hpp"

namespace positroid {

struct NonUnitBoundaryWeights : std::invalid_argument {
    NonUnitBoundaryWeights() : std::invalid_argument("glue needs unit boundary edge weights") {}
};
struct NotRepresentable : std::runtime_error {
    NotRepresentable() : std::runtime_error("no sign vector verifies the relation identity") {}
};

// Bicolored network over a field: no embedding, loops and multi-edges
// allowed.  Each edge stores w(from,to); the reverse weight is its inverse.
template <typename K>
struct BicoloredNetwork {
    struct Vtx {
        bool boundary = false;
        int label = 0;
        Color color = Color::Black;
        bool alive = true;
    };
    struct Edg {
        int from = -1, to = -1;
        K w = K(1);
        bool alive = true;
    };

    int n = 0;
    std::vector<Vtx> verts;
    std::vector<Edg> edges;

    static BicoloredNetwork with_boundary(int n_) {
        BicoloredNetwork g;
        g.n = n_;
        for (int i = 1; i <= n_; ++i) {
            Vtx v;
            v.boundary = true;
            v.label = i;
            g.verts.push_back(v);
        }
        return g;
    }

    int add_vertex(Color c) {
        Vtx v;
        v.color = c;
        verts.push_back(v);
        return static_cast<int>(verts.size()) - 1;
    }
    int add_edge(int from, int to, const K& w) {
        Edg e;
        e.from = from;
        e.to = to;
        e.w = w;
        edges.push_back(e);
        return static_cast<int>(edges.size()) - 1;
    }

    int boundary_vertex(int label) const {
        for (size_t i = 0; i < verts.size(); ++i)
            if (verts[i].alive && verts[i].boundary && verts[i].label == label)
                return static_cast<int>(i);
        throw std::out_of_range("no boundary vertex with that label");
    }

    std::vector<int> incident(int v) const {
        std::vector<int> out;
        for (size_t e = 0; e < edges.size(); ++e)
            if (edges[e].alive && (edges[e].from == v || edges[e].to == v)) {
                out.push_back(static_cast<int>(e));
                if (edges[e].from == v && edges[e].to == v) out.push_back(static_cast<int>(e));
            }
        return out;
    }
    int degree(int v) const { return static_cast<int>(incident(v).size()); }

    K weight_from(int e, int v) const {  // w(v, other)
        const Edg& ed = edges[static_cast<size_t>(e)];
        return ed.from == v ? ed.w : K(1) / ed.w;
    }

    // directed-weight gauge at an interior vertex: scale w(v, .) by c
    void gauge(int v, const K& c) {
        if (verts[static_cast<size_t>(v)].boundary)
            throw std::invalid_argument("gauge only at interior vertices");
        for (size_t e = 0; e < edges.size(); ++e) {
            if (!edges[e].alive) continue;
            if (edges[e].from == v && edges[e].to == v) continue;  // loop weight is gauge invariant
            if (edges[e].from == v) edges[e].w = edges[e].w * c;
            else if (edges[e].to == v) edges[e].w = edges[e].w / c;
        }
    }

    void compact() {
        std::vector<int> vmap(verts.size(), -1);
        std::vector<Vtx> nv;
        std::vector<Edg> ne;
        for (size_t i = 0; i < verts.size(); ++i)
            if (verts[i].alive) {
                vmap[i] = static_cast<int>(nv.size());
                nv.push_back(verts[i]);
            }
        for (size_t i = 0; i < edges.size(); ++i)
            if (edges[i].alive) {
                Edg e = edges[i];
                e.from = vmap[static_cast<size_t>(e.from)];
                e.to = vmap[static_cast<size_t>(e.to)];
                ne.push_back(e);
            }
        verts = std::move(nv);
        edges = std::move(ne);
    }

    int expected_k() const {
        int total = n;
        for (size_t v = 0; v < verts.size(); ++v) {
            if (!verts[v].alive || verts[v].boundary) continue;
            int d = degree(static_cast<int>(v));
            total += verts[v].color == Color::Black ? d - 2 : 2 - d;
        }
        if (total % 2 != 0) throw std::logic_error("expected_k: odd parity");
        return total / 2;
    }
};

// make a bicolored network out of a planar bipartite one: w(u,v) = wt(e)
// whenever u is white or v is black
template <typename K>
BicoloredNetwork<K> bicolored_of_planar(const PlanarNetwork<K>& g) {
    BicoloredNetwork<K> b;
    b.n = g.n;
    for (const auto& v : g.verts) {
        if (!v.alive) continue;
        typename BicoloredNetwork<K>::Vtx w;
        w.boundary = v.boundary;
        w.label = v.label;
        w.color = v.color;
        b.verts.push_back(w);
    }
    // the vertex order is preserved by this copy when g is compact
    int idx = 0;
    std::vector<int> vmap(g.verts.size(), -1);
    for (size_t i = 0; i < g.verts.size(); ++i)
        if (g.verts[i].alive) vmap[i] = idx++;
    for (const auto& e : g.edges) {
        if (!e.alive) continue;
        int u = e.u, v = e.v;
        bool u_white = !g.verts[static_cast<size_t>(u)].boundary
                           ? g.verts[static_cast<size_t>(u)].color == Color::White
                           : g.verts[static_cast<size_t>(v)].color == Color::Black;
        int from = u_white ? u : v, to = u_white ? v : u;
        b.add_edge(vmap[static_cast<size_t>(from)], vmap[static_cast<size_t>(to)], e.weight);
    }
    return b;
}

struct RelUndefined {};

// Relation space: eliminate the interior half-edge variables from the local
// linear system; undefined when the dimension differs from k_N
template <typename K>
struct RelationSpace {
    int n = 0, kN = 0;
    std::optional<Mat<K>> rows;  // row-reduced kN x n matrix when defined

    bool defined() const { return rows.has_value(); }
    PluckerVector<K> pluckers() const {
        if (!defined()) throw std::logic_error("relation space undefined");
        return plucker_of(*rows);
    }
};

template <typename K>
RelationSpace<K> relation_space(const BicoloredNetwork<K>& g) {
    // half-edge columns: (edge, side) with side 0 at `from`; interior
    // half-edges first, boundary half-edges last ordered by label
    struct Half {
        int e, side, vertex;
    };
    std::vector<Half> interior, boundary(static_cast<size_t>(g.n), Half{-1, -1, -1});
    for (size_t e = 0; e < g.edges.size(); ++e) {
        if (!g.edges[e].alive) continue;
        for (int side = 0; side < 2; ++side) {
            int v = side == 0 ? g.edges[e].from : g.edges[e].to;
            if (g.verts[static_cast<size_t>(v)].boundary)
                boundary[static_cast<size_t>(g.verts[static_cast<size_t>(v)].label - 1)] =
                    Half{static_cast<int>(e), side, v};
            else
                interior.push_back(Half{static_cast<int>(e), side, v});
        }
    }
    for (auto& h : boundary)
        if (h.e < 0) throw std::invalid_argument("relation_space: boundary vertex without edge");
    int ni = static_cast<int>(interior.size());
    int cols = ni + g.n;
    auto col_of = [&](int e, int side) {
        for (int i = 0; i < ni; ++i)
            if (interior[static_cast<size_t>(i)].e == e && interior[static_cast<size_t>(i)].side == side) return i;
        for (int i = 0; i < g.n; ++i)
            if (boundary[static_cast<size_t>(i)].e == e && boundary[static_cast<size_t>(i)].side == side)
                return ni + i;
        throw std::logic_error("relation_space: missing half-edge");
    };

    std::vector<std::vector<K>> eqs;
    auto new_eq = [&]() -> std::vector<K>& {
        eqs.emplace_back(static_cast<size_t>(cols), K(0));
        return eqs.back();
    };
    // per edge: z_{(from,e)} = w(from,to) z_{(to,e)}
    for (size_t e = 0; e < g.edges.size(); ++e) {
        if (!g.edges[e].alive) continue;
        auto& row = new_eq();
        row[static_cast<size_t>(col_of(static_cast<int>(e), 0))] = K(1);
        row[static_cast<size_t>(col_of(static_cast<int>(e), 1))] = K(0) - g.edges[e].w;
    }
    // vertex equations
    for (size_t v = 0; v < g.verts.size(); ++v) {
        if (!g.verts[v].alive || g.verts[v].boundary) continue;
        std::vector<std::pair<int, int>> halves;  // (edge, side) at v
        for (size_t e = 0; e < g.edges.size(); ++e) {
            if (!g.edges[e].alive) continue;
            if (g.edges[e].from == static_cast<int>(v)) halves.emplace_back(static_cast<int>(e), 0);
            if (g.edges[e].to == static_cast<int>(v)) halves.emplace_back(static_cast<int>(e), 1);
        }
        if (g.verts[v].color == Color::Black) {
            for (size_t i = 1; i < halves.size(); ++i) {
                auto& row = new_eq();
                row[static_cast<size_t>(col_of(halves[0].first, halves[0].second))] = K(1);
                row[static_cast<size_t>(col_of(halves[i].first, halves[i].second))] = K(0) - K(1);
            }
        } else {
            auto& row = new_eq();
            for (auto [e, side] : halves)
                row[static_cast<size_t>(col_of(e, side))] = row[static_cast<size_t>(col_of(e, side))] + K(1);
        }
    }

    Mat<K> m(static_cast<int>(eqs.size()), cols);
    for (size_t i = 0; i < eqs.size(); ++i)
        for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = eqs[i][static_cast<size_t>(j)];
    Rref<K> r = rref_rank(std::move(m));

    RelationSpace<K> out;
    out.n = g.n;
    out.kN = g.expected_k();
    std::vector<int> rel_rows;
    for (size_t i = 0; i < r.pivot_columns.size(); ++i)
        if (r.pivot_columns[i] > ni) rel_rows.push_back(static_cast<int>(i));
    if (static_cast<int>(rel_rows.size()) != out.kN) return out;  // undefined
    Mat<K> rel(out.kN, g.n);
    for (size_t i = 0; i < rel_rows.size(); ++i)
        for (int j = 0; j < g.n; ++j)
            rel.at(static_cast<int>(i), j) = r.reduced.at(rel_rows[i], ni + j);
    out.rows = std::move(rel);
    return out;
}

// ---------------------------------------------------------------------------
// gluing
// ---------------------------------------------------------------------------

template <typename K>
BicoloredNetwork<K> glue(const BicoloredNetwork<K>& g, int a, int b) {
    BicoloredNetwork<K> h = g;
    int va = h.boundary_vertex(a), vb = h.boundary_vertex(b);
    int ea = -1, eb = -1;
    for (size_t e = 0; e < h.edges.size(); ++e) {
        if (!h.edges[e].alive) continue;
        if (h.edges[e].from == va || h.edges[e].to == va) ea = static_cast<int>(e);
        if (h.edges[e].from == vb || h.edges[e].to == vb) eb = static_cast<int>(e);
    }
    if (ea < 0 || eb < 0) throw std::invalid_argument("glue: missing boundary edges");
    for (int e : {ea, eb})
        if (!(h.edges[static_cast<size_t>(e)].w == K(1))) throw NonUnitBoundaryWeights();
    int ua = h.edges[static_cast<size_t>(ea)].from == va ? h.edges[static_cast<size_t>(ea)].to
                                                         : h.edges[static_cast<size_t>(ea)].from;
    int ub = h.edges[static_cast<size_t>(eb)].from == vb ? h.edges[static_cast<size_t>(eb)].to
                                                         : h.edges[static_cast<size_t>(eb)].from;
    h.edges[static_cast<size_t>(ea)].alive = false;
    h.edges[static_cast<size_t>(eb)].alive = false;
    h.verts[static_cast<size_t>(va)].alive = false;
    h.verts[static_cast<size_t>(vb)].alive = false;
    h.add_edge(ua, ub, K(1));
    // relabel remaining boundary vertices, preserving order
    std::vector<std::pair<int, int>> labels;  // (old label, vertex)
    for (size_t v = 0; v < h.verts.size(); ++v)
        if (h.verts[v].alive && h.verts[v].boundary)
            labels.emplace_back(h.verts[v].label, static_cast<int>(v));
    std::sort(labels.begin(), labels.end());
    int next = 1;
    for (auto [lab, v] : labels) h.verts[static_cast<size_t>(v)].label = next++;
    h.n -= 2;
    h.compact();
    return h;
}

// Prop "glue": Delta_J(Rel(N')) = Delta_{aJ}(Rel(N)) + Delta_{bJ}(Rel(N))
template <typename K>
PluckerVector<K> glue_pluckers(const RelationSpace<K>& r, int a, int b) {
    if (!r.defined()) throw std::logic_error("glue_pluckers: undefined relation space");
    PluckerVector<K> v = r.pluckers();
    int n2 = r.n - 2, k2 = r.kN - 1;
    PluckerVector<K> out(n2, k2);
    // map new labels to old: the order-preserving bijection avoiding a, b
    std::vector<int> old_label;
    for (int x = 1; x <= r.n; ++x)
        if (x != a && x != b) old_label.push_back(x);
    size_t idx = 0;
    for (const Subset& J : all_subsets(n2, k2)) {
        std::vector<int> ja{a}, jb{b};
        for (int x : J) {
            ja.push_back(old_label[static_cast<size_t>(x - 1)]);
            jb.push_back(old_label[static_cast<size_t>(x - 1)]);
        }
        out.coords[idx] = v.get_tuple(ja) + v.get_tuple(jb);
        ++idx;
    }
    return out;
}

// ---------------------------------------------------------------------------
// moves preserving Rel(N)
// ---------------------------------------------------------------------------

// degree-two vertex removal: w(v1,v2) = +- w(v1,u) w(u,v2)
template <typename K>
BicoloredNetwork<K> rel_remove_deg2(const BicoloredNetwork<K>& g, int u) {
    if (g.verts[static_cast<size_t>(u)].boundary || g.degree(u) != 2)
        throw std::invalid_argument("rel_remove_deg2: need interior degree 2");
    BicoloredNetwork<K> h = g;
    std::vector<std::pair<int, int>> at;  // (edge, other endpoint)
    for (size_t e = 0; e < h.edges.size(); ++e) {
        if (!h.edges[e].alive) continue;
        if (h.edges[e].from == u) at.emplace_back(static_cast<int>(e), h.edges[e].to);
        else if (h.edges[e].to == u) at.emplace_back(static_cast<int>(e), h.edges[e].from);
    }
    int v1 = at[0].second, v2 = at[1].second;
    K w = h.weight_from(at[0].first, v1) * h.weight_from(at[1].first, u);  // w(v1,u) w(u,v2)
    if (h.verts[static_cast<size_t>(u)].color == Color::White) w = K(0) - w;
    h.edges[static_cast<size_t>(at[0].first)].alive = false;
    h.edges[static_cast<size_t>(at[1].first)].alive = false;
    h.verts[static_cast<size_t>(u)].alive = false;
    h.add_edge(v1, v2, w);
    h.compact();
    return h;
}

// glue two same-colored interior vertices joined by an edge of weight one;
// white pairs take a sign twist on one side
template <typename K>
BicoloredNetwork<K> rel_same_color_glue(const BicoloredNetwork<K>& g, int e) {
    BicoloredNetwork<K> h = g;
    auto& ed = h.edges[static_cast<size_t>(e)];
    int u = ed.from, v = ed.to;
    if (u == v || h.verts[static_cast<size_t>(u)].boundary || h.verts[static_cast<size_t>(v)].boundary ||
        h.verts[static_cast<size_t>(u)].color != h.verts[static_cast<size_t>(v)].color)
        throw std::invalid_argument("rel_same_color_glue: need a same-color interior edge");
    if (!(ed.w == K(1))) throw std::invalid_argument("rel_same_color_glue: gauge the edge to 1");
    if (h.verts[static_cast<size_t>(u)].color == Color::White) h.gauge(u, K(0) - K(1));
    // the glued edge's weight was flipped too; it must be removed as +-1
    ed.alive = false;
    for (auto& e2 : h.edges) {
        if (!e2.alive) continue;
        if (e2.from == v) e2.from = u;
        if (e2.to == v) e2.to = u;
    }
    h.verts[static_cast<size_t>(v)].alive = false;
    h.compact();
    return h;
}

// parallel edge reduction between opposite-colored endpoints
template <typename K>
BicoloredNetwork<K> rel_parallel_reduce(const BicoloredNetwork<K>& g, int e1, int e2) {
    BicoloredNetwork<K> h = g;
    auto &a = h.edges[static_cast<size_t>(e1)], &b = h.edges[static_cast<size_t>(e2)];
    if (!((a.from == b.from && a.to == b.to) || (a.from == b.to && a.to == b.from)))
        throw std::invalid_argument("rel_parallel_reduce: edges not parallel");
    // orient both white -> black
    int white = h.verts[static_cast<size_t>(a.from)].color == Color::White ? a.from : a.to;
    int black = a.from == white ? a.to : a.from;
    K sum = h.weight_from(e1, white) + h.weight_from(e2, white);
    if (!ScalarOps<K>::nonzero(sum)) throw DegenerateMove();
    a.from = white;
    a.to = black;
    a.w = sum;
    b.alive = false;
    h.compact();
    return h;
}

// leaf removal: drop an interior leaf and its support; the support's other
// half-edges become fresh leaves of the removed vertex's color
template <typename K>
BicoloredNetwork<K> rel_leaf_removal(const BicoloredNetwork<K>& g, int leaf) {
    if (g.verts[static_cast<size_t>(leaf)].boundary || g.degree(leaf) != 1)
        throw std::invalid_argument("rel_leaf_removal: need an interior leaf");
    BicoloredNetwork<K> h = g;
    int le = h.incident(leaf)[0];
    int v = h.edges[static_cast<size_t>(le)].from == leaf ? h.edges[static_cast<size_t>(le)].to
                                                          : h.edges[static_cast<size_t>(le)].from;
    Color c = h.verts[static_cast<size_t>(leaf)].color;
    h.edges[static_cast<size_t>(le)].alive = false;
    for (size_t e = 0; e < h.edges.size(); ++e) {
        if (!h.edges[e].alive) continue;
        if (h.edges[e].from != v && h.edges[e].to != v) continue;
        int x = h.add_vertex(c);
        if (h.edges[e].from == v) h.edges[e].from = x;
        if (h.edges[e].to == v) h.edges[e].to = x;
    }
    h.verts[static_cast<size_t>(leaf)].alive = false;
    h.verts[static_cast<size_t>(v)].alive = false;
    h.compact();
    return h;
}

template <typename K>
BicoloredNetwork<K> rel_dipole_removal(const BicoloredNetwork<K>& g, int e) {
    BicoloredNetwork<K> h = g;
    int u = h.edges[static_cast<size_t>(e)].from, v = h.edges[static_cast<size_t>(e)].to;
    if (h.degree(u) != 1 || h.degree(v) != 1 ||
        h.verts[static_cast<size_t>(u)].color == h.verts[static_cast<size_t>(v)].color)
        throw std::invalid_argument("rel_dipole_removal: not an opposite-color dipole");
    h.edges[static_cast<size_t>(e)].alive = false;
    h.verts[static_cast<size_t>(u)].alive = false;
    h.verts[static_cast<size_t>(v)].alive = false;
    h.compact();
    return h;
}

// square move of fig. relsquare with W = w11 w22 - w12 w21
template <typename K>
BicoloredNetwork<K> rel_square_move(const BicoloredNetwork<K>& g, int b1, int w1, int b2, int w2) {
    BicoloredNetwork<K> h = g;
    auto edge_between = [&](int x, int y) {
        for (size_t e = 0; e < h.edges.size(); ++e)
            if (h.edges[e].alive && ((h.edges[e].from == x && h.edges[e].to == y) ||
                                     (h.edges[e].from == y && h.edges[e].to == x)))
                return static_cast<int>(e);
        throw std::invalid_argument("rel_square_move: missing square edge");
    };
    // w_{ij} = w(w_j, b_i)
    int e11 = edge_between(b1, w1), e12 = edge_between(b1, w2);
    int e21 = edge_between(b2, w1), e22 = edge_between(b2, w2);
    K W11 = h.weight_from(e11, w1), W12 = h.weight_from(e12, w2);
    K W21 = h.weight_from(e21, w1), W22 = h.weight_from(e22, w2);
    K W = W11 * W22 - W12 * W21;
    if (!ScalarOps<K>::nonzero(W)) throw DegenerateMove();
    // colors swap; new weights w'_{ij} with w'11 = w22/W, w'12 = -w12/W,
    // w'21 = -w21/W, w'22 = w11/W, where primed b_i sits where w_i was
    h.verts[static_cast<size_t>(b1)].color = Color::White;
    h.verts[static_cast<size_t>(b2)].color = Color::White;
    h.verts[static_cast<size_t>(w1)].color = Color::Black;
    h.verts[static_cast<size_t>(w2)].color = Color::Black;
    // primed: b'_i = old w_i, w'_j = old b_j; w'_{ij} = w(w'_j, b'_i)
    auto set_weight = [&](int e, int from, const K& val) {
        auto& ed = h.edges[static_cast<size_t>(e)];
        if (ed.from == from)
            ed.w = val;
        else {
            ed.w = K(1) / val;
        }
    };
    // w'_{ij} = w(w'_j, b'_i) with b'_i at old w_i and w'_j at old b_j:
    //   (b'_1, w'_1) = (w1, b1) = e11 carries w'11 = w22/W
    //   (b'_1, w'_2) = (w1, b2) = e21 carries w'12 = -w12/W
    //   (b'_2, w'_1) = (w2, b1) = e12 carries w'21 = -w21/W
    //   (b'_2, w'_2) = (w2, b2) = e22 carries w'22 = w11/W
    set_weight(e11, b1, W22 / W);
    set_weight(e21, b2, K(0) - (W12 / W));
    set_weight(e12, b1, K(0) - (W21 / W));
    set_weight(e22, b2, W11 / W);
    return h;
}

// boundary relabeling 1->2, ..., n->1 with the (-1)^{kN-1} twist on the old
// edge at n; realizes chi(Rel(N)) = Rel(N')
template <typename K>
BicoloredNetwork<K> rel_rotate(const BicoloredNetwork<K>& g) {
    BicoloredNetwork<K> h = g;
    int kN = h.expected_k();
    int vn = h.boundary_vertex(h.n);
    for (size_t e = 0; e < h.edges.size(); ++e) {
        if (!h.edges[e].alive) continue;
        if (h.edges[e].from == vn || h.edges[e].to == vn) {
            if (kN % 2 == 0) {
                // multiply the half-edge weight at vertex n by (-1)^{kN-1}
                h.edges[e].w = K(0) - h.edges[e].w;
            }
            break;
        }
    }
    for (auto& v : h.verts)
        if (v.alive && v.boundary) v.label = v.label % h.n + 1;
    return h;
}

// ---------------------------------------------------------------------------
// sign vectors for planar bipartite graphs (Thm "posgraph")
// ---------------------------------------------------------------------------

// Find eps in {+-1}^E with Rel(N(t,eps)) = X(N(t,1)) identically over the
// rational function field.  Signs on a spanning-forest of edges are gauge
// fixed to +1; the rest are searched and the identity verified symbolically.
inline std::vector<int> sign_vector(const PlanarNetwork<Rat>& g_in) {
    static int call_counter = 0;
    int tag = ++call_counter;
    PlanarNetwork<RatFunc> sym;
    sym.n = g_in.n;
    for (const auto& v : g_in.verts) {
        typename PlanarNetwork<RatFunc>::Vertex w;
        w.boundary = v.boundary;
        w.label = v.label;
        w.color = v.color;
        w.rot = v.rot;
        w.alive = v.alive;
        sym.verts.push_back(w);
    }
    std::vector<Var> tvars;
    for (size_t e = 0; e < g_in.edges.size(); ++e) {
        Var tv("sg" + std::to_string(tag) + "_" + std::to_string(e));
        tvars.push_back(tv);
        typename PlanarNetwork<RatFunc>::Edge ed;
        ed.u = g_in.edges[e].u;
        ed.v = g_in.edges[e].v;
        ed.weight = RatFunc::variable(tv);
        ed.alive = g_in.edges[e].alive;
        sym.edges.push_back(ed);
    }
    PluckerVector<RatFunc> target = sym.boundary_measurements();

    // spanning forest reached from the boundary: those signs gauge to +1
    size_t m = g_in.edges.size();
    std::vector<char> tree(m, 0), seen(g_in.verts.size(), 0);
    std::vector<int> queue;
    for (int label = 1; label <= g_in.n; ++label) {
        int b = g_in.boundary_vertex(label);
        seen[static_cast<size_t>(b)] = 1;
        queue.push_back(b);
    }
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        for (int e : g_in.verts[static_cast<size_t>(v)].rot) {
            if (!g_in.edges[static_cast<size_t>(e)].alive) continue;
            int w = g_in.other_end(e, v);
            if (seen[static_cast<size_t>(w)]) continue;
            seen[static_cast<size_t>(w)] = 1;
            tree[static_cast<size_t>(e)] = 1;
            queue.push_back(w);
        }
    }
    std::vector<int> free_edges;
    for (size_t e = 0; e < m; ++e)
        if (g_in.edges[e].alive && !tree[e]) free_edges.push_back(static_cast<int>(e));
    if (free_edges.size() > 20) throw std::invalid_argument("sign_vector: too many free edges");

    for (std::uint64_t mask = 0; mask < (1ULL << free_edges.size()); ++mask) {
        std::vector<int> eps(m, 1);
        for (size_t i = 0; i < free_edges.size(); ++i)
            if (mask >> i & 1) eps[static_cast<size_t>(free_edges[i])] = -1;
        PlanarNetwork<RatFunc> signed_net = sym;
        for (size_t e = 0; e < m; ++e)
            if (eps[e] < 0)
                signed_net.edges[e].weight = RatFunc() - signed_net.edges[e].weight;
        auto rel = relation_space(bicolored_of_planar(signed_net));
        if (!rel.defined()) continue;
        if (proj_eq(rel.pluckers(), target)) return eps;
    }
    throw NotRepresentable();
}

}  // namespace positroid

#endif
