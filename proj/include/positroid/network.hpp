#ifndef POSITROID_NETWORK_HPP
#define POSITROID_NETWORK_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "positroid/perm.hpp"
#include "positroid/plucker.hpp"

namespace positroid {

struct NoMatchings : std::runtime_error {
    NoMatchings() : std::runtime_error("network has no almost perfect matchings") {}
};
struct PatternMismatch : std::invalid_argument {
    explicit PatternMismatch(const std::string& w) : std::invalid_argument(w) {}
};
struct DegenerateMove : std::runtime_error {
    DegenerateMove() : std::runtime_error("move denominator vanishes") {}
};

enum class Color : unsigned char { Black, White };
inline Color opposite(Color c) { return c == Color::Black ? Color::White : Color::Black; }

// Planar bipartite network in a disk.
//
// The embedding is a rotation system: rot[v] lists the incident edge ids in
// CLOCKWISE order around v, and boundary vertices 1..n sit on the disk
// boundary in clockwise order.  Faces are derived by closing the boundary
// with virtual arcs and tracing darts; validation checks Euler's relation,
// so a wrong rotation system is rejected rather than silently accepted.
//
// Boundary vertices have degree one and carry no stored color; their
// effective color is the opposite of their unique interior neighbor.
template <typename K>
struct PlanarNetwork {
    struct Vertex {
        bool boundary = false;
        int label = 0;  // 1..n for boundary vertices
        Color color = Color::Black;
        std::vector<int> rot;  // incident edge ids, clockwise
        bool alive = true;
    };
    struct Edge {
        int u = -1, v = -1;
        K weight = K(1);
        bool alive = true;
    };

    int n = 0;
    std::vector<Vertex> verts;
    std::vector<Edge> edges;

    // --- construction helpers ---

    static PlanarNetwork with_boundary(int n_) {
        PlanarNetwork net;
        net.n = n_;
        for (int i = 1; i <= n_; ++i) {
            Vertex b;
            b.boundary = true;
            b.label = i;
            net.verts.push_back(b);
        }
        return net;
    }

    int add_vertex(Color c) {
        Vertex v;
        v.color = c;
        verts.push_back(v);
        return static_cast<int>(verts.size()) - 1;
    }

    int add_edge(int u, int v, const K& w) {
        Edge e;
        e.u = u;
        e.v = v;
        e.weight = w;
        edges.push_back(e);
        return static_cast<int>(edges.size()) - 1;
    }

    int boundary_vertex(int label) const {
        for (size_t i = 0; i < verts.size(); ++i)
            if (verts[i].alive && verts[i].boundary && verts[i].label == label)
                return static_cast<int>(i);
        throw std::out_of_range("no boundary vertex with that label");
    }

    int other_end(int e, int v) const { return edges[static_cast<size_t>(e)].u == v ? edges[static_cast<size_t>(e)].v : edges[static_cast<size_t>(e)].u; }

    int degree(int v) const { return static_cast<int>(verts[static_cast<size_t>(v)].rot.size()); }

    // effective color: interior color, or opposite of the neighbor for a
    // boundary vertex
    Color color_of(int v) const {
        const Vertex& vx = verts[static_cast<size_t>(v)];
        if (!vx.boundary) return vx.color;
        if (vx.rot.empty()) throw std::logic_error("boundary vertex without edge");
        return opposite(verts[static_cast<size_t>(other_end(vx.rot[0], v))].color);
    }

    bool is_lollipop(int label) const {
        int b = boundary_vertex(label);
        int u = other_end(verts[static_cast<size_t>(b)].rot[0], b);
        return degree(u) == 1;
    }

    // drop dead vertices/edges, renumbering everything
    void compact() {
        std::vector<int> vmap(verts.size(), -1), emap(edges.size(), -1);
        std::vector<Vertex> nv;
        std::vector<Edge> ne;
        for (size_t i = 0; i < verts.size(); ++i)
            if (verts[i].alive) {
                vmap[i] = static_cast<int>(nv.size());
                nv.push_back(verts[i]);
            }
        for (size_t i = 0; i < edges.size(); ++i)
            if (edges[i].alive) {
                emap[i] = static_cast<int>(ne.size());
                ne.push_back(edges[i]);
            }
        for (Edge& e : ne) {
            e.u = vmap[static_cast<size_t>(e.u)];
            e.v = vmap[static_cast<size_t>(e.v)];
        }
        for (Vertex& v : nv) {
            std::vector<int> r;
            for (int e : v.rot)
                if (emap[static_cast<size_t>(e)] >= 0) r.push_back(emap[static_cast<size_t>(e)]);
            v.rot = std::move(r);
        }
        verts = std::move(nv);
        edges = std::move(ne);
    }

    std::vector<int> interior_vertices() const {
        std::vector<int> out;
        for (size_t i = 0; i < verts.size(); ++i)
            if (verts[i].alive && !verts[i].boundary) out.push_back(static_cast<int>(i));
        return out;
    }

    // --- validation ---

    void validate() const {
        for (size_t vi = 0; vi < verts.size(); ++vi) {
            const Vertex& v = verts[vi];
            if (!v.alive) continue;
            if (v.boundary && v.rot.size() != 1)
                throw std::invalid_argument("boundary vertex degree != 1");
            if (!v.boundary && v.rot.empty())
                throw std::invalid_argument("isolated interior vertex");
            for (int e : v.rot) {
                const Edge& ed = edges[static_cast<size_t>(e)];
                if (!ed.alive || (ed.u != static_cast<int>(vi) && ed.v != static_cast<int>(vi)))
                    throw std::invalid_argument("rotation lists a non-incident edge");
            }
        }
        for (const Edge& e : edges) {
            if (!e.alive) continue;
            const Vertex& u = verts[static_cast<size_t>(e.u)];
            const Vertex& v = verts[static_cast<size_t>(e.v)];
            if (u.boundary && v.boundary)
                throw std::invalid_argument("boundary-boundary edge");
            if (!u.boundary && !v.boundary && u.color == v.color)
                throw std::invalid_argument("edge joins same-colored interior vertices");
        }
        // Euler check with faces from the rotation system
        int V = 0, E = 0;
        for (const Vertex& v : verts) V += v.alive;
        for (const Edge& e : edges) E += e.alive;
        int F = count_faces_with_arcs();
        int C = component_count_with_arcs();
        // per component V - E + F = 2, so the totals satisfy V - E + F = 2C
        if (V - (E + n) + F != 2 * C)
            throw std::invalid_argument("rotation system is not a disk embedding");
    }

    // --- faces ---

    // Darts on the closed surface: 2 per real edge plus 2 per virtual
    // boundary arc (arc i joins boundary labels i and i+1).
    // next(d): at the head, take the clockwise successor of the reverse dart.
    struct FaceTrace {
        std::vector<std::vector<std::pair<int, int>>> faces;  // (edge id, dir), arcs = -1-label
        int outer_face = -1;
    };

    // traced faces; each face lists real darts (edge, 0/1) only.  dir 0 means
    // traversed u->v.  The face containing the arc darts oriented against the
    // boundary order (the outside of the disk) is dropped; the remaining
    // faces are the disk faces.
    std::vector<std::vector<std::pair<int, int>>> faces() const {
        auto [darts, next] = dart_structure();
        std::vector<char> used(darts.size(), 0);
        std::vector<std::vector<std::pair<int, int>>> out;
        for (size_t s = 0; s < darts.size(); ++s) {
            if (used[s]) continue;
            std::vector<std::pair<int, int>> face;
            bool outer = false;
            size_t d = s;
            do {
                used[d] = 1;
                auto [e, dir] = darts[d];
                if (e >= 0)
                    face.emplace_back(e, dir);
                else if (dir == 0)
                    outer = true;  // the outer face walks the arcs in label order
                d = static_cast<size_t>(next[d]);
            } while (d != s);
            if (!outer) out.push_back(std::move(face));
        }
        return out;
    }

    int face_count() const { return static_cast<int>(faces().size()); }

    // --- matchings and measurements ---

    // enumerate all almost perfect matchings as edge-id lists
    std::vector<std::vector<int>> matchings() const {
        std::vector<std::vector<int>> out;
        std::vector<int> interior = interior_vertices();
        std::vector<char> covered(verts.size(), 0);
        std::vector<int> chosen;
        std::function<void(size_t)> rec = [&](size_t idx) {
            while (idx < interior.size() && covered[static_cast<size_t>(interior[idx])]) ++idx;
            if (idx == interior.size()) {
                std::vector<int> sorted = chosen;
                std::sort(sorted.begin(), sorted.end());
                out.push_back(std::move(sorted));
                return;
            }
            int v = interior[idx];
            for (int e : verts[static_cast<size_t>(v)].rot) {
                if (!edges[static_cast<size_t>(e)].alive) continue;
                int u = other_end(e, v);
                if (covered[static_cast<size_t>(u)]) continue;
                covered[static_cast<size_t>(u)] = covered[static_cast<size_t>(v)] = 1;
                chosen.push_back(e);
                rec(idx + 1);
                chosen.pop_back();
                covered[static_cast<size_t>(u)] = covered[static_cast<size_t>(v)] = 0;
            }
        };
        rec(0);
        return out;
    }

    // boundary subset of a matching: used black boundary vertices plus
    // unused white boundary vertices
    Subset boundary_subset(const std::vector<int>& matching) const {
        std::vector<char> used(verts.size(), 0);
        for (int e : matching) {
            used[static_cast<size_t>(edges[static_cast<size_t>(e)].u)] = 1;
            used[static_cast<size_t>(edges[static_cast<size_t>(e)].v)] = 1;
        }
        Subset I;
        for (int label = 1; label <= n; ++label) {
            int b = boundary_vertex(label);
            bool black = color_of(b) == Color::Black;
            if (black == static_cast<bool>(used[static_cast<size_t>(b)])) I.push_back(label);
        }
        return I;
    }

    K matching_weight(const std::vector<int>& matching) const {
        K w = K(1);
        for (int e : matching) w = w * edges[static_cast<size_t>(e)].weight;
        return w;
    }

    // k = d' + d: interior white-minus-black count plus the number of
    // boundary vertices attached to black interior vertices
    int boundary_k() const {
        int d = 0, dprime = 0;
        for (const Vertex& v : verts)
            if (v.alive && !v.boundary) d += v.color == Color::White ? 1 : -1;
        for (int label = 1; label <= n; ++label)
            if (color_of(boundary_vertex(label)) == Color::White) ++dprime;
        return d + dprime;
    }

    PluckerVector<K> boundary_measurements() const {
        auto ms = matchings();
        if (ms.empty()) throw NoMatchings();
        int k = static_cast<int>(boundary_subset(ms[0]).size());
        PluckerVector<K> v(n, k);
        for (const auto& m : ms) {
            Subset I = boundary_subset(m);
            v.at(I) = v.at(I) + matching_weight(m);
        }
        return v;
    }

    // --- face weights ---

    // y_F: product over the clockwise boundary of F of wt(e)^{+1} for edges
    // traversed black->white and wt(e)^{-1} for white->black.  Faces come
    // from faces(); the product over all of them is 1.
    std::vector<K> face_weights() const {
        std::vector<K> out;
        for (const auto& f : faces()) {
            K y = K(1);
            for (auto [e, dir] : f) {
                const Edge& ed = edges[static_cast<size_t>(e)];
                int from = dir == 0 ? ed.u : ed.v;
                if (color_of(from) == Color::Black)
                    y = y * ed.weight;
                else
                    y = y / ed.weight;
            }
            out.push_back(y);
        }
        return out;
    }

    // gauge transformation at an interior vertex
    void gauge(int v, const K& c) {
        if (verts[static_cast<size_t>(v)].boundary)
            throw std::invalid_argument("gauge only at interior vertices");
        for (int e : verts[static_cast<size_t>(v)].rot)
            edges[static_cast<size_t>(e)].weight = edges[static_cast<size_t>(e)].weight * c;
    }

    // --- trips ---

    struct Trips {
        std::vector<int> perm;                          // pi(i), 1-based
        std::vector<std::vector<std::pair<int, int>>> paths;  // darts per boundary start
        std::vector<std::vector<std::pair<int, int>>> cycles;
    };

    // next dart of the trip entering v along edge e
    std::pair<int, int> trip_step(int v, int e) const {
        const auto& rot = verts[static_cast<size_t>(v)].rot;
        size_t pos = 0;
        while (rot[pos] != e) ++pos;
        size_t m = rot.size();
        // black: turn maximally right = clockwise predecessor;
        // white: maximally left = clockwise successor
        size_t nxt = verts[static_cast<size_t>(v)].color == Color::Black ? (pos + m - 1) % m : (pos + 1) % m;
        return {v, rot[nxt]};
    }

    Trips trips() const {
        Trips out;
        out.perm.assign(static_cast<size_t>(n + 1), 0);
        std::set<std::pair<int, int>> seen;  // darts (from-vertex, edge)
        for (int label = 1; label <= n; ++label) {
            int b = boundary_vertex(label);
            int e = verts[static_cast<size_t>(b)].rot[0];
            std::vector<std::pair<int, int>> path;
            int v = b;
            int cur = e;
            while (true) {
                path.emplace_back(v, cur);
                seen.insert({v, cur});
                int w = other_end(cur, v);
                if (verts[static_cast<size_t>(w)].boundary) {
                    out.perm[static_cast<size_t>(label)] = verts[static_cast<size_t>(w)].label;
                    break;
                }
                auto [_, ne] = trip_step(w, cur);
                v = w;
                cur = ne;
            }
            out.paths.push_back(std::move(path));
        }
        // remaining darts belong to closed trips
        for (size_t ei = 0; ei < edges.size(); ++ei) {
            if (!edges[ei].alive) continue;
            for (int side = 0; side < 2; ++side) {
                int v = side == 0 ? edges[ei].u : edges[ei].v;
                if (seen.count({v, static_cast<int>(ei)})) continue;
                std::vector<std::pair<int, int>> cyc;
                int cv = v, ce = static_cast<int>(ei);
                while (!seen.count({cv, ce})) {
                    seen.insert({cv, ce});
                    cyc.emplace_back(cv, ce);
                    int w = other_end(ce, cv);
                    auto [_, ne] = trip_step(w, ce);
                    cv = w;
                    ce = ne;
                }
                out.cycles.push_back(std::move(cyc));
            }
        }
        return out;
    }

    // f_G from the trip permutation, with lollipop colors resolving pi(i)=i
    Baff graph_perm() const {
        Trips t = trips();
        std::vector<int> w(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) {
            int p = t.perm[static_cast<size_t>(i)];
            if (p == i) {
                int b = boundary_vertex(i);
                int u = other_end(verts[static_cast<size_t>(b)].rot[0], b);
                w[static_cast<size_t>(i - 1)] =
                    verts[static_cast<size_t>(u)].color == Color::Black ? i : i + n;
            } else {
                int v = p;
                while (v <= i) v += n;
                w[static_cast<size_t>(i - 1)] = v;
            }
        }
        return Baff(n, std::move(w));
    }

    bool is_reduced() const;

    // --- local moves (below) ---
    PlanarNetwork m1(const std::vector<int>& corners) const;
    PlanarNetwork m2(int v) const;
    PlanarNetwork r1(int e1, int e2) const;
    PlanarNetwork r2(int leaf) const;
    PlanarNetwork r3(int e) const;
    PlanarNetwork m2_simplify() const;  // contract all interior degree-2 vertices

    // bridge and lollipop insertions used by the factorization recursion
    void add_bridge(int i, const K& a);
    void add_lollipop(int i, Color c);

  private:
    std::pair<std::vector<std::pair<int, int>>, std::vector<int>> dart_structure() const;
    int count_faces_with_arcs() const;
    int component_count_with_arcs() const;
};

// ---------------------------------------------------------------------------
// faces via dart tracing
// ---------------------------------------------------------------------------

template <typename K>
std::pair<std::vector<std::pair<int, int>>, std::vector<int>>
PlanarNetwork<K>::dart_structure() const {
    // vertex-local rotation including virtual arcs at boundary vertices:
    // clockwise order there is [arc to next label, real edge, arc to prev]
    // darts: real (edge, dir) plus arcs (-1-label, dir); dir 0 = from the
    // lower endpoint (u for edges, label i for arc i->i+1)
    std::vector<std::pair<int, int>> darts;
    std::map<std::pair<int, int>, int> dart_id;  // (tag, dir)
    auto add_dart = [&](int tag, int dir) {
        dart_id[{tag, dir}] = static_cast<int>(darts.size());
        darts.emplace_back(tag, dir);
    };
    for (size_t e = 0; e < edges.size(); ++e)
        if (edges[e].alive) {
            add_dart(static_cast<int>(e), 0);
            add_dart(static_cast<int>(e), 1);
        }
    for (int i = 1; i <= n; ++i) {
        add_dart(-1 - i, 0);
        add_dart(-1 - i, 1);
    }
    // rotation per vertex as (tag, outgoing-dir) pairs
    auto head = [&](int tag, int dir) {
        if (tag >= 0) {
            const Edge& ed = edges[static_cast<size_t>(tag)];
            return dir == 0 ? ed.v : ed.u;
        }
        int i = -1 - tag;
        int j = dir == 0 ? (i % n) + 1 : i;
        return boundary_vertex(j);
    };
    std::vector<std::vector<std::pair<int, int>>> rot(verts.size());
    for (size_t vi = 0; vi < verts.size(); ++vi) {
        if (!verts[vi].alive) continue;
        if (!verts[vi].boundary) {
            for (int e : verts[vi].rot) {
                int dir = edges[static_cast<size_t>(e)].u == static_cast<int>(vi) ? 0 : 1;
                rot[vi].emplace_back(e, dir);
            }
        } else {
            int i = verts[vi].label;
            int prev = (i + n - 2) % n + 1;
            // clockwise at boundary i: [arc i->i+1, real edge, arc i->i-1]
            rot[vi].emplace_back(-1 - i, 0);
            if (!verts[vi].rot.empty()) {
                int e = verts[vi].rot[0];
                rot[vi].emplace_back(e, edges[static_cast<size_t>(e)].u == static_cast<int>(vi) ? 0 : 1);
            }
            rot[vi].emplace_back(-1 - prev, 1);
        }
    }
    // next dart of a face: reverse the dart, then clockwise successor at the
    // new tail
    std::vector<int> nxt(darts.size(), -1);
    for (size_t d = 0; d < darts.size(); ++d) {
        auto [tag, dir] = darts[d];
        int h = head(tag, dir);
        // find reverse dart position in rot[h]
        int rdir = 1 - dir;
        const auto& r = rot[static_cast<size_t>(h)];
        size_t pos = 0;
        while (pos < r.size() && !(r[pos].first == tag && r[pos].second == rdir)) ++pos;
        if (pos == r.size()) throw std::logic_error("dart structure inconsistent");
        auto [ntag, ndir] = r[(pos + 1) % r.size()];
        nxt[d] = dart_id[{ntag, ndir}];
    }
    return {darts, nxt};
}

template <typename K>
int PlanarNetwork<K>::count_faces_with_arcs() const {
    auto [darts, nxt] = dart_structure();
    std::vector<char> used(darts.size(), 0);
    int f = 0;
    for (size_t s = 0; s < darts.size(); ++s) {
        if (used[s]) continue;
        ++f;
        size_t d = s;
        do {
            used[d] = 1;
            d = static_cast<size_t>(nxt[d]);
        } while (d != s);
    }
    return f;
}

template <typename K>
int PlanarNetwork<K>::component_count_with_arcs() const {
    // union-find over alive vertices; boundary vertices joined in a cycle
    std::vector<int> parent(verts.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        return x;
    };
    auto unite = [&](int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); };
    for (const Edge& e : edges)
        if (e.alive) unite(e.u, e.v);
    for (int i = 1; i < n; ++i) unite(boundary_vertex(i), boundary_vertex(i + 1));
    if (n >= 2) unite(boundary_vertex(n), boundary_vertex(1));
    std::set<int> roots;
    for (size_t i = 0; i < verts.size(); ++i)
        if (verts[i].alive) roots.insert(find(static_cast<int>(i)));
    return static_cast<int>(roots.size());
}

// ---------------------------------------------------------------------------
// reducedness
// ---------------------------------------------------------------------------

template <typename K>
bool PlanarNetwork<K>::is_reduced() const {
    // strip interior-attached leaves first (R2), then test the trip
    // conditions on the leafless graph
    PlanarNetwork g = *this;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t vi = 0; vi < g.verts.size() && !changed; ++vi) {
            if (!g.verts[vi].alive || g.verts[vi].boundary || g.degree(static_cast<int>(vi)) != 1)
                continue;
            int u = g.other_end(g.verts[vi].rot[0], static_cast<int>(vi));
            if (g.verts[static_cast<size_t>(u)].boundary) continue;  // lollipop stays
            g = g.r2(static_cast<int>(vi));
            changed = true;
        }
    }
    Trips t = g.trips();
    if (!t.cycles.empty()) return false;
    // edge multiset per trip, with the boundary-leaf exception
    for (size_t p = 0; p < t.paths.size(); ++p) {
        std::map<int, int> cnt;
        for (auto [v, e] : t.paths[p]) ++cnt[e];
        for (auto [e, c] : cnt) {
            if (c < 2) continue;
            int u = g.edges[static_cast<size_t>(e)].u, w = g.edges[static_cast<size_t>(e)].v;
            bool leaf_edge = (g.verts[static_cast<size_t>(u)].boundary && g.degree(w) == 1) ||
                             (g.verts[static_cast<size_t>(w)].boundary && g.degree(u) == 1);
            if (!leaf_edge) return false;
        }
    }
    // no two trips share a pair of edges in the same relative order
    for (size_t p = 0; p < t.paths.size(); ++p)
        for (size_t q = p + 1; q < t.paths.size(); ++q) {
            std::map<int, int> pos_p;  // edge -> first position in trip p
            for (size_t i = 0; i < t.paths[p].size(); ++i)
                if (!pos_p.count(t.paths[p][i].second))
                    pos_p[t.paths[p][i].second] = static_cast<int>(i);
            std::vector<std::pair<int, int>> shared;  // (pos in q, pos in p)
            for (size_t i = 0; i < t.paths[q].size(); ++i) {
                auto it = pos_p.find(t.paths[q][i].second);
                if (it != pos_p.end()) shared.emplace_back(static_cast<int>(i), it->second);
            }
            for (size_t a = 0; a < shared.size(); ++a)
                for (size_t b = a + 1; b < shared.size(); ++b)
                    if ((shared[a].first < shared[b].first) ==
                        (shared[a].second < shared[b].second))
                        return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// local moves
// ---------------------------------------------------------------------------

// M1 in urban-renewal form: the quadrilateral face given by its four corners
// in cyclic order is replaced by an inner square joined to the old corners
// by unit legs; inner edge weights are the opposite old edge divided by
// D = ac+bd.  The corners keep their colors and external edges, so no
// bipartiteness fixups are needed; contracting the legs with (M2) recovers
// the textbook form of the move.
template <typename K>
PlanarNetwork<K> PlanarNetwork<K>::m1(const std::vector<int>& corners) const {
    if (corners.size() != 4) throw PatternMismatch("m1: need 4 corners");
    PlanarNetwork g = *this;
    int face_edge[4];
    for (int i = 0; i < 4; ++i) {
        int u = corners[static_cast<size_t>(i)], v = corners[static_cast<size_t>((i + 1) % 4)];
        int found = -1;
        for (int e : g.verts[static_cast<size_t>(u)].rot)
            if (g.edges[static_cast<size_t>(e)].alive && g.other_end(e, u) == v) found = e;
        if (found < 0) throw PatternMismatch("m1: corners do not bound a face");
        face_edge[i] = found;
    }
    for (int i = 0; i < 4; ++i) {
        if (verts[static_cast<size_t>(corners[static_cast<size_t>(i)])].boundary)
            throw PatternMismatch("m1: corner is a boundary vertex");
        if (color_of(corners[static_cast<size_t>(i)]) == color_of(corners[static_cast<size_t>((i + 1) % 4)]))
            throw PatternMismatch("m1: corners must alternate colors");
    }
    K a = g.edges[static_cast<size_t>(face_edge[0])].weight;
    K b = g.edges[static_cast<size_t>(face_edge[1])].weight;
    K c = g.edges[static_cast<size_t>(face_edge[2])].weight;
    K d = g.edges[static_cast<size_t>(face_edge[3])].weight;
    K D = a * c + b * d;
    if (!ScalarOps<K>::nonzero(D)) throw DegenerateMove();
    auto build = [&](bool flip) {
        PlanarNetwork h = g;
        int inner[4];
        for (int i = 0; i < 4; ++i)
            inner[i] = h.add_vertex(opposite(h.color_of(corners[static_cast<size_t>(i)])));
        int legs[4];
        for (int i = 0; i < 4; ++i)
            legs[i] = h.add_edge(corners[static_cast<size_t>(i)], inner[i], K(1));
        K nw[4] = {c / D, d / D, a / D, b / D};
        int ie[4];
        for (int i = 0; i < 4; ++i) ie[i] = h.add_edge(inner[i], inner[(i + 1) % 4], nw[i]);
        for (int i = 0; i < 4; ++i) {
            auto& rot = h.verts[static_cast<size_t>(corners[static_cast<size_t>(i)])].rot;
            std::vector<int> nr;
            bool placed = false;
            for (int e : rot) {
                if (e == face_edge[i] || e == face_edge[(i + 3) % 4]) {
                    if (!placed) {
                        nr.push_back(legs[i]);
                        placed = true;
                    }
                } else {
                    nr.push_back(e);
                }
            }
            rot = std::move(nr);
            if (flip)
                h.verts[static_cast<size_t>(inner[i])].rot = {legs[i], ie[(i + 3) % 4], ie[i]};
            else
                h.verts[static_cast<size_t>(inner[i])].rot = {legs[i], ie[i], ie[(i + 3) % 4]};
        }
        for (int i = 0; i < 4; ++i) h.edges[static_cast<size_t>(face_edge[i])].alive = false;
        h.compact();
        h.validate();
        return h;
    };
    // the inner-square chirality depends on whether the corners were listed
    // clockwise or counterclockwise; accept either
    try {
        return build(false);
    } catch (const std::invalid_argument&) {
        return build(true);
    }
}

// M2: contract an interior degree-2 vertex.  With two interior neighbors
// they are identified; with one boundary neighbor the path is smoothed to a
// single boundary edge (the boundary vertex's induced color flips).
template <typename K>
PlanarNetwork<K> PlanarNetwork<K>::m2(int v) const {
    if (verts[static_cast<size_t>(v)].boundary || degree(v) != 2)
        throw PatternMismatch("m2: need an interior degree-2 vertex");
    PlanarNetwork g = *this;
    int e1 = g.verts[static_cast<size_t>(v)].rot[0], e2 = g.verts[static_cast<size_t>(v)].rot[1];
    int u = g.other_end(e1, v), u2 = g.other_end(e2, v);
    if (u == u2) throw PatternMismatch("m2: contraction would create a loop");
    if (g.verts[static_cast<size_t>(u)].boundary && g.verts[static_cast<size_t>(u2)].boundary)
        throw PatternMismatch("m2: cannot merge two boundary vertices");
    if (g.verts[static_cast<size_t>(u)].boundary || g.verts[static_cast<size_t>(u2)].boundary) {
        if (g.verts[static_cast<size_t>(u2)].boundary) {
            std::swap(u, u2);
            std::swap(e1, e2);
        }
        // u boundary, u2 interior: smooth b -- v -- u2 into a single edge
        K w1 = g.edges[static_cast<size_t>(e1)].weight, w2 = g.edges[static_cast<size_t>(e2)].weight;
        g.gauge(v, K(1) / w1);
        g.gauge(u2, w1 / w2);
        int ne = g.add_edge(u, u2, K(1));
        std::replace(g.verts[static_cast<size_t>(u)].rot.begin(), g.verts[static_cast<size_t>(u)].rot.end(), e1, ne);
        std::replace(g.verts[static_cast<size_t>(u2)].rot.begin(), g.verts[static_cast<size_t>(u2)].rot.end(), e2, ne);
        g.edges[static_cast<size_t>(e1)].alive = false;
        g.edges[static_cast<size_t>(e2)].alive = false;
        g.verts[static_cast<size_t>(v)].alive = false;
        g.compact();
        g.validate();
        return g;
    }
    // gauge both edges to weight 1: first at v, then at u2 (interior)
    K w1 = g.edges[static_cast<size_t>(e1)].weight, w2 = g.edges[static_cast<size_t>(e2)].weight;
    g.gauge(v, K(1) / w1);
    g.gauge(u2, w1 / w2);
    // splice u2's rotation (minus e2) into u's rotation at e1's slot
    auto& ru2 = g.verts[static_cast<size_t>(u2)].rot;
    size_t p2 = 0;
    while (ru2[p2] != e2) ++p2;
    std::vector<int> splice;
    for (size_t i = 1; i < ru2.size(); ++i) splice.push_back(ru2[(p2 + i) % ru2.size()]);
    auto& ru = g.verts[static_cast<size_t>(u)].rot;
    std::vector<int> nr;
    for (int e : ru) {
        if (e == e1)
            nr.insert(nr.end(), splice.begin(), splice.end());
        else
            nr.push_back(e);
    }
    ru = std::move(nr);
    for (int e : splice) {
        if (g.edges[static_cast<size_t>(e)].u == u2) g.edges[static_cast<size_t>(e)].u = u;
        if (g.edges[static_cast<size_t>(e)].v == u2) g.edges[static_cast<size_t>(e)].v = u;
    }
    g.edges[static_cast<size_t>(e1)].alive = false;
    g.edges[static_cast<size_t>(e2)].alive = false;
    g.verts[static_cast<size_t>(v)].alive = false;
    g.verts[static_cast<size_t>(u2)].alive = false;
    // a boundary vertex absorbing an interior vertex flips its induced color
    // automatically since colors are derived
    g.compact();
    g.validate();
    return g;
}

template <typename K>
PlanarNetwork<K> PlanarNetwork<K>::m2_simplify() const {
    PlanarNetwork g = *this;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t vi = 0; vi < g.verts.size() && !changed; ++vi) {
            if (!g.verts[vi].alive || g.verts[vi].boundary || g.degree(static_cast<int>(vi)) != 2)
                continue;
            int e1 = g.verts[vi].rot[0], e2 = g.verts[vi].rot[1];
            int u = g.other_end(e1, static_cast<int>(vi)), u2 = g.other_end(e2, static_cast<int>(vi));
            if (u == u2) continue;
            // keep boundary chains: contracting them flips boundary colors
            if (g.verts[static_cast<size_t>(u)].boundary || g.verts[static_cast<size_t>(u2)].boundary) continue;
            g = g.m2(static_cast<int>(vi));
            changed = true;
        }
    }
    return g;
}

// R1: merge two parallel edges into one carrying the sum of the weights
template <typename K>
PlanarNetwork<K> PlanarNetwork<K>::r1(int e1, int e2) const {
    const Edge& a = edges[static_cast<size_t>(e1)];
    const Edge& b = edges[static_cast<size_t>(e2)];
    if (!((a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u)))
        throw PatternMismatch("r1: edges are not parallel");
    PlanarNetwork g = *this;
    g.edges[static_cast<size_t>(e1)].weight = a.weight + b.weight;
    g.edges[static_cast<size_t>(e2)].alive = false;
    for (int w : {a.u, a.v}) {
        auto& rot = g.verts[static_cast<size_t>(w)].rot;
        rot.erase(std::remove(rot.begin(), rot.end(), e2), rot.end());
    }
    g.compact();
    g.validate();
    return g;
}

// R2: remove an interior leaf and its support vertex; boundary edges of the
// support are replaced by fresh leaves of the removed vertex's color
template <typename K>
PlanarNetwork<K> PlanarNetwork<K>::r2(int leaf) const {
    if (verts[static_cast<size_t>(leaf)].boundary || degree(leaf) != 1)
        throw PatternMismatch("r2: need an interior leaf");
    PlanarNetwork g = *this;
    int e = g.verts[static_cast<size_t>(leaf)].rot[0];
    int u = g.other_end(e, leaf);
    if (g.verts[static_cast<size_t>(u)].boundary)
        throw PatternMismatch("r2: lollipops are not removable");
    Color leaf_color = g.verts[static_cast<size_t>(leaf)].color;
    for (int eu : std::vector<int>(g.verts[static_cast<size_t>(u)].rot)) {
        int x = g.other_end(eu, u);
        g.edges[static_cast<size_t>(eu)].alive = false;
        if (x == leaf) continue;
        auto& rx = g.verts[static_cast<size_t>(x)].rot;
        if (g.verts[static_cast<size_t>(x)].boundary) {
            int w = g.add_vertex(leaf_color);
            int ne = g.add_edge(x, w, K(1));
            std::replace(rx.begin(), rx.end(), eu, ne);
            g.verts[static_cast<size_t>(w)].rot = {ne};
        } else {
            rx.erase(std::remove(rx.begin(), rx.end(), eu), rx.end());
        }
    }
    g.verts[static_cast<size_t>(leaf)].alive = false;
    g.verts[static_cast<size_t>(u)].alive = false;
    g.compact();
    g.validate();
    return g;
}

// R3: remove an interior dipole (edge joining two interior leaves)
template <typename K>
PlanarNetwork<K> PlanarNetwork<K>::r3(int e) const {
    int u = edges[static_cast<size_t>(e)].u, v = edges[static_cast<size_t>(e)].v;
    if (verts[static_cast<size_t>(u)].boundary || verts[static_cast<size_t>(v)].boundary ||
        degree(u) != 1 || degree(v) != 1)
        throw PatternMismatch("r3: not a dipole");
    PlanarNetwork g = *this;
    g.edges[static_cast<size_t>(e)].alive = false;
    g.verts[static_cast<size_t>(u)].alive = false;
    g.verts[static_cast<size_t>(v)].alive = false;
    g.compact();
    g.validate();
    return g;
}

// ---------------------------------------------------------------------------
// bridge / lollipop insertions
// ---------------------------------------------------------------------------

// Add a bridge between boundary labels i and i+1 (white at i, black at i+1)
// realizing X(N') = X(N) x_i(a).  New vertices are spliced into the two
// boundary edges with the old weight kept adjacent to the old interior
// vertex, which makes the measurement transformation hold on the nose.
template <typename K>
void PlanarNetwork<K>::add_bridge(int i, const K& a) {
    int j = i % n + 1;  // label i+1
    int bi = boundary_vertex(i), bj = boundary_vertex(j);
    int ei = verts[static_cast<size_t>(bi)].rot[0], ej = verts[static_cast<size_t>(bj)].rot[0];
    int ui = other_end(ei, bi), uj = other_end(ej, bj);
    K pi = edges[static_cast<size_t>(ei)].weight, pj = edges[static_cast<size_t>(ej)].weight;
    Color ci = verts[static_cast<size_t>(ui)].color, cj = verts[static_cast<size_t>(uj)].color;

    edges[static_cast<size_t>(ei)].alive = false;
    edges[static_cast<size_t>(ej)].alive = false;

    int w = add_vertex(Color::White);  // bridge end at i
    int b = add_vertex(Color::Black);  // bridge end at i+1
    int bridge = add_edge(w, b, a);

    // chain from boundary i to u_i through w; rotations are clockwise with
    // the bridge heading toward i+1 (the clockwise side)
    auto chain_i = [&]() {
        if (ci == Color::Black) {
            // i -- B2 -- w -- u_i
            int B2 = add_vertex(Color::Black);
            int e1 = add_edge(bi, B2, K(1));
            int e2 = add_edge(B2, w, K(1));
            int e3 = add_edge(w, ui, pi);
            verts[static_cast<size_t>(bi)].rot = {e1};
            verts[static_cast<size_t>(B2)].rot = {e1, e2};
            verts[static_cast<size_t>(w)].rot = {e2, bridge, e3};
            std::replace(verts[static_cast<size_t>(ui)].rot.begin(),
                         verts[static_cast<size_t>(ui)].rot.end(), ei, e3);
        } else {
            // i -- w -- X2 -- u_i
            int X2 = add_vertex(Color::Black);
            int e1 = add_edge(bi, w, K(1));
            int e2 = add_edge(w, X2, K(1));
            int e3 = add_edge(X2, ui, pi);
            verts[static_cast<size_t>(bi)].rot = {e1};
            verts[static_cast<size_t>(w)].rot = {e1, bridge, e2};
            verts[static_cast<size_t>(X2)].rot = {e2, e3};
            std::replace(verts[static_cast<size_t>(ui)].rot.begin(),
                         verts[static_cast<size_t>(ui)].rot.end(), ei, e3);
        }
    };
    auto chain_j = [&]() {
        if (cj == Color::White) {
            // i+1 -- W2 -- b -- u_j
            int W2 = add_vertex(Color::White);
            int e1 = add_edge(bj, W2, K(1));
            int e2 = add_edge(W2, b, K(1));
            int e3 = add_edge(b, uj, pj);
            verts[static_cast<size_t>(bj)].rot = {e1};
            verts[static_cast<size_t>(W2)].rot = {e1, e2};
            verts[static_cast<size_t>(b)].rot = {e2, e3, bridge};
            std::replace(verts[static_cast<size_t>(uj)].rot.begin(),
                         verts[static_cast<size_t>(uj)].rot.end(), ej, e3);
        } else {
            // i+1 -- b -- Y2 -- u_j
            int Y2 = add_vertex(Color::White);
            int e1 = add_edge(bj, b, K(1));
            int e2 = add_edge(b, Y2, K(1));
            int e3 = add_edge(Y2, uj, pj);
            verts[static_cast<size_t>(bj)].rot = {e1};
            verts[static_cast<size_t>(b)].rot = {e1, e2, bridge};
            verts[static_cast<size_t>(Y2)].rot = {e2, e3};
            std::replace(verts[static_cast<size_t>(uj)].rot.begin(),
                         verts[static_cast<size_t>(uj)].rot.end(), ej, e3);
        }
    };
    chain_i();
    chain_j();
    compact();
}

// Insert a lollipop at position i: boundary labels i..n shift up by one.
template <typename K>
void PlanarNetwork<K>::add_lollipop(int i, Color c) {
    for (Vertex& v : verts)
        if (v.alive && v.boundary && v.label >= i) ++v.label;
    ++n;
    Vertex b;
    b.boundary = true;
    b.label = i;
    verts.push_back(b);
    int bid = static_cast<int>(verts.size()) - 1;
    int leaf = add_vertex(c);
    int e = add_edge(bid, leaf, K(1));
    verts[static_cast<size_t>(bid)].rot = {e};
    verts[static_cast<size_t>(leaf)].rot = {e};
}

// single lollipop network (the base case of the factorization recursion)
template <typename K>
PlanarNetwork<K> lollipop_network(int n, const std::vector<Color>& colors) {
    PlanarNetwork<K> g = PlanarNetwork<K>::with_boundary(n);
    for (int i = 1; i <= n; ++i) {
        int leaf = g.add_vertex(colors[static_cast<size_t>(i - 1)]);
        int e = g.add_edge(g.boundary_vertex(i), leaf, K(1));
        g.verts[static_cast<size_t>(g.boundary_vertex(i))].rot = {e};
        g.verts[static_cast<size_t>(leaf)].rot = {e};
    }
    return g;
}

// the square graph of Gr(2,4) with weights a,b,c,d
template <typename K>
PlanarNetwork<K> square_network(const K& a, const K& b, const K& c, const K& d) {
    auto g = PlanarNetwork<K>::with_boundary(4);
    int bt = g.add_vertex(Color::Black);   // top, boundary 1
    int wr = g.add_vertex(Color::White);   // right, boundary 2
    int bb = g.add_vertex(Color::Black);   // bottom, boundary 3
    int wl = g.add_vertex(Color::White);   // left, boundary 4
    int p1 = g.add_edge(g.boundary_vertex(1), bt, K(1));
    int p2 = g.add_edge(g.boundary_vertex(2), wr, K(1));
    int p3 = g.add_edge(g.boundary_vertex(3), bb, K(1));
    int p4 = g.add_edge(g.boundary_vertex(4), wl, K(1));
    int ea = g.add_edge(wl, bt, a);
    int eb = g.add_edge(bt, wr, b);
    int ec = g.add_edge(wr, bb, c);
    int ed = g.add_edge(bb, wl, d);
    g.verts[static_cast<size_t>(g.boundary_vertex(1))].rot = {p1};
    g.verts[static_cast<size_t>(g.boundary_vertex(2))].rot = {p2};
    g.verts[static_cast<size_t>(g.boundary_vertex(3))].rot = {p3};
    g.verts[static_cast<size_t>(g.boundary_vertex(4))].rot = {p4};
    g.verts[static_cast<size_t>(bt)].rot = {p1, eb, ea};   // up, right(E), left(W)
    g.verts[static_cast<size_t>(wr)].rot = {p2, ec, eb};   // out(E), down(SW), up(NW)
    g.verts[static_cast<size_t>(bb)].rot = {p3, ed, ec};   // down(S), left(NW), right(NE)
    g.verts[static_cast<size_t>(wl)].rot = {p4, ea, ed};   // out(W), up(NE), down(SE)
    return g;
}

// the acyclic grid network for the top cell of Gr(k,n): black/white pair per
// grid crossing, sources 1..k on the right, sinks k+1..n along the bottom
// (right to left); weight w(i,j) sits on the diagonal edge of cell (i,j)
template <typename K>
PlanarNetwork<K> grid_network(int k, int n, const std::vector<std::vector<K>>& w) {
    int m = n - k;
    auto g = PlanarNetwork<K>::with_boundary(n);
    std::vector<std::vector<int>> B(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(m)));
    std::vector<std::vector<int>> W(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(m)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < m; ++j) {
            B[static_cast<size_t>(i)][static_cast<size_t>(j)] = g.add_vertex(Color::Black);
            W[static_cast<size_t>(i)][static_cast<size_t>(j)] = g.add_vertex(Color::White);
        }
    // cell (i,j): i = row 1..k (top to bottom), j = column 1..m with j = 1
    // the rightmost (sink label k+1) and j = m the leftmost (sink label n)
    std::map<std::pair<int, int>, int> diag, row_e, col_e;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < m; ++j) {
            int b = B[static_cast<size_t>(i)][static_cast<size_t>(j)], wv = W[static_cast<size_t>(i)][static_cast<size_t>(j)];
            diag[{i, j}] = g.add_edge(b, wv, w[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            // row edge to the right: black of (i,j) to white of (i,j-1), or source i+1
            if (j > 0)
                row_e[{i, j}] = g.add_edge(b, W[static_cast<size_t>(i)][static_cast<size_t>(j - 1)], K(1));
            else
                row_e[{i, j}] = g.add_edge(b, g.boundary_vertex(i + 1), K(1));
            // column edge up: black of (i,j) to white of (i-1,j); none at i=0
            if (i > 0) col_e[{i, j}] = g.add_edge(b, W[static_cast<size_t>(i - 1)][static_cast<size_t>(j)], K(1));
        }
    // bottom edges: white of (k-1,j) to sink
    std::map<int, int> sink_e;
    for (int j = 0; j < m; ++j)
        sink_e[j] = g.add_edge(W[static_cast<size_t>(k - 1)][static_cast<size_t>(j)], g.boundary_vertex(k + 1 + j), K(1));
    // rotations (clockwise): at black (i,j): [up, right, diag]; at white
    // (i,j): [diag, down, left]
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < m; ++j) {
            std::vector<int> rb;
            if (i > 0) rb.push_back(col_e[{i, j}]);
            rb.push_back(row_e[{i, j}]);
            rb.push_back(diag[{i, j}]);
            g.verts[static_cast<size_t>(B[static_cast<size_t>(i)][static_cast<size_t>(j)])].rot = rb;
            std::vector<int> rw;
            rw.push_back(diag[{i, j}]);
            rw.push_back(i + 1 < k ? col_e[{i + 1, j}] : sink_e[j]);
            if (j + 1 < m) rw.push_back(row_e[{i, j + 1}]);
            g.verts[static_cast<size_t>(W[static_cast<size_t>(i)][static_cast<size_t>(j)])].rot = rw;
        }
    for (int i = 1; i <= k; ++i)
        g.verts[static_cast<size_t>(g.boundary_vertex(i))].rot = {row_e[{i - 1, 0}]};
    for (int j = 0; j < m; ++j)
        g.verts[static_cast<size_t>(g.boundary_vertex(k + 1 + j))].rot = {sink_e[j]};
    return g;
}

// ---------------------------------------------------------------------------
// perfect orientations and flows
// ---------------------------------------------------------------------------

struct NotPerfectlyOriented : std::invalid_argument {
    NotPerfectlyOriented() : std::invalid_argument("not a perfect orientation") {}
};

// direction per edge id: 0 = u->v, 1 = v->u
using Orientation = std::vector<int>;

template <typename K>
void check_perfect(const PlanarNetwork<K>& g, const Orientation& o) {
    for (int v : g.interior_vertices()) {
        int out = 0, in = 0;
        for (int e : g.verts[static_cast<size_t>(v)].rot) {
            const auto& ed = g.edges[static_cast<size_t>(e)];
            int from = o[static_cast<size_t>(e)] == 0 ? ed.u : ed.v;
            (from == v ? out : in)++;
        }
        Color c = g.verts[static_cast<size_t>(v)].color;
        if (c == Color::Black && out != 1) throw NotPerfectlyOriented();
        if (c == Color::White && in != 1) throw NotPerfectlyOriented();
    }
}

// matching -> orientation: matched edges black->white, others white->black
template <typename K>
Orientation orientation_of_matching(const PlanarNetwork<K>& g, const std::vector<int>& matching) {
    std::vector<char> inm(g.edges.size(), 0);
    for (int e : matching) inm[static_cast<size_t>(e)] = 1;
    Orientation o(g.edges.size(), 0);
    for (size_t e = 0; e < g.edges.size(); ++e) {
        const auto& ed = g.edges[e];
        Color cu = g.color_of(ed.u);
        bool u_black = cu == Color::Black;
        // target: matched => black to white, unmatched => white to black
        bool from_u = inm[e] ? u_black : !u_black;
        o[e] = from_u ? 0 : 1;
    }
    return o;
}

template <typename K>
std::vector<int> matching_of_orientation(const PlanarNetwork<K>& g, const Orientation& o) {
    std::vector<int> m;
    for (size_t e = 0; e < g.edges.size(); ++e) {
        const auto& ed = g.edges[e];
        int from = o[e] == 0 ? ed.u : ed.v;
        if (g.color_of(from) == Color::Black) m.push_back(static_cast<int>(e));
    }
    return m;
}

// boundary sources of an orientation: boundary vertices whose edge points
// into the interior
template <typename K>
Subset boundary_sources(const PlanarNetwork<K>& g, const Orientation& o) {
    Subset s;
    for (int label = 1; label <= g.n; ++label) {
        int b = g.boundary_vertex(label);
        int e = g.verts[static_cast<size_t>(b)].rot[0];
        int from = o[static_cast<size_t>(e)] == 0 ? g.edges[static_cast<size_t>(e)].u : g.edges[static_cast<size_t>(e)].v;
        if (from == b) s.push_back(label);
    }
    return s;
}

// flows: edge subsets conserving in/out degree at interior vertices
template <typename K>
PluckerVector<K> flow_measurements(const PlanarNetwork<K>& g, const Orientation& o) {
    check_perfect(g, o);
    Subset sources = boundary_sources(g, o);
    int k = static_cast<int>(sources.size());
    PluckerVector<K> out(g.n, k);
    size_t m = g.edges.size();
    // enumerate flow subsets with per-vertex conservation pruning at the
    // last edge of each vertex
    std::vector<int> last_edge(g.verts.size(), -1);
    for (size_t e = 0; e < m; ++e) {
        last_edge[static_cast<size_t>(g.edges[e].u)] = static_cast<int>(e);
        last_edge[static_cast<size_t>(g.edges[e].v)] = static_cast<int>(e);
    }
    std::vector<int> balance(g.verts.size(), 0);  // out - in among chosen
    std::vector<char> chosen(m, 0);
    std::function<void(size_t, K)> rec = [&](size_t e, K wt) {
        if (e == m) {
            // boundary subset: sources not used + sinks used
            Subset I;
            for (int label = 1; label <= g.n; ++label) {
                int b = g.boundary_vertex(label);
                int be = g.verts[static_cast<size_t>(b)].rot[0];
                bool is_source = false;
                for (int s : sources) is_source = is_source || s == label;
                bool used = chosen[static_cast<size_t>(be)];
                if (is_source != used) I.push_back(label);
            }
            out.at(I) = out.at(I) + wt;
            return;
        }
        const auto& ed = g.edges[e];
        int from = o[e] == 0 ? ed.u : ed.v;
        int to = o[e] == 0 ? ed.v : ed.u;
        auto feasible = [&](int v) {
            if (g.verts[static_cast<size_t>(v)].boundary) return true;
            if (last_edge[static_cast<size_t>(v)] == static_cast<int>(e)) return balance[static_cast<size_t>(v)] == 0;
            return true;
        };
        // skip edge
        if (feasible(from) && feasible(to)) rec(e + 1, wt);
        // take edge
        balance[static_cast<size_t>(from)] += 1;
        balance[static_cast<size_t>(to)] -= 1;
        chosen[e] = 1;
        if (feasible(from) && feasible(to)) rec(e + 1, wt * ed.weight);
        chosen[e] = 0;
        balance[static_cast<size_t>(from)] -= 1;
        balance[static_cast<size_t>(to)] += 1;
    };
    rec(0, K(1));
    return out;
}

// invert the weights on black->white edges of O (the matched edges)
template <typename K>
PlanarNetwork<K> invert_matched_weights(PlanarNetwork<K> g, const Orientation& o) {
    for (size_t e = 0; e < g.edges.size(); ++e) {
        auto& ed = g.edges[e];
        int from = o[e] == 0 ? ed.u : ed.v;
        if (g.color_of(from) == Color::Black) ed.weight = K(1) / ed.weight;
    }
    return g;
}

// ---------------------------------------------------------------------------
// spherical (two-hemisphere) networks and equatorial measurements
// ---------------------------------------------------------------------------

template <typename K>
struct SphericalNetwork {
    PlanarNetwork<K> upper, lower;

    SphericalNetwork(PlanarNetwork<K> up, PlanarNetwork<K> lo)
        : upper(std::move(up)), lower(std::move(lo)) {
        if (upper.n != lower.n) throw std::invalid_argument("hemisphere boundary mismatch");
        normalize_boundary_colors(upper);
        normalize_boundary_colors(lower);
    }

    // every equatorial vertex must be black, i.e. hemisphere boundary
    // vertices attach to white interior vertices.  A boundary vertex on a
    // black interior vertex gets a single white degree-2 vertex spliced in
    // (the inverse of the boundary case of M2); the induced color flip
    // compensates the coverage flip, so measurements are preserved exactly.
    static void normalize_boundary_colors(PlanarNetwork<K>& g) {
        for (int label = 1; label <= g.n; ++label) {
            int b = g.boundary_vertex(label);
            int e = g.verts[static_cast<size_t>(b)].rot[0];
            int u = g.other_end(e, b);
            if (g.verts[static_cast<size_t>(u)].color == Color::White) continue;
            K p = g.edges[static_cast<size_t>(e)].weight;
            g.edges[static_cast<size_t>(e)].alive = false;
            int w = g.add_vertex(Color::White);
            int e1 = g.add_edge(b, w, K(1));
            int e2 = g.add_edge(w, u, p);
            g.verts[static_cast<size_t>(b)].rot = {e1};
            g.verts[static_cast<size_t>(w)].rot = {e1, e2};
            std::replace(g.verts[static_cast<size_t>(u)].rot.begin(), g.verts[static_cast<size_t>(u)].rot.end(), e, e2);
        }
        g.compact();
        g.validate();
    }

    // Delta_I(S) = sum over matching pairs with I+ u I- = I of
    // (-1)^{inv(I+,I-)} wt+ wt-
    std::optional<PluckerVector<K>> equatorial_measurements() const {
        auto mu = upper.matchings();
        auto ml = lower.matchings();
        if (mu.empty() || ml.empty()) throw NoMatchings();
        int k = static_cast<int>(upper.boundary_subset(mu[0]).size()) +
                static_cast<int>(lower.boundary_subset(ml[0]).size());
        PluckerVector<K> out(upper.n, k);
        bool nz = false;
        for (const auto& pu : mu) {
            Subset Iu = upper.boundary_subset(pu);
            K wu = upper.matching_weight(pu);
            for (const auto& pl : ml) {
                Subset Il = lower.boundary_subset(pl);
                bool disjoint = true;
                for (int x : Il) disjoint = disjoint && !contains(Iu, x);
                if (!disjoint) continue;
                Subset I = Iu;
                for (int x : Il) I = set_plus(I, x);
                K term = wu * lower.matching_weight(pl);
                if (inv_count(Iu, Il) % 2)
                    out.at(I) = out.at(I) - term;
                else
                    out.at(I) = out.at(I) + term;
            }
        }
        for (const K& c : out.coords) nz = nz || ScalarOps<K>::nonzero(c);
        if (!nz) return std::nullopt;
        return out;
    }
};

}  // namespace positroid

#endif
