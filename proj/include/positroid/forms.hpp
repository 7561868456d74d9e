#ifndef POSITROID_FORMS_HPP
#define POSITROID_FORMS_HPP

#include <functional>
#include <string>
#include <vector>

#include "positroid/network.hpp"
#include "positroid/reduction.hpp"

namespace positroid {

struct ChartDegenerate : std::invalid_argument {
    ChartDegenerate() : std::invalid_argument("chart minor vanishes identically on the cell") {}
};

// Coordinate edges E': a set whose complement is a disconnected grove (a
// spanning forest with exactly one boundary vertex per component).  Greedy
// union-find construction; |E'| = #faces - 1.
template <typename K>
std::vector<int> coordinate_edges(const PlanarNetwork<K>& g) {
    std::vector<int> parent(g.verts.size());
    std::vector<char> hasb(g.verts.size(), 0);
    for (size_t i = 0; i < parent.size(); ++i) {
        parent[i] = static_cast<int>(i);
        hasb[i] = g.verts[i].alive && g.verts[i].boundary;
    }
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x)
            x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        return x;
    };
    std::vector<int> eprime;
    for (size_t e = 0; e < g.edges.size(); ++e) {
        if (!g.edges[e].alive) continue;
        int ru = find(g.edges[e].u), rv = find(g.edges[e].v);
        if (ru != rv && !(hasb[static_cast<size_t>(ru)] && hasb[static_cast<size_t>(rv)])) {
            parent[static_cast<size_t>(ru)] = rv;
            hasb[static_cast<size_t>(rv)] = hasb[static_cast<size_t>(rv)] || hasb[static_cast<size_t>(ru)];
        } else {
            eprime.push_back(static_cast<int>(e));
        }
    }
    // every forest component must contain exactly one boundary vertex
    for (size_t v = 0; v < g.verts.size(); ++v)
        if (g.verts[v].alive && !hasb[static_cast<size_t>(find(static_cast<int>(v)))])
            throw std::invalid_argument("coordinate_edges: grove does not exist");
    return eprime;
}

// A one-parameter-family presentation of (an open subset of) a positroid
// cell: a symbolic Plucker vector in the listed parameters.
struct ChartFamily {
    PluckerVector<RatFunc> v;
    std::vector<Var> params;

    int dim() const { return static_cast<int>(params.size()); }
};

// the bridge-weight parametrization of a cell
inline ChartFamily bridge_family(const CellChart& chart) {
    ChartFamily fam;
    fam.params = chart.params;
    std::vector<RatFunc> vals;
    for (Var v : chart.params) vals.push_back(RatFunc::variable(v));
    fam.v = plucker_of(matrix_of_steps(chart.steps, vals));
    return fam;
}

// the edge-weight parametrization: t on E', all other weights 1
inline ChartFamily eprime_family(const PlanarNetwork<Rat>& g, const std::vector<int>& eprime,
                                 const std::string& tag) {
    PlanarNetwork<RatFunc> sym;
    sym.n = g.n;
    for (const auto& v : g.verts) {
        PlanarNetwork<RatFunc>::Vertex w;
        w.boundary = v.boundary;
        w.label = v.label;
        w.color = v.color;
        w.rot = v.rot;
        w.alive = v.alive;
        sym.verts.push_back(w);
    }
    for (const auto& e : g.edges) {
        PlanarNetwork<RatFunc>::Edge ed;
        ed.u = e.u;
        ed.v = e.v;
        ed.weight = RatFunc(Rat(1));
        ed.alive = e.alive;
        sym.edges.push_back(ed);
    }
    ChartFamily fam;
    for (size_t i = 0; i < eprime.size(); ++i) {
        Var tv(tag + std::to_string(i + 1));
        fam.params.push_back(tv);
        sym.edges[static_cast<size_t>(eprime[i])].weight = RatFunc::variable(tv);
    }
    fam.v = sym.boundary_measurements();
    return fam;
}

// chart matrix with the identity at columns I; entries are the signed
// Plucker ratios
inline Mat<RatFunc> chart_matrix(const PluckerVector<RatFunc>& v, const Subset& I) {
    if (!ScalarOps<RatFunc>::nonzero(v.at(I))) throw ChartDegenerate();
    RatFunc d = v.at(I);
    Mat<RatFunc> m(v.k, v.n);
    for (int r = 0; r < v.k; ++r)
        for (int c = 1; c <= v.n; ++c) {
            if (contains(I, c)) {
                m.at(r, c - 1) = I[static_cast<size_t>(r)] == c ? RatFunc(Rat(1)) : RatFunc();
                continue;
            }
            std::vector<int> t = I;
            t[static_cast<size_t>(r)] = c;
            m.at(r, c - 1) = v.get_tuple(t) / d;
        }
    return m;
}

// non-chart coordinate positions (row, column), both 1-based
inline std::vector<std::pair<int, int>> coordinate_positions(int k, int n, const Subset& I) {
    std::vector<std::pair<int, int>> out;
    for (int r = 1; r <= k; ++r)
        for (int c = 1; c <= n; ++c)
            if (!contains(I, c)) out.emplace_back(r, c);
    return out;
}

// exact Jacobian of the selected chart coordinates at a parameter point
inline Mat<Rat> jacobian_at(const ChartFamily& fam, const Subset& I,
                            const std::vector<std::pair<int, int>>& active,
                            const std::vector<Rat>& t0) {
    Mat<RatFunc> x = chart_matrix(fam.v, I);
    auto value_of = [&](Var v) {
        for (size_t i = 0; i < fam.params.size(); ++i)
            if (fam.params[i].id == v.id) return t0[i];
        throw std::logic_error("jacobian_at: unknown parameter");
    };
    Mat<Rat> J(static_cast<int>(active.size()), static_cast<int>(fam.params.size()));
    for (size_t p = 0; p < active.size(); ++p) {
        RatFunc f = x.at(active[p].first - 1, active[p].second - 1);
        for (size_t q = 0; q < fam.params.size(); ++q)
            J.at(static_cast<int>(p), static_cast<int>(q)) = f.partial(fam.params[q]).eval(value_of);
    }
    return J;
}

// a deterministic generic parameter point (distinct primes)
inline std::vector<Rat> generic_point(int d) {
    static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    std::vector<Rat> out;
    for (int i = 0; i < d; ++i) {
        Rat q(primes[i % 12], 1 + i / 12);
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

// choose d coordinate positions with invertible Jacobian (first found by
// row-reducing at a generic point)
inline std::vector<std::pair<int, int>> choose_active(const ChartFamily& fam, const Subset& I) {
    int d = fam.dim();
    auto all_pos = coordinate_positions(fam.v.k, fam.v.n, I);
    if (d == 0) return {};
    std::vector<Rat> t0 = generic_point(d);
    Mat<Rat> J = jacobian_at(fam, I, all_pos, t0);
    // pivot rows of J^T = independent coordinate positions
    Rref<Rat> r = rref_rank(J.transpose());
    if (r.rank != d) throw ChartDegenerate();
    std::vector<std::pair<int, int>> act;
    for (int col : r.pivot_columns) act.push_back(all_pos[static_cast<size_t>(col - 1)]);
    return act;
}

// value of the density of prod dlog t at a parameter point, relative to the
// wedge of the active chart coordinates
inline Rat density_at(const ChartFamily& fam, const Subset& I,
                      const std::vector<std::pair<int, int>>& active,
                      const std::vector<Rat>& t0) {
    if (fam.dim() == 0) return Rat(1);
    Mat<Rat> J = jacobian_at(fam, I, active, t0);
    Rat dj = det(J);
    if (is_zero(dj)) throw ChartDegenerate();
    Rat prod(1);
    for (const Rat& t : t0) prod *= t;
    return Rat(1) / (prod * dj);
}

// face-weight exponent matrix of the E'-parametrized network: row per face,
// column per E' edge
template <typename K>
std::vector<std::vector<int>> face_exponents(const PlanarNetwork<K>& g,
                                             const std::vector<int>& eprime) {
    std::vector<std::vector<int>> out;
    for (const auto& f : g.faces()) {
        std::vector<int> row(eprime.size(), 0);
        for (auto [e, dir] : f) {
            auto it = std::find(eprime.begin(), eprime.end(), e);
            if (it == eprime.end()) continue;
            size_t idx = static_cast<size_t>(it - eprime.begin());
            int from = dir == 0 ? g.edges[static_cast<size_t>(e)].u : g.edges[static_cast<size_t>(e)].v;
            row[idx] += g.color_of(from) == Color::Black ? 1 : -1;
        }
        out.push_back(std::move(row));
    }
    return out;
}

// recover the E' parameters of a gauge class from its face weights: the
// monomial map t -> y is invertible with integer exponents
inline std::vector<Rat> eprime_coordinates_of_face_weights(
    const std::vector<std::vector<int>>& expo, const std::vector<Rat>& y) {
    size_t faces = expo.size(), m = expo.empty() ? 0 : expo[0].size();
    std::vector<Rat> out;
    for (size_t e = 0; e < m; ++e) {
        // find rational c with sum_F c_F expo[F][j] = delta_{ej} for all j;
        // then t_e = prod_F y_F^{c_F} (the exponents come out integral)
        Mat<Rat> aug(static_cast<int>(m), static_cast<int>(faces) + 1);
        for (size_t j = 0; j < m; ++j) {
            for (size_t f = 0; f < faces; ++f)
                aug.at(static_cast<int>(j), static_cast<int>(f)) = Rat(expo[f][j]);
            aug.at(static_cast<int>(j), static_cast<int>(faces)) = Rat(j == e ? 1 : 0);
        }
        Rref<Rat> r = rref_rank(std::move(aug));
        std::vector<Rat> c(faces, Rat(0));
        for (size_t row = 0; row < r.pivot_columns.size(); ++row) {
            int pc = r.pivot_columns[row];
            if (pc > static_cast<int>(faces)) throw std::logic_error("face weights inconsistent");
            c[static_cast<size_t>(pc - 1)] = r.reduced.at(static_cast<int>(row), static_cast<int>(faces));
        }
        Rat val(1);
        for (size_t f = 0; f < faces; ++f) {
            if (is_zero(c[f])) continue;
            if (c[f].get_den() != 1)
                throw std::logic_error("face weight exponents are not integral");
            val *= rat_pow(y[f], c[f].get_num().get_si());
        }
        out.push_back(val);
    }
    return out;
}

// delete an edge in place (ids are kept stable; no compaction)
template <typename K>
PlanarNetwork<K> delete_edge(const PlanarNetwork<K>& g, int e) {
    PlanarNetwork<K> h = g;
    h.edges[static_cast<size_t>(e)].alive = false;
    for (int v : {h.edges[static_cast<size_t>(e)].u, h.edges[static_cast<size_t>(e)].v}) {
        auto& rot = h.verts[static_cast<size_t>(v)].rot;
        rot.erase(std::remove(rot.begin(), rot.end(), e), rot.end());
    }
    return h;
}

// the permutation of the cell swept by positive weights on a graph, read off
// measurements at a generic positive point
template <typename K>
Baff cell_perm_of_graph(const PlanarNetwork<K>& g) {
    PlanarNetwork<Rat> num;
    num.n = g.n;
    for (const auto& v : g.verts) {
        PlanarNetwork<Rat>::Vertex w;
        w.boundary = v.boundary;
        w.label = v.label;
        w.color = v.color;
        w.rot = v.rot;
        w.alive = v.alive;
        num.verts.push_back(w);
    }
    static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
    int idx = 0;
    for (const auto& e : g.edges) {
        PlanarNetwork<Rat>::Edge ed;
        ed.u = e.u;
        ed.v = e.v;
        ed.weight = Rat(primes[idx % 16], 1 + idx / 16);
        ++idx;
        ed.alive = e.alive;
        num.edges.push_back(ed);
    }
    auto v = num.boundary_measurements();
    return perm_of(necklace_of_point(v));
}

// find an edge of the reduced graph G whose deletion lands in the cover
// cell f2 (exists by the residue theorem for a suitable reduced graph)
template <typename K>
int find_cover_edge(const PlanarNetwork<K>& g, const Baff& f2) {
    for (size_t e = 0; e < g.edges.size(); ++e) {
        if (!g.edges[e].alive) continue;
        const auto& ed = g.edges[e];
        if (g.verts[static_cast<size_t>(ed.u)].boundary || g.verts[static_cast<size_t>(ed.v)].boundary)
            continue;
        auto h = delete_edge(g, static_cast<int>(e));
        try {
            if (cell_perm_of_graph(h) == f2) return static_cast<int>(e);
        } catch (const NoMatchings&) {
        } catch (const std::invalid_argument&) {
        }
    }
    return -1;
}

}  // namespace positroid

#endif
