#ifndef POSITROID_TL_HPP
#define POSITROID_TL_HPP

#include <map>
#include <vector>

#include "positroid/network.hpp"
#include "positroid/pairing.hpp"

namespace positroid {

// Classification of a double dimer: the union of two almost perfect
// matchings decomposes into doubled edges, boundary-to-boundary paths, and
// interior cycles.
struct DoubleDimerClass {
    NonCrossingPairing pairing;
    int cycles = 0;
};

template <typename K>
DoubleDimerClass classify_double_dimer(const PlanarNetwork<K>& g, const std::vector<int>& m1,
                                       const std::vector<int>& m2) {
    DoubleDimerClass out;
    out.pairing.n = g.n;
    Subset I1 = g.boundary_subset(m1), I2 = g.boundary_subset(m2);
    out.pairing.k = static_cast<int>(I1.size());
    for (int x : I1)
        if (contains(I2, x)) out.pairing.T.push_back(x);
    // multiset union; singles form the paths and cycles
    std::map<int, int> mult;
    for (int e : m1) ++mult[e];
    for (int e : m2) ++mult[e];
    std::map<int, std::vector<int>> adj;  // vertex -> single edges
    for (auto [e, c] : mult)
        if (c == 1) {
            adj[g.edges[static_cast<size_t>(e)].u].push_back(e);
            adj[g.edges[static_cast<size_t>(e)].v].push_back(e);
        }
    std::map<int, char> used;
    // boundary paths
    for (auto& [v, es] : adj) {
        if (!g.verts[static_cast<size_t>(v)].boundary) continue;
        int e0 = es[0];
        if (used[e0]) continue;
        int cur = v, e = e0;
        while (true) {
            used[e] = 1;
            int w = g.other_end(e, cur);
            if (g.verts[static_cast<size_t>(w)].boundary) {
                int a = g.verts[static_cast<size_t>(v)].label;
                int b = g.verts[static_cast<size_t>(w)].label;
                if (a > b) std::swap(a, b);
                out.pairing.arcs.emplace_back(a, b);
                break;
            }
            int nxt = -1;
            for (int e2 : adj[w])
                if (e2 != e && !used[e2]) nxt = e2;
            if (nxt < 0) throw std::logic_error("double dimer: broken path");
            cur = w;
            e = nxt;
        }
    }
    std::sort(out.pairing.arcs.begin(), out.pairing.arcs.end());
    // remaining singles form cycles
    for (auto& [v, es] : adj)
        for (int e0 : es) {
            if (used[e0]) continue;
            ++out.cycles;
            int cur = v, e = e0;
            while (!used[e]) {
                used[e] = 1;
                int w = g.other_end(e, cur);
                int nxt = -1;
                for (int e2 : adj[w])
                    if (e2 != e && !used[e2]) nxt = e2;
                if (nxt < 0) break;
                cur = w;
                e = nxt;
            }
        }
    return out;
}

// Temperley-Lieb immanant F_{tau,T}(N) = sum over TL subgraphs; computed by
// double-dimer enumeration.  A subgraph with p paths and c cycles arises
// from exactly 2^{p+c} ordered matching pairs, so dividing the pair sum by
// 2^{|tau|} leaves the 2^{#cycles} of the definition.
template <typename K>
K immanant(const PlanarNetwork<K>& g, const NonCrossingPairing& p) {
    auto ms = g.matchings();
    K total = K(0);
    for (const auto& m1 : ms) {
        K w1 = g.matching_weight(m1);
        for (const auto& m2 : ms) {
            DoubleDimerClass c = classify_double_dimer(g, m1, m2);
            if (c.pairing.arcs == p.arcs && c.pairing.T == p.T) total = total + w1 * g.matching_weight(m2);
        }
    }
    Rat denom = rat_pow(Rat(2), static_cast<long>(p.arcs.size()));
    return total * K(Rat(1) / denom);
}

// all immanants of a network at once: one pass over matching pairs
template <typename K>
std::map<NonCrossingPairing, K> all_immanants(const PlanarNetwork<K>& g) {
    auto ms = g.matchings();
    std::map<NonCrossingPairing, K> acc;
    for (const auto& m1 : ms) {
        K w1 = g.matching_weight(m1);
        for (const auto& m2 : ms) {
            DoubleDimerClass c = classify_double_dimer(g, m1, m2);
            K term = w1 * g.matching_weight(m2);
            auto [it, fresh] = acc.emplace(c.pairing, term);
            if (!fresh) it->second = it->second + term;
        }
    }
    for (auto& [p, v] : acc)
        v = v * K(Rat(1) / rat_pow(Rat(2), static_cast<long>(p.arcs.size())));
    return acc;
}

// Thm "TL": Delta_I Delta_J = sum of F over the compatible pairings
template <typename K>
bool product_identity_check(const PlanarNetwork<K>& g, const Subset& I, const Subset& J) {
    auto v = g.boundary_measurements();
    K lhs = v.at(I) * v.at(J);
    K rhs = K(0);
    for (const NonCrossingPairing& p : compatible_pairings(I, J, g.n))
        rhs = rhs + immanant(g, p);
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// The standard-monomial expansion of the immanants (Prop "tau"):
// F_{tau,T} is an integer combination of products Delta_{I1} Delta_{I2}
// over column pairs of two-column tableaux.  The expansion is obtained by
// inverting the unitriangular system of Thm "TL" once per (k,n).
// ---------------------------------------------------------------------------

struct TLExpansion {
    int k = 0, n = 0;
    std::vector<NonCrossingPairing> pairings;
    std::vector<std::pair<Subset, Subset>> std_pairs;
    // expansion[p] = list of (coefficient, index into std_pairs)
    std::vector<std::vector<std::pair<long, size_t>>> expansion;

    template <typename K>
    K evaluate(const PluckerVector<K>& v, size_t pairing_index) const {
        K total = K(0);
        for (auto [c, idx] : expansion[pairing_index]) {
            K term = v.at(std_pairs[idx].first) * v.at(std_pairs[idx].second);
            total = total + K(Rat(c)) * term;
        }
        return total;
    }
};

TLExpansion tl_expansion(int k, int n);

}  // namespace positroid

#endif
