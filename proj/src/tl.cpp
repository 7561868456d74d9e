#include "positroid/tl.hpp"

#include "positroid/matrix.hpp"
#include "positroid/tableaux.hpp"

namespace positroid {

TLExpansion tl_expansion(int k, int n) {
    TLExpansion out;
    out.k = k;
    out.n = n;
    out.pairings = all_pairings(k, n);
    // standard monomials = column pairs of two-column rectangular tableaux
    for (const RectTableau& t : all_rect_tableaux(k, 2, n))
        out.std_pairs.emplace_back(t.column(0), t.column(1));
    size_t m = out.pairings.size();
    if (out.std_pairs.size() != m) throw std::logic_error("tl_expansion: basis size mismatch");
    std::map<NonCrossingPairing, size_t> index;
    for (size_t i = 0; i < m; ++i) index[out.pairings[i]] = i;
    // A[s][p] = 1 iff p is compatible with the standard pair s
    Mat<Rat> A(static_cast<int>(m), static_cast<int>(m));
    for (size_t s = 0; s < m; ++s)
        for (const NonCrossingPairing& p :
             compatible_pairings(out.std_pairs[s].first, out.std_pairs[s].second, n))
            A.at(static_cast<int>(s), static_cast<int>(index.at(p))) = Rat(1);
    Mat<Rat> inv = inverse(A);
    // F_p = sum_s inv[p][s] Delta_{I1(s)} Delta_{I2(s)}
    out.expansion.assign(m, {});
    for (size_t p = 0; p < m; ++p)
        for (size_t s = 0; s < m; ++s) {
            Rat c = inv.at(static_cast<int>(p), static_cast<int>(s));
            if (is_zero(c)) continue;
            if (c.get_den() != 1) throw std::logic_error("tl_expansion: non-integer coefficient");
            out.expansion[p].emplace_back(c.get_num().get_si(), s);
        }
    return out;
}

}  // namespace positroid
