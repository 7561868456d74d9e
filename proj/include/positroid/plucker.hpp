#ifndef POSITROID_PLUCKER_HPP
#define POSITROID_PLUCKER_HPP

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "positroid/matrix.hpp"
#include "positroid/perm.hpp"
#include "positroid/subsets.hpp"

namespace positroid {

struct RankDeficient : std::invalid_argument {
    RankDeficient() : std::invalid_argument("matrix is not full rank") {}
};

// A point of the cone over Gr(k,n): dense Plucker coordinates indexed by the
// lexicographically ordered k-subsets of [n].  At least one coordinate is
// nonzero.  Tuple access is antisymmetric in the indices.
template <typename K>
struct PluckerVector {
    int n = 0, k = 0;
    std::vector<K> coords;

    PluckerVector() = default;
    PluckerVector(int n_, int k_)
        : n(n_), k(k_), coords(static_cast<size_t>(binomial(n_, k_)), K(0)) {}

    const K& at(const Subset& I) const { return coords[subset_lex_rank(I, n)]; }
    K& at(const Subset& I) { return coords[subset_lex_rank(I, n)]; }

    // antisymmetric access by tuple; entries may wrap mod n only if the
    // caller normalized them.  Repeated entries give zero.
    K get_tuple(std::vector<int> t) const {
        int sign = 1;
        for (size_t i = 0; i + 1 < t.size(); ++i)
            for (size_t j = 0; j + 1 < t.size() - i; ++j)
                if (t[j] > t[j + 1]) {
                    std::swap(t[j], t[j + 1]);
                    sign = -sign;
                }
        for (size_t i = 0; i + 1 < t.size(); ++i)
            if (t[i] == t[i + 1]) return K(0);
        K v = at(t);
        return sign < 0 ? K(0) - v : v;
    }

    bool is_valid() const {
        for (const K& c : coords)
            if (ScalarOps<K>::nonzero(c)) return true;
        return false;
    }

    std::string str() const {
        std::ostringstream os;
        auto subs = all_subsets(n, k);
        for (size_t i = 0; i < subs.size(); ++i)
            os << subset_str(subs[i], n) << " : " << ScalarOps<K>::str(coords[i]) << "\n";
        return os.str();
    }
};

// projective equality: cross-multiplication on all coordinate pairs
template <typename K>
bool proj_eq(const PluckerVector<K>& v, const PluckerVector<K>& w) {
    if (v.n != w.n || v.k != w.k) return false;
    size_t m = v.coords.size();
    size_t ref = m;
    for (size_t i = 0; i < m; ++i)
        if (ScalarOps<K>::nonzero(v.coords[i])) {
            ref = i;
            break;
        }
    if (ref == m) return false;
    if (!ScalarOps<K>::nonzero(w.coords[ref])) return false;
    for (size_t i = 0; i < m; ++i)
        if (!(v.coords[i] * w.coords[ref] == w.coords[i] * v.coords[ref])) return false;
    return true;
}

template <typename K>
PluckerVector<K> plucker_of(const Mat<K>& m) {
    int k = m.rows, n = m.cols;
    PluckerVector<K> v(n, k);
    std::vector<int> all_rows;
    for (int i = 1; i <= k; ++i) all_rows.push_back(i);
    size_t idx = 0;
    bool nz = false;
    for (const Subset& I : all_subsets(n, k)) {
        v.coords[idx] = det(m.submatrix(all_rows, I));
        nz = nz || ScalarOps<K>::nonzero(v.coords[idx]);
        ++idx;
    }
    if (!nz) throw RankDeficient();
    return v;
}

// Plucker relations with one index swapped (the r = 1 case), which suffices
// to cut out the Grassmannian
template <typename K>
bool check_plucker(const PluckerVector<K>& v) {
    if (!v.is_valid()) throw std::invalid_argument("check_plucker: zero vector");
    if (v.k == 0 || v.k == v.n) return true;
    for (const Subset& I : all_subsets(v.n, v.k - 1))
        for (const Subset& J : all_subsets(v.n, v.k + 1)) {
            K total = K(0);
            for (size_t s = 0; s < J.size(); ++s) {
                std::vector<int> left = I;
                left.push_back(J[s]);
                Subset right;
                for (size_t t = 0; t < J.size(); ++t)
                    if (t != s) right.push_back(J[t]);
                K term = v.get_tuple(left) * v.at(right);
                if (s % 2 == 0)
                    total = total - term;  // (-1)^s with s starting at 1
                else
                    total = total + term;
            }
            if (ScalarOps<K>::nonzero(total)) return false;
        }
    return true;
}

// TNN test: normalize the first nonzero coordinate (lex order) to be
// positive, then require every coordinate nonnegative.
inline bool is_tnn(const PluckerVector<Rat>& v) {
    int lead = 0;
    for (const Rat& c : v.coords)
        if (!is_zero(c)) {
            lead = sgn(c);
            break;
        }
    if (lead == 0) return false;
    for (const Rat& c : v.coords)
        if (sgn(c) * lead < 0) return false;
    return true;
}

template <typename K>
Positroid matroid_of(const PluckerVector<K>& v) {
    Positroid m;
    m.n = v.n;
    m.k = v.k;
    size_t idx = 0;
    for (const Subset& I : all_subsets(v.n, v.k)) {
        if (ScalarOps<K>::nonzero(v.coords[idx])) m.bases.push_back(I);
        ++idx;
    }
    return m;
}

namespace detail {
// rank of the span of columns i..j of m, with v_{i+n} = (-1)^{k-1} v_i
template <typename K>
int cyclic_col_rank(const Mat<K>& m, int i, int j) {
    if (j < i) return 0;
    int k = m.rows, n = m.cols;
    Mat<K> sub(k, j - i + 1);
    for (int c = i; c <= j; ++c) {
        int res = ((c - 1) % n + n) % n;
        int wraps = (c - 1 - res) / n;
        bool neg = (k % 2 == 0) && (wraps % 2 != 0);  // (-1)^{(k-1)*wraps}
        for (int r = 0; r < k; ++r) {
            K val = m.at(r, res);
            sub.at(r, c - i) = neg ? K(0) - val : val;
        }
    }
    return rref_rank(std::move(sub)).rank;
}
}  // namespace detail

// f_X(i) = min{ j >= i : v_i in span(v_{i+1},...,v_j) }
template <typename K>
Baff perm_of_point(const Mat<K>& m) {
    int k = m.rows, n = m.cols;
    if (rref_rank(m).rank != k) throw RankDeficient();
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int fi = i + n;
        for (int j = i; j <= i + n - 1; ++j) {
            if (detail::cyclic_col_rank(m, i, j) == detail::cyclic_col_rank(m, i + 1, j)) {
                fi = j;
                break;
            }
        }
        w[static_cast<size_t>(i - 1)] = fi;
    }
    return Baff(n, std::move(w));
}

template <typename K>
GrassmannNecklace necklace_of_point(const PluckerVector<K>& v) {
    GrassmannNecklace out;
    out.n = v.n;
    out.k = v.k;
    auto subs = all_subsets(v.n, v.k);
    for (int a = 1; a <= v.n; ++a) {
        Subset best, best_rot;
        for (size_t idx = 0; idx < subs.size(); ++idx) {
            if (!ScalarOps<K>::nonzero(v.coords[idx])) continue;
            Subset rot = rotate_subset(subs[idx], a, v.n);
            if (best.empty() || rot < best_rot) {
                best = subs[idx];
                best_rot = rot;
            }
        }
        if (best.empty()) throw std::invalid_argument("necklace_of_point: zero vector");
        out.subsets.push_back(best);
    }
    return out;
}

// chi: [v_1,...,v_n] -> [(-1)^{k-1} v_n, v_1, ..., v_{n-1}]
template <typename K>
Mat<K> cyclic_shift(const Mat<K>& m) {
    int k = m.rows, n = m.cols;
    Mat<K> r(k, n);
    bool neg = (k % 2 == 0);
    for (int i = 0; i < k; ++i) {
        r.at(i, 0) = neg ? K(0) - m.at(i, n - 1) : m.at(i, n - 1);
        for (int j = 1; j < n; ++j) r.at(i, j) = m.at(i, j - 1);
    }
    return r;
}

// on Plucker coordinates the shift is the relabeling I -> I+1 (no signs)
template <typename K>
PluckerVector<K> cyclic_shift(const PluckerVector<K>& v) {
    PluckerVector<K> r(v.n, v.k);
    size_t idx = 0;
    for (const Subset& I : all_subsets(v.n, v.k)) {
        Subset J = rotate_subset(I, v.n, v.n);  // shift by +1
        r.at(J) = v.coords[idx];
        ++idx;
    }
    return r;
}

template <typename K>
PluckerVector<K> cyclic_shift_inv(const PluckerVector<K>& v) {
    PluckerVector<K> r(v.n, v.k);
    size_t idx = 0;
    for (const Subset& I : all_subsets(v.n, v.k)) {
        Subset J = rotate_subset(I, 2, v.n);  // shift by -1
        r.at(J) = v.coords[idx];
        ++idx;
    }
    return r;
}

// column operation of the Chevalley generator x_i(a): v_{i+1} += a v_i, with
// i = n handled through the cyclic twist
template <typename K>
Mat<K> apply_x(Mat<K> m, int i, const K& a) {
    int k = m.rows, n = m.cols;
    if (i >= 1 && i <= n - 1) {
        for (int r = 0; r < k; ++r) m.at(r, i) = m.at(r, i) + a * m.at(r, i - 1);
        return m;
    }
    if (i != n) throw std::out_of_range("apply_x: bad index");
    bool neg = (k % 2 == 0);  // v_{n+1} = (-1)^{k-1} v_1
    for (int r = 0; r < k; ++r) {
        K t = a * m.at(r, n - 1);
        if (neg)
            m.at(r, 0) = m.at(r, 0) - t;
        else
            m.at(r, 0) = m.at(r, 0) + t;
    }
    return m;
}

template <typename K>
Mat<K> apply_y(Mat<K> m, int i, const K& a) {
    int k = m.rows, n = m.cols;
    if (i >= 1 && i <= n - 1) {
        for (int r = 0; r < k; ++r) m.at(r, i - 1) = m.at(r, i - 1) + a * m.at(r, i);
        return m;
    }
    if (i != n) throw std::out_of_range("apply_y: bad index");
    bool neg = (k % 2 == 0);
    for (int r = 0; r < k; ++r) {
        K t = a * m.at(r, 0);
        if (neg)
            m.at(r, n - 1) = m.at(r, n - 1) - t;
        else
            m.at(r, n - 1) = m.at(r, n - 1) + t;
    }
    return m;
}

// Chevalley action on Plucker coordinates (Lemma: adding a bridge):
//   Delta_I += a Delta_{I - {i+1} u {i}}  when i+1 in I, i not in I
template <typename K>
PluckerVector<K> chevalley_x(const PluckerVector<K>& v, int i, const K& a) {
    if (i == v.n) {
        // conjugate by the cyclic shift: x_n = chi . x_{n-1} . chi^{-1}
        return cyclic_shift(chevalley_x(cyclic_shift_inv(v), v.n - 1, a));
    }
    PluckerVector<K> r = v;
    size_t idx = 0;
    for (const Subset& I : all_subsets(v.n, v.k)) {
        if (contains(I, i + 1) && !contains(I, i)) {
            Subset J = set_plus(set_minus(I, i + 1), i);
            r.coords[idx] = r.coords[idx] + a * v.at(J);
        }
        ++idx;
    }
    return r;
}

template <typename K>
PluckerVector<K> chevalley_y(const PluckerVector<K>& v, int i, const K& a) {
    if (i == v.n) return cyclic_shift(chevalley_y(cyclic_shift_inv(v), v.n - 1, a));
    PluckerVector<K> r = v;
    size_t idx = 0;
    for (const Subset& I : all_subsets(v.n, v.k)) {
        if (contains(I, i) && !contains(I, i + 1)) {
            Subset J = set_plus(set_minus(I, i), i + 1);
            r.coords[idx] = r.coords[idx] + a * v.at(J);
        }
        ++idx;
    }
    return r;
}

// direct sum of a k-plane and an l-plane in the same ambient [n]; nullopt
// when the spans intersect (all coordinates vanish)
template <typename K>
std::optional<PluckerVector<K>> direct_sum(const PluckerVector<K>& x, const PluckerVector<K>& y) {
    if (x.n != y.n) throw std::invalid_argument("direct_sum: ambient size mismatch");
    int n = x.n, k = x.k, l = y.k;
    if (k + l > n) throw std::invalid_argument("direct_sum: k+l > n");
    PluckerVector<K> r(n, k + l);
    size_t idx = 0;
    bool nz = false;
    for (const Subset& I : all_subsets(n, k + l)) {
        K total = K(0);
        for (const Subset& J : all_subsets(k + l, k)) {
            Subset A, B;
            for (size_t t = 0, ji = 0; t < I.size(); ++t) {
                if (ji < J.size() && static_cast<int>(t) + 1 == J[ji]) {
                    A.push_back(I[t]);
                    ++ji;
                } else {
                    B.push_back(I[t]);
                }
            }
            K term = x.at(A) * y.at(B);
            if (inv_count(A, B) % 2)
                total = total - term;
            else
                total = total + term;
        }
        r.coords[idx] = total;
        nz = nz || ScalarOps<K>::nonzero(total);
        ++idx;
    }
    if (!nz) return std::nullopt;
    return r;
}

// Delta_J(ker X) = (-1)^{inv(J, [n]-J)} Delta_{[n]-J}(X)
template <typename K>
PluckerVector<K> kernel_point(const PluckerVector<K>& v) {
    PluckerVector<K> r(v.n, v.n - v.k);
    size_t idx = 0;
    for (const Subset& J : all_subsets(v.n, v.n - v.k)) {
        Subset C = complement(J, v.n);
        K val = v.at(C);
        r.coords[idx] = inv_count(J, C) % 2 ? K(0) - val : val;
        ++idx;
    }
    return r;
}

// torus fixed point e_I
template <typename K>
PluckerVector<K> torus_point(int n, const Subset& I) {
    PluckerVector<K> v(n, static_cast<int>(I.size()));
    v.at(I) = K(1);
    return v;
}

// a full-rank representative matrix of a Plucker vector (field K)
template <typename K>
Mat<K> representative(const PluckerVector<K>& v) {
    // pick the lex-min nonzero coordinate I; chart normalization gives the
    // rows: row r has entries Delta_{I with r-th element replaced by c}
    auto subs = all_subsets(v.n, v.k);
    size_t lead = subs.size();
    for (size_t i = 0; i < subs.size(); ++i)
        if (ScalarOps<K>::nonzero(v.coords[i])) {
            lead = i;
            break;
        }
    if (lead == subs.size()) throw RankDeficient();
    const Subset& I = subs[lead];
    K d = v.coords[lead];
    Mat<K> m(v.k, v.n);
    for (int r = 0; r < v.k; ++r) {
        for (int c = 1; c <= v.n; ++c) {
            if (contains(I, c)) {
                m.at(r, c - 1) = I[static_cast<size_t>(r)] == c ? K(1) : K(0);
                continue;
            }
            //  Delta_{I[0],...,I[r-1],c,I[r+1],...} / Delta_I, tuple-signed
            std::vector<int> t = I;
            t[static_cast<size_t>(r)] = c;
            m.at(r, c - 1) = v.get_tuple(t) / d;
        }
    }
    return m;
}

}  // namespace positroid

#endif
