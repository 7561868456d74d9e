#include "positroid/perm.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace positroid {

BoundedAffinePermutation::BoundedAffinePermutation(int n, std::vector<int> window)
    : n_(n), window_(std::move(window)) {
    if (n_ <= 0 || static_cast<int>(window_.size()) != n_)
        throw std::invalid_argument("window size != n");
    long sum = 0;
    std::vector<char> seen(static_cast<size_t>(n_), 0);
    for (int i = 1; i <= n_; ++i) {
        int v = window_[static_cast<size_t>(i - 1)];
        int res = ((v - 1) % n_ + n_) % n_;
        if (seen[static_cast<size_t>(res)]) throw NotBijective();
        seen[static_cast<size_t>(res)] = 1;
        sum += v - i;
    }
    for (int i = 1; i <= n_; ++i) {
        int v = window_[static_cast<size_t>(i - 1)];
        if (v < i || v > i + n_) throw NotBounded();
    }
    if (sum % n_ != 0) throw NotBijective();
    k_ = static_cast<int>(sum / n_);
}

Baff BoundedAffinePermutation::from_window(const std::vector<int>& window, int expect_k) {
    Baff f(static_cast<int>(window.size()), window);
    if (expect_k >= 0 && f.k() != expect_k) throw WrongK();
    return f;
}

Baff BoundedAffinePermutation::identity(int k, int n) {
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) w[static_cast<size_t>(i - 1)] = i + k;
    return Baff(n, std::move(w));
}

Baff BoundedAffinePermutation::t_of(const Subset& I, int n) {
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) w[static_cast<size_t>(i - 1)] = contains(I, i) ? i + n : i;
    return Baff(n, std::move(w));
}

bool BoundedAffinePermutation::is_identity() const {
    for (int i = 1; i <= n_; ++i)
        if ((*this)(i) != i + k_) return false;
    return true;
}

Baff BoundedAffinePermutation::times_s(int i) const {
    // swap positions i, i+1 (and all translates)
    int a = ((i - 1) % n_ + n_) % n_ + 1;  // a in [n]
    std::vector<int> w(static_cast<size_t>(n_));
    for (int p = 1; p <= n_; ++p) w[static_cast<size_t>(p - 1)] = (*this)(p);
    int b = a % n_ + 1;  // position a+1 mod n
    if (b == a + 1) {
        std::swap(w[static_cast<size_t>(a - 1)], w[static_cast<size_t>(b - 1)]);
    } else {
        // a = n, b = 1: swap f(n) with f(n+1) = f(1)+n
        int fn = w[static_cast<size_t>(n_ - 1)], f1 = w[0];
        w[static_cast<size_t>(n_ - 1)] = f1 + n_;
        w[0] = fn - n_;
    }
    return Baff(n_, std::move(w));
}

Baff BoundedAffinePermutation::rotate() const {
    // g(i+1) = f(i)+1 with window wrap
    std::vector<int> w(static_cast<size_t>(n_));
    for (int i = 1; i <= n_; ++i) {
        int target = (*this)(i) + 1;
        int pos = i + 1;
        if (pos > n_) {
            pos -= n_;
            target -= n_;
        }
        w[static_cast<size_t>(pos - 1)] = target;
    }
    return Baff(n_, std::move(w));
}

std::string BoundedAffinePermutation::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n_; ++i) os << (i ? "," : "") << window_[static_cast<size_t>(i)];
    os << "]";
    return os.str();
}

std::string GrassmannNecklace::str() const {
    std::ostringstream os;
    os << "(";
    for (int a = 0; a < n; ++a) os << (a ? "," : "") << subset_str(subsets[static_cast<size_t>(a)], n);
    os << ")";
    return os.str();
}

int CyclicRankMatrix::rank(int i, int j) const {
    if (j < i) return 0;
    if (j >= i + n) return k;
    int res = ((i - 1) % n + n) % n;  // 0-based base row
    return r[static_cast<size_t>(res)][static_cast<size_t>(j - i)];
}

bool CyclicRankMatrix::operator<=(const CyclicRankMatrix& o) const {
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= i + n - 1; ++j)
            if (rank(i, j) > o.rank(i, j)) return false;
    return true;
}

bool Positroid::has_basis(const Subset& I) const {
    return std::binary_search(bases.begin(), bases.end(), I);
}

bool Positroid::contains(const Positroid& o) const {
    for (const Subset& b : o.bases)
        if (!has_basis(b)) return false;
    return true;
}

bool Positroid::satisfies_exchange_axiom() const {
    for (const Subset& I : bases)
        for (const Subset& J : bases)
            for (int i : I) {
                bool ok = false;
                for (int j : J) {
                    if (j != i && positroid::contains(I, j)) continue;
                    Subset cand = j == i ? I : set_plus(set_minus(I, i), j);
                    if (has_basis(cand)) {
                        ok = true;
                        break;
                    }
                }
                if (!ok) return false;
            }
    return true;
}

bool Positroid::is_sort_closed() const {
    for (const Subset& I : bases)
        for (const Subset& J : bases) {
            SortOps s = sort_ops(I, J);
            if (!has_basis(s.sort1) || !has_basis(s.sort2)) return false;
        }
    return true;
}

GrassmannNecklace necklace_of(const Baff& f) {
    GrassmannNecklace out;
    out.n = f.n();
    out.k = f.k();
    for (int a = 1; a <= f.n(); ++a) {
        Subset I;
        for (int b = a - f.n(); b < a; ++b) {
            int v = f(b);
            if (v >= a) I.push_back(((v - 1) % f.n() + f.n()) % f.n() + 1);
        }
        std::sort(I.begin(), I.end());
        out.subsets.push_back(std::move(I));
    }
    return out;
}

Baff perm_of(const GrassmannNecklace& I) {
    int n = I.n;
    std::vector<int> w(static_cast<size_t>(n));
    for (int a = 1; a <= n; ++a) {
        const Subset& Ia = I.subsets[static_cast<size_t>(a - 1)];
        const Subset& Ib = I.subsets[static_cast<size_t>(a % n)];
        if (!contains(Ia, a)) {
            w[static_cast<size_t>(a - 1)] = a;
            continue;
        }
        // I_{a+1} = I_a - {a} u {a'}; a' = a exactly when the necklace is unchanged
        int aprime = -1;
        if (Ib == Ia) {
            aprime = a;
        } else {
            for (int x : Ib)
                if (!contains(Ia, x)) {
                    aprime = x;
                    break;
                }
            if (aprime < 0) throw std::invalid_argument("necklace: exchange property violated");
        }
        int b = aprime;
        while (b <= a) b += n;
        if (b > a + n) throw std::invalid_argument("necklace: not a Grassmann necklace");
        w[static_cast<size_t>(a - 1)] = b;
    }
    return Baff(n, std::move(w));
}

CyclicRankMatrix rank_matrix_of(const Baff& f) {
    CyclicRankMatrix out;
    out.n = f.n();
    out.k = f.k();
    out.r.assign(static_cast<size_t>(out.n), std::vector<int>(static_cast<size_t>(out.n), 0));
    // r(i,j) = #{a in [i,j] : f(a) > j}
    for (int i = 1; i <= out.n; ++i)
        for (int j = i; j <= i + out.n - 1; ++j) {
            int c = 0;
            for (int a = i; a <= j; ++a)
                if (f(a) > j) ++c;
            out.r[static_cast<size_t>(i - 1)][static_cast<size_t>(j - i)] = std::min(c, out.k);
        }
    return out;
}

Baff perm_of_rank_matrix(const CyclicRankMatrix& rm) {
    int n = rm.n;
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int v = i + n;
        for (int j = i; j <= i + n - 1; ++j)
            if (rm.rank(i, j) == rm.rank(i + 1, j)) {
                v = j;
                break;
            }
        w[static_cast<size_t>(i - 1)] = v;
    }
    return Baff(n, std::move(w));
}

GrassmannNecklace necklace_of_rank_matrix(const CyclicRankMatrix& rm) {
    GrassmannNecklace out;
    out.n = rm.n;
    out.k = rm.k;
    for (int a = 1; a <= rm.n; ++a) {
        Subset I;
        for (int j = a; j <= a + rm.n - 1; ++j)
            if (rm.rank(a, j) > rm.rank(a, j - 1))
                I.push_back(((j - 1) % rm.n + rm.n) % rm.n + 1);
        std::sort(I.begin(), I.end());
        out.subsets.push_back(std::move(I));
    }
    return out;
}

Positroid positroid_of(const Baff& f) {
    GrassmannNecklace nec = necklace_of(f);
    Positroid out;
    out.n = f.n();
    out.k = f.k();
    for (const Subset& J : all_subsets(f.n(), f.k())) {
        bool ok = true;
        for (int a = 1; a <= f.n() && ok; ++a)
            ok = leq_cyclic(nec.subsets[static_cast<size_t>(a - 1)], J, a, f.n());
        if (ok) out.bases.push_back(J);
    }
    return out;
}

Baff perm_of_positroid(const Positroid& m) {
    GrassmannNecklace nec;
    nec.n = m.n;
    nec.k = m.k;
    for (int a = 1; a <= m.n; ++a) {
        // necklace element: lexicographic minimum w.r.t. <_a
        Subset best, best_rot;
        for (const Subset& J : m.bases) {
            Subset rj = rotate_subset(J, a, m.n);
            if (best.empty() || rj < best_rot) {
                best = J;
                best_rot = rj;
            }
        }
        nec.subsets.push_back(best);
    }
    return perm_of(nec);
}

int length(const Baff& f) {
    int n = f.n(), len = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j < i + n; ++j)
            if (f(i) > f(j)) ++len;
    return len;
}

bool bruhat_leq(const Baff& f, const Baff& g) {
    if (f.n() != g.n() || f.k() != g.k())
        throw std::invalid_argument("bruhat_leq: mismatched (k,n)");
    // f <= g in Bound(k,n)  <=>  r_f <= r_g entrywise
    return rank_matrix_of(f) <= rank_matrix_of(g);
}

std::vector<Baff> covers(const Baff& f) {
    // g covered by f: swap f(i), f(j) at an ascent with empty value window
    int n = f.n();
    std::vector<Baff> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= i + n; ++j) {
            if (f(i) >= f(j)) continue;
            bool blocked = false;
            for (int a = i + 1; a < j && !blocked; ++a)
                blocked = f(a) > f(i) && f(a) < f(j);
            if (blocked) continue;
            // swap values at positions i and j (mod n translates)
            std::vector<int> w(static_cast<size_t>(n));
            for (int p = 1; p <= n; ++p) w[static_cast<size_t>(p - 1)] = f(p);
            auto set_val = [&](int pos, int val) {
                int r = ((pos - 1) % n + n) % n;
                int shift = (pos - 1 - r) / n;
                w[static_cast<size_t>(r)] = val - shift * n;
            };
            set_val(i, f(j));
            set_val(j, f(i));
            try {
                Baff g(n, w);
                if (g.k() == f.k()) out.push_back(std::move(g));
            } catch (const std::invalid_argument&) {
                // swap left Bound(k,n); not a cover
            }
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Baff& a, const Baff& b) { return a == b; }),
              out.end());
    return out;
}

std::vector<Baff> enumerate_bound(int k, int n) {
    std::vector<Baff> out;
    std::vector<int> w(static_cast<size_t>(n));
    std::vector<char> used(static_cast<size_t>(n), 0);
    long target = static_cast<long>(k) * n;
    std::function<void(int, long)> rec = [&](int i, long sum) {
        if (i > n) {
            if (sum == target) out.push_back(Baff(n, w));
            return;
        }
        // prune: remaining positions add between 0 and n each
        long rem = static_cast<long>(n - i + 1);
        if (sum > target || sum + rem * n < target) return;
        for (int v = i; v <= i + n; ++v) {
            int res = ((v - 1) % n + n) % n;
            if (used[static_cast<size_t>(res)]) continue;
            used[static_cast<size_t>(res)] = 1;
            w[static_cast<size_t>(i - 1)] = v;
            rec(i + 1, sum + (v - i));
            used[static_cast<size_t>(res)] = 0;
        }
    };
    rec(1, 0);
    std::sort(out.begin(), out.end());
    return out;
}

Baff parse_window(const std::string& s) {
    std::vector<int> w;
    std::string t;
    for (char c : s) {
        if (c == '[' || c == ']' || c == ' ') continue;
        if (c == ',') {
            if (!t.empty()) w.push_back(std::stoi(t));
            t.clear();
        } else {
            t += c;
        }
    }
    if (!t.empty()) w.push_back(std::stoi(t));
    return Baff::from_window(w);
}

}  // namespace positroid
