#include "positroid/symfun.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace positroid {

std::vector<Partition> partitions_of(int m, int max_parts, int max_part) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rem, int cap) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        if (max_parts >= 0 && static_cast<int>(cur.size()) == max_parts) return;
        for (int p = std::min(rem, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    int cap = max_part < 0 ? m : std::min(m, max_part);
    rec(m, cap);
    return out;
}

namespace {

Partition strip_zeros(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

// inner shapes nu of lambda with lambda/nu a horizontal strip of size m
std::vector<Partition> strip_removals(const Partition& lambda, int m) {
    std::vector<Partition> out;
    size_t r = lambda.size();
    Partition cur(r, 0);
    std::function<void(size_t, int)> rec = [&](size_t i, int removed) {
        if (removed > m) return;
        if (i == r) {
            if (removed == m) out.push_back(strip_zeros(cur));
            return;
        }
        int hi = lambda[i];
        if (i > 0) hi = std::min(hi, cur[i - 1]);  // stays a partition
        int lo = i + 1 < r ? lambda[i + 1] : 0;    // horizontal strip
        for (int v = hi; v >= lo; --v) {
            cur[i] = v;
            rec(i + 1, removed + lambda[i] - v);
        }
        cur[i] = 0;
    };
    rec(0, 0);
    return out;
}

}  // namespace

long kostka(const Partition& lambda, const Partition& mu) {
    int total = 0, mt = 0;
    for (int x : lambda) total += x;
    for (int x : mu) mt += x;
    if (total != mt) return 0;
    if (lambda.empty()) return 1;
    static std::map<std::pair<Partition, Partition>, long> memo;
    auto key = std::make_pair(lambda, mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Partition mu2 = mu;
    int last = mu2.back();
    mu2.pop_back();
    long count = 0;
    for (const Partition& nu : strip_removals(lambda, last)) count += kostka(nu, mu2);
    memo[key] = count;
    return count;
}

void SchurPolynomial::add(const Partition& p, long c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
}

SchurPolynomial& SchurPolynomial::operator+=(const SchurPolynomial& o) {
    for (auto& [p, c] : o.coeffs) add(p, c);
    return *this;
}

SchurPolynomial& SchurPolynomial::operator-=(const SchurPolynomial& o) {
    for (auto& [p, c] : o.coeffs) add(p, -c);
    return *this;
}

std::string SchurPolynomial::str() const {
    if (coeffs.empty()) return "0";
    std::vector<std::pair<Partition, long>> terms(coeffs.begin(), coeffs.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int da = 0, db = 0;
        for (int x : a.first) da += x;
        for (int x : b.first) db += x;
        if (da != db) return da < db;
        return a.first > b.first;  // lex-descending within a degree
    });
    std::ostringstream os;
    bool first = true;
    for (auto& [p, c] : terms) {
        long a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (a != 1 || p.empty()) os << a;
        if (!p.empty()) {
            if (a != 1) os << "*";
            os << "s[";
            for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
            os << "]";
        }
        first = false;
    }
    return os.str();
}

SchurPolynomial pieri_h(const SchurPolynomial& p, int m) {
    if (m == 0) return p;
    SchurPolynomial out;
    for (auto& [lam, c] : p.coeffs) {
        size_t rows = lam.size() + 1;
        Partition mu(rows, 0);
        std::function<void(size_t, int)> rec = [&](size_t i, int added) {
            if (added > m) return;
            if (i == rows) {
                if (added == m) out.add(strip_zeros(mu), c);
                return;
            }
            int cur = i < lam.size() ? lam[i] : 0;
            int hi = cur + m;                              // row can grow
            if (i > 0) hi = std::min(hi, mu[i - 1]);       // partition shape
            int cap = i == 0 ? hi : (i - 1 < lam.size() ? lam[i - 1] : 0);
            if (i > 0) hi = std::min(hi, cap);             // horizontal strip
            for (int v = cur; v <= hi; ++v) {
                mu[i] = v;
                rec(i + 1, added + v - cur);
            }
            mu[i] = 0;
        };
        rec(0, 0);
    }
    return out;
}

SchurPolynomial schur_multiply(const SchurPolynomial& a, const SchurPolynomial& b) {
    SchurPolynomial out;
    for (auto& [mu, cb] : b.coeffs) {
        int r = static_cast<int>(mu.size());
        if (r == 0) {
            for (auto& [p, c] : a.coeffs) out.add(p, c * cb);
            continue;
        }
        // Jacobi-Trudi determinant expanded over permutations
        std::vector<int> perm(static_cast<size_t>(r));
        for (int i = 0; i < r; ++i) perm[static_cast<size_t>(i)] = i;
        do {
            int sign = 1;
            for (int i = 0; i < r; ++i)
                for (int j = i + 1; j < r; ++j)
                    if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) sign = -sign;
            std::vector<int> hs;
            bool ok = true;
            for (int i = 0; i < r && ok; ++i) {
                int e = mu[static_cast<size_t>(i)] - i + perm[static_cast<size_t>(i)];
                if (e < 0)
                    ok = false;
                else if (e > 0)
                    hs.push_back(e);
            }
            if (ok) {
                SchurPolynomial t = a;
                for (int m : hs) t = pieri_h(t, m);
                for (auto& [p, c] : t.coeffs) out.add(p, c * cb * sign);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

CohomClass eta(const SchurPolynomial& p, int k, int n) {
    CohomClass c;
    c.k = k;
    c.n = n;
    for (auto& [lam, co] : p.coeffs) {
        if (static_cast<int>(lam.size()) > k) continue;
        if (!lam.empty() && lam[0] > n - k) continue;
        c.p.add(lam, co);
    }
    return c;
}

namespace {

// elements of the affine symmetric group W_n (the k = 0 slice), as windows
struct WElem {
    int n = 0;
    std::vector<int> w;

    int operator()(int i) const {
        int r = ((i - 1) % n + n) % n;
        int shift = (i - 1 - r) / n;
        return w[static_cast<size_t>(r)] + shift * n;
    }
    static WElem id(int n) {
        WElem e;
        e.n = n;
        for (int i = 1; i <= n; ++i) e.w.push_back(i);
        return e;
    }
    WElem inverse() const {
        WElem r;
        r.n = n;
        r.w.assign(static_cast<size_t>(n), 0);
        for (int i = 1; i <= n; ++i) {
            int v = (*this)(i);
            int res = ((v - 1) % n + n) % n;
            int shift = (v - 1 - res) / n;
            r.w[static_cast<size_t>(res)] = i - shift * n;
        }
        return r;
    }
    friend WElem operator*(const WElem& a, const WElem& b) {  // (ab)(i) = a(b(i))
        WElem r;
        r.n = a.n;
        for (int i = 1; i <= a.n; ++i) r.w.push_back(a(b(i)));
        return r;
    }
    int length() const {
        int len = 0;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j < i + n; ++j)
                if ((*this)(i) > (*this)(j)) ++len;
        return len;
    }
};

WElem simple(int n, int i) {
    WElem s = WElem::id(n);
    if (i >= 1) {
        s.w[static_cast<size_t>(i - 1)] = i + 1;
        s.w[static_cast<size_t>(i)] = i;
    } else {
        s.w[0] = 0;
        s.w[static_cast<size_t>(n - 1)] = n + 1;
    }
    return s;
}

// product of the maximal cyclic runs of S, each taken in decreasing order
WElem cyclically_decreasing(int n, const std::vector<int>& S) {
    std::vector<char> in(static_cast<size_t>(n), 0);
    for (int i : S) in[static_cast<size_t>(i)] = 1;
    WElem d = WElem::id(n);
    std::vector<char> used(static_cast<size_t>(n), 0);
    for (int i : S) {
        if (used[static_cast<size_t>(i)]) continue;
        int top = i;
        while (in[static_cast<size_t>((top + 1) % n)] && (top + 1) % n != i) top = (top + 1) % n;
        int len = 0, cur = top;
        while (true) {
            ++len;
            int nxt = (cur + n - 1) % n;
            if (!in[static_cast<size_t>(nxt)] || nxt == top) break;
            cur = nxt;
        }
        cur = top;
        for (int t = 0; t < len; ++t) {
            d = d * simple(n, cur);
            used[static_cast<size_t>(cur)] = 1;
            cur = (cur + n - 1) % n;
        }
    }
    return d;
}

}  // namespace

SchurPolynomial affine_stanley(const Baff& f) {
    int n = f.n(), k = f.k();
    WElem v;  // f = id . v with id(i) = i + k
    v.n = n;
    for (int i = 1; i <= n; ++i) v.w.push_back(f(i) - k);
    int ell = v.length();
    if (ell != length(f)) throw std::logic_error("affine_stanley: length mismatch");
    if (ell == 0) return SchurPolynomial::one();

    std::vector<std::vector<WElem>> by_len(static_cast<size_t>(n));
    {
        std::vector<int> S;
        std::function<void(int)> rec = [&](int i) {
            if (i == n) {
                if (!S.empty() && static_cast<int>(S.size()) < n)
                    by_len[S.size()].push_back(cyclically_decreasing(n, S));
                return;
            }
            rec(i + 1);
            S.push_back(i);
            rec(i + 1);
            S.pop_back();
        };
        rec(0);
    }

    std::map<std::pair<std::vector<int>, Partition>, long> memo;
    std::function<long(const WElem&, const Partition&, size_t)> count =
        [&](const WElem& u, const Partition& prof, size_t idx) -> long {
        if (idx == prof.size()) return u.length() == 0 ? 1 : 0;
        Partition suffix(prof.begin() + static_cast<long>(idx), prof.end());
        auto key = std::make_pair(u.w, suffix);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        long total = 0;
        int want = prof[idx];
        int ul = u.length();
        if (want <= ul && want < n) {
            for (const WElem& d : by_len[static_cast<size_t>(want)]) {
                WElem rest = d.inverse() * u;
                if (rest.length() == ul - want) total += count(rest, prof, idx + 1);
            }
        }
        memo[key] = total;
        return total;
    };

    std::vector<Partition> lams = partitions_of(ell, -1, n - 1);
    std::sort(lams.begin(), lams.end(),
              [](const Partition& a, const Partition& b) { return a > b; });
    SchurPolynomial out;
    for (const Partition& lam : lams) {
        long a = count(v, lam, 0);
        // symmetry probe: the reversed exponent profile must count the same
        if (lam.size() > 1 && lam.front() != lam.back()) {
            Partition rev(lam.rbegin(), lam.rend());
            if (count(v, rev, 0) != a)
                throw std::logic_error("affine_stanley: generating function not symmetric");
        }
        for (auto& [mu, c] : out.coeffs) a -= c * kostka(mu, lam);
        out.add(lam, a);
    }
    return out;
}

CohomClass positroid_class(const Baff& f) {
    return eta(affine_stanley(f), f.k(), f.n());
}

CohomClass truncate(const CohomClass& c, int r) {
    if (r > c.n || r <= c.k) throw std::invalid_argument("truncate: need k < r <= n");
    int ell = c.n - r;
    CohomClass out;
    out.k = c.k;
    out.n = r;
    if (ell == 0) {
        out.p = c.p;
        return out;
    }
    for (auto& [lam, co] : c.p.coeffs) {
        Partition full = lam;
        full.resize(static_cast<size_t>(c.k), 0);
        bool ok = true;
        Partition mu;
        for (int x : full) {
            if (x < ell) {
                ok = false;
                break;
            }
            mu.push_back(x - ell);
        }
        if (!ok) continue;
        out.p.add(strip_zeros(mu), co);
    }
    return out;
}

bool is_independent(const Baff& f, int r) {
    return !truncate(positroid_class(f), r).is_zero();
}

bool intersects_exceptional(const Baff& f, int r) {
    int m = r - f.k();
    SchurPolynomial prod = schur_multiply(affine_stanley(f), SchurPolynomial::s({m + 1}));
    return !eta(prod, f.k(), f.n()).is_zero();
}

K2Type k2_type(const Baff& f) {
    if (f.k() != 2) throw std::invalid_argument("k2_type: needs k = 2");
    int n = f.n();
    CyclicRankMatrix rm = rank_matrix_of(f);
    K2Type t;
    std::vector<int> nz;
    for (int i = 1; i <= n; ++i) {
        if (rm.rank(i, i) == 0)
            ++t.alpha;
        else
            nz.push_back(i);
    }
    if (nz.empty()) throw std::invalid_argument("k2_type: no nonzero columns");
    int m = static_cast<int>(nz.size());
    // merge cyclically adjacent parallel columns
    std::vector<int> parent(static_cast<size_t>(m));
    for (int s = 0; s < m; ++s) parent[static_cast<size_t>(s)] = s;
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
        return x;
    };
    for (int s = 0; s < m; ++s) {
        int nxt = (s + 1) % m;
        if (nxt == s) continue;
        int a = nz[static_cast<size_t>(s)], b = nz[static_cast<size_t>(nxt)];
        int hi = b > a ? b : b + n;
        if (rm.rank(a, hi) == 1) parent[static_cast<size_t>(find(nxt))] = find(s);
    }
    std::map<int, int> size_of;
    for (int s = 0; s < m; ++s) ++size_of[find(s)];
    for (auto& [root, sz] : size_of) t.betas.push_back(sz);
    std::sort(t.betas.begin(), t.betas.end(), std::greater<int>());
    return t;
}

CohomClass k2_class_formula(const Baff& f) {
    K2Type t = k2_type(f);
    int n = f.n();
    SchurPolynomial prod = SchurPolynomial::one();
    for (int b : t.betas) prod = pieri_h(prod, b - 1);
    CohomClass small = eta(prod, 2, n - t.alpha);
    SchurPolynomial shifted;
    for (auto& [lam, c] : small.p.coeffs) {
        Partition full = lam;
        full.resize(2, 0);
        Partition sh{full[0] + t.alpha, full[1] + t.alpha};
        shifted.add(strip_zeros(sh), c);
    }
    return eta(shifted, 2, n);
}

SchurPolynomial parse_schur(const std::string& str) {
    SchurPolynomial out;
    size_t i = 0;
    int sign = 1;
    auto skip_ws = [&]() {
        while (i < str.size() && str[i] == ' ') ++i;
    };
    skip_ws();
    while (i < str.size()) {
        if (str[i] == '+' || str[i] == '-') {
            sign = str[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
            continue;
        }
        long c = 1;
        if (isdigit(static_cast<unsigned char>(str[i]))) {
            c = 0;
            while (i < str.size() && isdigit(static_cast<unsigned char>(str[i])))
                c = c * 10 + (str[i++] - '0');
            if (i < str.size() && str[i] == '*') ++i;
        }
        Partition p;
        if (i < str.size() && str[i] == 's') {
            i += 2;  // skip "s["
            int cur = 0;
            while (i < str.size() && str[i] != ']') {
                if (str[i] == ',') {
                    p.push_back(cur);
                    cur = 0;
                } else {
                    cur = cur * 10 + (str[i] - '0');
                }
                ++i;
            }
            p.push_back(cur);
            ++i;
        }
        out.add(p, sign * c);
        sign = 1;
        skip_ws();
    }
    return out;
}

}  // namespace positroid
