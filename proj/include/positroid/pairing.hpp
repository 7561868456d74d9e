#ifndef POSITROID_PAIRING_HPP
#define POSITROID_PAIRING_HPP

#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "positroid/subsets.hpp"

namespace positroid {

// (k,n)-partial non-crossing pairing: a non-crossing matching tau on a set
// S of even size together with T inside [n] - S, |S| + 2|T| = 2k.
struct NonCrossingPairing {
    int n = 0, k = 0;
    std::vector<std::pair<int, int>> arcs;  // (a,b), a < b, sorted by a
    Subset T;

    bool operator==(const NonCrossingPairing& o) const {
        return n == o.n && k == o.k && arcs == o.arcs && T == o.T;
    }
    bool operator<(const NonCrossingPairing& o) const {
        if (arcs != o.arcs) return arcs < o.arcs;
        return T < o.T;
    }

    Subset support() const {
        Subset s;
        for (auto [a, b] : arcs) {
            s.push_back(a);
            s.push_back(b);
        }
        std::sort(s.begin(), s.end());
        return s;
    }

    std::string str() const {
        std::ostringstream os;
        os << "arcs:";
        for (auto [a, b] : arcs) os << " (" << a << "," << b << ")";
        os << "; T: {";
        for (size_t i = 0; i < T.size(); ++i) os << (i ? "," : "") << T[i];
        os << "}";
        return os.str();
    }
};

inline bool arcs_noncrossing(const std::vector<std::pair<int, int>>& arcs) {
    for (size_t i = 0; i < arcs.size(); ++i)
        for (size_t j = i + 1; j < arcs.size(); ++j) {
            auto [a, b] = arcs[i];
            auto [c, d] = arcs[j];
            bool c_in = a < c && c < b, d_in = a < d && d < b;
            if (c_in != d_in) return false;
        }
    return true;
}

// all non-crossing perfect matchings of an ordered even-size set: the first
// element pairs at odd distance, splitting into an inside and an outside
// block handled by a continuation
inline std::vector<std::vector<std::pair<int, int>>> noncrossing_matchings(const Subset& s) {
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<std::pair<int, int>> cur;
    std::function<void(std::vector<int>, const std::function<void()>&)> match_all =
        [&](std::vector<int> r, const std::function<void()>& done) {
            if (r.empty()) {
                done();
                return;
            }
            int a = r[0];
            for (size_t t = 1; t < r.size(); t += 2) {
                int b = r[static_cast<size_t>(t)];
                std::vector<int> inside(r.begin() + 1, r.begin() + static_cast<long>(t));
                std::vector<int> outside(r.begin() + static_cast<long>(t) + 1, r.end());
                cur.emplace_back(a, b);
                match_all(inside, [&, outside]() { match_all(outside, done); });
                cur.pop_back();
            }
        };
    match_all(s, [&]() {
        auto m = cur;
        std::sort(m.begin(), m.end());
        out.push_back(std::move(m));
    });
    std::sort(out.begin(), out.end());
    return out;
}

// complete enumeration of A_{k,n}
inline std::vector<NonCrossingPairing> all_pairings(int k, int n) {
    std::vector<NonCrossingPairing> out;
    for (int t = 0; t <= k; ++t) {
        int s_size = 2 * (k - t);
        for (const Subset& T : all_subsets(n, t)) {
            // S subset of [n] - T of size s_size
            Subset rest = complement(T, n);
            for (const Subset& pos : all_subsets(static_cast<int>(rest.size()), s_size)) {
                Subset S;
                for (int p : pos) S.push_back(rest[static_cast<size_t>(p - 1)]);
                for (auto& arcs : noncrossing_matchings(S)) {
                    NonCrossingPairing pr;
                    pr.n = n;
                    pr.k = k;
                    pr.arcs = arcs;
                    pr.T = T;
                    out.push_back(std::move(pr));
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// pairings compatible with Delta_I Delta_J: arcs match I-J against J-I,
// T = intersection
inline std::vector<NonCrossingPairing> compatible_pairings(const Subset& I, const Subset& J,
                                                           int n) {
    Subset inter, ionly, jonly;
    for (int x : I) (contains(J, x) ? inter : ionly).push_back(x);
    for (int x : J)
        if (!contains(I, x)) jonly.push_back(x);
    Subset S = ionly;
    for (int x : jonly) S = set_plus(S, x);
    std::vector<NonCrossingPairing> out;
    for (auto& arcs : noncrossing_matchings(S)) {
        bool ok = true;
        for (auto [a, b] : arcs) {
            bool ai = contains(ionly, a), bi = contains(ionly, b);
            if (ai == bi) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        NonCrossingPairing pr;
        pr.n = n;
        pr.k = static_cast<int>(I.size());
        pr.arcs = arcs;
        pr.T = inter;
        out.push_back(std::move(pr));
    }
    return out;
}

}  // namespace positroid

#endif
