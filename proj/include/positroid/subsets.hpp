#ifndef POSITROID_SUBSETS_HPP
#define POSITROID_SUBSETS_HPP

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace positroid {

// k-subsets of [n] are sorted 1-based vectors<int> throughout.
using Subset = std::vector<int>;

inline std::vector<Subset> all_subsets(int n, int k) {
    std::vector<Subset> out;
    if (k < 0 || k > n) return out;
    Subset cur(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) break;
        ++cur[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

// rank of a sorted k-subset in lexicographic order among all k-subsets of [n]
inline size_t subset_lex_rank(const Subset& s, int n) {
    size_t rank = 0;
    int prev = 0;
    int k = static_cast<int>(s.size());
    for (int i = 0; i < k; ++i) {
        for (int v = prev + 1; v < s[static_cast<size_t>(i)]; ++v)
            rank += binomial(n - v, k - i - 1);
        prev = s[static_cast<size_t>(i)];
    }
    return rank;
}

inline bool contains(const Subset& s, int x) {
    return std::binary_search(s.begin(), s.end(), x);
}

inline Subset set_minus(const Subset& s, int x) {
    Subset r;
    r.reserve(s.size());
    for (int v : s)
        if (v != x) r.push_back(v);
    return r;
}

inline Subset set_plus(const Subset& s, int x) {
    Subset r = s;
    r.insert(std::lower_bound(r.begin(), r.end(), x), x);
    return r;
}

inline Subset complement(const Subset& s, int n) {
    Subset r;
    size_t i = 0;
    for (int v = 1; v <= n; ++v) {
        if (i < s.size() && s[i] == v)
            ++i;
        else
            r.push_back(v);
    }
    return r;
}

// #{(a,b) in A x B : a > b}
inline int inv_count(const Subset& a, const Subset& b) {
    int c = 0;
    for (int x : a)
        for (int y : b)
            if (x > y) ++c;
    return c;
}

// entrywise order: I <= J iff i_r <= j_r for all r
inline bool leq_entrywise(const Subset& i, const Subset& j) {
    if (i.size() != j.size()) throw std::invalid_argument("leq_entrywise: size mismatch");
    for (size_t r = 0; r < i.size(); ++r)
        if (i[r] > j[r]) return false;
    return true;
}

// shift every element by -(a-1) cyclically into [n]
inline Subset rotate_subset(const Subset& s, int a, int n) {
    Subset r;
    r.reserve(s.size());
    for (int v : s) {
        int w = ((v - a) % n + n) % n + 1;
        r.push_back(w);
    }
    std::sort(r.begin(), r.end());
    return r;
}

// entrywise order with respect to <_a (a < a+1 < ... < a-1)
inline bool leq_cyclic(const Subset& i, const Subset& j, int a, int n) {
    return leq_entrywise(rotate_subset(i, a, n), rotate_subset(j, a, n));
}

struct SortOps {
    Subset sort1, sort2, min, max;
};

// sort/min/max of a pair of k-subsets (multiset sort interleaving and
// componentwise extrema on the sorted tuples)
inline SortOps sort_ops(const Subset& i, const Subset& j) {
    if (i.size() != j.size()) throw std::invalid_argument("sort_ops: size mismatch");
    std::vector<int> merged;
    merged.reserve(i.size() * 2);
    merged.insert(merged.end(), i.begin(), i.end());
    merged.insert(merged.end(), j.begin(), j.end());
    std::sort(merged.begin(), merged.end());
    SortOps out;
    for (size_t r = 0; r < merged.size(); ++r)
        (r % 2 == 0 ? out.sort1 : out.sort2).push_back(merged[r]);
    for (size_t r = 0; r < i.size(); ++r) {
        out.min.push_back(std::min(i[r], j[r]));
        out.max.push_back(std::max(i[r], j[r]));
    }
    return out;
}

// "13" for n <= 9, "1,3" otherwise
inline std::string subset_str(const Subset& s, int n) {
    std::ostringstream os;
    for (size_t r = 0; r < s.size(); ++r) {
        if (n > 9 && r) os << ",";
        os << s[r];
    }
    return os.str();
}

}  // namespace positroid

#endif
