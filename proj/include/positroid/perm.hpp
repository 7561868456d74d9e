#ifndef POSITROID_PERM_HPP
#define POSITROID_PERM_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "positroid/subsets.hpp"

namespace positroid {

struct NotBijective : std::invalid_argument {
    NotBijective() : std::invalid_argument("window values not distinct mod n") {}
};
struct NotBounded : std::invalid_argument {
    NotBounded() : std::invalid_argument("window violates i <= f(i) <= i+n") {}
};
struct WrongK : std::invalid_argument {
    WrongK() : std::invalid_argument("sum(f(i)-i) != k*n") {}
};

// Bounded affine permutation f: Z -> Z with f(i+n) = f(i)+n and
// i <= f(i) <= i+n, stored by its window [f(1),...,f(n)].
//
// Order convention: Bound(k,n) carries the DUAL of affine Bruhat order, so
// id(i) = i+k is the unique maximum and covers go down in cell dimension.
class BoundedAffinePermutation {
  public:
    BoundedAffinePermutation() = default;
    BoundedAffinePermutation(int n, std::vector<int> window);

    static BoundedAffinePermutation from_window(const std::vector<int>& window,
                                                int expect_k = -1);
    static BoundedAffinePermutation identity(int k, int n);
    // t_I: f(i) = i+n for i in I, f(i) = i otherwise
    static BoundedAffinePermutation t_of(const Subset& I, int n);

    int n() const { return n_; }
    int k() const { return k_; }
    const std::vector<int>& window() const { return window_; }

    // f at any integer, via periodicity
    int operator()(int i) const {
        int r = ((i - 1) % n_ + n_) % n_;       // 0-based residue
        int shift = (i - 1 - r) / n_;           // floor division
        return window_[static_cast<size_t>(r)] + shift * n_;
    }

    bool is_identity() const;
    bool operator==(const BoundedAffinePermutation& o) const {
        return n_ == o.n_ && window_ == o.window_;
    }
    bool operator!=(const BoundedAffinePermutation& o) const { return !(*this == o); }
    bool operator<(const BoundedAffinePermutation& o) const {  // container ordering only
        return window_ < o.window_;
    }

    // right multiplication by the simple transposition s_i (swap positions
    // i, i+1 mod n); may leave Bound(k,n), caller checks boundedness
    BoundedAffinePermutation times_s(int i) const;

    // relabel positions cyclically: returns chi . f . chi^{-1} where
    // chi(i) = i+1, i.e. the permutation of the rotated point chi(X)
    BoundedAffinePermutation rotate() const;

    std::string str() const;  // window notation "[2,4,6,5,7,9]"

  private:
    int n_ = 0, k_ = 0;
    std::vector<int> window_;
};

using Baff = BoundedAffinePermutation;

struct GrassmannNecklace {
    int n = 0, k = 0;
    std::vector<Subset> subsets;  // I_1, ..., I_n

    std::string str() const;
    bool operator==(const GrassmannNecklace& o) const {
        return n == o.n && k == o.k && subsets == o.subsets;
    }
};

// r(i,j) = dim span(v_i,...,v_j) stored on the fundamental window
// i in [n], j in [i, i+n-1]; values extend periodically and saturate at k.
struct CyclicRankMatrix {
    int n = 0, k = 0;
    std::vector<std::vector<int>> r;  // r[i-1][j-i] for j in [i, i+n-1]

    int rank(int i, int j) const;  // any i <= j
    bool operator<=(const CyclicRankMatrix& o) const;
};

struct Positroid {
    int n = 0, k = 0;
    std::vector<Subset> bases;  // sorted lexicographically

    bool has_basis(const Subset& I) const;
    bool contains(const Positroid& o) const;  // superset of bases
    bool satisfies_exchange_axiom() const;
    bool is_sort_closed() const;
    bool operator==(const Positroid& o) const { return n == o.n && bases == o.bases; }
};

// --- conversions between the four indexing objects ---

GrassmannNecklace necklace_of(const Baff& f);
Baff perm_of(const GrassmannNecklace& I);
CyclicRankMatrix rank_matrix_of(const Baff& f);
Baff perm_of_rank_matrix(const CyclicRankMatrix& r);
GrassmannNecklace necklace_of_rank_matrix(const CyclicRankMatrix& r);
// positroid via Oh's theorem: intersection of cyclically rotated Schubert
// matroids of the Grassmann necklace
Positroid positroid_of(const Baff& f);
Baff perm_of_positroid(const Positroid& m);

// --- order-theoretic operations ---

int length(const Baff& f);               // inversion count of the affine permutation
bool bruhat_leq(const Baff& f, const Baff& g);  // f <= g in Bound(k,n)
std::vector<Baff> covers(const Baff& f);        // all g covered by f (dimension - 1)

// exhaustive generation of Bound(k,n), ordered by window
std::vector<Baff> enumerate_bound(int k, int n);

// parse "[2,4,6,5,7,9]"
Baff parse_window(const std::string& s);

}  // namespace positroid

#endif
