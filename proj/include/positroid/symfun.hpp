#ifndef POSITROID_SYMFUN_HPP
#define POSITROID_SYMFUN_HPP

#include <map>
#include <string>
#include <vector>

#include "positroid/perm.hpp"

namespace positroid {

// partitions: weakly decreasing positive parts, no trailing zeros
using Partition = std::vector<int>;

std::vector<Partition> partitions_of(int m, int max_parts = -1, int max_part = -1);

// number of semistandard tableaux of shape lambda and content mu
long kostka(const Partition& lambda, const Partition& mu);

// integer combination of Schur functions, graded by degree
struct SchurPolynomial {
    std::map<Partition, long> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    long coeff(const Partition& p) const {
        auto it = coeffs.find(p);
        return it == coeffs.end() ? 0 : it->second;
    }
    void add(const Partition& p, long c);

    SchurPolynomial& operator+=(const SchurPolynomial& o);
    SchurPolynomial& operator-=(const SchurPolynomial& o);
    friend SchurPolynomial operator+(SchurPolynomial a, const SchurPolynomial& b) { return a += b; }
    friend SchurPolynomial operator-(SchurPolynomial a, const SchurPolynomial& b) { return a -= b; }
    bool operator==(const SchurPolynomial& o) const { return coeffs == o.coeffs; }

    static SchurPolynomial one() {
        SchurPolynomial p;
        p.coeffs[{}] = 1;
        return p;
    }
    static SchurPolynomial s(const Partition& p) {
        SchurPolynomial q;
        q.coeffs[p] = 1;
        return q;
    }

    std::string str() const;  // "s[2,2] + s[2,1,1] - s[1,1,1,1]"
};

// Pieri rule: p * h_m
SchurPolynomial pieri_h(const SchurPolynomial& p, int m);

// Littlewood-Richardson product via the Jacobi-Trudi h-expansion of the
// second factor and iterated Pieri
SchurPolynomial schur_multiply(const SchurPolynomial& a, const SchurPolynomial& b);

// quotient to H*(Gr(k,n)): kill lambda not inside the k x (n-k) rectangle
struct CohomClass {
    int k = 0, n = 0;
    SchurPolynomial p;

    bool is_zero() const { return p.is_zero(); }
    bool operator==(const CohomClass& o) const { return k == o.k && n == o.n && p == o.p; }
    std::string str() const { return p.str(); }
};

CohomClass eta(const SchurPolynomial& p, int k, int n);

// affine Stanley symmetric function of f in Bound(k,n), as the exact Schur
// expansion of the cyclically-decreasing factorization generating function
SchurPolynomial affine_stanley(const Baff& f);

CohomClass positroid_class(const Baff& f);

// truncation tau_r: strip n-r full-height columns
CohomClass truncate(const CohomClass& c, int r);

bool is_independent(const Baff& f, int r);
bool intersects_exceptional(const Baff& f, int r);

// the k = 2 closed form: type (alpha; beta_1..beta_r) and the class
// (h_{beta_1 - 1} ... h_{beta_r - 1})^{+alpha} mod I_{2,n}
struct K2Type {
    int alpha = 0;
    std::vector<int> betas;
};
K2Type k2_type(const Baff& f);
CohomClass k2_class_formula(const Baff& f);

SchurPolynomial parse_schur(const std::string& s);

}  // namespace positroid

#endif
