#ifndef POSITROID_POLYTOPE_HPP
#define POSITROID_POLYTOPE_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "positroid/forms.hpp"
#include "positroid/network.hpp"
#include "positroid/plucker.hpp"
#include "positroid/reduction.hpp"
#include "positroid/rng.hpp"

namespace positroid {

struct DimensionMismatch : std::invalid_argument {
    DimensionMismatch() : std::invalid_argument("Z map dimension mismatch") {}
};

// Z with a positivity witness M: all k x k minors of Z M are positive, so
// (Z M)^T is a totally positive point of Gr(k,n).
struct ZMap {
    Mat<Rat> Z;                  // n x r
    std::optional<Mat<Rat>> M;   // r x k witness
};

// all k x k minors of the n x k matrix ZM are positive
bool verify_witness(const Mat<Rat>& Z, const Mat<Rat>& M);

// Sample a positive Z (positive maximal minors) together with a witness for
// the given k.  Z^T = e_{[r]} g' g with g' over the parabolic and g over the
// Grassmannian factorization, all parameters positive; then M = [I_k; 0]
// works because e_{[k],n} g' g is totally positive.
ZMap sample_positive_z(int n, int r, int k, Rng& rng);

// image point X Z in Gr(k,r), or nullopt when the rank drops (the
// exceptional locus E_Z)
std::optional<PluckerVector<Rat>> zmap(const Mat<Rat>& x, const Mat<Rat>& z);

// det of the r x r matrix [Y; Z_J] with Y a k x r representative and Z_J the
// rows of Z indexed by J, |J| = r - k
Rat bracket(const Mat<Rat>& y, const Mat<Rat>& z, const Subset& J);

// formal polynomial in Plucker coordinates of Gr(k+l, n): a sum of terms
// c * Delta_{J_1} ... Delta_{J_d}
struct PluckerPolynomial {
    struct Term {
        Rat c;
        std::vector<Subset> minors;
    };
    std::vector<Term> terms;
};

// psi substitution: Delta_J -> Delta(Y, Z_{[n]-J}), evaluated exactly
Rat psi_substitute(const PluckerPolynomial& p, const Mat<Rat>& y, const Mat<Rat>& z);

// the BCFW collections C(k,n) of 4k-dimensional cells
struct BcfwCellSet {
    int k = 0, n = 0;
    std::vector<Baff> cells;
};
BcfwCellSet bcfw_cells(int k, int n);

// exact barycentric containment of column vector x in the simplex cone
// spanned by rows of Z indexed by I (|I| = r)
enum class Containment { Outside, Boundary, Interior };
Containment simplex_contains(const Mat<Rat>& z, const Subset& I, const std::vector<Rat>& x);

// Monte-Carlo triangulation certificate for the k = 1 BCFW cells
struct TriangulationReport {
    int n = 0;
    std::uint64_t seed = 0;
    int samples = 0;
    int not_covered = 0;       // points in no closed simplex
    int multiply_covered = 0;  // points interior to more than one simplex
    std::vector<Subset> cells;

    bool clean() const { return not_covered == 0 && multiply_covered == 0; }
    std::string str() const;
};
TriangulationReport k1_triangulation_check(int n, const Mat<Rat>& z, int samples,
                                           std::uint64_t seed, int threads = 1);

// the vertex sets {1, i-1, i, j-1, j} used by C(1,n)
std::vector<Subset> k1_bcfw_simplices(int n);

// canonical form of a simplicial cone as a degree-0 rational function in
// x_1..x_r (the Laplace transform of the dual cone against dlog measure)
RatFunc simplex_form(const Mat<Rat>& z, const Subset& I, const std::vector<Var>& xs);
RatFunc triangulation_form_sum(const Mat<Rat>& z, const std::vector<Subset>& cells,
                               const std::vector<Var>& xs);

// facets of the cyclic polytope via exact Gale evenness checks, and the fan
// triangulation from a vertex
std::vector<Subset> cyclic_polytope_facets(const Mat<Rat>& z);
std::vector<Subset> fan_triangulation(const Mat<Rat>& z, int apex);

// sign probe of Prop "AT": evaluates Delta(Y, Z_I) over TNN samples
struct SignProbeReport {
    Subset I;
    int samples = 0;
    int positive = 0, negative = 0, zero = 0;
    bool fixed_sign() const { return positive == 0 || negative == 0; }
    std::string str() const;
};
SignProbeReport evenness_sign_probe(const Mat<Rat>& z, int k, const Subset& I, int samples,
                                    std::uint64_t seed, int threads = 1);
bool satisfies_evenness(const Subset& I, int n);

}  // namespace positroid

#endif
