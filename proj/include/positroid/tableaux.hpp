#ifndef POSITROID_TABLEAUX_HPP
#define POSITROID_TABLEAUX_HPP

#include <string>
#include <vector>

#include "positroid/mpoly.hpp"
#include "positroid/pairing.hpp"
#include "positroid/perm.hpp"

namespace positroid {

struct InvalidPairing : std::invalid_argument {
    InvalidPairing() : std::invalid_argument("not a valid partial non-crossing pairing") {}
};

// Rectangular semistandard tableau: k rows, d columns, entries in [n].
struct RectTableau {
    int rows = 0, cols = 0;
    std::vector<std::vector<int>> t;

    int at(int r, int c) const { return t[static_cast<size_t>(r)][static_cast<size_t>(c)]; }
    bool semistandard() const;
    Subset column(int c) const;

    bool operator==(const RectTableau& o) const { return t == o.t; }
    bool operator<(const RectTableau& o) const { return t < o.t; }
    std::string str() const;  // one row per line

    static RectTableau of_rows(std::vector<std::vector<int>> rows);
    // constant-row tableau T_I
    static RectTableau highest(const Subset& I, int d);
};

// jeu-de-taquin promotion: delete the n's, slide toward the bottom right,
// add one, fill the vacated top-left cells with 1's
RectTableau promote(const RectTableau& T, int n);
RectTableau promote_inverse(const RectTableau& T, int n);

// B(d omega_k) with entries in [n]
std::vector<RectTableau> all_rect_tableaux(int k, int d, int n);

// entrywise-bounded (opposite) Demazure crystal B_I(d omega_k)
std::vector<RectTableau> demazure_crystal(const Subset& I, int d, int n);

// cyclic Demazure crystal: the intersection of the rotated crystals of the
// Grassmann necklace
std::vector<RectTableau> cyclic_demazure(const Baff& f, int d);

// character sum_T x^{wt(T)} over variables x1..xn
MPoly crystal_character(const std::vector<RectTableau>& S, int n);

// theta: non-crossing pairings <-> two-column rectangular tableaux
RectTableau theta(const NonCrossingPairing& p);
NonCrossingPairing theta_inverse(const RectTableau& T, int n);

}  // namespace positroid

#endif
