#ifndef POSITROID_RAT_HPP
#define POSITROID_RAT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace positroid {

// Exact rational scalar.  mpq_class keeps values canonical (lowest terms,
// positive denominator), which is exactly the invariant we need.
using Rat = mpq_class;
using Int = mpz_class;

inline int sgn(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Parses "p", "-p" or "p/q".  Throws on malformed input.
inline Rat parse_rat(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = e > 0 ? base : Rat(1) / base;
    unsigned long n = e > 0 ? e : -e;
    Rat acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline Rat rat_abs(const Rat& q) { return sgn(q) < 0 ? Rat(-q) : q; }

}  // namespace positroid

#endif
