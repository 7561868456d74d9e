#ifndef POSITROID_RNG_HPP
#define POSITROID_RNG_HPP

#include <cstdint>

#include "positroid/rat.hpp"

namespace positroid {

// splitmix64: deterministic across platforms, cheap to fork per work item so
// parallel loops reproduce the single-threaded stream.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed = 0x9e3779b97f4a7c15ULL) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

    long int_in(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    Rat positive_rat(long max_num = 9, long max_den = 4) {
        Rat q(int_in(1, max_num), int_in(1, max_den));
        q.canonicalize();
        return q;
    }

    Rat small_rat(long max_abs = 9) {
        Rat q(int_in(-max_abs, max_abs), int_in(1, 4));
        q.canonicalize();
        return q;
    }

    // independent stream for work item `i` of a seeded job
    static Rng fork(std::uint64_t seed, std::uint64_t i) {
        Rng r(seed ^ (0x632be59bd9b4e019ULL * (i + 1)));
        r.next();
        return r;
    }
};

}  // namespace positroid

#endif
