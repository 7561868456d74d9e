#ifndef POSITROID_ACCEPTANCE_HPP
#define POSITROID_ACCEPTANCE_HPP

#include <cstdint>
#include <iosfwd>

namespace positroid {

// Runs the full acceptance suite, printing one PASS/FAIL line per criterion
// (plus detail lines for any violation).  Returns the number of failed
// criteria.  Reports are byte-identical for a fixed seed across thread
// counts.
int run_acceptance(std::ostream& out, int threads = 1, std::uint64_t seed = 20260808ULL);

}  // namespace positroid

#endif
