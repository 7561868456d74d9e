#ifndef POSITROID_IO_HPP
#define POSITROID_IO_HPP

#include <iosfwd>
#include <string>

#include "positroid/network.hpp"

namespace positroid {

// Line-oriented network format, written bit-exactly by the CLI:
//   <n> [<k>]
//   v <id> <black|white|boundary:<label>>
//   e <id> <u> <v> <weight>
//   rot <vertex> <edge-id...>
// Weights are rational literals or variable names; a variable name makes the
// network symbolic.
struct NetworkFile {
    bool symbolic = false;
    bool nonplanar = false;  // header flag: skip rotation-system validation
    PlanarNetwork<Rat> numeric;
    PlanarNetwork<RatFunc> sym;
};

NetworkFile read_network(std::istream& in);
NetworkFile read_network_file(const std::string& path);

std::string write_network(const PlanarNetwork<Rat>& g, int k = -1);
std::string write_network(const PlanarNetwork<RatFunc>& g, int k = -1);

template <typename K>
PlanarNetwork<RatFunc> symbolize(const PlanarNetwork<K>& g);

}  // namespace positroid

#endif
