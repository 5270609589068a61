#pragma once

#include <string>

#include "finord/lattice.hpp"

namespace finord {

/// Cover-pair diagram of a poset as a DOT digraph, edges oriented from the
/// lower to the upper element, nodes in carrier order.
std::string dot_emit(const FinitePoset& p);
std::string dot_emit(const FinDistLattice& l);

}  // namespace finord
