#pragma once

#include <cstdint>
#include <unordered_map>

#include "finord/lattice.hpp"

namespace finord {

/** Guards for constructions whose carriers grow exponentially. */
struct SizeLimits {
  int max_base = 16;        // largest poset fed to a set-of-subsets construction
  long max_elements = 4096; // largest materialised carrier (join/meet tables are quadratic)
};

/** The lattice of down-sets of a poset, with each element's member mask. */
struct DownsetLattice {
  FinDistLattice lattice;
  FinitePoset base;
  std::vector<std::uint64_t> sets;  // per lattice element, a bitmask over base

  int index_of_set(std::uint64_t mask) const;

  std::unordered_map<std::uint64_t, int> lookup;
};

/// All down-sets of P ordered by inclusion; join is union, meet is
/// intersection. Throws SizeOverflow when P or the resulting carrier
/// exceeds the limits.
DownsetLattice downset_lattice(const FinitePoset& p, const SizeLimits& limits = {});

/// Deterministic display name for a subset of a poset's carrier.
std::string set_label(const FinitePoset& base, std::uint64_t mask);

struct LatticeIso {
  FinDistLattice source;
  FinDistLattice target;
  std::vector<int> forward;
  std::vector<int> inverse;
};

struct PosetIso {
  FinitePoset source;
  FinitePoset target;
  std::vector<int> forward;
  std::vector<int> inverse;
};

/** The unit of Birkhoff duality at a lattice L: the verified isomorphism
 * a |-> {j join-irreducible : j <= a} onto the down-set lattice of the
 * poset of join-irreducibles. */
struct BirkhoffUnit {
  LatticeIso iso;
  FinitePoset irreducibles;
  std::vector<int> irreducible_indices;
  DownsetLattice downsets;  // the target, with masks over `irreducibles`
};

BirkhoffUnit spec_unit(const FinDistLattice& l, const SizeLimits& limits = {});

/** The counit at a poset P: the verified order isomorphism x |-> down(x)
 * onto the join-irreducibles of the down-set lattice of P. */
struct BirkhoffCounit {
  PosetIso iso;
  DownsetLattice downsets;
};

BirkhoffCounit spec_counit(const FinitePoset& p, const SizeLimits& limits = {});

/** The discrete refinement of a poset together with the identity-carrier
 * monotone map back into it. */
struct PatchPresentation {
  FinitePoset space;
  MonotoneMap inclusion;
};

PatchPresentation patch(const FinitePoset& p);

/** Embedding of a distributive lattice into the powerset of its
 * join-irreducibles, with the left adjoint retraction S |-> join(S). */
struct Booleanization {
  FinDistLattice base;
  DownsetLattice boole;  // powerset of the irreducibles, with masks
  Hemimorphism embed;    // a homomorphism, injective
  Hemimorphism retract;  // preserves bottom and joins; retract . embed = id
  std::vector<int> irreducible_indices;
};

Booleanization booleanize(const FinDistLattice& l, const SizeLimits& limits = {});

/// The homomorphism D(X2) -> D(X1) dual to a monotone map g : X1 -> X2,
/// sending a down-set to its preimage.
Hemimorphism preimage_homomorphism(const MonotoneMap& g, const DownsetLattice& target_downsets,
                                   const DownsetLattice& source_downsets);

}  // namespace finord
