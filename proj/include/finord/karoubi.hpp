#pragma once

#include "finord/distributor.hpp"

namespace finord {

/** A splitting of an idempotent endo-distributor through a poset:
 * forward;backward is the idempotent and backward;forward is the identity
 * of the middle object. */
struct SplitTriple {
  Distributor idem;
  FinitePoset mid;
  Distributor forward;   // carrier -|-> mid
  Distributor backward;  // mid -|-> carrier
};

/// Matrix equality compose(e, e) == e; throws ObjectMismatch unless endo.
bool is_idempotent(const Distributor& e);

/// The unique idempotent in the cyclic monoid generated by r (some power of
/// r, found by cycle detection).
Distributor idempotent_power(const Distributor& r);

/// Checks the three splitting equations; returns a description of the first
/// violated one, or nothing when the triple is valid.
std::optional<std::string> split_triple_violation(const SplitTriple& triple);

/// Splits an idempotent distributor through a poset. Works on the algebraic
/// side: the sup-preserving dual of e is an idempotent endomap of the
/// down-set lattice, its fixpoints form a distributive lattice M (joins are
/// inherited, meets are recomputed from the induced order), and the splitting
/// of the dual through M transports back along the duality. The returned
/// triple is re-verified before it is handed out.
SplitTriple split_idempotent(const Distributor& e, const SizeLimits& limits = {});

/// Presents a poset as a splitting over its own discretisation: the order
/// relation, viewed as an idempotent on the patch space, splits through X
/// via the graphs of the identity-carrier inclusion.
SplitTriple esakia_split_presentation(const FinitePoset& x);

/// Co-Heyting subtraction through the Booleanization: embed, subtract with
/// the Boolean complement, retract. Agrees with the brute-force route on
/// every finite distributive lattice.
int coheyting_via_split(const Booleanization& b, int x, int y);
int coheyting_via_split(const FinDistLattice& l, int x, int y, const SizeLimits& limits = {});

struct PMorphismReport {
  bool is_p_morphism = false;
  std::optional<std::pair<int, int>> witness;  // (x, y) with g(x) <= y and no lift
};

/// Bounded-morphism condition: whenever g(x) <= y there is x' >= x with
/// g(x') = y.
PMorphismReport p_morphism_check(const MonotoneMap& g);

struct PreservationReport {
  bool preserves_subtraction = false;
  std::optional<std::pair<int, int>> witness;
};

/// Whether a lattice homomorphism commutes with the co-Heyting subtraction;
/// throws NotAHomomorphism when the map does not preserve meets and top.
PreservationReport coheyting_preservation_check(const Hemimorphism& f);

}  // namespace finord
