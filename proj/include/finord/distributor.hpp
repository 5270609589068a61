#pragma once

#include <optional>

#include "finord/birkhoff.hpp"

namespace finord {

/** A monotone relation r : X -|-> Y between finite posets.
 *
 * The relation is up-closed in the target (r(x, y) and y <= y' give
 * r(x, y')) and down-compatible in the source (x <= x' and r(x', y) give
 * r(x, y)). Composition is diagrammatic relational composition and the
 * identity on X is the order relation of X.
 */
class Distributor {
public:
  enum class Mode { strict, closure };

  /// Builds a distributor from a pair list. In strict mode the literal pair
  /// set must already satisfy both closure conditions (NotADistributor with
  /// a witness otherwise); in closure mode the least distributor containing
  /// the pairs is returned.
  static Distributor validate(const FinitePoset& source, const FinitePoset& target,
                              const std::vector<std::pair<int, int>>& pairs, Mode mode);
  static Distributor validate_labels(const FinitePoset& source, const FinitePoset& target,
                                     const std::vector<std::pair<std::string, std::string>>& pairs,
                                     Mode mode);

  /// Wraps a full relation matrix, checking the two closure conditions.
  static Distributor from_matrix(FinitePoset source, FinitePoset target,
                                 std::vector<std::uint8_t> rel);

  static Distributor identity(const FinitePoset& p);
  static Distributor empty(const FinitePoset& source, const FinitePoset& target);
  static Distributor total(const FinitePoset& source, const FinitePoset& target);

  const FinitePoset& source() const { return source_; }
  const FinitePoset& target() const { return target_; }
  bool at(int x, int y) const {
    return rel_[static_cast<std::size_t>(x) * target_.size() + static_cast<std::size_t>(y)] != 0;
  }
  const std::vector<std::uint8_t>& matrix() const { return rel_; }

  /// Row x as a bitmask over the target carrier (target.size() <= 64).
  std::uint64_t row_mask(int x) const;

  /// Pointwise inclusion of relations (requires equal endpoints).
  bool contained_in(const Distributor& other) const;

  bool operator==(const Distributor&) const = default;

private:
  Distributor(FinitePoset source, FinitePoset target, std::vector<std::uint8_t> rel)
      : source_(std::move(source)), target_(std::move(target)), rel_(std::move(rel)) {}

  FinitePoset source_;
  FinitePoset target_;
  std::vector<std::uint8_t> rel_;
};

/// Diagrammatic composite: compose(r, s)(x, z) iff r(x, y) and s(y, z) for some y.
Distributor compose(const Distributor& r, const Distributor& s);

/// Graphs of a monotone map f: lower graph f(x) <= y typed X -|-> Y, upper
/// graph y <= f(x) typed Y -|-> X. The lower graph is left adjoint to the
/// upper one.
Distributor graph_lower(const MonotoneMap& f);
Distributor graph_upper(const MonotoneMap& f);

struct AdjointReport {
  bool adjoint = false;
  std::optional<std::pair<int, int>> unit_witness;    // x <= x' missing in phi;psi
  std::optional<std::pair<int, int>> counit_witness;  // (y, y') in psi;phi but y !<= y'
};

/// Checks identity(X) <= compose(phi, psi) and compose(psi, phi) <= identity(Y).
AdjointReport check_adjoint(const Distributor& phi, const Distributor& psi);

/// Recovers the unique monotone map f with phi = graph_lower(f) and
/// psi = graph_upper(f); throws NotAnAdjunction when the pair is not adjoint.
MonotoneMap adjoint_to_map(const Distributor& phi, const Distributor& psi);

/** The space of up-sets of X ordered by reverse inclusion (the empty set is
 * the top element), with each element's member mask. */
struct VietorisSpace {
  FinitePoset poset;
  FinitePoset base;
  std::vector<std::uint64_t> sets;

  int index_of_set(std::uint64_t mask) const;

  std::unordered_map<std::uint64_t, int> lookup;
};

VietorisSpace vietoris(const FinitePoset& x, const SizeLimits& limits = {});

/// Functor action: A |-> up-closure of f[A].
MonotoneMap vietoris_map(const MonotoneMap& f, const SizeLimits& limits = {});

/** Unit x |-> up(x) and multiplication A |-> union(A) of the up-set monad. */
struct MonadStructure {
  VietorisSpace vx;
  VietorisSpace vvx;
  MonotoneMap unit;  // X -> VX
  MonotoneMap mult;  // VVX -> VX
};

MonadStructure monad_structure(const FinitePoset& x, const SizeLimits& limits = {});

/// Unit laws as map equalities plus associativity checked pointwise over the
/// up-sets of VVX; returns a description of the first violation, if any.
std::optional<std::string> monad_laws_violation(const FinitePoset& x,
                                                const SizeLimits& limits = {});

/// The lax-idempotency inequality e_{VX} <= V(e_X), checked pointwise.
bool kz_check(const FinitePoset& x, const SizeLimits& limits = {});

/// The transpose x |-> {y : r(x, y)} of a distributor, landing in the
/// up-set space of the target.
MonotoneMap kleisli_of(const Distributor& r, const SizeLimits& limits = {});

/// Inverse of the transpose: recovers the relation from a map into an
/// up-set space.
Distributor distributor_of_kleisli(const MonotoneMap& rhat, const VietorisSpace& vy);

/// The sup-preserving dual of a distributor: D(Y) -> D(X),
/// B |-> {x : r(x) meets B}. Contravariant on composition and inverse to
/// `halmos_inv` (a dual equivalence on these finite categories).
Hemimorphism halmos_dual(const Distributor& r, const SizeLimits& limits = {});
Hemimorphism halmos_dual(const Distributor& r, const DownsetLattice& target_downsets,
                         const DownsetLattice& source_downsets);

/// Recovers the distributor from a sup-preserving map between down-set
/// lattices: r(x, y) iff x lies in h(down(y)).
Distributor halmos_inv(const Hemimorphism& h, const DownsetLattice& target_downsets,
                       const DownsetLattice& source_downsets);

/** Three equivalent ways of saying a monotone map between finite posets is
 * downwards open; on finite carriers all three always hold, and the report
 * records each one so the degeneracy stays visible. */
struct DownwardsOpenReport {
  bool image_condition = false;       // down-closure of the image of a down-set is a down-set
  bool adjoint_condition = false;     // lower graph has the upper graph as right adjoint
  bool upper_graph_condition = false; // upper graph satisfies the distributor conditions
  bool all() const { return image_condition && adjoint_condition && upper_graph_condition; }
};

DownwardsOpenReport downwards_open_report(const MonotoneMap& f, const SizeLimits& limits = {});

/// Every distributor between two posets (brute force; |X|*|Y| <= 20).
std::vector<Distributor> enumerate_distributors(const FinitePoset& source,
                                                const FinitePoset& target);

}  // namespace finord
