#pragma once

#include <span>
#include <vector>

#include "finord/poset.hpp"

namespace finord {

/** A finite bounded distributive lattice.
 *
 * Stores the full order together with join and meet tables; `from_poset`
 * validates that every pair has a least upper and greatest lower bound, that
 * bottom and top exist, and that the distributive law holds (reporting a
 * witnessing M3 diamond or N5 pentagon sublattice on failure).
 */
class FinDistLattice {
public:
  /// Validating constructor; throws NotALattice or NotDistributive.
  static FinDistLattice from_poset(const FinitePoset& order);

  /// Wraps precomputed tables without the cubic validation. The caller
  /// guarantees the tables match the order (used for down-set lattices,
  /// whose joins and meets are unions and intersections by construction).
  static FinDistLattice from_parts(FinitePoset order, std::vector<int> join,
                                   std::vector<int> meet, int bottom, int top);

  int size() const { return order_.size(); }
  const FinitePoset& order() const { return order_; }
  bool leq(int i, int j) const { return order_.leq(i, j); }
  const std::string& label(int i) const { return order_.label(i); }
  int index_of(std::string_view label) const { return order_.index_of(label); }

  int join(int x, int y) const {
    return join_[static_cast<std::size_t>(x) * order_.size() + static_cast<std::size_t>(y)];
  }
  int meet(int x, int y) const {
    return meet_[static_cast<std::size_t>(x) * order_.size() + static_cast<std::size_t>(y)];
  }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  int join_of(std::span<const int> xs) const;  // empty join = bottom
  int meet_of(std::span<const int> xs) const;  // empty meet = top

  bool operator==(const FinDistLattice&) const = default;

private:
  FinDistLattice(FinitePoset order, std::vector<int> join, std::vector<int> meet, int bottom,
                 int top)
      : order_(std::move(order)),
        join_(std::move(join)),
        meet_(std::move(meet)),
        bottom_(bottom),
        top_(top) {}

  FinitePoset order_;
  std::vector<int> join_;
  std::vector<int> meet_;
  int bottom_ = 0;
  int top_ = 0;
};

/** A map between lattices preserving bottom and binary joins.
 *
 * Meet and top preservation are computed at construction and cached as
 * flags; a lattice homomorphism is a hemimorphism with both flags set.
 */
class Hemimorphism {
public:
  /// Validates sup-preservation; throws NotSupPreserving with a witness.
  static Hemimorphism check(FinDistLattice source, FinDistLattice target,
                            std::vector<int> assignment);
  static Hemimorphism identity(const FinDistLattice& l);

  const FinDistLattice& source() const { return source_; }
  const FinDistLattice& target() const { return target_; }
  const std::vector<int>& assignment() const { return assignment_; }
  int operator()(int i) const { return assignment_[static_cast<std::size_t>(i)]; }

  bool preserves_meets() const { return preserves_meets_; }
  bool preserves_top() const { return preserves_top_; }
  bool is_homomorphism() const { return preserves_meets_ && preserves_top_; }

  bool operator==(const Hemimorphism& other) const {
    return source_ == other.source_ && target_ == other.target_ &&
           assignment_ == other.assignment_;
  }

private:
  Hemimorphism(FinDistLattice source, FinDistLattice target, std::vector<int> assignment,
               bool pm, bool pt)
      : source_(std::move(source)),
        target_(std::move(target)),
        assignment_(std::move(assignment)),
        preserves_meets_(pm),
        preserves_top_(pt) {}

  FinDistLattice source_;
  FinDistLattice target_;
  std::vector<int> assignment_;
  bool preserves_meets_ = false;
  bool preserves_top_ = false;
};

/// Diagrammatic composition: `compose(f, g)` applies f first, then g.
Hemimorphism compose(const Hemimorphism& f, const Hemimorphism& g);

/// Indices of the join-irreducible elements (non-bottom, not a join of two
/// strictly smaller elements), ascending.
std::vector<int> join_irreducible_indices(const FinDistLattice& l);

/// The subposet of join-irreducible elements with the inherited order.
FinitePoset join_irreducibles(const FinDistLattice& l);

/// Least z with y <= x v z, found by scanning the whole carrier. This is the
/// reference route for the co-Heyting subtraction; the Booleanization route
/// in karoubi.hpp must agree with it everywhere.
int coheyting_subtract_bruteforce(const FinDistLattice& l, int x, int y);

}  // namespace finord
