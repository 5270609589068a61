#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "finord/error.hpp"

namespace finord {

/** A finite partially ordered set.
 *
 * Elements carry stable string labels; all computations run on dense integer
 * indices into the carrier. The order is stored as a full boolean matrix,
 * `leq(i, j)` meaning "element i is below element j". Values are immutable
 * after construction, so they are safe to share across threads.
 */
class FinitePoset {
public:
  FinitePoset() = default;  // the empty poset

  /// Builds the poset generated by `generating_pairs` (reflexive-transitive
  /// closure). Throws DuplicateLabel, UnknownLabel, or AntisymmetryViolation
  /// (with one witnessing cycle) when the input does not present a poset.
  static FinitePoset from_pairs(std::vector<std::string> elements,
                                const std::vector<std::pair<std::string, std::string>>& generating_pairs);

  /// Wraps an explicit order matrix, validating the poset axioms.
  static FinitePoset from_leq_matrix(std::vector<std::string> elements,
                                     std::vector<std::uint8_t> leq);

  static FinitePoset discrete(std::vector<std::string> elements);
  static FinitePoset chain(std::vector<std::string> elements);

  int size() const { return static_cast<int>(labels_.size()); }
  bool empty() const { return labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }

  /// Index of a label; throws UnknownLabel if absent.
  int index_of(std::string_view label) const;
  std::optional<int> find(std::string_view label) const;

  bool leq(int i, int j) const {
    return leq_[static_cast<std::size_t>(i) * labels_.size() + static_cast<std::size_t>(j)] != 0;
  }
  bool less(int i, int j) const { return i != j && leq(i, j); }

  /// The same carrier with the transposed order.
  FinitePoset dual() const;

  /// Smallest down-set (resp. up-set) containing the given elements.
  std::vector<int> down_closure(const std::vector<int>& s) const;
  std::vector<int> up_closure(const std::vector<int>& s) const;
  std::vector<std::string> down_closure_labels(const std::vector<std::string>& s) const;
  std::vector<std::string> up_closure_labels(const std::vector<std::string>& s) const;

  // Bitmask helpers; require size() <= 64.
  std::uint64_t down_closure_mask(std::uint64_t s) const;
  std::uint64_t up_closure_mask(std::uint64_t s) const;
  std::uint64_t down_mask_of(int i) const;
  std::uint64_t up_mask_of(int i) const;
  bool is_down_set(std::uint64_t mask) const;
  bool is_up_set(std::uint64_t mask) const;

  /// Cover pairs (x, y): x < y with nothing strictly between. The output
  /// regenerates the full order under reflexive-transitive closure.
  std::vector<std::pair<int, int>> hasse() const;

  /// Subposet on the given indices (inherited order and labels).
  FinitePoset restricted_to(const std::vector<int>& carrier) const;

  bool operator==(const FinitePoset&) const = default;

private:
  FinitePoset(std::vector<std::string> labels, std::vector<std::uint8_t> leq)
      : labels_(std::move(labels)), leq_(std::move(leq)) {}

  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;  // row-major, size() * size()
};

/** A monotone (order-preserving) map between finite posets. */
class MonotoneMap {
public:
  /// Validates monotonicity; throws NotMonotone with a witnessing pair.
  MonotoneMap(FinitePoset source, FinitePoset target, std::vector<int> assignment);

  static MonotoneMap identity(const FinitePoset& p);
  static MonotoneMap constant(const FinitePoset& source, const FinitePoset& target, int value);
  static MonotoneMap from_labels(const FinitePoset& source, const FinitePoset& target,
                                 const std::vector<std::pair<std::string, std::string>>& assignment);

  const FinitePoset& source() const { return source_; }
  const FinitePoset& target() const { return target_; }
  const std::vector<int>& assignment() const { return assignment_; }
  int operator()(int i) const { return assignment_[static_cast<std::size_t>(i)]; }

  bool operator==(const MonotoneMap&) const = default;

private:
  FinitePoset source_;
  FinitePoset target_;
  std::vector<int> assignment_;
};

/// Diagrammatic composition: `compose(f, g)` applies f first, then g.
MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g);

/// Same label set and the same order relation, regardless of carrier order.
bool same_order(const FinitePoset& a, const FinitePoset& b);

/// Order isomorphism test by backtracking bijection search (desk scale only).
bool is_isomorphic(const FinitePoset& a, const FinitePoset& b);

/// Every labelled poset on n elements, exactly once, in a deterministic order.
/// Throws BoundExceeded when n exceeds `max_n`.
std::vector<FinitePoset> enumerate_posets(int n, int max_n = 5);

/// Every monotone map between two posets, in a deterministic order.
std::vector<MonotoneMap> enumerate_monotone_maps(const FinitePoset& source,
                                                 const FinitePoset& target);

}  // namespace finord
