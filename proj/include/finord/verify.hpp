#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "finord/karoubi.hpp"

namespace finord {

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;  // counterexample description on failure
  double seconds = 0.0;
};

struct VerifyReport {
  std::vector<PropertyResult> results;
  bool all_passed() const;
};

/// Runs every registered property suite with carriers bounded by `max_size`
/// (at most 5); randomised parts draw from `seed`.
VerifyReport verify_suite(int max_size, std::uint64_t seed);

std::string format_report(const VerifyReport& report, int max_size, std::uint64_t seed);

// Individual property checks with explicit bounds. Each returns a
// counterexample description, or nothing when the property holds.
namespace checks {

using Violation = std::optional<std::string>;

Violation order_dual_involution(int max_n);
Violation down_closure_operator(int max_n);
Violation hasse_regeneration(int max_n);
Violation coheyting_adjunction_law(int max_n);
Violation boolean_irreducibles_antichain(int max_n);
Violation hemimorphism_flags(int max_n);
Violation birkhoff_round_trip(int exhaustive_max, int sample_n, int sample_count,
                              std::mt19937_64& rng);
Violation booleanization_laws(int max_n);
Violation category_laws(int max_n, int sampled_n, int sample_count, std::mt19937_64& rng);
Violation graph_functoriality(int max_n);
Violation adjunction_soundness(int max_n);
Violation adjunction_completeness(int max_n);
Violation vietoris_functoriality(int max_n);
Violation monad_laws(int max_n);
Violation kz_inequality(int max_n);
Violation kleisli_correspondence(int max_n);
Violation halmos_equivalence(int max_n);
Violation downwards_open_degeneracy(int max_n);
Violation splitting_soundness(int exhaustive_max, int random_min, int random_max,
                              int random_count, std::mt19937_64& rng);
Violation splitting_minimality(int exhaustive_max);
Violation coheyting_via_split_agreement(int max_n);
Violation pmorphism_equivalence(int max_n);
Violation esakia_presentation(int max_n);

/// Test oracle: searches all posets of size <= max_mid and all distributor
/// pairs for a splitting of e, smallest middle object first. Independent of
/// the algebraic route used by split_idempotent.
std::optional<SplitTriple> brute_force_minimal_split(const Distributor& e, int max_mid);

/// Deterministic random poset on n elements (random bits over a random
/// topological order, then closure).
FinitePoset random_poset(int n, std::mt19937_64& rng);

/// Random distributor between two posets (random pairs, then closure).
Distributor random_distributor(const FinitePoset& source, const FinitePoset& target,
                               std::mt19937_64& rng);

}  // namespace checks

}  // namespace finord
