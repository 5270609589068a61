#include "finord/karoubi.hpp"

#include <algorithm>
#include <map>

namespace finord {

bool is_idempotent(const Distributor& e) {
  if (e.source() != e.target())
    fail(errc::object_mismatch, "idempotence: source and target differ");
  return compose(e, e) == e;
}

Distributor idempotent_power(const Distributor& r) {
  if (r.source() != r.target())
    fail(errc::object_mismatch, "idempotent power: source and target differ");
  std::map<std::vector<std::uint8_t>, int> seen;
  std::vector<Distributor> powers = {r};  // powers[k] = r^(k+1)
  seen.emplace(r.matrix(), 1);
  for (;;) {
    Distributor next = compose(powers.back(), r);
    auto [it, fresh] = seen.emplace(next.matrix(), static_cast<int>(powers.size()) + 1);
    if (!fresh) {
      int start = it->second;                                  // r^start == r^(len+1)
      int period = static_cast<int>(powers.size()) + 1 - start;
      int exponent = start;
      while (exponent % period != 0) ++exponent;  // the unique idempotent power
      return powers[static_cast<std::size_t>(exponent - 1)];
    }
    powers.push_back(std::move(next));
  }
}

std::optional<std::string> split_triple_violation(const SplitTriple& triple) {
  if (triple.idem.source() != triple.idem.target()) return "idempotent is not an endo-relation";
  if (triple.forward.source() != triple.idem.source() || triple.forward.target() != triple.mid ||
      triple.backward.source() != triple.mid || triple.backward.target() != triple.idem.source())
    return "splitting legs do not match the carrier and middle object";

  Distributor ee = compose(triple.idem, triple.idem);
  if (ee != triple.idem) {
    for (int x = 0; x < triple.idem.source().size(); ++x)
      for (int y = 0; y < triple.idem.target().size(); ++y)
        if (ee.at(x, y) != triple.idem.at(x, y))
          return "relation is not idempotent at (" + triple.idem.source().label(x) + ", " +
                 triple.idem.target().label(y) + ")";
  }
  Distributor round = compose(triple.forward, triple.backward);
  if (round != triple.idem) {
    for (int x = 0; x < triple.idem.source().size(); ++x)
      for (int y = 0; y < triple.idem.target().size(); ++y)
        if (round.at(x, y) != triple.idem.at(x, y))
          return "forward;backward differs from the idempotent at (" +
                 triple.idem.source().label(x) + ", " + triple.idem.target().label(y) + ")";
  }
  Distributor middle = compose(triple.backward, triple.forward);
  Distributor id_mid = Distributor::identity(triple.mid);
  if (middle != id_mid) {
    for (int x = 0; x < triple.mid.size(); ++x)
      for (int y = 0; y < triple.mid.size(); ++y)
        if (middle.at(x, y) != id_mid.at(x, y))
          return "backward;forward differs from the identity at (" + triple.mid.label(x) + ", " +
                 triple.mid.label(y) + ")";
  }
  return std::nullopt;
}

SplitTriple split_idempotent(const Distributor& e, const SizeLimits& limits) {
  if (!is_idempotent(e)) {
    fail(errc::not_idempotent, "relation is not idempotent; split requires compose(e, e) == e");
  }
  const FinitePoset& x_poset = e.source();
  DownsetLattice dx = downset_lattice(x_poset, limits);
  Hemimorphism h = halmos_dual(e, dx, dx);

  // Fixpoints of the dual endomap form a sub-join-semilattice containing the
  // empty set; as a lattice in the induced order it is distributive (checked
  // again by from_poset inside spec_unit via the BirkhoffUnit construction).
  std::vector<int> fix;
  for (int i = 0; i < dx.lattice.size(); ++i)
    if (h(i) == i) fix.push_back(i);
  FinDistLattice m_lattice = FinDistLattice::from_poset(dx.lattice.order().restricted_to(fix));

  BirkhoffUnit unit = spec_unit(m_lattice, limits);
  const DownsetLattice& dp = unit.downsets;

  // forward leg, dually: D(P) -> M -> D(X) (include the fixpoints).
  std::vector<int> forward_assign(static_cast<std::size_t>(dp.lattice.size()));
  for (int b = 0; b < dp.lattice.size(); ++b)
    forward_assign[static_cast<std::size_t>(b)] =
        fix[static_cast<std::size_t>(unit.iso.inverse[static_cast<std::size_t>(b)])];
  Hemimorphism forward_dual =
      Hemimorphism::check(dp.lattice, dx.lattice, std::move(forward_assign));

  // backward leg, dually: D(X) -> M -> D(P) (corestrict the dual endomap).
  std::vector<int> backward_assign(static_cast<std::size_t>(dx.lattice.size()));
  for (int a = 0; a < dx.lattice.size(); ++a) {
    int fixpoint = h(a);
    auto pos = std::lower_bound(fix.begin(), fix.end(), fixpoint);
    backward_assign[static_cast<std::size_t>(a)] =
        unit.iso.forward[static_cast<std::size_t>(pos - fix.begin())];
  }
  Hemimorphism backward_dual =
      Hemimorphism::check(dx.lattice, dp.lattice, std::move(backward_assign));

  SplitTriple triple{e, unit.irreducibles, halmos_inv(forward_dual, dp, dx),
                     halmos_inv(backward_dual, dx, dp)};
  if (auto violation = split_triple_violation(triple))
    fail(errc::internal_verification_failure, "splitting verification failed: " + *violation);
  return triple;
}

SplitTriple esakia_split_presentation(const FinitePoset& x) {
  PatchPresentation p = patch(x);
  const int n = x.size();
  std::vector<std::uint8_t> rel(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rel[static_cast<std::size_t>(i) * n + j] = x.leq(i, j);
  // The order of X as an endo-relation on the discrete patch space; the
  // inclusion's graphs split it through X itself.
  SplitTriple triple{Distributor::from_matrix(p.space, p.space, std::move(rel)), x,
                     graph_lower(p.inclusion), graph_upper(p.inclusion)};
  if (auto violation = split_triple_violation(triple))
    fail(errc::internal_verification_failure,
         "patch-space splitting verification failed: " + *violation);
  return triple;
}

int coheyting_via_split(const Booleanization& b, int x, int y) {
  std::uint64_t universe = b.irreducible_indices.empty()
                               ? 0
                               : (std::uint64_t{1} << b.irreducible_indices.size()) - 1;
  std::uint64_t mx = b.boole.sets[static_cast<std::size_t>(b.embed(x))];
  std::uint64_t my = b.boole.sets[static_cast<std::size_t>(b.embed(y))];
  // Boolean subtraction is meet with the complement.
  return b.retract(b.boole.index_of_set(my & ~mx & universe));
}

int coheyting_via_split(const FinDistLattice& l, int x, int y, const SizeLimits& limits) {
  return coheyting_via_split(booleanize(l, limits), x, y);
}

PMorphismReport p_morphism_check(const MonotoneMap& g) {
  PMorphismReport report;
  for (int x = 0; x < g.source().size(); ++x)
    for (int y = 0; y < g.target().size(); ++y) {
      if (!g.target().leq(g(x), y)) continue;
      bool lifted = false;
      for (int x2 = 0; x2 < g.source().size() && !lifted; ++x2)
        if (g.source().leq(x, x2) && g(x2) == y) lifted = true;
      if (!lifted) {
        report.witness = {x, y};
        return report;
      }
    }
  report.is_p_morphism = true;
  return report;
}

PreservationReport coheyting_preservation_check(const Hemimorphism& f) {
  if (!f.is_homomorphism())
    fail(errc::not_a_homomorphism,
         "subtraction preservation is only defined for lattice homomorphisms");
  PreservationReport report;
  const FinDistLattice& l2 = f.source();
  const FinDistLattice& l1 = f.target();
  for (int x = 0; x < l2.size(); ++x)
    for (int y = 0; y < l2.size(); ++y)
      if (f(coheyting_subtract_bruteforce(l2, x, y)) !=
          coheyting_subtract_bruteforce(l1, f(x), f(y))) {
        report.witness = {x, y};
        return report;
      }
  report.preserves_subtraction = true;
  return report;
}

}  // namespace finord
