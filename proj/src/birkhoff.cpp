#include "finord/birkhoff.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace finord {

int DownsetLattice::index_of_set(std::uint64_t mask) const {
  auto it = lookup.find(mask);
  if (it == lookup.end())
    fail(errc::internal_verification_failure, "subset is not an element of the lattice");
  return it->second;
}

std::string set_label(const FinitePoset& base, std::uint64_t mask) {
  std::vector<std::string> members;
  for (int i = 0; i < base.size(); ++i)
    if (mask >> i & 1) members.push_back(base.label(i));
  std::sort(members.begin(), members.end());
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += members[i];
  }
  out += "}";
  return out;
}

namespace {

struct SubsetFamily {
  std::vector<std::uint64_t> masks;  // sorted canonically
  std::vector<std::string> labels;
};

// Enumerates the down-sets (or up-sets) of `p`, sorted by size then label.
SubsetFamily enumerate_closed_subsets(const FinitePoset& p, bool down,
                                      const SizeLimits& limits, const char* what) {
  const int n = p.size();
  if (n > limits.max_base || n > 24) {
    std::ostringstream msg;
    msg << what << ": carrier of size " << n << " exceeds the bound " << std::min(limits.max_base, 24);
    fail(errc::size_overflow, msg.str());
  }
  std::vector<std::uint64_t> closures(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    closures[static_cast<std::size_t>(i)] = down ? p.down_mask_of(i) : p.up_mask_of(i);

  SubsetFamily family;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool closed = true;
    for (int i = 0; i < n && closed; ++i)
      if ((mask >> i & 1) && (closures[static_cast<std::size_t>(i)] & ~mask)) closed = false;
    if (!closed) continue;
    family.masks.push_back(mask);
    if (static_cast<long>(family.masks.size()) > limits.max_elements) {
      std::ostringstream msg;
      msg << what << ": more than " << limits.max_elements << " elements";
      fail(errc::size_overflow, msg.str());
    }
  }

  std::vector<std::pair<std::pair<int, std::string>, std::uint64_t>> keyed;
  keyed.reserve(family.masks.size());
  for (std::uint64_t mask : family.masks)
    keyed.push_back({{std::popcount(mask), set_label(p, mask)}, mask});
  std::sort(keyed.begin(), keyed.end());
  family.masks.clear();
  for (auto& [key, mask] : keyed) {
    family.masks.push_back(mask);
    family.labels.push_back(std::move(key.second));
  }
  {
    std::set<std::string> seen;
    for (const auto& l : family.labels)
      if (!seen.insert(l).second)
        fail(errc::duplicate_label,
             "subset labels collide at " + l + "; rename the base elements", {l});
  }
  return family;
}

FinitePoset inclusion_poset(const SubsetFamily& family, bool reverse) {
  const int m = static_cast<int>(family.masks.size());
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      std::uint64_t a = family.masks[static_cast<std::size_t>(i)];
      std::uint64_t b = family.masks[static_cast<std::size_t>(j)];
      bool below = reverse ? (b & ~a) == 0 : (a & ~b) == 0;
      leq[static_cast<std::size_t>(i) * m + j] = below;
    }
  return FinitePoset::from_leq_matrix(family.labels, std::move(leq));
}

}  // namespace

DownsetLattice downset_lattice(const FinitePoset& p, const SizeLimits& limits) {
  SubsetFamily family = enumerate_closed_subsets(p, /*down=*/true, limits, "down-set lattice");
  const int m = static_cast<int>(family.masks.size());

  std::unordered_map<std::uint64_t, int> lookup;
  for (int i = 0; i < m; ++i) lookup.emplace(family.masks[static_cast<std::size_t>(i)], i);

  std::vector<int> join(static_cast<std::size_t>(m) * m);
  std::vector<int> meet(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      join[static_cast<std::size_t>(i) * m + j] =
          lookup.at(family.masks[static_cast<std::size_t>(i)] |
                    family.masks[static_cast<std::size_t>(j)]);
      meet[static_cast<std::size_t>(i) * m + j] =
          lookup.at(family.masks[static_cast<std::size_t>(i)] &
                    family.masks[static_cast<std::size_t>(j)]);
    }
  int bottom = lookup.at(0);
  std::uint64_t full = p.size() == 0 ? 0 : (std::uint64_t{1} << p.size()) - 1;
  int top = lookup.at(full);

  FinitePoset order = inclusion_poset(family, /*reverse=*/false);
  DownsetLattice out{FinDistLattice::from_parts(std::move(order), std::move(join),
                                                std::move(meet), bottom, top),
                     p, std::move(family.masks), {}};
  out.lookup = std::move(lookup);
  return out;
}

BirkhoffUnit spec_unit(const FinDistLattice& l, const SizeLimits& limits) {
  std::vector<int> irr = join_irreducible_indices(l);
  FinitePoset irr_poset = l.order().restricted_to(irr);
  DownsetLattice down = downset_lattice(irr_poset, limits);

  const int n = l.size();
  std::vector<int> forward(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < irr.size(); ++k)
      if (l.leq(irr[k], a)) mask |= std::uint64_t{1} << k;
    forward[static_cast<std::size_t>(a)] = down.index_of_set(mask);
  }

  const int m = down.lattice.size();
  std::vector<int> inverse(static_cast<std::size_t>(m));
  for (int b = 0; b < m; ++b) {
    std::vector<int> members;
    for (std::size_t k = 0; k < irr.size(); ++k)
      if (down.sets[static_cast<std::size_t>(b)] >> k & 1) members.push_back(irr[k]);
    inverse[static_cast<std::size_t>(b)] = l.join_of(members);
  }

  if (n != m)
    fail(errc::internal_verification_failure, "duality unit: carrier sizes differ");
  for (int a = 0; a < n; ++a)
    if (inverse[static_cast<std::size_t>(forward[static_cast<std::size_t>(a)])] != a)
      fail(errc::internal_verification_failure,
           "duality unit is not injective at " + l.label(a));
  for (int b = 0; b < m; ++b)
    if (forward[static_cast<std::size_t>(inverse[static_cast<std::size_t>(b)])] != b)
      fail(errc::internal_verification_failure,
           "duality unit is not surjective at " + down.lattice.label(b));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto f = [&](int x) { return forward[static_cast<std::size_t>(x)]; };
      if (f(l.join(a, b)) != down.lattice.join(f(a), f(b)) ||
          f(l.meet(a, b)) != down.lattice.meet(f(a), f(b)))
        fail(errc::internal_verification_failure,
             "duality unit does not preserve the operations at {" + l.label(a) + ", " +
                 l.label(b) + "}");
    }

  return BirkhoffUnit{LatticeIso{l, down.lattice, std::move(forward), std::move(inverse)},
                      std::move(irr_poset), std::move(irr), std::move(down)};
}

BirkhoffCounit spec_counit(const FinitePoset& p, const SizeLimits& limits) {
  DownsetLattice down = downset_lattice(p, limits);
  std::vector<int> irr = join_irreducible_indices(down.lattice);
  FinitePoset irr_poset = down.lattice.order().restricted_to(irr);

  const int n = p.size();
  if (static_cast<int>(irr.size()) != n)
    fail(errc::internal_verification_failure,
         "duality counit: irreducible count differs from the carrier size");

  std::vector<int> forward(static_cast<std::size_t>(n));
  std::vector<int> inverse(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    int principal = down.index_of_set(p.down_mask_of(x));
    auto pos = std::find(irr.begin(), irr.end(), principal);
    if (pos == irr.end())
      fail(errc::internal_verification_failure,
           "principal down-set of " + p.label(x) + " is not join-irreducible");
    forward[static_cast<std::size_t>(x)] = static_cast<int>(pos - irr.begin());
    inverse[static_cast<std::size_t>(pos - irr.begin())] = x;
  }
  for (int k = 0; k < n; ++k)
    if (inverse[static_cast<std::size_t>(k)] < 0)
      fail(errc::internal_verification_failure,
           "join-irreducible down-set " + irr_poset.label(k) + " is not principal");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p.leq(x, y) != irr_poset.leq(forward[static_cast<std::size_t>(x)],
                                       forward[static_cast<std::size_t>(y)]))
        fail(errc::internal_verification_failure,
             "duality counit does not preserve the order at (" + p.label(x) + ", " + p.label(y) +
                 ")");

  return BirkhoffCounit{PosetIso{p, std::move(irr_poset), std::move(forward), std::move(inverse)},
                        std::move(down)};
}

PatchPresentation patch(const FinitePoset& p) {
  FinitePoset space = FinitePoset::discrete(p.labels());
  std::vector<int> id(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) id[static_cast<std::size_t>(i)] = i;
  return PatchPresentation{space, MonotoneMap(space, p, std::move(id))};
}

Booleanization booleanize(const FinDistLattice& l, const SizeLimits& limits) {
  std::vector<int> irr = join_irreducible_indices(l);
  FinitePoset discrete_irr = FinitePoset::discrete(l.order().restricted_to(irr).labels());
  DownsetLattice powerset = downset_lattice(discrete_irr, limits);

  const int n = l.size();
  std::vector<int> embed(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < irr.size(); ++k)
      if (l.leq(irr[k], a)) mask |= std::uint64_t{1} << k;
    embed[static_cast<std::size_t>(a)] = powerset.index_of_set(mask);
  }
  const int m = powerset.lattice.size();
  std::vector<int> retract(static_cast<std::size_t>(m));
  for (int b = 0; b < m; ++b) {
    std::vector<int> members;
    for (std::size_t k = 0; k < irr.size(); ++k)
      if (powerset.sets[static_cast<std::size_t>(b)] >> k & 1) members.push_back(irr[k]);
    retract[static_cast<std::size_t>(b)] = l.join_of(members);
  }

  Hemimorphism embed_h = Hemimorphism::check(l, powerset.lattice, embed);
  Hemimorphism retract_h = Hemimorphism::check(powerset.lattice, l, retract);

  if (!embed_h.is_homomorphism())
    fail(errc::internal_verification_failure, "Boolean embedding is not a homomorphism");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (embed_h(a) == embed_h(b))
        fail(errc::internal_verification_failure, "Boolean embedding is not injective");
  for (int a = 0; a < n; ++a)
    if (retract_h(embed_h(a)) != a)
      fail(errc::internal_verification_failure,
           "Boolean retraction does not split the embedding at " + l.label(a));
  for (int b = 0; b < m; ++b)
    for (int a = 0; a < n; ++a) {
      bool lhs = l.leq(retract_h(b), a);
      bool rhs = powerset.lattice.leq(b, embed_h(a));
      if (lhs != rhs)
        fail(errc::internal_verification_failure,
             "Boolean retraction is not left adjoint to the embedding at (" +
                 powerset.lattice.label(b) + ", " + l.label(a) + ")");
    }

  return Booleanization{l, std::move(powerset), std::move(embed_h), std::move(retract_h),
                        std::move(irr)};
}

Hemimorphism preimage_homomorphism(const MonotoneMap& g, const DownsetLattice& target_downsets,
                                   const DownsetLattice& source_downsets) {
  if (g.target() != target_downsets.base || g.source() != source_downsets.base)
    fail(errc::object_mismatch, "preimage homomorphism: posets do not match the map");
  const int m = target_downsets.lattice.size();
  std::vector<int> assignment(static_cast<std::size_t>(m));
  for (int b = 0; b < m; ++b) {
    std::uint64_t preimage = 0;
    for (int x = 0; x < g.source().size(); ++x)
      if (target_downsets.sets[static_cast<std::size_t>(b)] >> g(x) & 1)
        preimage |= std::uint64_t{1} << x;
    assignment[static_cast<std::size_t>(b)] = source_downsets.index_of_set(preimage);
  }
  return Hemimorphism::check(target_downsets.lattice, source_downsets.lattice,
                             std::move(assignment));
}

}  // namespace finord
