#include "finord/birkhoff.hpp"

#include <doctest.h>

#include "support/oracles.hpp"

using namespace finord;

namespace {

FinitePoset chain(std::vector<std::string> labels) { return FinitePoset::chain(std::move(labels)); }

}  // namespace

TEST_CASE("down-set lattice of small posets") {
  DownsetLattice trivial = downset_lattice(FinitePoset());
  CHECK(trivial.lattice.size() == 1);
  CHECK(trivial.lattice.bottom() == trivial.lattice.top());

  DownsetLattice three = downset_lattice(chain({"a", "b"}));
  CHECK(three.lattice.size() == 3);
  CHECK(three.lattice.order().labels() ==
        std::vector<std::string>{"{}", "{a}", "{a,b}"});

  DownsetLattice square = downset_lattice(FinitePoset::discrete({"a", "b"}));
  CHECK(square.lattice.size() == 4);
}

TEST_CASE("down-set lattice agrees with the subset filter and the bound scan") {
  for (int n = 0; n <= 3; ++n)
    for (const FinitePoset& p : enumerate_posets(n)) {
      DownsetLattice d = downset_lattice(p);
      std::vector<std::uint64_t> expected = oracles::naive_down_sets(p);
      std::vector<std::uint64_t> got = d.sets;
      std::sort(got.begin(), got.end());
      std::sort(expected.begin(), expected.end());
      CHECK(got == expected);

      // The union/intersection tables must be exactly the bounds of the
      // inclusion order.
      FinDistLattice revalidated = FinDistLattice::from_poset(d.lattice.order());
      CHECK(revalidated == d.lattice);
    }
}

TEST_CASE("down-set lattice size guards") {
  std::vector<std::string> labels;
  for (int i = 0; i < 17; ++i) labels.push_back("e" + std::to_string(i));
  CHECK_THROWS_AS(downset_lattice(FinitePoset::chain(labels)), error);

  SizeLimits tight;
  tight.max_elements = 4;
  CHECK_THROWS_AS(downset_lattice(FinitePoset::discrete({"a", "b", "c"}), tight), error);

  // The Booleanization guard keys on the number of irreducibles.
  std::vector<std::string> long_chain;
  for (int i = 0; i < 18; ++i) long_chain.push_back("c" + std::to_string(i));
  FinDistLattice big = FinDistLattice::from_poset(FinitePoset::chain(long_chain));
  CHECK_THROWS_AS(booleanize(big), error);
}

TEST_CASE("colliding subset labels are rejected") {
  // {"a","b"} and {"a,b"} would both print as {a,b}.
  FinitePoset tricky = FinitePoset::discrete({"a,b", "a", "b"});
  try {
    downset_lattice(tricky);
    FAIL("expected a label collision error");
  } catch (const error& e) {
    CHECK(e.code() == errc::duplicate_label);
  }
}

TEST_CASE("duality unit on small lattices") {
  BirkhoffUnit trivial = spec_unit(FinDistLattice::from_poset(chain({"x"})));
  CHECK(trivial.iso.target.size() == 1);

  BirkhoffUnit unit = spec_unit(FinDistLattice::from_poset(chain({"0", "1", "2"})));
  CHECK(unit.irreducibles.labels() == std::vector<std::string>{"1", "2"});
  CHECK(unit.iso.target.label(unit.iso.forward[0]) == "{}");
  CHECK(unit.iso.target.label(unit.iso.forward[1]) == "{1}");
  CHECK(unit.iso.target.label(unit.iso.forward[2]) == "{1,2}");

  FinDistLattice b2 = downset_lattice(FinitePoset::discrete({"p", "q"})).lattice;
  BirkhoffUnit atoms = spec_unit(b2);
  CHECK(atoms.irreducibles.size() == 2);
  CHECK_FALSE(atoms.irreducibles.leq(0, 1));
}

TEST_CASE("duality counit on small posets") {
  BirkhoffCounit singleton = spec_counit(FinitePoset::from_pairs({"x"}, {}));
  CHECK(singleton.iso.target.size() == 1);

  BirkhoffCounit two = spec_counit(chain({"a", "b"}));
  CHECK(two.iso.target.labels() == std::vector<std::string>{"{a}", "{a,b}"});

  BirkhoffCounit discrete = spec_counit(FinitePoset::discrete({"a", "b"}));
  CHECK_FALSE(discrete.iso.target.leq(0, 1));
  CHECK_FALSE(discrete.iso.target.leq(1, 0));
}

TEST_CASE("round trip is an isomorphism on all posets up to 3") {
  for (int n = 0; n <= 3; ++n)
    for (const FinitePoset& p : enumerate_posets(n)) {
      BirkhoffCounit counit = spec_counit(p);  // construction verifies the iso
      CHECK(counit.iso.target.size() == p.size());
      BirkhoffUnit unit = spec_unit(counit.downsets.lattice);
      CHECK(unit.iso.target.size() == counit.downsets.lattice.size());
    }
}

TEST_CASE("patch discretises and is idempotent") {
  FinitePoset antichain = FinitePoset::discrete({"a", "b", "c"});
  PatchPresentation same = patch(antichain);
  CHECK(same.space == antichain);

  PatchPresentation chain_patch = patch(chain({"a", "b", "c"}));
  CHECK(chain_patch.space == antichain);
  CHECK(chain_patch.inclusion.assignment() == std::vector<int>{0, 1, 2});

  CHECK(patch(chain_patch.space).space == chain_patch.space);
}

TEST_CASE("booleanization of a 3-chain") {
  Booleanization b = booleanize(FinDistLattice::from_poset(chain({"0", "1", "2"})));
  CHECK(b.boole.lattice.size() == 4);
  CHECK(b.embed.is_homomorphism());

  // embed: 0 -> {}, 1 -> {1}, 2 -> {1,2}
  CHECK(b.boole.lattice.label(b.embed(0)) == "{}");
  CHECK(b.boole.lattice.label(b.embed(1)) == "{1}");
  CHECK(b.boole.lattice.label(b.embed(2)) == "{1,2}");

  // retract: {} -> 0, {1} -> 1, {2} -> 2, {1,2} -> 2, cross-checked against
  // the least-element description min{a : S <= embed(a)}.
  for (int s = 0; s < b.boole.lattice.size(); ++s) {
    int expected = -1;
    for (int a = 0; a < b.base.size(); ++a)
      if (b.boole.lattice.leq(s, b.embed(a)) && (expected < 0 || b.base.leq(a, expected)))
        expected = a;
    CHECK(b.retract(s) == expected);
  }
  CHECK(b.base.label(b.retract(b.boole.lattice.index_of("{2}"))) == "2");
  CHECK(b.base.label(b.retract(b.boole.lattice.index_of("{1,2}"))) == "2");

  // The retraction fails to preserve meets: {1} and {2} meet at the bottom
  // but their images meet at 1.
  int s1 = b.boole.lattice.index_of("{1}");
  int s2 = b.boole.lattice.index_of("{2}");
  CHECK(b.retract(b.boole.lattice.meet(s1, s2)) == 0);
  CHECK(b.base.meet(b.retract(s1), b.retract(s2)) == 1);
  CHECK_FALSE(b.retract.preserves_meets());
}

TEST_CASE("booleanization is a fixed point on Boolean algebras") {
  FinDistLattice square = downset_lattice(FinitePoset::discrete({"p", "q"})).lattice;
  Booleanization b = booleanize(square);
  CHECK(b.boole.lattice.size() == square.size());
  for (int a = 0; a < square.size(); ++a) CHECK(b.retract(b.embed(a)) == a);

  Booleanization trivial = booleanize(FinDistLattice::from_poset(chain({"x"})));
  CHECK(trivial.boole.lattice.size() == 1);
}

TEST_CASE("booleanization laws on all down-set lattices up to 3") {
  for (int n = 0; n <= 3; ++n)
    for (const FinitePoset& p : enumerate_posets(n)) {
      FinDistLattice l = downset_lattice(p).lattice;
      Booleanization b = booleanize(l);  // construction verifies the laws

      // Every element of the Booleanization is complemented.
      const FinDistLattice& bl = b.boole.lattice;
      for (int x = 0; x < bl.size(); ++x) {
        bool complemented = false;
        for (int y = 0; y < bl.size() && !complemented; ++y)
          complemented = bl.join(x, y) == bl.top() && bl.meet(x, y) == bl.bottom();
        CHECK(complemented);
      }

      // Irreducibles of a Boolean algebra form an antichain of log2 size.
      std::vector<int> atoms = join_irreducible_indices(bl);
      CHECK((std::size_t{1} << atoms.size()) == static_cast<std::size_t>(bl.size()));
      for (int a : atoms)
        for (int c : atoms)
          if (a != c) CHECK_FALSE(bl.leq(a, c));
    }
}

TEST_CASE("preimage homomorphism of a monotone map") {
  FinitePoset two = chain({"a", "b"});
  DownsetLattice d = downset_lattice(two);
  Hemimorphism id = preimage_homomorphism(MonotoneMap::identity(two), d, d);
  CHECK(id.assignment() == std::vector<int>{0, 1, 2});
  CHECK(id.is_homomorphism());

  // Constant-at-bottom map: both points land in every down-set containing a,
  // so {a} pulls back to the whole carrier.
  MonotoneMap to_bottom = MonotoneMap::constant(two, two, 0);
  Hemimorphism h = preimage_homomorphism(to_bottom, d, d);
  CHECK(h.assignment() == std::vector<int>{0, 2, 2});
  CHECK(h.is_homomorphism());
}
