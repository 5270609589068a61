#include "finord/karoubi.hpp"

#include <doctest.h>

#include <random>

#include "finord/verify.hpp"
#include "support/oracles.hpp"

using namespace finord;

namespace {

FinitePoset antichain2() { return FinitePoset::discrete({"x", "y"}); }

Distributor relation_on(const FinitePoset& p, std::vector<std::uint8_t> rel) {
  return Distributor::from_matrix(p, p, std::move(rel));
}

}  // namespace

TEST_CASE("idempotence check") {
  FinitePoset a2 = antichain2();
  CHECK(is_idempotent(Distributor::identity(a2)));
  CHECK(is_idempotent(Distributor::total(a2, a2)));
  CHECK_FALSE(is_idempotent(relation_on(a2, {0, 1, 0, 0})));
  CHECK_THROWS_AS(is_idempotent(Distributor::total(a2, FinitePoset::chain({"a", "b"}))), error);
}

TEST_CASE("idempotent power") {
  FinitePoset a2 = antichain2();
  Distributor total = Distributor::total(a2, a2);
  CHECK(idempotent_power(total) == total);
  CHECK(idempotent_power(Distributor::identity(a2)) == Distributor::identity(a2));

  // A single off-diagonal pair squares to the empty relation.
  Distributor step = relation_on(a2, {0, 1, 0, 0});
  CHECK(idempotent_power(step) == Distributor::empty(a2, a2));

  // A 3-cycle on a discrete 3-set: the powers cycle with period 3 and the
  // idempotent among them is the identity.
  FinitePoset a3 = FinitePoset::discrete({"x", "y", "z"});
  Distributor cyc = relation_on(a3, {0, 1, 0, 0, 0, 1, 1, 0, 0});
  CHECK(idempotent_power(cyc) == Distributor::identity(a3));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    FinitePoset p = checks::random_poset(4, rng);
    Distributor r = checks::random_distributor(p, p, rng);
    CHECK(is_idempotent(idempotent_power(r)));
  }
}

TEST_CASE("splitting the identity recovers the poset") {
  for (int n = 0; n <= 3; ++n)
    for (const FinitePoset& p : enumerate_posets(n)) {
      SplitTriple triple = split_idempotent(Distributor::identity(p));
      CHECK(is_isomorphic(triple.mid, p));
      CHECK_FALSE(split_triple_violation(triple).has_value());
    }
}

TEST_CASE("splitting the total relation yields a point") {
  FinitePoset a2 = antichain2();
  SplitTriple triple = split_idempotent(Distributor::total(a2, a2));
  CHECK(triple.mid.size() == 1);
  CHECK(triple.forward == Distributor::total(a2, triple.mid));
  CHECK(triple.backward == Distributor::total(triple.mid, a2));
}

TEST_CASE("splitting an order relation on a discrete carrier") {
  FinitePoset a2 = antichain2();
  // {(x,x), (x,y), (y,y)}: the order of the 2-chain seen on the patch space.
  SplitTriple triple = split_idempotent(relation_on(a2, {1, 1, 0, 1}));
  CHECK(triple.mid.size() == 2);
  CHECK(is_isomorphic(triple.mid, FinitePoset::chain({"x", "y"})));
}

TEST_CASE("split rejects non-idempotents and mismatched endpoints") {
  FinitePoset a2 = antichain2();
  CHECK_THROWS_AS(split_idempotent(relation_on(a2, {0, 1, 0, 0})), error);
  try {
    split_idempotent(relation_on(a2, {0, 1, 0, 0}));
  } catch (const error& e) {
    CHECK(e.code() == errc::not_idempotent);
  }
}

TEST_CASE("splitting works on non-discrete carriers too") {
  FinitePoset c2 = FinitePoset::chain({"a", "b"});
  SplitTriple triple = split_idempotent(Distributor::identity(c2));
  CHECK(is_isomorphic(triple.mid, c2));

  // A non-identity idempotent on the chain: everything relates to the top.
  Distributor blur = Distributor::validate_labels(
      c2, c2, {{"a", "b"}, {"b", "b"}}, Distributor::Mode::closure);
  REQUIRE(is_idempotent(blur));
  SplitTriple t2 = split_idempotent(blur);
  CHECK_FALSE(split_triple_violation(t2).has_value());
  CHECK(t2.mid.size() == 1);

  // Random ordered carriers: the splitting equations must verify for every
  // idempotent reached via powers.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    FinitePoset p = checks::random_poset(4, rng);
    Distributor e = idempotent_power(checks::random_distributor(p, p, rng));
    SplitTriple t = split_idempotent(e);
    CHECK_FALSE(split_triple_violation(t).has_value());
  }
}

TEST_CASE("a corrupted triple is reported with a witness") {
  FinitePoset a2 = antichain2();
  SplitTriple triple = split_idempotent(relation_on(a2, {1, 1, 0, 1}));

  SplitTriple broken{triple.idem, triple.mid,
                     Distributor::total(a2, triple.mid),  // wrong leg on purpose
                     triple.backward};
  auto violation = split_triple_violation(broken);
  REQUIRE(violation.has_value());
  CHECK(violation->find("(") != std::string::npos);  // names a witnessing pair
}

TEST_CASE("brute-force minimal splitting agrees on tiny instances") {
  FinitePoset a2 = antichain2();
  auto minimal = checks::brute_force_minimal_split(Distributor::total(a2, a2), 2);
  REQUIRE(minimal.has_value());
  CHECK(minimal->mid.size() == 1);

  auto chain_like = checks::brute_force_minimal_split(relation_on(a2, {1, 1, 0, 1}), 2);
  REQUIRE(chain_like.has_value());
  CHECK(chain_like->mid.size() == 2);
  CHECK(is_isomorphic(chain_like->mid, FinitePoset::chain({"x", "y"})));

  auto empty_split = checks::brute_force_minimal_split(Distributor::empty(a2, a2), 2);
  REQUIRE(empty_split.has_value());
  CHECK(empty_split->mid.size() == 0);
}

TEST_CASE("patch-space presentation of a poset") {
  FinitePoset a3 = FinitePoset::discrete({"a", "b", "c"});
  SplitTriple discrete = esakia_split_presentation(a3);
  CHECK(discrete.idem == Distributor::identity(a3));
  CHECK(discrete.mid == a3);

  FinitePoset c2 = FinitePoset::chain({"a", "b"});
  SplitTriple chain_triple = esakia_split_presentation(c2);
  CHECK(chain_triple.idem.at(0, 1));
  CHECK_FALSE(chain_triple.idem.at(1, 0));
  CHECK(chain_triple.idem.source() == patch(c2).space);
  CHECK(chain_triple.mid == c2);

  for (int n = 0; n <= 3; ++n)
    for (const FinitePoset& p : enumerate_posets(n)) {
      SplitTriple triple = esakia_split_presentation(p);
      CHECK(is_isomorphic(split_idempotent(triple.idem).mid, p));
    }
}

TEST_CASE("subtraction through the Booleanization") {
  FinDistLattice three = FinDistLattice::from_poset(FinitePoset::chain({"0", "1", "2"}));
  Booleanization b = booleanize(three);
  CHECK(coheyting_via_split(b, 1, 2) == 2);
  for (int x = 0; x < three.size(); ++x) CHECK(coheyting_via_split(b, x, 0) == 0);

  // On the square, subtracting one atom from the other returns the latter.
  FinDistLattice square = downset_lattice(FinitePoset::discrete({"p", "q"})).lattice;
  Booleanization bs = booleanize(square);
  int p = square.index_of("{p}"), q = square.index_of("{q}");
  CHECK(coheyting_via_split(bs, p, q) == q);

  for (int n = 0; n <= 3; ++n)
    for (const FinitePoset& poset : enumerate_posets(n)) {
      FinDistLattice l = downset_lattice(poset).lattice;
      Booleanization bo = booleanize(l);
      for (int x = 0; x < l.size(); ++x)
        for (int y = 0; y < l.size(); ++y)
          CHECK(coheyting_via_split(bo, x, y) == coheyting_subtract_bruteforce(l, x, y));
    }
}

TEST_CASE("bounded-morphism condition") {
  FinitePoset c2 = FinitePoset::chain({"a", "b"});
  CHECK(p_morphism_check(MonotoneMap::identity(c2)).is_p_morphism);

  FinitePoset point = FinitePoset::from_pairs({"*"}, {});
  PMorphismReport bad = p_morphism_check(MonotoneMap::constant(point, c2, 0));
  CHECK_FALSE(bad.is_p_morphism);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->first == 0);
  CHECK(bad.witness->second == 1);  // the top has no preimage above the point

  // A surjective order isomorphism lifts everything.
  MonotoneMap swap(FinitePoset::discrete({"a", "b"}), FinitePoset::discrete({"u", "v"}),
                   {1, 0});
  CHECK(p_morphism_check(swap).is_p_morphism);
}

TEST_CASE("subtraction preservation mirrors the bounded-morphism condition") {
  FinitePoset c2 = FinitePoset::chain({"a", "b"});
  DownsetLattice d2 = downset_lattice(c2);
  CHECK(coheyting_preservation_check(Hemimorphism::identity(d2.lattice))
            .preserves_subtraction);

  // The dual of the point-to-bottom non-p-morphism fails at the mirrored pair.
  FinitePoset point = FinitePoset::from_pairs({"*"}, {});
  DownsetLattice dp = downset_lattice(point);
  MonotoneMap to_bottom = MonotoneMap::constant(point, c2, 0);
  Hemimorphism dual = preimage_homomorphism(to_bottom, d2, dp);
  PreservationReport report = coheyting_preservation_check(dual);
  CHECK_FALSE(report.preserves_subtraction);
  REQUIRE(report.witness.has_value());
  CHECK(d2.lattice.label(report.witness->first) == "{a}");
  CHECK(d2.lattice.label(report.witness->second) == "{a,b}");

  // Non-homomorphisms are rejected.
  FinDistLattice three = d2.lattice;
  Hemimorphism hemi_only = Hemimorphism::check(three, three, {0, 0, 1});
  CHECK_FALSE(hemi_only.preserves_top());
  CHECK_THROWS_AS(coheyting_preservation_check(hemi_only), error);
}

TEST_CASE("preservation equivalence across all maps between posets up to 2") {
  std::vector<FinitePoset> posets;
  for (int n = 0; n <= 2; ++n)
    for (FinitePoset& p : enumerate_posets(n)) posets.push_back(std::move(p));

  for (const FinitePoset& x1 : posets)
    for (const FinitePoset& x2 : posets) {
      DownsetLattice d1 = downset_lattice(x1);
      DownsetLattice d2 = downset_lattice(x2);
      for (const MonotoneMap& g : enumerate_monotone_maps(x1, x2)) {
        Hemimorphism f = preimage_homomorphism(g, d2, d1);
        CHECK(coheyting_preservation_check(f).preserves_subtraction ==
              p_morphism_check(g).is_p_morphism);
      }
    }
}
