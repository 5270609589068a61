#include "finord/lattice.hpp"

#include <doctest.h>

#include "finord/birkhoff.hpp"
#include "support/oracles.hpp"

using namespace finord;

namespace {

FinitePoset pentagon() {
  // N5: bot < a < c < top, bot < b < top, b incomparable to a and c.
  return FinitePoset::from_pairs({"bot", "a", "b", "c", "top"},
                                 {{"bot", "a"}, {"a", "c"}, {"c", "top"}, {"bot", "b"},
                                  {"b", "top"}});
}

FinitePoset diamond() {
  // M3: bot < a,b,c < top with a, b, c pairwise incomparable.
  return FinitePoset::from_pairs({"bot", "a", "b", "c", "top"},
                                 {{"bot", "a"}, {"bot", "b"}, {"bot", "c"}, {"a", "top"},
                                  {"b", "top"}, {"c", "top"}});
}

FinDistLattice chain_lattice(std::vector<std::string> labels) {
  return FinDistLattice::from_poset(FinitePoset::chain(std::move(labels)));
}

FinDistLattice b2() {
  return FinDistLattice::from_poset(FinitePoset::from_pairs(
      {"bot", "p", "q", "top"}, {{"bot", "p"}, {"bot", "q"}, {"p", "top"}, {"q", "top"}}));
}

}  // namespace

TEST_CASE("lattice tables agree with the direct bound scan") {
  FinDistLattice grid = FinDistLattice::from_poset(FinitePoset::from_pairs(
      {"00", "01", "10", "11"}, {{"00", "01"}, {"00", "10"}, {"01", "11"}, {"10", "11"}}));
  for (int x = 0; x < grid.size(); ++x)
    for (int y = 0; y < grid.size(); ++y) {
      CHECK(grid.join(x, y) == oracles::naive_lub(grid.order(), x, y));
      CHECK(grid.meet(x, y) == oracles::naive_glb(grid.order(), x, y));
    }
  CHECK(grid.label(grid.bottom()) == "00");
  CHECK(grid.label(grid.top()) == "11");
}

TEST_CASE("trivial lattice has equal bounds") {
  FinDistLattice trivial = chain_lattice({"x"});
  CHECK(trivial.bottom() == trivial.top());
}

TEST_CASE("missing bounds are rejected") {
  CHECK_THROWS_AS(FinDistLattice::from_poset(FinitePoset()), error);
  try {
    FinDistLattice::from_poset(FinitePoset::discrete({"a", "b"}));
    FAIL("expected a lattice error");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_a_lattice);
    CHECK(e.witness().size() == 2);
  }
}

TEST_CASE("pentagon and diamond are rejected with a witness") {
  try {
    FinDistLattice::from_poset(pentagon());
    FAIL("expected a distributivity error");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_distributive);
    REQUIRE(e.witness().size() == 5);
    // The witness must really be a pentagon in the order: re-check the
    // defining relations from scratch.
    const FinitePoset p = pentagon();
    int m = p.index_of(e.witness()[0]), a = p.index_of(e.witness()[1]),
        c = p.index_of(e.witness()[2]), b = p.index_of(e.witness()[3]),
        j = p.index_of(e.witness()[4]);
    CHECK(p.less(a, c));
    CHECK(oracles::naive_lub(p, a, b) == j);
    CHECK(oracles::naive_lub(p, c, b) == j);
    CHECK(oracles::naive_glb(p, a, b) == m);
    CHECK(oracles::naive_glb(p, c, b) == m);
  }

  try {
    FinDistLattice::from_poset(diamond());
    FAIL("expected a distributivity error");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_distributive);
    REQUIRE(e.witness().size() == 5);
    const FinitePoset p = diamond();
    int a = p.index_of(e.witness()[1]), b = p.index_of(e.witness()[2]),
        c = p.index_of(e.witness()[3]);
    CHECK(oracles::naive_lub(p, a, b) == oracles::naive_lub(p, b, c));
    CHECK(oracles::naive_glb(p, a, b) == oracles::naive_glb(p, b, c));
  }
}

TEST_CASE("join irreducibles") {
  CHECK(join_irreducibles(chain_lattice({"0"})).empty());

  FinitePoset irr3 = join_irreducibles(chain_lattice({"0", "1", "2"}));
  CHECK(irr3.labels() == std::vector<std::string>{"1", "2"});
  CHECK(irr3.leq(0, 1));

  FinitePoset atoms = join_irreducibles(b2());
  CHECK(atoms.labels() == std::vector<std::string>{"p", "q"});
  CHECK_FALSE(atoms.leq(0, 1));
  CHECK_FALSE(atoms.leq(1, 0));

  // Independent scan: nothing in the result is a join of two strictly
  // smaller elements, and everything omitted (except bottom) is.
  for (int n = 1; n <= 3; ++n)
    for (const FinitePoset& p : enumerate_posets(n)) {
      DownsetLattice d = downset_lattice(p);
      std::vector<int> irr = join_irreducible_indices(d.lattice);
      for (int j = 0; j < d.lattice.size(); ++j) {
        bool reducible = false;
        for (int a = 0; a < d.lattice.size(); ++a)
          for (int b = 0; b < d.lattice.size(); ++b)
            if (a != j && b != j && d.lattice.join(a, b) == j) reducible = true;
        bool listed = std::find(irr.begin(), irr.end(), j) != irr.end();
        CHECK(listed == (!reducible && j != d.lattice.bottom()));
      }
    }
}

TEST_CASE("hemimorphism validation and flags") {
  FinDistLattice three = chain_lattice({"0", "1", "2"});

  Hemimorphism id = Hemimorphism::identity(three);
  CHECK(id.preserves_meets());
  CHECK(id.preserves_top());

  // Constant bottom map is sup-preserving but loses the top.
  Hemimorphism constant_bottom = Hemimorphism::check(three, three, {0, 0, 0});
  CHECK(constant_bottom.preserves_meets());
  CHECK_FALSE(constant_bottom.preserves_top());

  // Both atoms of B2 to the middle of a 3-chain, top to the middle as well:
  // a valid hemimorphism that preserves neither meets nor the top.
  FinDistLattice square = b2();
  Hemimorphism collapse = Hemimorphism::check(square, three,
                                              {0, 1, 1, 1});  // bot, p, q, top
  CHECK_FALSE(collapse.preserves_meets());
  CHECK_FALSE(collapse.preserves_top());

  // Sending the top strictly above the join of the two atom images is not
  // sup-preserving at {p, q}.
  try {
    Hemimorphism::check(square, three, {0, 1, 1, 2});
    FAIL("expected a sup-preservation error");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_sup_preserving);
    CHECK(e.witness() == std::vector<std::string>{"p", "q"});
  }

  CHECK_THROWS_AS(Hemimorphism::check(square, three, {1, 1, 1, 1}), error);
}

TEST_CASE("hemimorphism composition") {
  FinDistLattice three = chain_lattice({"0", "1", "2"});
  Hemimorphism drop = Hemimorphism::check(three, three, {0, 0, 1});
  Hemimorphism again = compose(drop, drop);
  CHECK(again.assignment() == std::vector<int>{0, 0, 0});
}

TEST_CASE("co-Heyting subtraction, brute force") {
  FinDistLattice three = chain_lattice({"0", "1", "2"});
  CHECK(coheyting_subtract_bruteforce(three, 1, 2) == 2);

  for (int n = 1; n <= 3; ++n)
    for (const FinitePoset& p : enumerate_posets(n)) {
      FinDistLattice l = downset_lattice(p).lattice;
      for (int x = 0; x < l.size(); ++x) {
        CHECK(coheyting_subtract_bruteforce(l, x, l.bottom()) == l.bottom());
        CHECK(coheyting_subtract_bruteforce(l, l.bottom(), x) == x);
      }
      // Adjunction law: y <= x v z iff subtract(x, y) <= z.
      for (int x = 0; x < l.size(); ++x)
        for (int y = 0; y < l.size(); ++y)
          for (int z = 0; z < l.size(); ++z)
            CHECK(l.leq(y, l.join(x, z)) ==
                  l.leq(coheyting_subtract_bruteforce(l, x, y), z));
    }
}
