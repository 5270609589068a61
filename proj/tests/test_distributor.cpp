#include "finord/distributor.hpp"

#include <doctest.h>

#include <random>
#include <set>

#include "finord/verify.hpp"
#include "support/oracles.hpp"

using namespace finord;

namespace {

FinitePoset chain2() { return FinitePoset::chain({"a", "b"}); }
FinitePoset chain2uv() { return FinitePoset::chain({"u", "v"}); }
FinitePoset antichain2() { return FinitePoset::discrete({"a", "b"}); }

std::vector<FinitePoset> posets_up_to(int max_n) {
  std::vector<FinitePoset> out;
  for (int n = 0; n <= max_n; ++n)
    for (FinitePoset& p : enumerate_posets(n)) out.push_back(std::move(p));
  return out;
}

}  // namespace

TEST_CASE("strict validation demands closed pair sets") {
  try {
    Distributor::validate_labels(chain2(), chain2uv(), {{"a", "u"}}, Distributor::Mode::strict);
    FAIL("expected a distributor error");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_a_distributor);
    CHECK(!e.witness().empty());
  }

  Distributor saturated = Distributor::validate_labels(chain2(), chain2uv(), {{"a", "u"}},
                                                       Distributor::Mode::closure);
  CHECK(saturated.at(0, 0));
  CHECK(saturated.at(0, 1));  // up-closed in the target
  CHECK_FALSE(saturated.at(1, 0));

  // Saturation of {(b, u)}: down-closure in the source adds the pairs at a.
  Distributor lower = Distributor::validate_labels(chain2(), chain2uv(), {{"b", "u"}},
                                                   Distributor::Mode::closure);
  CHECK(lower.at(0, 0));
  CHECK(lower.at(1, 1));

  CHECK(Distributor::empty(chain2(), chain2uv()) ==
        Distributor::validate(chain2(), chain2uv(), {}, Distributor::Mode::strict));
}

TEST_CASE("identity is the order relation") {
  Distributor diag = Distributor::identity(antichain2());
  CHECK(diag.at(0, 0));
  CHECK_FALSE(diag.at(0, 1));

  Distributor upper = Distributor::identity(chain2());
  CHECK(upper.at(0, 1));
  CHECK_FALSE(upper.at(1, 0));

  // The identity of the dual is the transpose of the identity.
  FinitePoset c3 = FinitePoset::chain({"a", "b", "c"});
  Distributor id = Distributor::identity(c3);
  Distributor id_dual = Distributor::identity(c3.dual());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(id_dual.at(i, j) == id.at(j, i));
}

TEST_CASE("composition: units, totality, associativity on small posets") {
  for (const FinitePoset& x : posets_up_to(2))
    for (const FinitePoset& y : posets_up_to(2))
      for (const Distributor& r : enumerate_distributors(x, y)) {
        CHECK(compose(Distributor::identity(x), r) == r);
        CHECK(compose(r, Distributor::identity(y)) == r);
      }

  FinitePoset a2 = antichain2();
  CHECK(compose(Distributor::total(a2, a2), Distributor::total(a2, a2)) ==
        Distributor::total(a2, a2));

  for (const FinitePoset& x : posets_up_to(1))
    for (const FinitePoset& y : posets_up_to(1))
      for (const FinitePoset& z : posets_up_to(2))
        for (const FinitePoset& w : posets_up_to(1))
          for (const Distributor& r : enumerate_distributors(x, y))
            for (const Distributor& s : enumerate_distributors(y, z))
              for (const Distributor& t : enumerate_distributors(z, w))
                CHECK(compose(compose(r, s), t) == compose(r, compose(s, t)));

  CHECK_THROWS_AS(compose(Distributor::identity(a2), Distributor::identity(chain2())), error);
}

TEST_CASE("graphs of monotone maps") {
  FinitePoset c2 = chain2();
  MonotoneMap id = MonotoneMap::identity(c2);
  CHECK(graph_lower(id) == Distributor::identity(c2));
  CHECK(graph_upper(id) == Distributor::identity(c2));

  FinitePoset point = FinitePoset::from_pairs({"*"}, {});
  MonotoneMap collapse = MonotoneMap::constant(antichain2(), point, 0);
  CHECK(graph_lower(collapse) == Distributor::total(antichain2(), point));
  CHECK(graph_upper(collapse) == Distributor::total(point, antichain2()));

  MonotoneMap to_top = MonotoneMap::constant(c2, c2, 1);
  Distributor lower = graph_lower(to_top);
  CHECK_FALSE(lower.at(0, 0));
  CHECK(lower.at(0, 1));
  CHECK(lower.at(1, 1));

  // Functoriality of the lower graph on all maps between posets up to 2.
  for (const FinitePoset& x : posets_up_to(2))
    for (const FinitePoset& y : posets_up_to(2))
      for (const MonotoneMap& f : enumerate_monotone_maps(x, y))
        for (const FinitePoset& z : posets_up_to(2))
          for (const MonotoneMap& g : enumerate_monotone_maps(y, z)) {
            CHECK(graph_lower(compose(f, g)) == compose(graph_lower(f), graph_lower(g)));
            CHECK(graph_upper(compose(f, g)) == compose(graph_upper(g), graph_upper(f)));
          }
}

TEST_CASE("adjunction check") {
  FinitePoset a2 = antichain2();
  CHECK(check_adjoint(Distributor::identity(a2), Distributor::identity(a2)).adjoint);

  AdjointReport bad = check_adjoint(Distributor::total(a2, a2), Distributor::total(a2, a2));
  CHECK_FALSE(bad.adjoint);
  REQUIRE(bad.counit_witness.has_value());
  CHECK(bad.counit_witness->first != bad.counit_witness->second);

  for (const FinitePoset& x : posets_up_to(2))
    for (const FinitePoset& y : posets_up_to(2))
      for (const MonotoneMap& f : enumerate_monotone_maps(x, y))
        CHECK(check_adjoint(graph_lower(f), graph_upper(f)).adjoint);
}

TEST_CASE("adjunctions come from maps") {
  FinitePoset trivial = FinitePoset::from_pairs({"*"}, {});
  MonotoneMap only = adjoint_to_map(Distributor::identity(trivial),
                                    Distributor::identity(trivial));
  CHECK(only == MonotoneMap::identity(trivial));

  for (const FinitePoset& x : posets_up_to(2))
    for (const FinitePoset& y : posets_up_to(2)) {
      for (const MonotoneMap& f : enumerate_monotone_maps(x, y))
        CHECK(adjoint_to_map(graph_lower(f), graph_upper(f)) == f);
      // Completeness: every adjoint pair of distributors is a graph pair.
      for (const Distributor& phi : enumerate_distributors(x, y))
        for (const Distributor& psi : enumerate_distributors(y, x)) {
          if (!check_adjoint(phi, psi).adjoint) continue;
          MonotoneMap f = adjoint_to_map(phi, psi);
          CHECK(graph_lower(f) == phi);
          CHECK(graph_upper(f) == psi);
        }
    }

  CHECK_THROWS_AS(adjoint_to_map(Distributor::total(antichain2(), antichain2()),
                                 Distributor::total(antichain2(), antichain2())),
                  error);
}

TEST_CASE("up-set space under reverse inclusion") {
  VietorisSpace none = vietoris(FinitePoset());
  CHECK(none.poset.size() == 1);

  std::vector<std::string> long_chain;
  for (int i = 0; i < 17; ++i) long_chain.push_back("c" + std::to_string(i));
  CHECK_THROWS_AS(vietoris(FinitePoset::chain(long_chain)), error);

  VietorisSpace point = vietoris(FinitePoset::from_pairs({"x"}, {}));
  CHECK(point.poset.labels() == std::vector<std::string>{"{x}", "{}"});
  CHECK(point.poset.leq(0, 1));

  VietorisSpace vc2 = vietoris(chain2());
  CHECK(vc2.poset.labels() == std::vector<std::string>{"{a,b}", "{b}", "{}"});
  CHECK(vc2.poset.leq(0, 1));
  CHECK(vc2.poset.leq(1, 2));
  // The empty set is the top element.
  CHECK(vc2.sets[2] == 0);
}

TEST_CASE("up-set functor action") {
  FinitePoset c2 = chain2();
  CHECK(vietoris_map(MonotoneMap::identity(c2)) == MonotoneMap::identity(vietoris(c2).poset));

  MonotoneMap to_top = MonotoneMap::constant(c2, c2, 1);
  MonotoneMap v = vietoris_map(to_top);
  VietorisSpace vc2 = vietoris(c2);
  CHECK(vc2.poset.label(v(vc2.index_of_set(0b11))) == "{b}");

  for (const FinitePoset& x : posets_up_to(2))
    for (const FinitePoset& y : posets_up_to(2))
      for (const MonotoneMap& f : enumerate_monotone_maps(x, y))
        for (const FinitePoset& z : posets_up_to(2))
          for (const MonotoneMap& g : enumerate_monotone_maps(y, z))
            CHECK(vietoris_map(compose(f, g)) == compose(vietoris_map(f), vietoris_map(g)));
}

TEST_CASE("monad structure values") {
  FinitePoset point = FinitePoset::from_pairs({"x"}, {});
  MonadStructure m1 = monad_structure(point);
  CHECK(m1.vx.poset.label(m1.unit(0)) == "{x}");

  MonadStructure m2 = monad_structure(chain2());
  CHECK(m2.vx.poset.label(m2.unit(0)) == "{a,b}");
  CHECK(m2.vx.poset.label(m2.unit(1)) == "{b}");

  // Multiplication on the three up-sets of V(point): {} and {{}} flatten to
  // the empty set, {{x},{}} to {x}.
  CHECK(m1.vvx.poset.size() == 3);
  for (int i = 0; i < 3; ++i) {
    std::uint64_t flattened = 0;
    for (int k = 0; k < m1.vx.poset.size(); ++k)
      if (m1.vvx.sets[static_cast<std::size_t>(i)] >> k & 1)
        flattened |= m1.vx.sets[static_cast<std::size_t>(k)];
    CHECK(m1.vx.sets[static_cast<std::size_t>(m1.mult(i))] == flattened);
  }
  CHECK(m1.vx.poset.label(m1.mult(m1.vvx.index_of_set(0))) == "{}");
  CHECK(m1.vx.poset.label(m1.mult(m1.vvx.poset.index_of("{{x},{}}"))) == "{x}");
}

TEST_CASE("monad laws and lax idempotency on small posets") {
  for (const FinitePoset& p : posets_up_to(2)) {
    CHECK_FALSE(monad_laws_violation(p).has_value());
    CHECK(kz_check(p));
  }
  CHECK(kz_check(FinitePoset()));
  CHECK(kz_check(chain2()));
  CHECK(kz_check(antichain2()));
}

TEST_CASE("transposes between relations and up-set valued maps") {
  FinitePoset c2 = chain2();
  VietorisSpace vc2 = vietoris(c2);

  // The transpose of the identity sends x to its principal up-set.
  MonotoneMap id_hat = kleisli_of(Distributor::identity(c2));
  CHECK(vc2.poset.label(id_hat(0)) == "{a,b}");
  CHECK(vc2.poset.label(id_hat(1)) == "{b}");

  // The empty relation transposes to the constant map at the top.
  MonotoneMap empty_hat = kleisli_of(Distributor::empty(c2, c2));
  CHECK(vc2.poset.label(empty_hat(0)) == "{}");
  CHECK(vc2.poset.label(empty_hat(1)) == "{}");

  for (const FinitePoset& x : posets_up_to(2))
    for (const FinitePoset& y : posets_up_to(2)) {
      VietorisSpace vy = vietoris(y);
      for (const Distributor& r : enumerate_distributors(x, y))
        CHECK(distributor_of_kleisli(kleisli_of(r), vy) == r);
    }
}

TEST_CASE("Kleisli composition matches relational composition") {
  for (const FinitePoset& x : posets_up_to(2))
    for (const FinitePoset& y : posets_up_to(2))
      for (const FinitePoset& z : posets_up_to(2)) {
        MonadStructure mz = monad_structure(z);
        for (const Distributor& r : enumerate_distributors(x, y))
          for (const Distributor& s : enumerate_distributors(y, z)) {
            MonotoneMap via_kleisli =
                compose(kleisli_of(r), compose(vietoris_map(kleisli_of(s)), mz.mult));
            CHECK(via_kleisli == kleisli_of(compose(r, s)));
          }
      }
}

TEST_CASE("sup-preserving dual of a relation") {
  FinitePoset a2 = antichain2();
  CHECK(halmos_dual(Distributor::identity(a2)) ==
        Hemimorphism::identity(downset_lattice(a2).lattice));

  // Total relation on a discrete 2-set: everything nonempty hits everything.
  DownsetLattice d = downset_lattice(a2);
  Hemimorphism h = halmos_dual(Distributor::total(a2, a2), d, d);
  for (int b = 0; b < d.lattice.size(); ++b)
    CHECK(h(b) == (d.sets[static_cast<std::size_t>(b)] == 0 ? d.lattice.bottom()
                                                            : d.lattice.top()));
}

TEST_CASE("dual equivalence on small posets") {
  for (const FinitePoset& x : posets_up_to(2))
    for (const FinitePoset& y : posets_up_to(2)) {
      DownsetLattice dx = downset_lattice(x);
      DownsetLattice dy = downset_lattice(y);

      // Round trip and injectivity on the relation side.
      std::vector<Distributor> relations = enumerate_distributors(x, y);
      std::set<std::vector<int>> dual_images;
      for (const Distributor& r : relations) {
        Hemimorphism h = halmos_dual(r, dy, dx);
        CHECK(halmos_inv(h, dy, dx) == r);
        dual_images.insert(h.assignment());
      }
      CHECK(dual_images.size() == relations.size());

      // Surjectivity: every sup-preserving map arises, by the monotone-map
      // description of hemimorphisms D(Y) -> D(X).
      std::size_t hemi_count = 0;
      for (const MonotoneMap& k : enumerate_monotone_maps(y, dx.lattice.order())) {
        std::vector<int> assignment(static_cast<std::size_t>(dy.lattice.size()));
        for (int b = 0; b < dy.lattice.size(); ++b) {
          std::uint64_t mask = 0;
          for (int yy = 0; yy < y.size(); ++yy)
            if (dy.sets[static_cast<std::size_t>(b)] >> yy & 1)
              mask |= dx.sets[static_cast<std::size_t>(k(yy))];
          assignment[static_cast<std::size_t>(b)] = dx.index_of_set(mask);
        }
        Hemimorphism h = Hemimorphism::check(dy.lattice, dx.lattice, assignment);
        ++hemi_count;
        CHECK(dual_images.count(h.assignment()) == 1);
        CHECK(halmos_dual(halmos_inv(h, dy, dx), dy, dx) == h);
      }
      CHECK(hemi_count == relations.size());

      // Contravariance against every third object of size up to 2.
      for (const FinitePoset& z : posets_up_to(2)) {
        DownsetLattice dz = downset_lattice(z);
        for (const Distributor& r : relations)
          for (const Distributor& s : enumerate_distributors(y, z))
            CHECK(halmos_dual(compose(r, s), dz, dx) ==
                  compose(halmos_dual(s, dz, dy), halmos_dual(r, dy, dx)));
      }
    }
}

TEST_CASE("dual and transpose round trips on random larger instances") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    FinitePoset x = checks::random_poset(4, rng);
    FinitePoset y = checks::random_poset(5, rng);
    Distributor r = checks::random_distributor(x, y, rng);

    DownsetLattice dx = downset_lattice(x);
    DownsetLattice dy = downset_lattice(y);
    CHECK(halmos_inv(halmos_dual(r, dy, dx), dy, dx) == r);

    VietorisSpace vy = vietoris(y);
    CHECK(distributor_of_kleisli(kleisli_of(r), vy) == r);
  }
}

TEST_CASE("downwards-open report is uniformly positive on finite carriers") {
  for (const FinitePoset& x : posets_up_to(2))
    for (const FinitePoset& y : posets_up_to(2))
      for (const MonotoneMap& f : enumerate_monotone_maps(x, y))
        CHECK(downwards_open_report(f).all());
}
