#include "finord/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>

namespace finord {

namespace {

std::vector<FinitePoset> posets_up_to(int max_n) {
  std::vector<FinitePoset> out;
  for (int n = 0; n <= max_n; ++n)
    for (FinitePoset& p : enumerate_posets(n, std::max(5, max_n))) out.push_back(std::move(p));
  return out;
}

std::string describe(const FinitePoset& p) {
  std::ostringstream out;
  out << "poset on {";
  for (int i = 0; i < p.size(); ++i) {
    if (i) out << ",";
    out << p.label(i);
  }
  out << "} with covers";
  auto covers = p.hasse();
  if (covers.empty()) out << " (none)";
  for (auto [x, y] : covers) out << " " << p.label(x) << "<" << p.label(y);
  return out.str();
}

std::string describe_relation(const Distributor& r) {
  std::ostringstream out;
  out << "relation {";
  bool first = true;
  for (int x = 0; x < r.source().size(); ++x)
    for (int y = 0; y < r.target().size(); ++y)
      if (r.at(x, y)) {
        if (!first) out << ", ";
        out << "(" << r.source().label(x) << "," << r.target().label(y) << ")";
        first = false;
      }
  out << "} on " << describe(r.source());
  return out.str();
}

std::vector<std::uint64_t> rows_of(const Distributor& r) {
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(r.source().size()));
  for (int x = 0; x < r.source().size(); ++x) rows[static_cast<std::size_t>(x)] = r.row_mask(x);
  return rows;
}

std::vector<std::uint64_t> up_rows_of(const FinitePoset& p) {
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(p.size()));
  for (int x = 0; x < p.size(); ++x) rows[static_cast<std::size_t>(x)] = p.up_mask_of(x);
  return rows;
}

// Direct-indexed down-set lookup (mask -> lattice element, -1 elsewhere).
std::vector<int> mask_index_of(const DownsetLattice& d) {
  std::vector<int> table(std::size_t{1} << d.base.size(), -1);
  for (std::size_t i = 0; i < d.sets.size(); ++i) table[d.sets[i]] = static_cast<int>(i);
  return table;
}

}  // namespace

namespace checks {

Violation order_dual_involution(int max_n) {
  for (const FinitePoset& p : posets_up_to(max_n)) {
    FinitePoset d = p.dual();
    for (int i = 0; i < p.size(); ++i)
      for (int j = 0; j < p.size(); ++j)
        if (d.leq(i, j) != p.leq(j, i)) return "dual is not the transpose on " + describe(p);
    if (d.dual() != p) return "dual is not an involution on " + describe(p);
  }
  return std::nullopt;
}

Violation down_closure_operator(int max_n) {
  for (const FinitePoset& p : posets_up_to(std::min(max_n, 4))) {
    const std::uint64_t total = std::uint64_t{1} << p.size();
    for (std::uint64_t s = 0; s < total; ++s) {
      std::uint64_t c = p.down_closure_mask(s);
      if ((s & ~c) != 0) return "down-closure is not extensive on " + describe(p);
      if (p.down_closure_mask(c) != c) return "down-closure is not idempotent on " + describe(p);
      for (std::uint64_t t = 0; t < total; ++t)
        if ((s & ~t) == 0 && (c & ~p.down_closure_mask(t)) != 0)
          return "down-closure is not monotone on " + describe(p);
    }
  }
  return std::nullopt;
}

Violation hasse_regeneration(int max_n) {
  for (const FinitePoset& p : posets_up_to(max_n)) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (auto [x, y] : p.hasse()) pairs.emplace_back(p.label(x), p.label(y));
    if (FinitePoset::from_pairs(p.labels(), pairs) != p)
      return "cover pairs do not regenerate " + describe(p);
  }
  return std::nullopt;
}

Violation coheyting_adjunction_law(int max_n) {
  for (const FinitePoset& p : posets_up_to(max_n)) {
    FinDistLattice l = downset_lattice(p).lattice;
    for (int x = 0; x < l.size(); ++x)
      for (int y = 0; y < l.size(); ++y) {
        int s = coheyting_subtract_bruteforce(l, x, y);
        for (int z = 0; z < l.size(); ++z)
          if (l.leq(y, l.join(x, z)) != l.leq(s, z))
            return "adjunction law fails at (" + l.label(x) + ", " + l.label(y) + ", " +
                   l.label(z) + ") over " + describe(p);
      }
  }
  return std::nullopt;
}

Violation boolean_irreducibles_antichain(int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    FinDistLattice boolean = downset_lattice(FinitePoset::discrete(labels)).lattice;
    std::vector<int> atoms = join_irreducible_indices(boolean);
    if (static_cast<int>(atoms.size()) != n)
      return "powerset of " + std::to_string(n) + " has " + std::to_string(atoms.size()) +
             " irreducibles";
    for (int a : atoms)
      for (int b : atoms)
        if (a != b && boolean.leq(a, b))
          return "irreducibles of a powerset are not an antichain at n = " + std::to_string(n);
  }
  return std::nullopt;
}

Violation hemimorphism_flags(int max_n) {
  std::vector<FinitePoset> posets = posets_up_to(std::min(max_n, 2));
  for (const FinitePoset& x : posets)
    for (const FinitePoset& y : posets) {
      FinDistLattice src = downset_lattice(x).lattice;
      FinDistLattice dst = downset_lattice(y).lattice;
      std::vector<int> assignment(static_cast<std::size_t>(src.size()), 0);
      while (true) {
        bool sup_ok = assignment[static_cast<std::size_t>(src.bottom())] == dst.bottom();
        for (int a = 0; a < src.size() && sup_ok; ++a)
          for (int b = a; b < src.size() && sup_ok; ++b)
            if (assignment[static_cast<std::size_t>(src.join(a, b))] !=
                dst.join(assignment[static_cast<std::size_t>(a)],
                         assignment[static_cast<std::size_t>(b)]))
              sup_ok = false;
        bool accepted = true;
        try {
          Hemimorphism h = Hemimorphism::check(src, dst, assignment);
          bool meets = true;
          for (int a = 0; a < src.size() && meets; ++a)
            for (int b = a; b < src.size() && meets; ++b)
              if (assignment[static_cast<std::size_t>(src.meet(a, b))] !=
                  dst.meet(assignment[static_cast<std::size_t>(a)],
                           assignment[static_cast<std::size_t>(b)]))
                meets = false;
          if (h.preserves_meets() != meets ||
              h.preserves_top() != (assignment[static_cast<std::size_t>(src.top())] == dst.top()))
            return "cached flags disagree with recomputation";
        } catch (const error&) {
          accepted = false;
        }
        if (accepted != sup_ok) return "acceptance differs from direct sup-preservation";

        int pos = src.size() - 1;
        while (pos >= 0 && assignment[static_cast<std::size_t>(pos)] == dst.size() - 1) {
          assignment[static_cast<std::size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
        ++assignment[static_cast<std::size_t>(pos)];
      }
    }
  return std::nullopt;
}

Violation birkhoff_round_trip(int exhaustive_max, int sample_n, int sample_count,
                              std::mt19937_64& rng) {
  auto round_trip = [](const FinitePoset& p) -> Violation {
    try {
      BirkhoffCounit counit = spec_counit(p);
      spec_unit(counit.downsets.lattice);
    } catch (const error& e) {
      return std::string(e.what()) + " on " + describe(p);
    }
    return std::nullopt;
  };
  for (const FinitePoset& p : posets_up_to(exhaustive_max))
    if (auto violation = round_trip(p)) return violation;
  if (sample_count > 0) {
    std::vector<FinitePoset> pool = enumerate_posets(sample_n, std::max(5, sample_n));
    for (int i = 0; i < sample_count; ++i) {
      const FinitePoset& p =
          pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
      if (auto violation = round_trip(p)) return violation;
    }
  }
  return std::nullopt;
}

Violation booleanization_laws(int max_n) {
  for (const FinitePoset& p : posets_up_to(max_n)) {
    try {
      Booleanization b = booleanize(downset_lattice(p).lattice);
      const FinDistLattice& bl = b.boole.lattice;
      for (int e = 0; e < bl.size(); ++e) {
        bool complemented = false;
        for (int c = 0; c < bl.size() && !complemented; ++c)
          complemented = bl.join(e, c) == bl.top() && bl.meet(e, c) == bl.bottom();
        if (!complemented)
          return "Booleanization is not complemented at " + bl.label(e) + " over " + describe(p);
      }
    } catch (const error& e) {
      return std::string(e.what()) + " on " + describe(p);
    }
  }
  // Pinned witness that the retraction may lose meets: the 3-chain.
  Booleanization b = booleanize(FinDistLattice::from_poset(FinitePoset::chain({"0", "1", "2"})));
  int s1 = b.boole.lattice.index_of("{1}");
  int s2 = b.boole.lattice.index_of("{2}");
  if (b.retract(b.boole.lattice.meet(s1, s2)) == b.base.meet(b.retract(s1), b.retract(s2)))
    return "retraction unexpectedly preserves the witnessing meet on the 3-chain";
  if (b.retract.preserves_meets())
    return "retraction flags claim meet preservation on the 3-chain";
  return std::nullopt;
}

Violation category_laws(int max_n, int sampled_n, int sample_count, std::mt19937_64& rng) {
  // Identity neutrality is cheap enough to exhaust at the sampled bound;
  // associativity is exhausted on the small bound and sampled above it.
  for (const FinitePoset& x : posets_up_to(std::max(std::min(max_n, 2), sampled_n)))
    for (const FinitePoset& y : posets_up_to(std::max(std::min(max_n, 2), sampled_n)))
      for (const Distributor& r : enumerate_distributors(x, y))
        if (compose(Distributor::identity(x), r) != r ||
            compose(r, Distributor::identity(y)) != r)
          return "identity is not neutral for " + describe_relation(r);
  std::vector<FinitePoset> small = posets_up_to(std::min(max_n, 2));
  for (const FinitePoset& x : small)
    for (const FinitePoset& y : small)
      for (const FinitePoset& z : small)
        for (const FinitePoset& w : small)
          for (const Distributor& r : enumerate_distributors(x, y))
            for (const Distributor& s : enumerate_distributors(y, z))
              for (const Distributor& t : enumerate_distributors(z, w))
                if (compose(compose(r, s), t) != compose(r, compose(s, t)))
                  return "associativity fails for a triple on " + describe(x);

  if (sampled_n > std::min(max_n, 2) && sample_count > 0) {
    std::vector<FinitePoset> pool = posets_up_to(sampled_n);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < sample_count; ++i) {
      const FinitePoset& x = pool[pick(rng)];
      const FinitePoset& y = pool[pick(rng)];
      const FinitePoset& z = pool[pick(rng)];
      const FinitePoset& w = pool[pick(rng)];
      Distributor r = random_distributor(x, y, rng);
      Distributor s = random_distributor(y, z, rng);
      Distributor t = random_distributor(z, w, rng);
      if (compose(compose(r, s), t) != compose(r, compose(s, t)))
        return "associativity fails for a sampled triple on " + describe(x);
      if (compose(Distributor::identity(x), r) != r ||
          compose(r, Distributor::identity(y)) != r)
        return "identity is not neutral for " + describe_relation(r);
    }
  }
  return std::nullopt;
}

Violation graph_functoriality(int max_n) {
  std::vector<FinitePoset> posets = posets_up_to(max_n);
  for (const FinitePoset& x : posets)
    for (const FinitePoset& y : posets) {
      std::vector<MonotoneMap> first = enumerate_monotone_maps(x, y);
      if (first.empty()) continue;
      for (const FinitePoset& z : posets) {
        std::vector<MonotoneMap> second = enumerate_monotone_maps(y, z);
        for (const MonotoneMap& f : first)
          for (const MonotoneMap& g : second) {
            if (graph_lower(compose(f, g)) != compose(graph_lower(f), graph_lower(g)))
              return "lower graph is not functorial between " + describe(x) + " and " +
                     describe(z);
            if (graph_upper(compose(f, g)) != compose(graph_upper(g), graph_upper(f)))
              return "upper graph is not contravariantly functorial between " + describe(x) +
                     " and " + describe(z);
          }
      }
    }
  return std::nullopt;
}

Violation adjunction_soundness(int max_n) {
  std::vector<FinitePoset> posets = posets_up_to(max_n);
  for (const FinitePoset& x : posets)
    for (const FinitePoset& y : posets)
      for (const MonotoneMap& f : enumerate_monotone_maps(x, y))
        if (!check_adjoint(graph_lower(f), graph_upper(f)).adjoint)
          return "graph pair is not adjoint for a map " + describe(x) + " -> " + describe(y);
  return std::nullopt;
}

Violation adjunction_completeness(int max_n) {
  std::vector<FinitePoset> posets = posets_up_to(max_n);
  for (const FinitePoset& x : posets) {
    std::vector<std::uint64_t> up_x = up_rows_of(x);
    for (const FinitePoset& y : posets) {
      std::vector<std::uint64_t> up_y = up_rows_of(y);
      std::vector<Distributor> phis = enumerate_distributors(x, y);
      std::vector<Distributor> psis = enumerate_distributors(y, x);
      std::vector<std::vector<std::uint64_t>> phi_rows, psi_rows;
      phi_rows.reserve(phis.size());
      for (const Distributor& r : phis) phi_rows.push_back(rows_of(r));
      psi_rows.reserve(psis.size());
      for (const Distributor& r : psis) psi_rows.push_back(rows_of(r));

      for (std::size_t pi = 0; pi < phis.size(); ++pi)
        for (std::size_t qi = 0; qi < psis.size(); ++qi) {
          bool adjoint = true;
          for (int a = 0; a < x.size() && adjoint; ++a) {
            std::uint64_t row = 0;
            for (int b = 0; b < y.size(); ++b)
              if (phi_rows[pi][static_cast<std::size_t>(a)] >> b & 1)
                row |= psi_rows[qi][static_cast<std::size_t>(b)];
            if (up_x[static_cast<std::size_t>(a)] & ~row) adjoint = false;
          }
          for (int b = 0; b < y.size() && adjoint; ++b) {
            std::uint64_t row = 0;
            for (int a = 0; a < x.size(); ++a)
              if (psi_rows[qi][static_cast<std::size_t>(b)] >> a & 1)
                row |= phi_rows[pi][static_cast<std::size_t>(a)];
            if (row & ~up_y[static_cast<std::size_t>(b)]) adjoint = false;
          }
          if (!adjoint) continue;
          MonotoneMap f = adjoint_to_map(phis[pi], psis[qi]);
          if (graph_lower(f) != phis[pi] || graph_upper(f) != psis[qi])
            return "adjoint pair is not a graph pair for " + describe_relation(phis[pi]);
        }
    }
  }
  return std::nullopt;
}

Violation vietoris_functoriality(int max_n) {
  std::vector<FinitePoset> posets = posets_up_to(max_n);
  const std::size_t count = posets.size();
  std::vector<VietorisSpace> spaces;
  spaces.reserve(count);
  for (const FinitePoset& p : posets) spaces.push_back(vietoris(p));

  // Functor values per map, over the cached spaces.
  auto functor_assign = [&](std::size_t xi, std::size_t yi, const std::vector<int>& f) {
    std::vector<int> out(spaces[xi].sets.size());
    for (std::size_t i = 0; i < spaces[xi].sets.size(); ++i) {
      std::uint64_t image = 0;
      for (int a = 0; a < posets[xi].size(); ++a)
        if (spaces[xi].sets[i] >> a & 1)
          image |= std::uint64_t{1} << f[static_cast<std::size_t>(a)];
      out[i] = spaces[yi].index_of_set(posets[yi].up_closure_mask(image));
    }
    return out;
  };

  std::vector<std::vector<std::vector<std::vector<int>>>> maps(count);
  std::vector<std::vector<std::vector<std::vector<int>>>> functors(count);
  long cross_checked = 0;
  for (std::size_t xi = 0; xi < count; ++xi) {
    maps[xi].resize(count);
    functors[xi].resize(count);
    for (std::size_t yi = 0; yi < count; ++yi) {
      for (const MonotoneMap& f : enumerate_monotone_maps(posets[xi], posets[yi])) {
        std::vector<int> vf = functor_assign(xi, yi, f.assignment());
        // Cross-check the cached route against the public functor on a
        // deterministic sample.
        if (++cross_checked % 17 == 0 &&
            vietoris_map(f) != MonotoneMap(spaces[xi].poset, spaces[yi].poset, vf))
          return "cached functor value differs from the public one between " +
                 describe(posets[xi]) + " and " + describe(posets[yi]);
        maps[xi][yi].push_back(f.assignment());
        functors[xi][yi].push_back(std::move(vf));
      }
    }
    // The functor fixes identities.
    std::vector<int> id(static_cast<std::size_t>(posets[xi].size()));
    for (int i = 0; i < posets[xi].size(); ++i) id[static_cast<std::size_t>(i)] = i;
    std::vector<int> vid = functor_assign(xi, xi, id);
    for (std::size_t i = 0; i < vid.size(); ++i)
      if (vid[i] != static_cast<int>(i))
        return "functor does not fix the identity on " + describe(posets[xi]);
  }

  for (std::size_t xi = 0; xi < count; ++xi)
    for (std::size_t yi = 0; yi < count; ++yi)
      for (std::size_t zi = 0; zi < count; ++zi)
        for (std::size_t fi = 0; fi < maps[xi][yi].size(); ++fi)
          for (std::size_t gi = 0; gi < maps[yi][zi].size(); ++gi) {
            std::vector<int> composed(maps[xi][yi][fi].size());
            for (std::size_t a = 0; a < composed.size(); ++a)
              composed[a] = maps[yi][zi][gi][static_cast<std::size_t>(maps[xi][yi][fi][a])];
            std::vector<int> direct = functor_assign(xi, zi, composed);
            for (std::size_t i = 0; i < direct.size(); ++i)
              if (direct[i] !=
                  functors[yi][zi][gi][static_cast<std::size_t>(functors[xi][yi][fi][i])])
                return "functor does not preserve composition between " + describe(posets[xi]) +
                       " and " + describe(posets[zi]);
          }
  return std::nullopt;
}

Violation monad_laws(int max_n) {
  for (const FinitePoset& p : posets_up_to(max_n))
    if (auto violation = monad_laws_violation(p)) return *violation + " (" + describe(p) + ")";
  return std::nullopt;
}

Violation kz_inequality(int max_n) {
  for (const FinitePoset& p : posets_up_to(max_n))
    if (!kz_check(p)) return "lax idempotency fails on " + describe(p);
  return std::nullopt;
}

Violation kleisli_correspondence(int max_n) {
  std::vector<FinitePoset> posets = posets_up_to(std::min(max_n, 2));
  for (const FinitePoset& x : posets)
    for (const FinitePoset& y : posets) {
      VietorisSpace vy = vietoris(y);
      for (const Distributor& r : enumerate_distributors(x, y))
        if (distributor_of_kleisli(kleisli_of(r), vy) != r)
          return "transpose round trip fails for " + describe_relation(r);
    }
  for (const FinitePoset& x : posets)
    for (const FinitePoset& y : posets)
      for (const FinitePoset& z : posets) {
        MonadStructure mz = monad_structure(z);
        for (const Distributor& r : enumerate_distributors(x, y))
          for (const Distributor& s : enumerate_distributors(y, z))
            if (compose(kleisli_of(r), compose(vietoris_map(kleisli_of(s)), mz.mult)) !=
                kleisli_of(compose(r, s)))
              return "Kleisli composite differs from relational composition for " +
                     describe_relation(r);
      }
  return std::nullopt;
}

Violation halmos_equivalence(int max_n) {
  std::vector<FinitePoset> posets = posets_up_to(max_n);
  const std::size_t count = posets.size();

  std::vector<DownsetLattice> downs;
  std::vector<std::vector<int>> mask_tables;
  downs.reserve(count);
  for (const FinitePoset& p : posets) {
    downs.push_back(downset_lattice(p));
    mask_tables.push_back(mask_index_of(downs.back()));
  }

  // Hom-sets and their dual assignments, cached per ordered pair.
  std::vector<std::vector<std::vector<Distributor>>> rels(count);
  std::vector<std::vector<std::vector<std::vector<std::uint64_t>>>> rel_rows(count);
  std::vector<std::vector<std::vector<std::vector<int>>>> duals(count);
  for (std::size_t xi = 0; xi < count; ++xi) {
    rels[xi].resize(count);
    rel_rows[xi].resize(count);
    duals[xi].resize(count);
  }

  for (std::size_t xi = 0; xi < count; ++xi) {
    for (std::size_t yi = 0; yi < count; ++yi) {
      rels[xi][yi] = enumerate_distributors(posets[xi], posets[yi]);
      for (const Distributor& r : rels[xi][yi]) {
        rel_rows[xi][yi].push_back(rows_of(r));
        Hemimorphism h = halmos_dual(r, downs[yi], downs[xi]);
        duals[xi][yi].push_back(h.assignment());
        if (halmos_inv(h, downs[yi], downs[xi]) != r)
          return "dual round trip fails for " + describe_relation(r);
      }

      // Bijectivity of the dual on this hom-set.
      std::set<std::vector<int>> images(duals[xi][yi].begin(), duals[xi][yi].end());
      if (images.size() != rels[xi][yi].size())
        return "dual is not injective between " + describe(posets[xi]) + " and " +
               describe(posets[yi]);
      std::size_t hemi_count = 0;
      for (const MonotoneMap& k : enumerate_monotone_maps(posets[yi], downs[xi].lattice.order())) {
        std::vector<int> assignment(static_cast<std::size_t>(downs[yi].lattice.size()));
        for (int b = 0; b < downs[yi].lattice.size(); ++b) {
          std::uint64_t mask = 0;
          for (int yy = 0; yy < posets[yi].size(); ++yy)
            if (downs[yi].sets[static_cast<std::size_t>(b)] >> yy & 1)
              mask |= downs[xi].sets[static_cast<std::size_t>(k(yy))];
          assignment[static_cast<std::size_t>(b)] = mask_tables[xi][mask];
        }
        ++hemi_count;
        if (!images.count(assignment))
          return "a sup-preserving map is not a dual between " + describe(posets[xi]) + " and " +
                 describe(posets[yi]);
      }
      if (hemi_count != rels[xi][yi].size())
        return "hom-set sizes differ between " + describe(posets[xi]) + " and " +
               describe(posets[yi]);
    }

    // Identity preservation.
    Hemimorphism h = halmos_dual(Distributor::identity(posets[xi]), downs[xi], downs[xi]);
    if (!(h == Hemimorphism::identity(downs[xi].lattice)))
      return "identity relation is not dual to the identity on " + describe(posets[xi]);
  }

  // Contravariance over every composable pair.
  for (std::size_t xi = 0; xi < count; ++xi) {
    const int nx = posets[xi].size();
    for (std::size_t yi = 0; yi < count; ++yi) {
      const int ny = posets[yi].size();
      for (std::size_t zi = 0; zi < count; ++zi) {
        const DownsetLattice& dz = downs[zi];
        const std::vector<int>& table_x = mask_tables[xi];
        for (std::size_t ri = 0; ri < rels[xi][yi].size(); ++ri)
          for (std::size_t si = 0; si < rels[yi][zi].size(); ++si) {
            std::vector<std::uint64_t> composite(static_cast<std::size_t>(nx), 0);
            for (int a = 0; a < nx; ++a) {
              std::uint64_t row = 0;
              for (int yy = 0; yy < ny; ++yy)
                if (rel_rows[xi][yi][ri][static_cast<std::size_t>(a)] >> yy & 1)
                  row |= rel_rows[yi][zi][si][static_cast<std::size_t>(yy)];
              composite[static_cast<std::size_t>(a)] = row;
            }
            for (int b = 0; b < dz.lattice.size(); ++b) {
              std::uint64_t hit = 0;
              for (int a = 0; a < nx; ++a)
                if (composite[static_cast<std::size_t>(a)] & dz.sets[static_cast<std::size_t>(b)])
                  hit |= std::uint64_t{1} << a;
              int direct = table_x[hit];
              int composed = duals[xi][yi][ri][static_cast<std::size_t>(
                  duals[yi][zi][si][static_cast<std::size_t>(b)])];
              if (direct != composed)
                return "dual is not contravariant for a pair over " + describe(posets[yi]);
            }
          }
      }
    }
  }
  return std::nullopt;
}

Violation downwards_open_degeneracy(int max_n) {
  // Full three-way report up to 3; the adjoint and upper-graph conditions at
  // larger sizes are exercised by adjunction_soundness, so the sweep over
  // the full bound only needs the image condition.
  std::vector<FinitePoset> posets = posets_up_to(std::min(max_n, 3));
  for (const FinitePoset& x : posets)
    for (const FinitePoset& y : posets)
      for (const MonotoneMap& f : enumerate_monotone_maps(x, y))
        if (!downwards_open_report(f).all())
          return "a monotone map between finite posets is not downwards open: " + describe(x) +
                 " -> " + describe(y);

  std::vector<FinitePoset> all = posets_up_to(max_n);
  std::vector<DownsetLattice> downs;
  downs.reserve(all.size());
  for (const FinitePoset& p : all) downs.push_back(downset_lattice(p));
  for (std::size_t xi = 0; xi < all.size(); ++xi)
    for (std::size_t yi = 0; yi < all.size(); ++yi)
      for (const MonotoneMap& f : enumerate_monotone_maps(all[xi], all[yi]))
        for (std::uint64_t mask : downs[xi].sets) {
          std::uint64_t image = 0;
          for (int a = 0; a < all[xi].size(); ++a)
            if (mask >> a & 1) image |= std::uint64_t{1} << f(a);
          if (!all[yi].is_down_set(all[yi].down_closure_mask(image)))
            return "down-closed image condition fails between " + describe(all[xi]) + " and " +
                   describe(all[yi]);
        }
  return std::nullopt;
}

Violation splitting_soundness(int exhaustive_max, int random_min, int random_max,
                              int random_count, std::mt19937_64& rng) {
  for (int n = 0; n <= exhaustive_max; ++n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
    FinitePoset carrier = FinitePoset::discrete(labels);
    const std::uint64_t total = std::uint64_t{1} << (n * n);
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      std::vector<std::uint8_t> rel(static_cast<std::size_t>(n) * n);
      for (std::size_t b = 0; b < rel.size(); ++b) rel[b] = bits >> b & 1;
      Distributor e = Distributor::from_matrix(carrier, carrier, std::move(rel));
      if (!is_idempotent(e)) continue;
      try {
        SplitTriple triple = split_idempotent(e);
        if (auto violation = split_triple_violation(triple))
          return *violation + " for " + describe_relation(e);
      } catch (const error& err) {
        return std::string(err.what()) + " for " + describe_relation(e);
      }
    }
  }
  for (int i = 0; i < random_count; ++i) {
    int n = std::uniform_int_distribution<int>(random_min, random_max)(rng);
    std::vector<std::string> labels;
    for (int k = 0; k < n; ++k) labels.push_back("e" + std::to_string(k));
    FinitePoset carrier = FinitePoset::discrete(labels);
    Distributor e = idempotent_power(random_distributor(carrier, carrier, rng));
    try {
      SplitTriple triple = split_idempotent(e);
      if (auto violation = split_triple_violation(triple))
        return *violation + " for " + describe_relation(e);
    } catch (const error& err) {
      return std::string(err.what()) + " for " + describe_relation(e);
    }
  }
  return std::nullopt;
}

std::optional<SplitTriple> brute_force_minimal_split(const Distributor& e, int max_mid) {
  const FinitePoset& x = e.source();
  std::vector<std::uint64_t> e_rows = rows_of(e);
  for (int k = 0; k <= max_mid; ++k) {
    for (const FinitePoset& mid : enumerate_posets(k, std::max(5, max_mid))) {
      std::vector<Distributor> forwards = enumerate_distributors(x, mid);
      std::vector<Distributor> backwards = enumerate_distributors(mid, x);
      std::vector<std::vector<std::uint64_t>> f_rows, b_rows;
      f_rows.reserve(forwards.size());
      for (const Distributor& f : forwards) f_rows.push_back(rows_of(f));
      b_rows.reserve(backwards.size());
      for (const Distributor& b : backwards) b_rows.push_back(rows_of(b));
      std::vector<std::uint64_t> id_rows = up_rows_of(mid);

      for (std::size_t fi = 0; fi < forwards.size(); ++fi)
        for (std::size_t bi = 0; bi < backwards.size(); ++bi) {
          bool match = true;
          for (int a = 0; a < x.size() && match; ++a) {
            std::uint64_t row = 0;
            for (int p = 0; p < k; ++p)
              if (f_rows[fi][static_cast<std::size_t>(a)] >> p & 1)
                row |= b_rows[bi][static_cast<std::size_t>(p)];
            match = row == e_rows[static_cast<std::size_t>(a)];
          }
          for (int p = 0; p < k && match; ++p) {
            std::uint64_t row = 0;
            for (int a = 0; a < x.size(); ++a)
              if (b_rows[bi][static_cast<std::size_t>(p)] >> a & 1)
                row |= f_rows[fi][static_cast<std::size_t>(a)];
            match = row == id_rows[static_cast<std::size_t>(p)];
          }
          if (match) return SplitTriple{e, mid, forwards[fi], backwards[bi]};
        }
    }
  }
  return std::nullopt;
}

Violation splitting_minimality(int exhaustive_max) {
  for (int n = 0; n <= exhaustive_max; ++n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
    FinitePoset carrier = FinitePoset::discrete(labels);
    const std::uint64_t total = std::uint64_t{1} << (n * n);
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      std::vector<std::uint8_t> rel(static_cast<std::size_t>(n) * n);
      for (std::size_t b = 0; b < rel.size(); ++b) rel[b] = bits >> b & 1;
      Distributor e = Distributor::from_matrix(carrier, carrier, std::move(rel));
      if (!is_idempotent(e)) continue;
      SplitTriple algebraic = split_idempotent(e);
      std::optional<SplitTriple> searched = brute_force_minimal_split(e, n);
      if (!searched) return "no splitting found by search for " + describe_relation(e);
      if (auto violation = split_triple_violation(*searched))
        return *violation + " in the searched splitting of " + describe_relation(e);
      if (searched->mid.size() != algebraic.mid.size() ||
          !is_isomorphic(searched->mid, algebraic.mid))
        return "algebraic middle object differs from the minimal one for " +
               describe_relation(e);
    }
  }
  return std::nullopt;
}

Violation coheyting_via_split_agreement(int max_n) {
  for (const FinitePoset& p : posets_up_to(max_n)) {
    FinDistLattice l = downset_lattice(p).lattice;
    Booleanization b = booleanize(l);
    for (int x = 0; x < l.size(); ++x)
      for (int y = 0; y < l.size(); ++y)
        if (coheyting_via_split(b, x, y) != coheyting_subtract_bruteforce(l, x, y))
          return "the two subtraction routes disagree at (" + l.label(x) + ", " + l.label(y) +
                 ") over " + describe(p);
  }
  return std::nullopt;
}

Violation pmorphism_equivalence(int max_n) {
  std::vector<FinitePoset> posets = posets_up_to(max_n);
  for (const FinitePoset& x1 : posets) {
    DownsetLattice d1 = downset_lattice(x1);
    for (const FinitePoset& x2 : posets) {
      DownsetLattice d2 = downset_lattice(x2);
      for (const MonotoneMap& g : enumerate_monotone_maps(x1, x2)) {
        Hemimorphism f = preimage_homomorphism(g, d2, d1);
        if (coheyting_preservation_check(f).preserves_subtraction !=
            p_morphism_check(g).is_p_morphism)
          return "the two characterisations disagree for a map " + describe(x1) + " -> " +
                 describe(x2);
      }
    }
  }

  // Completeness of the preimage description on tiny instances: every
  // homomorphism between the down-set lattices arises from a monotone map.
  std::vector<FinitePoset> tiny = posets_up_to(std::min(max_n, 2));
  for (const FinitePoset& x1 : tiny) {
    DownsetLattice d1 = downset_lattice(x1);
    for (const FinitePoset& x2 : tiny) {
      DownsetLattice d2 = downset_lattice(x2);
      std::set<std::vector<int>> preimages;
      for (const MonotoneMap& g : enumerate_monotone_maps(x1, x2))
        preimages.insert(preimage_homomorphism(g, d2, d1).assignment());

      std::vector<int> assignment(static_cast<std::size_t>(d2.lattice.size()), 0);
      while (true) {
        try {
          Hemimorphism h = Hemimorphism::check(d2.lattice, d1.lattice, assignment);
          if (h.is_homomorphism() && !preimages.count(assignment))
            return "a homomorphism is not a preimage map between " + describe(x2) + " and " +
                   describe(x1);
        } catch (const error&) {
        }
        int pos = d2.lattice.size() - 1;
        while (pos >= 0 && assignment[static_cast<std::size_t>(pos)] == d1.lattice.size() - 1) {
          assignment[static_cast<std::size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
        ++assignment[static_cast<std::size_t>(pos)];
      }
    }
  }
  return std::nullopt;
}

Violation esakia_presentation(int max_n) {
  for (const FinitePoset& p : posets_up_to(max_n)) {
    try {
      SplitTriple triple = esakia_split_presentation(p);
      if (auto violation = split_triple_violation(triple)) return *violation + " on " + describe(p);
      SplitTriple resplit = split_idempotent(triple.idem);
      if (!is_isomorphic(resplit.mid, p))
        return "re-splitting the patch idempotent does not recover " + describe(p);
    } catch (const error& e) {
      return std::string(e.what()) + " on " + describe(p);
    }
  }
  return std::nullopt;
}

FinitePoset random_poset(int n, std::mt19937_64& rng) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::pair<std::string, std::string>> pairs;
  std::bernoulli_distribution edge(0.4);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge(rng))
        pairs.emplace_back(labels[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])],
                           labels[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])]);
  return FinitePoset::from_pairs(labels, pairs);
}

Distributor random_distributor(const FinitePoset& source, const FinitePoset& target,
                               std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> pairs;
  std::bernoulli_distribution keep(0.3);
  for (int x = 0; x < source.size(); ++x)
    for (int y = 0; y < target.size(); ++y)
      if (keep(rng)) pairs.emplace_back(x, y);
  return Distributor::validate(source, target, pairs, Distributor::Mode::closure);
}

}  // namespace checks

bool VerifyReport::all_passed() const {
  for (const PropertyResult& r : results)
    if (!r.passed) return false;
  return true;
}

VerifyReport verify_suite(int max_size, std::uint64_t seed) {
  if (max_size < 0 || max_size > 5)
    fail(errc::bound_exceeded,
         "verification bound must be between 0 and 5, got " + std::to_string(max_size));
  std::mt19937_64 rng(seed);
  auto clip = [max_size](int bound) { return std::min(bound, max_size); };

  using Check = std::function<checks::Violation()>;
  std::vector<std::pair<std::string, Check>> properties = {
      {"poset.order_dual_involution", [&] { return checks::order_dual_involution(clip(5)); }},
      {"poset.down_closure_operator", [&] { return checks::down_closure_operator(clip(4)); }},
      {"poset.hasse_regeneration", [&] { return checks::hasse_regeneration(clip(4)); }},
      {"lattice.coheyting_adjunction_law",
       [&] { return checks::coheyting_adjunction_law(clip(4)); }},
      {"lattice.boolean_irreducibles_antichain",
       [&] { return checks::boolean_irreducibles_antichain(clip(4)); }},
      {"lattice.hemimorphism_flags", [&] { return checks::hemimorphism_flags(clip(2)); }},
      {"birkhoff.round_trip", [&] { return checks::birkhoff_round_trip(clip(5), 0, 0, rng); }},
      {"birkhoff.booleanization_laws", [&] { return checks::booleanization_laws(clip(4)); }},
      {"dist.category_laws",
       [&] { return checks::category_laws(clip(2), clip(3), max_size >= 3 ? 2000 : 0, rng); }},
      {"dist.graph_functoriality", [&] { return checks::graph_functoriality(clip(3)); }},
      {"dist.adjunction_soundness", [&] { return checks::adjunction_soundness(clip(4)); }},
      {"dist.adjunction_completeness", [&] { return checks::adjunction_completeness(clip(3)); }},
      {"dist.monad_laws", [&] { return checks::monad_laws(clip(3)); }},
      {"dist.kz_inequality", [&] { return checks::kz_inequality(clip(3)); }},
      {"dist.vietoris_functoriality", [&] { return checks::vietoris_functoriality(clip(3)); }},
      {"dist.kleisli_correspondence", [&] { return checks::kleisli_correspondence(clip(2)); }},
      {"dist.halmos_equivalence", [&] { return checks::halmos_equivalence(clip(3)); }},
      {"dist.downwards_open_degeneracy",
       [&] { return checks::downwards_open_degeneracy(clip(4)); }},
      {"karoubi.splitting_soundness",
       [&] {
         return checks::splitting_soundness(clip(3), 4, std::max(4, clip(5)),
                                            max_size >= 4 ? 100 : 0, rng);
       }},
      {"karoubi.splitting_minimality", [&] { return checks::splitting_minimality(clip(3)); }},
      {"karoubi.coheyting_via_split",
       [&] { return checks::coheyting_via_split_agreement(clip(4)); }},
      {"karoubi.pmorphism_equivalence", [&] { return checks::pmorphism_equivalence(clip(3)); }},
      {"karoubi.esakia_presentation", [&] { return checks::esakia_presentation(clip(4)); }},
  };

  VerifyReport report;
  for (auto& [name, run] : properties) {
    PropertyResult result;
    result.name = name;
    auto start = std::chrono::steady_clock::now();
    try {
      checks::Violation violation = run();
      result.passed = !violation.has_value();
      if (violation) result.detail = *violation;
    } catch (const error& e) {
      result.passed = false;
      result.detail = e.what();
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.results.push_back(std::move(result));
  }
  return report;
}

std::string format_report(const VerifyReport& report, int max_size, std::uint64_t seed) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const PropertyResult& r : report.results) {
    if (r.passed) {
      ++passed;
      out << "PASS  " << r.name;
    } else {
      out << "FAIL  " << r.name << ": " << r.detail;
    }
    char timing[32];
    std::snprintf(timing, sizeof(timing), "  (%.2f s)", r.seconds);
    out << timing << "\n";
  }
  out << "verified " << report.results.size() << " properties: " << passed << " passed, "
      << (report.results.size() - passed) << " failed (max-size=" << max_size
      << ", seed=" << seed << ")\n";
  return out.str();
}

}  // namespace finord
