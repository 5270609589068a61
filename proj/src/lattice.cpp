#include "finord/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace finord {

namespace {

// Least element of `candidates`, or -1 if none is below all others.
int least_of(const FinitePoset& order, const std::vector<int>& candidates) {
  for (int c : candidates) {
    bool below_all = true;
    for (int d : candidates)
      if (!order.leq(c, d)) {
        below_all = false;
        break;
      }
    if (below_all) return c;
  }
  return -1;
}

int greatest_of(const FinitePoset& order, const std::vector<int>& candidates) {
  for (int c : candidates) {
    bool above_all = true;
    for (int d : candidates)
      if (!order.leq(d, c)) {
        above_all = false;
        break;
      }
    if (above_all) return c;
  }
  return -1;
}

// Looks for a pentagon or diamond sublattice explaining a distributivity
// failure; by Birkhoff's criterion one of the two must exist.
void report_nondistributive(const FinDistLattice& l, int wx, int wy, int wz) {
  const int n = l.size();
  auto incomparable = [&](int a, int b) { return !l.leq(a, b) && !l.leq(b, a); };
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      if (!(a != c && l.leq(a, c))) continue;
      for (int b = 0; b < n; ++b) {
        if (!incomparable(a, b) || !incomparable(c, b)) continue;
        if (l.join(a, b) == l.join(c, b) && l.meet(a, b) == l.meet(c, b)) {
          std::vector<std::string> w = {l.label(l.meet(a, b)), l.label(a), l.label(c),
                                        l.label(b), l.label(l.join(a, b))};
          fail(errc::not_distributive,
               "not distributive at (" + l.label(wx) + ", " + l.label(wy) + ", " + l.label(wz) +
                   "); contains pentagon N5 {" + w[0] + " < " + w[1] + " < " + w[2] + ", " + w[3] +
                   "}",
               w);
        }
      }
    }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!incomparable(a, b)) continue;
      for (int c = b + 1; c < n; ++c) {
        if (!incomparable(a, c) || !incomparable(b, c)) continue;
        int j = l.join(a, b), m = l.meet(a, b);
        if (l.join(a, c) == j && l.join(b, c) == j && l.meet(a, c) == m && l.meet(b, c) == m) {
          std::vector<std::string> w = {l.label(m), l.label(a), l.label(b), l.label(c),
                                        l.label(j)};
          fail(errc::not_distributive,
               "not distributive at (" + l.label(wx) + ", " + l.label(wy) + ", " + l.label(wz) +
                   "); contains diamond M3 {" + w[1] + ", " + w[2] + ", " + w[3] + "}",
               w);
        }
      }
    }
  fail(errc::not_distributive,
       "not distributive at (" + l.label(wx) + ", " + l.label(wy) + ", " + l.label(wz) + ")",
       {l.label(wx), l.label(wy), l.label(wz)});
}

}  // namespace

FinDistLattice FinDistLattice::from_poset(const FinitePoset& order) {
  const int n = order.size();
  if (n == 0) fail(errc::not_a_lattice, "empty carrier has no bottom or top");

  std::vector<int> join(static_cast<std::size_t>(n) * n);
  std::vector<int> meet(static_cast<std::size_t>(n) * n);
  std::vector<int> candidates;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      candidates.clear();
      for (int z = 0; z < n; ++z)
        if (order.leq(x, z) && order.leq(y, z)) candidates.push_back(z);
      int lub = least_of(order, candidates);
      if (lub < 0)
        fail(errc::not_a_lattice,
             "no least upper bound for {" + order.label(x) + ", " + order.label(y) + "}",
             {order.label(x), order.label(y)});
      join[static_cast<std::size_t>(x) * n + y] = lub;

      candidates.clear();
      for (int z = 0; z < n; ++z)
        if (order.leq(z, x) && order.leq(z, y)) candidates.push_back(z);
      int glb = greatest_of(order, candidates);
      if (glb < 0)
        fail(errc::not_a_lattice,
             "no greatest lower bound for {" + order.label(x) + ", " + order.label(y) + "}",
             {order.label(x), order.label(y)});
      meet[static_cast<std::size_t>(x) * n + y] = glb;
    }

  int bottom = 0, top = 0;
  for (int x = 0; x < n; ++x) {
    bottom = meet[static_cast<std::size_t>(bottom) * n + x];
    top = join[static_cast<std::size_t>(top) * n + x];
  }

  FinDistLattice result(order, std::move(join), std::move(meet), bottom, top);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (result.meet(x, result.join(y, z)) !=
            result.join(result.meet(x, y), result.meet(x, z)))
          report_nondistributive(result, x, y, z);
  return result;
}

FinDistLattice FinDistLattice::from_parts(FinitePoset order, std::vector<int> join,
                                          std::vector<int> meet, int bottom, int top) {
  const std::size_t n = static_cast<std::size_t>(order.size());
  if (n == 0 || join.size() != n * n || meet.size() != n * n || bottom < 0 ||
      bottom >= static_cast<int>(n) || top < 0 || top >= static_cast<int>(n))
    fail(errc::internal_verification_failure, "malformed lattice tables");
  return FinDistLattice(std::move(order), std::move(join), std::move(meet), bottom, top);
}

int FinDistLattice::join_of(std::span<const int> xs) const {
  int acc = bottom_;
  for (int x : xs) acc = join(acc, x);
  return acc;
}

int FinDistLattice::meet_of(std::span<const int> xs) const {
  int acc = top_;
  for (int x : xs) acc = meet(acc, x);
  return acc;
}

Hemimorphism Hemimorphism::check(FinDistLattice source, FinDistLattice target,
                                 std::vector<int> assignment) {
  const int n = source.size();
  if (assignment.size() != static_cast<std::size_t>(n))
    fail(errc::not_sup_preserving, "assignment does not cover the source carrier");
  for (int v : assignment)
    if (v < 0 || v >= target.size())
      fail(errc::unknown_label, "assignment value out of range");
  auto h = [&](int i) { return assignment[static_cast<std::size_t>(i)]; };

  if (h(source.bottom()) != target.bottom())
    fail(errc::not_sup_preserving,
         "bottom is not preserved: " + source.label(source.bottom()) + " -> " +
             target.label(h(source.bottom())),
         {source.label(source.bottom())});
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y)
      if (h(source.join(x, y)) != target.join(h(x), h(y)))
        fail(errc::not_sup_preserving,
             "join is not preserved at {" + source.label(x) + ", " + source.label(y) + "}",
             {source.label(x), source.label(y)});

  bool pm = true;
  for (int x = 0; x < n && pm; ++x)
    for (int y = x; y < n && pm; ++y)
      if (h(source.meet(x, y)) != target.meet(h(x), h(y))) pm = false;
  bool pt = h(source.top()) == target.top();
  return Hemimorphism(std::move(source), std::move(target), std::move(assignment), pm, pt);
}

Hemimorphism Hemimorphism::identity(const FinDistLattice& l) {
  std::vector<int> id(static_cast<std::size_t>(l.size()));
  for (int i = 0; i < l.size(); ++i) id[static_cast<std::size_t>(i)] = i;
  return check(l, l, std::move(id));
}

Hemimorphism compose(const Hemimorphism& f, const Hemimorphism& g) {
  if (f.target() != g.source())
    fail(errc::object_mismatch, "hemimorphism composition: middle lattices differ");
  std::vector<int> values(static_cast<std::size_t>(f.source().size()));
  for (int i = 0; i < f.source().size(); ++i) values[static_cast<std::size_t>(i)] = g(f(i));
  return Hemimorphism::check(f.source(), g.target(), std::move(values));
}

std::vector<int> join_irreducible_indices(const FinDistLattice& l) {
  std::vector<int> out;
  const int n = l.size();
  for (int j = 0; j < n; ++j) {
    if (j == l.bottom()) continue;
    bool reducible = false;
    for (int a = 0; a < n && !reducible; ++a) {
      if (!l.leq(a, j) || a == j) continue;
      for (int b = a; b < n && !reducible; ++b) {
        if (!l.leq(b, j) || b == j) continue;
        if (l.join(a, b) == j) reducible = true;
      }
    }
    if (!reducible) out.push_back(j);
  }
  return out;
}

FinitePoset join_irreducibles(const FinDistLattice& l) {
  return l.order().restricted_to(join_irreducible_indices(l));
}

int coheyting_subtract_bruteforce(const FinDistLattice& l, int x, int y) {
  // The candidate set is nonempty (top qualifies) and closed under meets in
  // a distributive lattice, so folding meets lands on its least element.
  int acc = l.top();
  for (int z = 0; z < l.size(); ++z)
    if (l.leq(y, l.join(x, z))) acc = l.meet(acc, z);
  if (!l.leq(y, l.join(x, acc)))
    fail(errc::internal_verification_failure,
         "subtraction candidates not closed under meet at (" + l.label(x) + ", " + l.label(y) +
             ")");
  return acc;
}

}  // namespace finord
