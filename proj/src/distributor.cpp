#include "finord/distributor.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace finord {

namespace {

std::size_t idx(int x, int y, int cols) {
  return static_cast<std::size_t>(x) * cols + static_cast<std::size_t>(y);
}

}  // namespace

Distributor Distributor::validate(const FinitePoset& source, const FinitePoset& target,
                                  const std::vector<std::pair<int, int>>& pairs, Mode mode) {
  const int n = source.size(), m = target.size();
  std::vector<std::uint8_t> rel(static_cast<std::size_t>(n) * m, 0);
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= n || y < 0 || y >= m)
      fail(errc::unknown_label, "relation pair out of range");
    rel[idx(x, y, m)] = 1;
  }
  if (mode == Mode::closure) {
    // The least distributor containing the pairs: close downwards in the
    // source and upwards in the target, one pass each.
    std::vector<std::uint8_t> closed(static_cast<std::size_t>(n) * m, 0);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < m; ++y) {
        if (!rel[idx(x, y, m)]) continue;
        for (int x2 = 0; x2 < n; ++x2) {
          if (!source.leq(x2, x)) continue;
          for (int y2 = 0; y2 < m; ++y2)
            if (target.leq(y, y2)) closed[idx(x2, y2, m)] = 1;
        }
      }
    rel = std::move(closed);
  }
  return from_matrix(source, target, std::move(rel));
}

Distributor Distributor::validate_labels(
    const FinitePoset& source, const FinitePoset& target,
    const std::vector<std::pair<std::string, std::string>>& pairs, Mode mode) {
  std::vector<std::pair<int, int>> indexed;
  indexed.reserve(pairs.size());
  for (const auto& [a, b] : pairs)
    indexed.emplace_back(source.index_of(a), target.index_of(b));
  return validate(source, target, indexed, mode);
}

Distributor Distributor::from_matrix(FinitePoset source, FinitePoset target,
                                     std::vector<std::uint8_t> rel) {
  const int n = source.size(), m = target.size();
  if (rel.size() != static_cast<std::size_t>(n) * m)
    fail(errc::internal_verification_failure, "relation matrix size mismatch");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < m; ++y) {
      if (!rel[idx(x, y, m)]) continue;
      for (int y2 = 0; y2 < m; ++y2)
        if (target.leq(y, y2) && !rel[idx(x, y2, m)])
          fail(errc::not_a_distributor,
               "missing pair (" + source.label(x) + ", " + target.label(y2) + ") forced by (" +
                   source.label(x) + ", " + target.label(y) + ") and " + target.label(y) +
                   " <= " + target.label(y2),
               {source.label(x), target.label(y), target.label(y2)});
      for (int x2 = 0; x2 < n; ++x2)
        if (source.leq(x2, x) && !rel[idx(x2, y, m)])
          fail(errc::not_a_distributor,
               "missing pair (" + source.label(x2) + ", " + target.label(y) + ") forced by " +
                   source.label(x2) + " <= " + source.label(x) + " and (" + source.label(x) +
                   ", " + target.label(y) + ")",
               {source.label(x2), source.label(x), target.label(y)});
    }
  return Distributor(std::move(source), std::move(target), std::move(rel));
}

Distributor Distributor::identity(const FinitePoset& p) {
  const int n = p.size();
  std::vector<std::uint8_t> rel(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rel[idx(i, j, n)] = p.leq(i, j);
  return Distributor(p, p, std::move(rel));
}

Distributor Distributor::empty(const FinitePoset& source, const FinitePoset& target) {
  return Distributor(source, target,
                     std::vector<std::uint8_t>(
                         static_cast<std::size_t>(source.size()) * target.size(), 0));
}

Distributor Distributor::total(const FinitePoset& source, const FinitePoset& target) {
  return Distributor(source, target,
                     std::vector<std::uint8_t>(
                         static_cast<std::size_t>(source.size()) * target.size(), 1));
}

std::uint64_t Distributor::row_mask(int x) const {
  std::uint64_t out = 0;
  for (int y = 0; y < target_.size(); ++y)
    if (at(x, y)) out |= std::uint64_t{1} << y;
  return out;
}

bool Distributor::contained_in(const Distributor& other) const {
  if (source_ != other.source_ || target_ != other.target_)
    fail(errc::object_mismatch, "relation inclusion: endpoints differ");
  for (std::size_t i = 0; i < rel_.size(); ++i)
    if (rel_[i] && !other.rel_[i]) return false;
  return true;
}

Distributor compose(const Distributor& r, const Distributor& s) {
  if (r.target() != s.source())
    fail(errc::object_mismatch, "distributor composition: middle posets differ");
  const int n = r.source().size(), k = r.target().size(), m = s.target().size();
  std::vector<std::uint8_t> rel(static_cast<std::size_t>(n) * m, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < k; ++y) {
      if (!r.at(x, y)) continue;
      for (int z = 0; z < m; ++z)
        if (s.at(y, z)) rel[idx(x, z, m)] = 1;
    }
  return Distributor::from_matrix(r.source(), s.target(), std::move(rel));
}

Distributor graph_lower(const MonotoneMap& f) {
  const int n = f.source().size(), m = f.target().size();
  std::vector<std::uint8_t> rel(static_cast<std::size_t>(n) * m, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < m; ++y) rel[idx(x, y, m)] = f.target().leq(f(x), y);
  return Distributor::from_matrix(f.source(), f.target(), std::move(rel));
}

Distributor graph_upper(const MonotoneMap& f) {
  const int n = f.source().size(), m = f.target().size();
  std::vector<std::uint8_t> rel(static_cast<std::size_t>(m) * n, 0);
  for (int y = 0; y < m; ++y)
    for (int x = 0; x < n; ++x) rel[idx(y, x, n)] = f.target().leq(y, f(x));
  return Distributor::from_matrix(f.target(), f.source(), std::move(rel));
}

AdjointReport check_adjoint(const Distributor& phi, const Distributor& psi) {
  if (phi.target() != psi.source() || psi.target() != phi.source())
    fail(errc::object_mismatch, "adjunction check: endpoints do not match");
  const FinitePoset& x_poset = phi.source();
  const FinitePoset& y_poset = phi.target();

  AdjointReport report;
  Distributor unit = compose(phi, psi);
  for (int x = 0; x < x_poset.size(); ++x)
    for (int x2 = 0; x2 < x_poset.size(); ++x2)
      if (x_poset.leq(x, x2) && !unit.at(x, x2)) {
        report.unit_witness = {x, x2};
        return report;
      }
  Distributor counit = compose(psi, phi);
  for (int y = 0; y < y_poset.size(); ++y)
    for (int y2 = 0; y2 < y_poset.size(); ++y2)
      if (counit.at(y, y2) && !y_poset.leq(y, y2)) {
        report.counit_witness = {y, y2};
        return report;
      }
  report.adjoint = true;
  return report;
}

MonotoneMap adjoint_to_map(const Distributor& phi, const Distributor& psi) {
  AdjointReport report = check_adjoint(phi, psi);
  if (!report.adjoint) {
    if (report.unit_witness)
      fail(errc::not_an_adjunction,
           "unit fails at (" + phi.source().label(report.unit_witness->first) + ", " +
               phi.source().label(report.unit_witness->second) + ")",
           {phi.source().label(report.unit_witness->first),
            phi.source().label(report.unit_witness->second)});
    fail(errc::not_an_adjunction,
         "counit fails at (" + phi.target().label(report.counit_witness->first) + ", " +
             phi.target().label(report.counit_witness->second) + ")",
         {phi.target().label(report.counit_witness->first),
          phi.target().label(report.counit_witness->second)});
  }

  const FinitePoset& x_poset = phi.source();
  const FinitePoset& y_poset = phi.target();
  std::vector<int> values(static_cast<std::size_t>(x_poset.size()));
  for (int x = 0; x < x_poset.size(); ++x) {
    int least = -1;
    for (int y = 0; y < y_poset.size(); ++y) {
      if (!phi.at(x, y)) continue;
      bool minimal = true;
      for (int y2 = 0; y2 < y_poset.size() && minimal; ++y2)
        if (phi.at(x, y2) && !y_poset.leq(y, y2)) minimal = false;
      if (minimal) {
        least = y;
        break;
      }
    }
    if (least < 0)
      fail(errc::not_an_adjunction, "row of " + x_poset.label(x) + " has no least element",
           {x_poset.label(x)});
    values[static_cast<std::size_t>(x)] = least;
  }
  MonotoneMap f(x_poset, y_poset, std::move(values));
  if (graph_lower(f) != phi || graph_upper(f) != psi)
    fail(errc::internal_verification_failure, "adjunction does not come from its map");
  return f;
}

int VietorisSpace::index_of_set(std::uint64_t mask) const {
  auto it = lookup.find(mask);
  if (it == lookup.end())
    fail(errc::internal_verification_failure, "subset is not an element of the space");
  return it->second;
}

VietorisSpace vietoris(const FinitePoset& x, const SizeLimits& limits) {
  const int n = x.size();
  if (n > limits.max_base || n > 24) {
    std::ostringstream msg;
    msg << "up-set space: carrier of size " << n << " exceeds the bound "
        << std::min(limits.max_base, 24);
    fail(errc::size_overflow, msg.str());
  }

  std::vector<std::uint64_t> masks;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (!x.is_up_set(mask)) continue;
    masks.push_back(mask);
    if (static_cast<long>(masks.size()) > limits.max_elements)
      fail(errc::size_overflow, "up-set space: too many elements");
  }

  // Reverse inclusion: the whole carrier is the bottom, the empty set the top.
  std::vector<std::pair<std::pair<int, std::string>, std::uint64_t>> keyed;
  for (std::uint64_t mask : masks)
    keyed.push_back({{n - std::popcount(mask), set_label(x, mask)}, mask});
  std::sort(keyed.begin(), keyed.end());

  const int m = static_cast<int>(keyed.size());
  std::vector<std::string> labels;
  masks.clear();
  for (auto& [key, mask] : keyed) {
    labels.push_back(std::move(key.second));
    masks.push_back(mask);
  }
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      leq[idx(i, j, m)] = (masks[static_cast<std::size_t>(j)] &
                           ~masks[static_cast<std::size_t>(i)]) == 0;  // A <= B iff A contains B

  VietorisSpace out{FinitePoset::from_leq_matrix(std::move(labels), std::move(leq)), x,
                    std::move(masks), {}};
  for (int i = 0; i < m; ++i) out.lookup.emplace(out.sets[static_cast<std::size_t>(i)], i);
  return out;
}

MonotoneMap vietoris_map(const MonotoneMap& f, const SizeLimits& limits) {
  VietorisSpace vx = vietoris(f.source(), limits);
  VietorisSpace vy = vietoris(f.target(), limits);
  std::vector<int> values(vx.sets.size());
  for (std::size_t i = 0; i < vx.sets.size(); ++i) {
    std::uint64_t image = 0;
    for (int a = 0; a < f.source().size(); ++a)
      if (vx.sets[i] >> a & 1) image |= std::uint64_t{1} << f(a);
    values[i] = vy.index_of_set(f.target().up_closure_mask(image));
  }
  return MonotoneMap(vx.poset, vy.poset, std::move(values));
}

MonadStructure monad_structure(const FinitePoset& x, const SizeLimits& limits) {
  VietorisSpace vx = vietoris(x, limits);
  VietorisSpace vvx = vietoris(vx.poset, limits);

  std::vector<int> unit_values(static_cast<std::size_t>(x.size()));
  for (int a = 0; a < x.size(); ++a)
    unit_values[static_cast<std::size_t>(a)] = vx.index_of_set(x.up_mask_of(a));
  MonotoneMap unit(x, vx.poset, std::move(unit_values));

  std::vector<int> mult_values(vvx.sets.size());
  for (std::size_t i = 0; i < vvx.sets.size(); ++i) {
    std::uint64_t unioned = 0;
    for (int k = 0; k < vx.poset.size(); ++k)
      if (vvx.sets[i] >> k & 1) unioned |= vx.sets[static_cast<std::size_t>(k)];
    mult_values[i] = vx.index_of_set(unioned);
  }
  MonotoneMap mult(vvx.poset, vx.poset, std::move(mult_values));

  return MonadStructure{std::move(vx), std::move(vvx), std::move(unit), std::move(mult)};
}

std::optional<std::string> monad_laws_violation(const FinitePoset& x, const SizeLimits& limits) {
  MonadStructure monad = monad_structure(x, limits);
  const MonotoneMap id_vx = MonotoneMap::identity(monad.vx.poset);

  if (compose(vietoris_map(monad.unit, limits), monad.mult) != id_vx)
    return "functor-image unit law fails on " + std::to_string(x.size()) + "-element poset";
  std::vector<int> unit_at_vx(static_cast<std::size_t>(monad.vx.poset.size()));
  for (int i = 0; i < monad.vx.poset.size(); ++i)
    unit_at_vx[static_cast<std::size_t>(i)] =
        monad.vvx.index_of_set(monad.vx.poset.up_mask_of(i));
  if (compose(MonotoneMap(monad.vx.poset, monad.vvx.poset, std::move(unit_at_vx)), monad.mult) !=
      id_vx)
    return "unit-at-VX law fails on " + std::to_string(x.size()) + "-element poset";

  // Associativity, pointwise over the up-sets of VVX (the elements of VVVX).
  const int vv = monad.vvx.poset.size();
  if (vv > 24) return "VVX too large for the associativity scan";
  std::vector<std::uint64_t> up_masks(static_cast<std::size_t>(vv));
  for (int i = 0; i < vv; ++i)
    up_masks[static_cast<std::size_t>(i)] = monad.vvx.poset.up_mask_of(i);

  auto mult_of_vx_mask = [&](std::uint64_t vx_mask) {
    std::uint64_t unioned = 0;
    for (int k = 0; k < monad.vx.poset.size(); ++k)
      if (vx_mask >> k & 1) unioned |= monad.vx.sets[static_cast<std::size_t>(k)];
    return unioned;  // a subset of the base carrier
  };

  const std::uint64_t total = std::uint64_t{1} << vv;
  for (std::uint64_t big = 0; big < total; ++big) {
    bool up_closed = true;
    for (int i = 0; i < vv && up_closed; ++i)
      if ((big >> i & 1) && (up_masks[static_cast<std::size_t>(i)] & ~big)) up_closed = false;
    if (!up_closed) continue;

    // One route: apply the multiplication inside, then up-close the image.
    std::uint64_t vm_image = 0;
    for (int i = 0; i < vv; ++i)
      if (big >> i & 1) vm_image |= std::uint64_t{1} << monad.mult(i);
    std::uint64_t vm_upset = monad.vx.poset.up_closure_mask(vm_image);
    std::uint64_t lhs = mult_of_vx_mask(vm_upset);

    // Other route: flatten the collection first.
    std::uint64_t flattened = 0;
    for (int i = 0; i < vv; ++i)
      if (big >> i & 1) flattened |= monad.vvx.sets[static_cast<std::size_t>(i)];
    std::uint64_t rhs = mult_of_vx_mask(flattened);

    if (lhs != rhs)
      return "associativity fails on " + std::to_string(x.size()) + "-element poset";
  }
  return std::nullopt;
}

bool kz_check(const FinitePoset& x, const SizeLimits& limits) {
  VietorisSpace vx = vietoris(x, limits);
  const int m = vx.poset.size();
  for (int i = 0; i < m; ++i) {
    // e_{VX}(A) = the up-set of A inside VX.
    std::uint64_t unit_side = vx.poset.up_mask_of(i);
    // V(e_X)(A) = up-closure of {up(a) : a in A} inside VX.
    std::uint64_t functor_side = 0;
    for (int j = 0; j < m; ++j) {
      bool included = false;
      for (int a = 0; a < x.size() && !included; ++a)
        if ((vx.sets[static_cast<std::size_t>(i)] >> a & 1) &&
            (vx.sets[static_cast<std::size_t>(j)] & ~x.up_mask_of(a)) == 0)
          included = true;
      if (included) functor_side |= std::uint64_t{1} << j;
    }
    // Below in VVX means containing as a subset of VX.
    if (functor_side & ~unit_side) return false;
  }
  return true;
}

MonotoneMap kleisli_of(const Distributor& r, const SizeLimits& limits) {
  VietorisSpace vy = vietoris(r.target(), limits);
  std::vector<int> values(static_cast<std::size_t>(r.source().size()));
  for (int x = 0; x < r.source().size(); ++x)
    values[static_cast<std::size_t>(x)] = vy.index_of_set(r.row_mask(x));
  return MonotoneMap(r.source(), vy.poset, std::move(values));
}

Distributor distributor_of_kleisli(const MonotoneMap& rhat, const VietorisSpace& vy) {
  if (rhat.target() != vy.poset)
    fail(errc::object_mismatch, "transpose: map does not land in the given up-set space");
  const int n = rhat.source().size(), m = vy.base.size();
  std::vector<std::uint8_t> rel(static_cast<std::size_t>(n) * m, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < m; ++y)
      rel[idx(x, y, m)] = vy.sets[static_cast<std::size_t>(rhat(x))] >> y & 1;
  return Distributor::from_matrix(rhat.source(), vy.base, std::move(rel));
}

Hemimorphism halmos_dual(const Distributor& r, const SizeLimits& limits) {
  return halmos_dual(r, downset_lattice(r.target(), limits),
                     downset_lattice(r.source(), limits));
}

Hemimorphism halmos_dual(const Distributor& r, const DownsetLattice& target_downsets,
                         const DownsetLattice& source_downsets) {
  if (target_downsets.base != r.target() || source_downsets.base != r.source())
    fail(errc::object_mismatch, "dual: down-set lattices do not match the relation");
  const int m = target_downsets.lattice.size();
  std::vector<int> assignment(static_cast<std::size_t>(m));
  for (int b = 0; b < m; ++b) {
    std::uint64_t hit = 0;
    for (int x = 0; x < r.source().size(); ++x)
      if (r.row_mask(x) & target_downsets.sets[static_cast<std::size_t>(b)])
        hit |= std::uint64_t{1} << x;
    assignment[static_cast<std::size_t>(b)] = source_downsets.index_of_set(hit);
  }
  return Hemimorphism::check(target_downsets.lattice, source_downsets.lattice,
                             std::move(assignment));
}

Distributor halmos_inv(const Hemimorphism& h, const DownsetLattice& target_downsets,
                       const DownsetLattice& source_downsets) {
  if (h.source() != target_downsets.lattice || h.target() != source_downsets.lattice)
    fail(errc::object_mismatch, "dual inverse: lattices do not match the map");
  const FinitePoset& x_poset = source_downsets.base;
  const FinitePoset& y_poset = target_downsets.base;
  const int n = x_poset.size(), m = y_poset.size();
  std::vector<std::uint8_t> rel(static_cast<std::size_t>(n) * m, 0);
  for (int y = 0; y < m; ++y) {
    int principal = target_downsets.index_of_set(y_poset.down_mask_of(y));
    std::uint64_t image = source_downsets.sets[static_cast<std::size_t>(h(principal))];
    for (int x = 0; x < n; ++x) rel[idx(x, y, m)] = image >> x & 1;
  }
  return Distributor::from_matrix(x_poset, y_poset, std::move(rel));
}

DownwardsOpenReport downwards_open_report(const MonotoneMap& f, const SizeLimits& limits) {
  DownsetLattice dx = downset_lattice(f.source(), limits);
  DownwardsOpenReport report;

  report.image_condition = true;
  for (std::uint64_t mask : dx.sets) {
    std::uint64_t image = 0;
    for (int a = 0; a < f.source().size(); ++a)
      if (mask >> a & 1) image |= std::uint64_t{1} << f(a);
    if (!f.target().is_down_set(f.target().down_closure_mask(image))) {
      report.image_condition = false;
      break;
    }
  }

  report.adjoint_condition = check_adjoint(graph_lower(f), graph_upper(f)).adjoint;

  report.upper_graph_condition = true;
  try {
    (void)graph_upper(f);
  } catch (const error&) {
    report.upper_graph_condition = false;
  }

  if (!(report.image_condition == report.adjoint_condition &&
        report.adjoint_condition == report.upper_graph_condition))
    fail(errc::internal_verification_failure,
         "downwards-open conditions disagree on a finite carrier");
  return report;
}

std::vector<Distributor> enumerate_distributors(const FinitePoset& source,
                                                const FinitePoset& target) {
  const int n = source.size(), m = target.size();
  const int bits = n * m;
  if (bits > 20) fail(errc::bound_exceeded, "distributor enumeration: carrier too large");
  std::vector<Distributor> out;
  const std::uint32_t total = std::uint32_t{1} << bits;
  for (std::uint32_t candidate = 0; candidate < total; ++candidate) {
    std::vector<std::uint8_t> rel(static_cast<std::size_t>(bits));
    for (int b = 0; b < bits; ++b) rel[static_cast<std::size_t>(b)] = candidate >> b & 1;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < m && ok; ++y) {
        if (!rel[idx(x, y, m)]) continue;
        for (int y2 = 0; y2 < m && ok; ++y2)
          if (target.leq(y, y2) && !rel[idx(x, y2, m)]) ok = false;
        for (int x2 = 0; x2 < n && ok; ++x2)
          if (source.leq(x2, x) && !rel[idx(x2, y, m)]) ok = false;
      }
    if (ok) out.push_back(Distributor::from_matrix(source, target, std::move(rel)));
  }
  return out;
}

}  // namespace finord
