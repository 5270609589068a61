#include "finord/poset.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <set>
#include <sstream>
#include <unordered_map>

namespace finord {

namespace {

std::string join_labels(const std::vector<std::string>& labels, const char* sep = ", ") {
  std::ostringstream out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out << sep;
    out << labels[i];
  }
  return out.str();
}

void check_poset_axioms(const std::vector<std::string>& labels,
                        const std::vector<std::uint8_t>& leq) {
  const int n = static_cast<int>(labels.size());
  auto at = [&](int i, int j) { return leq[static_cast<std::size_t>(i) * n + j] != 0; };
  for (int i = 0; i < n; ++i) {
    if (!at(i, i))
      fail(errc::internal_verification_failure, "order matrix is not reflexive at " + labels[i]);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j && at(i, j) && at(j, i)) {
        std::vector<std::string> cycle;
        for (int k = 0; k < n; ++k)
          if (at(i, k) && at(k, i)) cycle.push_back(labels[k]);
        fail(errc::antisymmetry_violation, "cycle among " + join_labels(cycle), cycle);
      }
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!at(i, j)) continue;
      for (int k = 0; k < n; ++k)
        if (at(j, k) && !at(i, k))
          fail(errc::internal_verification_failure,
               "order matrix is not transitive at " + labels[i] + " <= " + labels[j] + " <= " +
                   labels[k]);
    }
}

}  // namespace

FinitePoset FinitePoset::from_pairs(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& generating_pairs) {
  const int n = static_cast<int>(elements.size());
  {
    std::set<std::string> seen;
    for (const auto& e : elements)
      if (!seen.insert(e).second)
        fail(errc::duplicate_label, "duplicate element label: " + e, {e});
  }
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < n; ++i) index.emplace(elements[static_cast<std::size_t>(i)], i);

  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  auto set = [&](int i, int j) { leq[static_cast<std::size_t>(i) * n + j] = 1; };
  for (int i = 0; i < n; ++i) set(i, i);
  for (const auto& [a, b] : generating_pairs) {
    auto ia = index.find(a);
    if (ia == index.end()) fail(errc::unknown_label, "unknown element label: " + a, {a});
    auto ib = index.find(b);
    if (ib == index.end()) fail(errc::unknown_label, "unknown element label: " + b, {b});
    set(ia->second, ib->second);
  }

  // Warshall saturation to the reflexive-transitive closure.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!leq[static_cast<std::size_t>(i) * n + k]) continue;
      for (int j = 0; j < n; ++j)
        if (leq[static_cast<std::size_t>(k) * n + j]) set(i, j);
    }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (leq[static_cast<std::size_t>(i) * n + j] && leq[static_cast<std::size_t>(j) * n + i]) {
        std::vector<std::string> cycle;
        for (int k = 0; k < n; ++k)
          if (leq[static_cast<std::size_t>(i) * n + k] && leq[static_cast<std::size_t>(k) * n + i])
            cycle.push_back(elements[static_cast<std::size_t>(k)]);
        fail(errc::antisymmetry_violation, "cycle among " + join_labels(cycle), cycle);
      }

  return FinitePoset(std::move(elements), std::move(leq));
}

FinitePoset FinitePoset::from_leq_matrix(std::vector<std::string> elements,
                                         std::vector<std::uint8_t> leq) {
  if (leq.size() != elements.size() * elements.size())
    fail(errc::internal_verification_failure, "order matrix size mismatch");
  {
    std::set<std::string> seen;
    for (const auto& e : elements)
      if (!seen.insert(e).second)
        fail(errc::duplicate_label, "duplicate element label: " + e, {e});
  }
  check_poset_axioms(elements, leq);
  return FinitePoset(std::move(elements), std::move(leq));
}

FinitePoset FinitePoset::discrete(std::vector<std::string> elements) {
  const std::size_t n = elements.size();
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
  return from_leq_matrix(std::move(elements), std::move(leq));
}

FinitePoset FinitePoset::chain(std::vector<std::string> elements) {
  const std::size_t n = elements.size();
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) leq[i * n + j] = 1;
  return from_leq_matrix(std::move(elements), std::move(leq));
}

int FinitePoset::index_of(std::string_view label) const {
  auto found = find(label);
  if (!found) fail(errc::unknown_label, "unknown element label: " + std::string(label),
                   {std::string(label)});
  return *found;
}

std::optional<int> FinitePoset::find(std::string_view label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[static_cast<std::size_t>(i)] == label) return i;
  return std::nullopt;
}

FinitePoset FinitePoset::dual() const {
  const int n = size();
  std::vector<std::uint8_t> t(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t[static_cast<std::size_t>(j) * n + i] = leq_[static_cast<std::size_t>(i) * n + j];
  return FinitePoset(labels_, std::move(t));
}

std::vector<int> FinitePoset::down_closure(const std::vector<int>& s) const {
  std::vector<int> out;
  for (int y = 0; y < size(); ++y)
    for (int x : s)
      if (leq(y, x)) {
        out.push_back(y);
        break;
      }
  return out;
}

std::vector<int> FinitePoset::up_closure(const std::vector<int>& s) const {
  std::vector<int> out;
  for (int y = 0; y < size(); ++y)
    for (int x : s)
      if (leq(x, y)) {
        out.push_back(y);
        break;
      }
  return out;
}

std::vector<std::string> FinitePoset::down_closure_labels(
    const std::vector<std::string>& s) const {
  std::vector<int> idx;
  idx.reserve(s.size());
  for (const auto& l : s) idx.push_back(index_of(l));
  std::vector<std::string> out;
  for (int i : down_closure(idx)) out.push_back(label(i));
  return out;
}

std::vector<std::string> FinitePoset::up_closure_labels(const std::vector<std::string>& s) const {
  std::vector<int> idx;
  idx.reserve(s.size());
  for (const auto& l : s) idx.push_back(index_of(l));
  std::vector<std::string> out;
  for (int i : up_closure(idx)) out.push_back(label(i));
  return out;
}

std::uint64_t FinitePoset::down_closure_mask(std::uint64_t s) const {
  assert(size() <= 64);
  std::uint64_t out = 0;
  for (int x = 0; x < size(); ++x)
    if (s >> x & 1) out |= down_mask_of(x);
  return out;
}

std::uint64_t FinitePoset::up_closure_mask(std::uint64_t s) const {
  assert(size() <= 64);
  std::uint64_t out = 0;
  for (int x = 0; x < size(); ++x)
    if (s >> x & 1) out |= up_mask_of(x);
  return out;
}

std::uint64_t FinitePoset::down_mask_of(int i) const {
  assert(size() <= 64);
  std::uint64_t out = 0;
  for (int y = 0; y < size(); ++y)
    if (leq(y, i)) out |= std::uint64_t{1} << y;
  return out;
}

std::uint64_t FinitePoset::up_mask_of(int i) const {
  assert(size() <= 64);
  std::uint64_t out = 0;
  for (int y = 0; y < size(); ++y)
    if (leq(i, y)) out |= std::uint64_t{1} << y;
  return out;
}

bool FinitePoset::is_down_set(std::uint64_t mask) const {
  for (int x = 0; x < size(); ++x)
    if (mask >> x & 1) {
      if ((down_mask_of(x) & ~mask) != 0) return false;
    }
  return true;
}

bool FinitePoset::is_up_set(std::uint64_t mask) const {
  for (int x = 0; x < size(); ++x)
    if (mask >> x & 1) {
      if ((up_mask_of(x) & ~mask) != 0) return false;
    }
  return true;
}

std::vector<std::pair<int, int>> FinitePoset::hasse() const {
  std::vector<std::pair<int, int>> covers;
  const int n = size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!less(x, y)) continue;
      bool interpolated = false;
      for (int z = 0; z < n && !interpolated; ++z)
        if (less(x, z) && less(z, y)) interpolated = true;
      if (!interpolated) covers.emplace_back(x, y);
    }
  return covers;
}

FinitePoset FinitePoset::restricted_to(const std::vector<int>& carrier) const {
  const int m = static_cast<int>(carrier.size());
  std::vector<std::string> labels;
  labels.reserve(carrier.size());
  for (int i : carrier) labels.push_back(label(i));
  std::vector<std::uint8_t> sub(static_cast<std::size_t>(m) * m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      sub[static_cast<std::size_t>(a) * m + b] = leq(carrier[static_cast<std::size_t>(a)],
                                                     carrier[static_cast<std::size_t>(b)]);
  return FinitePoset(std::move(labels), std::move(sub));
}

MonotoneMap::MonotoneMap(FinitePoset source, FinitePoset target, std::vector<int> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (assignment_.size() != static_cast<std::size_t>(source_.size()))
    fail(errc::not_monotone, "assignment does not cover the source carrier");
  for (int v : assignment_)
    if (v < 0 || v >= target_.size())
      fail(errc::unknown_label, "assignment value out of range");
  for (int i = 0; i < source_.size(); ++i)
    for (int j = 0; j < source_.size(); ++j)
      if (source_.leq(i, j) && !target_.leq((*this)(i), (*this)(j)))
        fail(errc::not_monotone,
             "map is not monotone at " + source_.label(i) + " <= " + source_.label(j),
             {source_.label(i), source_.label(j)});
}

MonotoneMap MonotoneMap::identity(const FinitePoset& p) {
  std::vector<int> id(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) id[static_cast<std::size_t>(i)] = i;
  return MonotoneMap(p, p, std::move(id));
}

MonotoneMap MonotoneMap::constant(const FinitePoset& source, const FinitePoset& target,
                                  int value) {
  return MonotoneMap(source, target,
                     std::vector<int>(static_cast<std::size_t>(source.size()), value));
}

MonotoneMap MonotoneMap::from_labels(
    const FinitePoset& source, const FinitePoset& target,
    const std::vector<std::pair<std::string, std::string>>& assignment) {
  std::vector<int> values(static_cast<std::size_t>(source.size()), -1);
  for (const auto& [from, to] : assignment) {
    int i = source.index_of(from);
    values[static_cast<std::size_t>(i)] = target.index_of(to);
  }
  for (int i = 0; i < source.size(); ++i)
    if (values[static_cast<std::size_t>(i)] < 0)
      fail(errc::parse_error, "assignment missing element: " + source.label(i),
           {source.label(i)});
  return MonotoneMap(source, target, std::move(values));
}

MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g) {
  if (f.target() != g.source())
    fail(errc::object_mismatch, "map composition: middle posets differ");
  std::vector<int> values(static_cast<std::size_t>(f.source().size()));
  for (int i = 0; i < f.source().size(); ++i) values[static_cast<std::size_t>(i)] = g(f(i));
  return MonotoneMap(f.source(), g.target(), std::move(values));
}

bool same_order(const FinitePoset& a, const FinitePoset& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> to_b(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) {
    auto j = b.find(a.label(i));
    if (!j) return false;
    to_b[static_cast<std::size_t>(i)] = *j;
  }
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      if (a.leq(i, j) != b.leq(to_b[static_cast<std::size_t>(i)], to_b[static_cast<std::size_t>(j)]))
        return false;
  return true;
}

namespace {

bool extend_isomorphism(const FinitePoset& a, const FinitePoset& b, std::vector<int>& image,
                        std::vector<std::uint8_t>& used, int next) {
  const int n = a.size();
  if (next == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used[static_cast<std::size_t>(cand)]) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev) {
      int pi = image[static_cast<std::size_t>(prev)];
      ok = a.leq(prev, next) == b.leq(pi, cand) && a.leq(next, prev) == b.leq(cand, pi);
    }
    if (!ok) continue;
    image[static_cast<std::size_t>(next)] = cand;
    used[static_cast<std::size_t>(cand)] = 1;
    if (extend_isomorphism(a, b, image, used, next + 1)) return true;
    used[static_cast<std::size_t>(cand)] = 0;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const FinitePoset& a, const FinitePoset& b) {
  if (a.size() != b.size()) return false;
  auto degrees = [](const FinitePoset& p) {
    std::vector<std::pair<int, int>> d;
    for (int i = 0; i < p.size(); ++i) {
      int down = 0, up = 0;
      for (int j = 0; j < p.size(); ++j) {
        if (p.leq(j, i)) ++down;
        if (p.leq(i, j)) ++up;
      }
      d.emplace_back(down, up);
    }
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(a) != degrees(b)) return false;
  std::vector<int> image(static_cast<std::size_t>(a.size()), -1);
  std::vector<std::uint8_t> used(static_cast<std::size_t>(a.size()), 0);
  return extend_isomorphism(a, b, image, used, 0);
}

std::vector<FinitePoset> enumerate_posets(int n, int max_n) {
  if (n < 0 || n > max_n) {
    std::ostringstream msg;
    msg << "poset enumeration bound exceeded: n = " << n << ", bound = " << max_n;
    fail(errc::bound_exceeded, msg.str());
  }
  static const char* kNames = "abcdefghijklmnopqrstuvwxyz";
  assert(n <= 26);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.emplace_back(1, kNames[i]);

  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);

  std::vector<FinitePoset> out;
  const std::uint32_t total = std::uint32_t{1} << slots.size();
  for (std::uint32_t bits = 0; bits < total; ++bits) {
    std::array<std::uint8_t, 8> row{};
    for (int i = 0; i < n; ++i) row[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(1u << i);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (bits >> s & 1)
        row[static_cast<std::size_t>(slots[s].first)] |=
            static_cast<std::uint8_t>(1u << slots[s].second);

    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if ((row[static_cast<std::size_t>(i)] >> j & 1) &&
            (row[static_cast<std::size_t>(j)] >> i & 1))
          ok = false;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if ((row[static_cast<std::size_t>(i)] >> j & 1) &&
            (row[static_cast<std::size_t>(j)] & ~row[static_cast<std::size_t>(i)]))
          ok = false;
    if (!ok) continue;

    std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        leq[static_cast<std::size_t>(i) * n + j] = row[static_cast<std::size_t>(i)] >> j & 1;
    out.push_back(FinitePoset::from_leq_matrix(labels, std::move(leq)));
  }
  return out;
}

std::vector<MonotoneMap> enumerate_monotone_maps(const FinitePoset& source,
                                                 const FinitePoset& target) {
  std::vector<MonotoneMap> out;
  const int n = source.size();
  const int m = target.size();
  if (n == 0) {
    out.push_back(MonotoneMap(source, target, {}));
    return out;
  }
  if (m == 0) return out;
  std::vector<int> values(static_cast<std::size_t>(n), 0);
  while (true) {
    bool monotone = true;
    for (int i = 0; i < n && monotone; ++i)
      for (int j = 0; j < n && monotone; ++j)
        if (source.leq(i, j) &&
            !target.leq(values[static_cast<std::size_t>(i)], values[static_cast<std::size_t>(j)]))
          monotone = false;
    if (monotone) out.push_back(MonotoneMap(source, target, values));
    int pos = n - 1;
    while (pos >= 0 && values[static_cast<std::size_t>(pos)] == m - 1) {
      values[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++values[static_cast<std::size_t>(pos)];
  }
  return out;
}

}  // namespace finord
