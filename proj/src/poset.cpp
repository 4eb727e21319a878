#include "aclat/poset.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "aclat/error.hpp"

namespace aclat {

std::optional<ElementId> Poset::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<ElementId>(it - labels_.begin());
}

ElementId Poset::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw Error(ErrorKind::UnknownLabel, "no element labelled '" + std::string(label) + "'");
}

Relation Poset::relation() const {
  Relation r(size(), std::vector<bool>(size()));
  for (ElementId i = 0; i < size(); ++i)
    for (ElementId j = 0; j < size(); ++j) r[i][j] = leq(i, j);
  return r;
}

Poset validate_poset(std::vector<std::string> labels, const Relation& leq) {
  const std::size_t n = labels.size();
  if (leq.size() != n)
    throw Error(ErrorKind::ParseError, "relation has " + std::to_string(leq.size()) +
                                           " rows for " + std::to_string(n) + " labels");
  for (const auto& row : leq)
    if (row.size() != n) throw Error(ErrorKind::ParseError, "relation matrix is not square");

  std::set<std::string_view> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw Error(ErrorKind::DuplicateLabel, "label '" + l + "' repeats");

  for (std::size_t i = 0; i < n; ++i)
    if (!leq[i][i]) throw Error(ErrorKind::ReflexivityViolation, labels[i] + " <= " + labels[i] + " fails");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq[i][j] && leq[j][i])
        throw Error(ErrorKind::AntisymmetryViolation,
                    labels[i] + " <= " + labels[j] + " and " + labels[j] + " <= " + labels[i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!leq[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (leq[j][k] && !leq[i][k])
          throw Error(ErrorKind::TransitivityViolation, labels[i] + " <= " + labels[j] + " <= " +
                                                            labels[k] + " but not " + labels[i] +
                                                            " <= " + labels[k]);
    }

  Poset p;
  p.labels_ = std::move(labels);
  p.leq_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.leq_[i * n + j] = leq[i][j] ? 1 : 0;
  return p;
}

Poset relabel(const Poset& p, std::vector<std::string> labels) {
  return validate_poset(std::move(labels), p.relation());
}

Relation reflexive_transitive_closure(Relation leq) {
  const std::size_t n = leq.size();
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (leq[k][j]) leq[i][j] = true;
    }
  return leq;
}

Poset close_and_validate(std::vector<std::string> labels, Relation leq) {
  return validate_poset(std::move(labels), reflexive_transitive_closure(std::move(leq)));
}

Poset poset_from_covers(std::vector<std::string> labels, std::span<const OrderedPair> pairs) {
  const std::size_t n = labels.size();
  Relation r(n, std::vector<bool>(n));
  for (auto [lo, hi] : pairs) {
    if (lo >= n || hi >= n) throw Error(ErrorKind::UnknownLabel, "cover pair refers to a missing element");
    r[lo][hi] = true;
  }
  return close_and_validate(std::move(labels), std::move(r));
}

std::vector<OrderedPair> covers(const Poset& p) {
  std::vector<OrderedPair> out;
  const std::size_t n = p.size();
  for (ElementId i = 0; i < n; ++i)
    for (ElementId j = 0; j < n; ++j) {
      if (!p.less(i, j)) continue;
      bool between = false;
      for (ElementId k = 0; k < n && !between; ++k) between = p.less(i, k) && p.less(k, j);
      if (!between) out.emplace_back(i, j);
    }
  return out;
}

std::optional<OrderedPair> has_comparable_pair(const Poset& p, std::span<const ElementId> subset) {
  std::vector<ElementId> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (ElementId x : s)
    for (ElementId y : s)
      if (p.less(x, y)) return OrderedPair{x, y};
  return std::nullopt;
}

bool is_antichain(const Poset& p, std::span<const ElementId> subset) {
  return !has_comparable_pair(p, subset).has_value();
}

std::size_t DownSet::cardinality() const noexcept { return static_cast<std::size_t>(std::popcount(bits)); }

std::vector<ElementId> DownSet::members() const {
  std::vector<ElementId> out;
  for (std::uint64_t b = bits; b != 0; b &= b - 1) out.push_back(static_cast<ElementId>(std::countr_zero(b)));
  return out;
}

std::strong_ordering operator<=>(const DownSet& a, const DownSet& b) noexcept {
  if (auto c = a.cardinality() <=> b.cardinality(); c != 0) return c;
  return a.bits <=> b.bits;
}

bool is_down_set(const Poset& p, std::uint64_t bits) {
  for (ElementId j = 0; j < p.size(); ++j) {
    if (((bits >> j) & 1U) == 0) continue;
    for (ElementId i = 0; i < p.size(); ++i)
      if (p.leq(i, j) && ((bits >> i) & 1U) == 0) return false;
  }
  return true;
}

namespace {

// Elements sorted so that every element comes after everything below it.
std::vector<ElementId> linear_extension(const Poset& p) {
  std::vector<ElementId> order(p.size());
  std::vector<std::size_t> below(p.size());
  for (ElementId i = 0; i < p.size(); ++i) {
    order[i] = i;
    for (ElementId j = 0; j < p.size(); ++j) below[i] += p.leq(j, i) ? 1 : 0;
  }
  std::stable_sort(order.begin(), order.end(), [&](ElementId a, ElementId b) { return below[a] < below[b]; });
  return order;
}

}  // namespace

std::vector<DownSet> down_sets(const Poset& p, std::size_t max_elements, std::size_t max_down_sets) {
  const std::size_t n = p.size();
  if (n > max_elements || n > 63)
    throw Error(ErrorKind::CapExceeded, "down-set enumeration over " + std::to_string(n) +
                                            " elements exceeds the cap of " + std::to_string(std::min<std::size_t>(max_elements, 63)));

  std::vector<std::uint64_t> strictly_below(n);
  for (ElementId i = 0; i < n; ++i)
    for (ElementId j = 0; j < n; ++j)
      if (p.less(j, i)) strictly_below[i] |= std::uint64_t{1} << j;

  const auto order = linear_extension(p);
  std::vector<DownSet> out;
  // Decide elements along a linear extension; an element may join only when
  // everything below it already has, so each ideal is produced exactly once.
  auto visit = [&](auto&& self, std::size_t depth, std::uint64_t bits) -> void {
    if (depth == n) {
      if (out.size() == max_down_sets)
        throw Error(ErrorKind::CapExceeded, "more than " + std::to_string(max_down_sets) + " down-sets");
      out.push_back(DownSet{bits});
      return;
    }
    const ElementId e = order[depth];
    self(self, depth + 1, bits);
    if ((strictly_below[e] & ~bits) == 0) self(self, depth + 1, bits | (std::uint64_t{1} << e));
  };
  visit(visit, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Poset poset_product(const Poset& p, const Poset& q, std::size_t max_size) {
  const std::size_t n = p.size() * q.size();
  if ((q.size() != 0 && n / q.size() != p.size()) || n > max_size)
    throw Error(ErrorKind::CapExceeded, "product of sizes " + std::to_string(p.size()) + " and " +
                                            std::to_string(q.size()) + " exceeds the cap of " +
                                            std::to_string(max_size));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (ElementId i = 0; i < p.size(); ++i)
    for (ElementId j = 0; j < q.size(); ++j) labels.push_back(p.label(i) + "," + q.label(j));
  Relation r(n, std::vector<bool>(n));
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b)
      r[a][b] = p.leq(a / q.size(), b / q.size()) && q.leq(a % q.size(), b % q.size());
  return validate_poset(std::move(labels), r);
}

bool Chain::contains(ElementId e) const {
  return std::find(elements.begin(), elements.end(), e) != elements.end();
}

bool is_chain(const Poset& p, std::span<const ElementId> subset) {
  for (ElementId x : subset)
    for (ElementId y : subset)
      if (!p.comparable(x, y)) return false;
  return true;
}

Chain greedy_maximal_chain(const Poset& p, ElementId start) {
  if (start >= p.size()) throw Error(ErrorKind::UnknownLabel, "start element out of range");
  std::vector<ElementId> members{start};
  for (;;) {
    std::optional<ElementId> next;
    for (ElementId e = 0; e < p.size() && !next; ++e) {
      if (std::find(members.begin(), members.end(), e) != members.end()) continue;
      if (std::all_of(members.begin(), members.end(), [&](ElementId m) { return p.comparable(e, m); })) next = e;
    }
    if (!next) break;
    members.push_back(*next);
  }
  std::sort(members.begin(), members.end(), [&](ElementId a, ElementId b) { return p.less(a, b); });
  return Chain{std::move(members)};
}

bool is_maximal_chain(const Poset& p, const Chain& c) {
  if (!is_chain(p, c.elements)) return false;
  for (ElementId e = 0; e < p.size(); ++e) {
    if (c.contains(e)) continue;
    if (std::all_of(c.elements.begin(), c.elements.end(), [&](ElementId m) { return p.comparable(e, m); }))
      return false;
  }
  return true;
}

DensityCheck is_dense_chain(const Poset& p, std::span<const ElementId> members) {
  if (auto bad = std::find_if(members.begin(), members.end(),
                              [&](ElementId x) {
                                return std::any_of(members.begin(), members.end(),
                                                   [&](ElementId y) { return !p.comparable(x, y); });
                              });
      bad != members.end()) {
    auto other = *std::find_if(members.begin(), members.end(), [&](ElementId y) { return !p.comparable(*bad, y); });
    throw Error(ErrorKind::NotAChain, p.label(*bad) + " and " + p.label(other) + " are incomparable");
  }
  std::vector<ElementId> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end(), [&](ElementId a, ElementId b) { return p.less(a, b); });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  // In a finite chain consecutive members never have a strict intermediate.
  if (sorted.size() >= 2) return DensityCheck{false, OrderedPair{sorted[0], sorted[1]}};
  return DensityCheck{};
}

DensityCheck is_dense_chain(const Poset& p, const Chain& c) { return is_dense_chain(p, std::span<const ElementId>(c.elements)); }

DensityCheck is_dense_chain(const Poset& p) {
  std::vector<ElementId> all(p.size());
  for (ElementId i = 0; i < p.size(); ++i) all[i] = i;
  return is_dense_chain(p, std::span<const ElementId>(all));
}

}  // namespace aclat
