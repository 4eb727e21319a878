#include "aclat/lattice.hpp"

#include <algorithm>

#include "aclat/error.hpp"

namespace aclat {

namespace {

Poset singleton_order() { return validate_poset({"0"}, Relation{{true}}); }

std::optional<ElementId> greatest_lower_bound(const Poset& p, ElementId a, ElementId b) {
  auto lower = [&](ElementId c) { return p.leq(c, a) && p.leq(c, b); };
  for (ElementId c = 0; c < p.size(); ++c) {
    if (!lower(c)) continue;
    bool greatest = true;
    for (ElementId d = 0; d < p.size() && greatest; ++d) greatest = !lower(d) || p.leq(d, c);
    if (greatest) return c;
  }
  return std::nullopt;
}

std::optional<ElementId> least_upper_bound(const Poset& p, ElementId a, ElementId b) {
  auto upper = [&](ElementId c) { return p.leq(a, c) && p.leq(b, c); };
  for (ElementId c = 0; c < p.size(); ++c) {
    if (!upper(c)) continue;
    bool least = true;
    for (ElementId d = 0; d < p.size() && least; ++d) least = !upper(d) || p.leq(c, d);
    if (least) return c;
  }
  return std::nullopt;
}

}  // namespace

Lattice::Lattice() : order_(singleton_order()), meet_{0}, join_{0} {}

Lattice Lattice::from_trusted_tables(Poset order, std::vector<ElementId> meet, std::vector<ElementId> join,
                                     ElementId bottom, ElementId top) {
  Lattice l;
  l.order_ = std::move(order);
  l.meet_ = std::move(meet);
  l.join_ = std::move(join);
  l.bottom_ = bottom;
  l.top_ = top;
  return l;
}

Lattice lattice_from_order(const Poset& p) {
  const std::size_t n = p.size();
  if (n == 0) throw Error(ErrorKind::NotALattice, "the empty poset has no bottom");
  std::vector<ElementId> meet(n * n), join(n * n);
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) {
      auto m = greatest_lower_bound(p, a, b);
      if (!m) throw Error(ErrorKind::NotALattice, p.label(a) + " and " + p.label(b) + " have no greatest lower bound");
      auto j = least_upper_bound(p, a, b);
      if (!j) throw Error(ErrorKind::NotALattice, p.label(a) + " and " + p.label(b) + " have no least upper bound");
      meet[a * n + b] = *m;
      join[a * n + b] = *j;
    }
  ElementId bottom = 0, top = 0;
  for (ElementId a = 1; a < n; ++a) {
    bottom = meet[bottom * n + a];
    top = join[top * n + a];
  }
  Lattice l = Lattice::from_trusted_tables(p, std::move(meet), std::move(join), bottom, top);
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      for (ElementId z = 0; z < n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)))
          throw Error(ErrorKind::NotDistributive,
                      "(" + p.label(x) + ", " + p.label(y) + ", " + p.label(z) + ") violates x^(y v z) = (x^y) v (x^z)");
  return l;
}

void verify_lattice_laws(const Lattice& l) {
  const std::size_t n = l.size();
  const Poset& p = l.order();
  auto fail = [&](const std::string& what) { throw Error(ErrorKind::NotALattice, what); };
  for (ElementId x = 0; x < n; ++x) {
    if (!l.leq(l.bottom(), x) || !l.leq(x, l.top())) fail(p.label(x) + " lies outside [bottom, top]");
    if (l.meet(x, x) != x || l.join(x, x) != x) fail("idempotence fails at " + p.label(x));
    for (ElementId y = 0; y < n; ++y) {
      const ElementId m = l.meet(x, y), j = l.join(x, y);
      if (m != l.meet(y, x) || j != l.join(y, x)) fail("commutativity fails at " + p.label(x) + ", " + p.label(y));
      if (l.meet(x, j) != x || l.join(x, m) != x) fail("absorption fails at " + p.label(x) + ", " + p.label(y));
      if (greatest_lower_bound(p, x, y) != m) fail("meet table disagrees with the order at " + p.label(x) + ", " + p.label(y));
      if (least_upper_bound(p, x, y) != j) fail("join table disagrees with the order at " + p.label(x) + ", " + p.label(y));
      for (ElementId z = 0; z < n; ++z) {
        if (l.meet(m, z) != l.meet(x, l.meet(y, z)) || l.join(j, z) != l.join(x, l.join(y, z)))
          fail("associativity fails at " + p.label(x) + ", " + p.label(y) + ", " + p.label(z));
        if (l.meet(x, l.join(y, z)) != l.join(m, l.meet(x, z)))
          throw Error(ErrorKind::NotDistributive, "(" + p.label(x) + ", " + p.label(y) + ", " + p.label(z) + ")");
      }
    }
  }
}

bool Interval::contains(ElementId x) const { return std::binary_search(members.begin(), members.end(), x); }

Interval interval(const Lattice& l, ElementId a, ElementId b) {
  if (!l.leq(a, b)) throw Error(ErrorKind::NotComparable, l.label(a) + " is not below " + l.label(b));
  Interval i{a, b, {}};
  for (ElementId x = 0; x < l.size(); ++x)
    if (l.leq(a, x) && l.leq(x, b)) i.members.push_back(x);
  return i;
}

std::optional<ElementId> complement_in_interval(const Lattice& l, const Interval& i, ElementId x) {
  std::optional<ElementId> found;
  for (ElementId y : i.members) {
    if (l.meet(x, y) != i.lo || l.join(x, y) != i.hi) continue;
    if (found) throw Error(ErrorKind::NotDistributive, l.label(x) + " has two relative complements");
    found = y;
  }
  return found;
}

bool is_boolean_interval(const Lattice& l, const Interval& i) {
  return std::all_of(i.members.begin(), i.members.end(),
                     [&](ElementId x) { return complement_in_interval(l, i, x).has_value(); });
}

AffineVerdict gratzer_verdict(const Lattice& l) {
  for (ElementId lo = 0; lo < l.size(); ++lo)
    for (ElementId hi = 0; hi < l.size(); ++hi) {
      if (lo == hi || !l.leq(lo, hi)) continue;
      Interval i = interval(l, lo, hi);
      if (is_boolean_interval(l, i)) return AffineVerdict{false, std::move(i)};
    }
  return AffineVerdict{true, std::nullopt};
}

Lattice lattice_product(const Lattice& l1, const Lattice& l2, std::size_t max_size) {
  Poset order = poset_product(l1.order(), l2.order(), max_size);
  const std::size_t n2 = l2.size(), n = order.size();
  std::vector<ElementId> meet(n * n), join(n * n);
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) {
      meet[a * n + b] = l1.meet(a / n2, b / n2) * n2 + l2.meet(a % n2, b % n2);
      join[a * n + b] = l1.join(a / n2, b / n2) * n2 + l2.join(a % n2, b % n2);
    }
  return Lattice::from_trusted_tables(std::move(order), std::move(meet), std::move(join),
                                      l1.bottom() * n2 + l2.bottom(), l1.top() * n2 + l2.top());
}

bool interval_boolean_componentwise(const Lattice& l1, const Lattice& l2, const Interval& product_interval) {
  const std::size_t n2 = l2.size();
  const ElementId lo = product_interval.lo, hi = product_interval.hi;
  auto meet = [&](ElementId a, ElementId b) { return l1.meet(a / n2, b / n2) * n2 + l2.meet(a % n2, b % n2); };
  auto join = [&](ElementId a, ElementId b) { return l1.join(a / n2, b / n2) * n2 + l2.join(a % n2, b % n2); };

  // Decided in the product: every member needs a complement relative to [lo, hi].
  bool in_product = true;
  for (ElementId x : product_interval.members) {
    bool has_complement = false;
    for (ElementId y : product_interval.members)
      if (meet(x, y) == lo && join(x, y) == hi) {
        has_complement = true;
        break;
      }
    if (!has_complement) {
      in_product = false;
      break;
    }
  }

  const bool first = is_boolean_interval(l1, interval(l1, lo / n2, hi / n2));
  const bool second = is_boolean_interval(l2, interval(l2, lo % n2, hi % n2));
  if (in_product != (first && second))
    throw Error(ErrorKind::ComponentwiseMismatch,
                "product interval Boolean=" + std::to_string(in_product) + " but coordinates give " +
                    std::to_string(first) + "/" + std::to_string(second));
  return in_product;
}

bool is_bounded_homomorphism(const Lattice& from, const Lattice& to, std::span<const ElementId> map) {
  if (map.size() != from.size()) return false;
  if (map[from.bottom()] != to.bottom() || map[from.top()] != to.top()) return false;
  for (ElementId a = 0; a < from.size(); ++a)
    for (ElementId b = a + 1; b < from.size(); ++b) {
      if (map[from.meet(a, b)] != to.meet(map[a], map[b])) return false;
      if (map[from.join(a, b)] != to.join(map[a], map[b])) return false;
    }
  return true;
}

}  // namespace aclat
