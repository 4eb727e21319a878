#include "aclat/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "aclat/error.hpp"

namespace aclat {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }
  Congruence partition() {
    std::vector<std::size_t> roots(parent_.size());
    for (std::size_t i = 0; i < parent_.size(); ++i) roots[i] = find(i);
    return Congruence(std::move(roots));
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Congruence::Congruence(std::vector<std::size_t> block_of) : block_of_(std::move(block_of)) {
  std::vector<std::size_t> seen;
  for (auto& b : block_of_) {
    auto it = std::find(seen.begin(), seen.end(), b);
    if (it == seen.end()) {
      seen.push_back(b);
      b = seen.size() - 1;
    } else {
      b = static_cast<std::size_t>(it - seen.begin());
    }
  }
  blocks_ = seen.size();
}

Congruence Congruence::identity(std::size_t n) {
  std::vector<std::size_t> b(n);
  std::iota(b.begin(), b.end(), 0);
  return Congruence(std::move(b));
}

Congruence Congruence::full(std::size_t n) { return Congruence(std::vector<std::size_t>(n, 0)); }

std::vector<std::vector<ElementId>> Congruence::blocks() const {
  std::vector<std::vector<ElementId>> out(blocks_);
  for (ElementId a = 0; a < block_of_.size(); ++a) out[block_of_[a]].push_back(a);
  return out;
}

bool is_congruence(const Lattice& l, const Congruence& c) {
  const std::size_t n = l.size();
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) {
      if (!c.related(a, b)) continue;
      for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y) {
          if (!c.related(x, y)) continue;
          if (!c.related(l.meet(a, x), l.meet(b, y)) || !c.related(l.join(a, x), l.join(b, y))) return false;
        }
    }
  return true;
}

Congruence congruence_join(const Congruence& a, const Congruence& b) {
  UnionFind uf(a.size());
  for (ElementId x = 0; x < a.size(); ++x)
    for (ElementId y = x + 1; y < a.size(); ++y)
      if (a.related(x, y) || b.related(x, y)) uf.unite(x, y);
  return uf.partition();
}

Congruence principal_congruence(const Lattice& l, ElementId a, ElementId b) {
  const std::size_t n = l.size();
  UnionFind uf(n);
  uf.unite(a, b);
  // For lattices, an equivalence closed under every translation x |-> x ^ c
  // and x |-> x v c is already a congruence.
  for (bool changed = true; changed;) {
    changed = false;
    for (ElementId x = 0; x < n; ++x)
      for (ElementId y = x + 1; y < n; ++y) {
        if (uf.find(x) != uf.find(y)) continue;
        for (ElementId c = 0; c < n; ++c) {
          changed |= uf.unite(l.meet(x, c), l.meet(y, c));
          changed |= uf.unite(l.join(x, c), l.join(y, c));
        }
      }
  }
  return uf.partition();
}

std::vector<Congruence> all_congruences(const Lattice& l, std::size_t max_size) {
  if (l.size() > max_size)
    throw Error(ErrorKind::CapExceeded, "congruence enumeration over " + std::to_string(l.size()) +
                                            " elements exceeds the cap of " + std::to_string(max_size));
  std::vector<Congruence> generators;
  for (auto [lo, hi] : covers(l.order())) generators.push_back(principal_congruence(l, lo, hi));

  std::set<Congruence> found{Congruence::identity(l.size())};
  std::vector<Congruence> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<Congruence> next;
    for (const auto& c : frontier)
      for (const auto& g : generators) {
        Congruence j = congruence_join(c, g);
        if (found.insert(j).second) next.push_back(std::move(j));
      }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

LatticeFunction::LatticeFunction(std::size_t lattice_size, std::size_t arity, std::vector<ElementId> table)
    : n_(lattice_size), arity_(arity), table_(std::move(table)) {
  std::size_t expected = 1;
  for (std::size_t i = 0; i < arity_; ++i) expected *= n_;
  if (table_.size() != expected)
    throw Error(ErrorKind::ParseError, "function table has " + std::to_string(table_.size()) + " entries, expected " +
                                           std::to_string(expected));
  for (ElementId v : table_)
    if (v >= n_) throw Error(ErrorKind::UnknownLabel, "function value out of range");
}

std::size_t LatticeFunction::index_of(std::span<const ElementId> args) const {
  std::size_t idx = 0;
  for (ElementId a : args) idx = idx * n_ + a;
  return idx;
}

ElementId LatticeFunction::operator()(std::span<const ElementId> args) const { return table_[index_of(args)]; }

std::vector<ElementId> LatticeFunction::tuple(std::size_t tuple_index) const {
  std::vector<ElementId> args(arity_);
  for (std::size_t i = arity_; i-- > 0;) {
    args[i] = tuple_index % n_;
    tuple_index /= n_;
  }
  return args;
}

std::size_t tuple_count(std::size_t lattice_size, std::size_t arity, std::size_t budget) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (lattice_size != 0 && count > budget / lattice_size)
      throw Error(ErrorKind::BudgetExceeded, std::to_string(lattice_size) + "^" + std::to_string(arity) +
                                                 " tuples exceed the budget of " + std::to_string(budget));
    count *= lattice_size;
  }
  if (count > budget) throw Error(ErrorKind::BudgetExceeded, "tuple count exceeds the budget");
  return count;
}

CompatibilityResult preserves_congruence(const LatticeFunction& f, const Congruence& c) {
  for (std::size_t t = 0; t < f.tuple_count(); ++t) {
    const auto args = f.tuple(t);
    for (std::size_t pos = 0; pos < f.arity(); ++pos)
      for (ElementId v = 0; v < f.lattice_size(); ++v) {
        if (v == args[pos] || !c.related(v, args[pos])) continue;
        auto other = args;
        other[pos] = v;
        if (!c.related(f.at(t), f(other))) return CompatibilityResult{false, CompatibilityViolation{c, args, other}};
      }
  }
  return CompatibilityResult{};
}

CompatibilityResult is_compatible(const Lattice& l, const LatticeFunction& f, std::size_t budget) {
  tuple_count(l.size(), f.arity(), budget);
  std::vector<Congruence> checked;
  for (auto [lo, hi] : covers(l.order())) {
    Congruence c = principal_congruence(l, lo, hi);
    if (std::find(checked.begin(), checked.end(), c) != checked.end()) continue;
    if (auto r = preserves_congruence(f, c); !r.compatible) return r;
    checked.push_back(std::move(c));
  }
  return CompatibilityResult{};
}

ElementId PolynomialDNF::evaluate(const Lattice& l, std::span<const ElementId> args) const {
  ElementId value = l.bottom();
  for (std::size_t s = 0; s < coefficients.size(); ++s) {
    ElementId term = coefficients[s];
    for (std::size_t i = 0; i < arity; ++i)
      if ((s >> i) & 1U) term = l.meet(term, args[i]);
    value = l.join(value, term);
  }
  return value;
}

std::optional<PolynomialDNF> polynomial_dnf(const Lattice& l, const LatticeFunction& f, std::size_t budget) {
  tuple_count(l.size(), f.arity(), budget);
  if (f.arity() >= 63) throw Error(ErrorKind::BudgetExceeded, "arity too large");
  PolynomialDNF dnf{f.arity(), std::vector<ElementId>(std::size_t{1} << f.arity())};
  std::vector<ElementId> chi(f.arity());
  for (std::size_t s = 0; s < dnf.coefficients.size(); ++s) {
    for (std::size_t i = 0; i < f.arity(); ++i) chi[i] = ((s >> i) & 1U) ? l.top() : l.bottom();
    dnf.coefficients[s] = f(chi);
  }
  for (std::size_t t = 0; t < f.tuple_count(); ++t)
    if (dnf.evaluate(l, f.tuple(t)) != f.at(t)) return std::nullopt;
  return dnf;
}

namespace {

bool is_witness(const Lattice& l, const LatticeFunction& f) {
  return is_compatible(l, f).compatible && !polynomial_dnf(l, f).has_value();
}

}  // namespace

std::optional<LatticeFunction> compatible_nonpolynomial_witness(const Lattice& l, std::size_t max_search_size) {
  if (l.size() < 2) return std::nullopt;
  const std::size_t n = l.size();

  if (auto verdict = gratzer_verdict(l); verdict.witness) {
    const Interval& box = *verdict.witness;
    std::vector<ElementId> table(n);
    for (ElementId x = 0; x < n; ++x)
      table[x] = *complement_in_interval(l, box, l.meet(l.join(x, box.lo), box.hi));
    LatticeFunction f(n, 1, std::move(table));
    if (is_witness(l, f)) return f;
  }

  if (n > max_search_size)
    throw Error(ErrorKind::CapExceeded, "exhaustive witness search over " + std::to_string(n) +
                                            " elements exceeds the cap of " + std::to_string(max_search_size));
  std::vector<ElementId> table(n, 0);
  for (;;) {
    LatticeFunction f(n, 1, table);
    if (is_witness(l, f)) return f;
    std::size_t pos = n;
    while (pos > 0 && ++table[pos - 1] == n) table[--pos] = 0;
    if (pos == 0) break;
  }
  return std::nullopt;
}

}  // namespace aclat
