#include "aclat/duality.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

#include "aclat/error.hpp"

namespace aclat {

namespace {

std::string set_label(const std::vector<std::string>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += labels[i];
  }
  return out + "}";
}

std::uint64_t bit(ElementId i) { return std::uint64_t{1} << i; }

}  // namespace

std::vector<ElementId> PrimeIdeal::members() const {
  std::vector<ElementId> out;
  for (ElementId i = 0; i < member.size(); ++i)
    if (member[i]) out.push_back(i);
  return out;
}

std::vector<ElementId> join_irreducibles(const Lattice& l) {
  std::vector<std::size_t> lower_covers(l.size());
  for (auto [lo, hi] : covers(l.order())) ++lower_covers[hi];
  std::vector<ElementId> out;
  for (ElementId x = 0; x < l.size(); ++x)
    if (x != l.bottom() && lower_covers[x] == 1) out.push_back(x);
  return out;
}

bool is_prime_ideal(const Lattice& l, const std::vector<bool>& member) {
  const std::size_t n = l.size();
  const auto count = static_cast<std::size_t>(std::count(member.begin(), member.end(), true));
  if (count == 0 || count == n) return false;
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) {
      if (member[a] && l.leq(b, a) && !member[b]) return false;
      if (member[a] && member[b] && !member[l.join(a, b)]) return false;
      if (member[l.meet(a, b)] && !member[a] && !member[b]) return false;
    }
  return true;
}

PrimeIdealSpace prime_ideals(const Lattice& l, std::size_t max_size) {
  if (l.size() > max_size)
    throw Error(ErrorKind::CapExceeded, "lattice of size " + std::to_string(l.size()) + " exceeds the cap of " +
                                            std::to_string(max_size));
  PrimeIdealSpace out;
  out.join_irreducibles = join_irreducibles(l);
  std::vector<std::string> labels;
  for (ElementId j : out.join_irreducibles) {
    PrimeIdeal ideal{std::vector<bool>(l.size())};
    std::vector<std::string> member_labels;
    for (ElementId a = 0; a < l.size(); ++a)
      if (!l.leq(j, a)) {
        ideal.member[a] = true;
        member_labels.push_back(l.label(a));
      }
    out.ideals.push_back(std::move(ideal));
    labels.push_back(set_label(member_labels));
  }
  const std::size_t k = out.ideals.size();
  Relation r(k, std::vector<bool>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) r[i][j] = l.leq(out.join_irreducibles[i], out.join_irreducibles[j]);
  out.poset = validate_poset(std::move(labels), r);
  return out;
}

ElementId DownSetLattice::index_of(const DownSet& d) const {
  auto it = std::lower_bound(sets.begin(), sets.end(), d);
  if (it == sets.end() || *it != d) throw Error(ErrorKind::UnknownLabel, "not a down-set of this space");
  return static_cast<ElementId>(it - sets.begin());
}

DownSetLattice clopen_downset_lattice(const Poset& x, std::size_t max_elements, std::size_t max_down_sets) {
  DownSetLattice out;
  out.sets = down_sets(x, max_elements, max_down_sets);
  const std::size_t n = out.sets.size();
  std::unordered_map<std::uint64_t, ElementId> id_of;
  std::vector<std::string> labels;
  for (ElementId i = 0; i < n; ++i) {
    id_of.emplace(out.sets[i].bits, i);
    std::vector<std::string> member_labels;
    for (ElementId e : out.sets[i].members()) member_labels.push_back(x.label(e));
    labels.push_back(set_label(member_labels));
  }
  Relation r(n, std::vector<bool>(n));
  std::vector<ElementId> meet(n * n), join(n * n);
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) {
      r[a][b] = out.sets[a].subset_of(out.sets[b]);
      meet[a * n + b] = id_of.at(out.sets[a].bits & out.sets[b].bits);
      join[a * n + b] = id_of.at(out.sets[a].bits | out.sets[b].bits);
    }
  out.lattice = Lattice::from_trusted_tables(validate_poset(std::move(labels), r), std::move(meet), std::move(join), 0,
                                             n - 1);
  return out;
}

DualityWitness birkhoff_roundtrip(const Lattice& l, std::size_t max_size) {
  DualityWitness w;
  w.dual = prime_ideals(l, max_size);
  w.bidual = clopen_downset_lattice(w.dual.poset);
  const Lattice& e = w.bidual.lattice;
  auto fail = [](const std::string& what) { throw Error(ErrorKind::RoundTripFailure, what); };

  w.forward.resize(l.size());
  for (ElementId a = 0; a < l.size(); ++a) {
    DownSet d;
    for (ElementId k = 0; k < w.dual.ideals.size(); ++k)
      if (!w.dual.ideals[k].contains(a)) d.bits |= bit(k);
    if (!is_down_set(w.dual.poset, d.bits)) fail("image of " + l.label(a) + " is not a down-set");
    w.forward[a] = w.bidual.index_of(d);
  }
  if (e.size() != l.size()) fail("|E(D(L))| = " + std::to_string(e.size()) + " but |L| = " + std::to_string(l.size()));
  w.backward.assign(e.size(), e.size());
  for (ElementId a = 0; a < l.size(); ++a) {
    if (w.backward[w.forward[a]] != e.size()) fail("map is not injective at " + l.label(a));
    w.backward[w.forward[a]] = a;
  }
  if (!is_bounded_homomorphism(l, e, w.forward)) fail("map does not preserve meet, join and bounds");
  w.checked = true;
  return w;
}

SpaceRoundTrip space_roundtrip(const Poset& x, std::size_t max_elements) {
  SpaceRoundTrip out;
  out.lattice = clopen_downset_lattice(x, max_elements);
  out.dual = prime_ideals(out.lattice.lattice);
  auto fail = [](const std::string& what) { throw Error(ErrorKind::RoundTripFailure, what); };

  const auto& sets = out.lattice.sets;
  for (ElementId p = 0; p < x.size(); ++p) {
    std::vector<bool> member(sets.size());
    for (ElementId u = 0; u < sets.size(); ++u) member[u] = !sets[u].contains(p);
    auto it = std::find(out.dual.ideals.begin(), out.dual.ideals.end(), PrimeIdeal{member});
    if (it == out.dual.ideals.end()) fail("image of " + x.label(p) + " is not a prime ideal");
    out.forward.push_back(static_cast<ElementId>(it - out.dual.ideals.begin()));
  }
  if (out.dual.ideals.size() != x.size()) fail("|D(E(X))| differs from |X|");
  for (ElementId p = 0; p < x.size(); ++p)
    for (ElementId q = 0; q < x.size(); ++q) {
      if (p != q && out.forward[p] == out.forward[q]) fail("map is not injective");
      if (x.leq(p, q) != out.dual.poset.leq(out.forward[p], out.forward[q]))
        fail("map does not reflect the order at " + x.label(p) + ", " + x.label(q));
    }
  out.checked = true;
  return out;
}

bool boolean_iff_antichain(const Poset& x, const DownSetLattice& ex, const DownSet& u, const DownSet& v) {
  if (!u.subset_of(v)) throw Error(ErrorKind::NotComparable, "U is not a subset of V");
  const DownSet difference{v.bits & ~u.bits};
  const bool antichain = is_antichain(x, difference.members());
  const Lattice& e = ex.lattice;
  const bool boolean = is_boolean_interval(e, interval(e, ex.index_of(u), ex.index_of(v)));
  if (antichain != boolean)
    throw Error(ErrorKind::EquivalenceMismatch, "V\\U antichain=" + std::to_string(antichain) +
                                                    " but [U,V] Boolean=" + std::to_string(boolean));
  return antichain;
}

bool boolean_iff_antichain(const Poset& x, const DownSet& u, const DownSet& v) {
  return boolean_iff_antichain(x, clopen_downset_lattice(x), u, v);
}

SpaceVerdict affine_complete_space(const Poset& x, std::size_t max_elements) {
  const DownSetLattice ex = clopen_downset_lattice(x, max_elements);

  // Subsets in (size, index) order; the first nonempty antichain is a singleton.
  SpaceVerdict verdict;
  if (!x.empty()) {
    verdict.affine_complete = false;
    verdict.witness = {0};
  }

  bool pairs_criterion = true;
  for (const DownSet& v : ex.sets) {
    for (const DownSet& u : ex.sets)
      if (u != v && u.subset_of(v) && boolean_iff_antichain(x, ex, u, v)) {
        pairs_criterion = false;
        break;
      }
    if (!pairs_criterion) break;
  }
  const bool algebraic = gratzer_verdict(ex.lattice).affine_complete;
  if (pairs_criterion != verdict.affine_complete || algebraic != verdict.affine_complete)
    throw Error(ErrorKind::EquivalenceMismatch, "space criterion, down-set pair criterion and E(X) disagree");
  return verdict;
}

FreeProduct free_product(const Lattice& l1, const Lattice& l2, std::size_t max_elements) {
  FreeProduct f;
  f.dual1 = prime_ideals(l1);
  f.dual2 = prime_ideals(l2);
  // Points of D(L1) x D(L2) are labelled x<i>y<j> to keep E(...) labels readable.
  auto numbered = [](const Poset& p, const std::string& prefix) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < p.size(); ++i) labels.push_back(prefix + std::to_string(i + 1));
    return relabel(p, std::move(labels));
  };
  const Poset product = poset_product(numbered(f.dual1.poset, "x"), numbered(f.dual2.poset, "y"), max_elements);
  std::vector<std::string> point_labels;
  for (const auto& l : product.labels()) {
    std::string joined = l;
    joined.erase(std::remove(joined.begin(), joined.end(), ','), joined.end());
    point_labels.push_back(std::move(joined));
  }
  f.dual_product = relabel(product, std::move(point_labels));
  f.lattice = clopen_downset_lattice(f.dual_product, max_elements);
  const std::size_t n2 = f.dual2.poset.size();

  // inject1(a) = preimage under the first projection of {I : a not in I}.
  auto inject = [&](const Lattice& l, const PrimeIdealSpace& dual, bool first) {
    std::vector<ElementId> map(l.size());
    for (ElementId a = 0; a < l.size(); ++a) {
      DownSet d;
      for (ElementId k = 0; k < f.dual_product.size(); ++k) {
        const ElementId coord = first ? k / n2 : k % n2;
        if (!dual.ideals[coord].contains(a)) d.bits |= bit(k);
      }
      map[a] = f.lattice.index_of(d);
    }
    return map;
  };
  f.inject1 = inject(l1, f.dual1, true);
  f.inject2 = inject(l2, f.dual2, false);

  auto check = [&](const Lattice& l, const std::vector<ElementId>& map, bool other_trivial, const char* which) {
    if (!is_bounded_homomorphism(l, f.lattice.lattice, map))
      throw Error(ErrorKind::RoundTripFailure, std::string(which) + " is not a (0,1)-homomorphism");
    if (other_trivial) return;
    auto sorted = map;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorKind::RoundTripFailure, std::string(which) + " is not injective");
  };
  check(l1, f.inject1, l2.size() == 1, "first injection");
  check(l2, f.inject2, l1.size() == 1, "second injection");
  return f;
}

std::vector<std::vector<ElementId>> bounded_homomorphisms(const Lattice& from, const Lattice& to,
                                                          std::size_t budget) {
  const auto generators = join_irreducibles(from);
  std::vector<ElementId> value(generators.size());
  std::vector<std::vector<ElementId>> out;
  std::size_t visited = 0;

  auto extend = [&]() {
    std::vector<ElementId> h(from.size(), to.bottom());
    for (ElementId x = 0; x < from.size(); ++x)
      for (std::size_t g = 0; g < generators.size(); ++g)
        if (from.leq(generators[g], x)) h[x] = to.join(h[x], value[g]);
    if (is_bounded_homomorphism(from, to, h)) out.push_back(std::move(h));
  };
  auto assign = [&](auto&& self, std::size_t g) -> void {
    if (++visited > budget)
      throw Error(ErrorKind::BudgetExceeded, "homomorphism search exceeded " + std::to_string(budget) + " steps");
    if (g == generators.size()) {
      extend();
      return;
    }
    for (ElementId c = 0; c < to.size(); ++c) {
      bool monotone = true;
      for (std::size_t k = 0; k < g && monotone; ++k) {
        if (from.leq(generators[k], generators[g])) monotone = to.leq(value[k], c);
        if (monotone && from.leq(generators[g], generators[k])) monotone = to.leq(c, value[k]);
      }
      if (!monotone) continue;
      value[g] = c;
      self(self, g + 1);
    }
  };
  assign(assign, 0);
  std::sort(out.begin(), out.end());
  return out;
}

CoproductCheck verify_coproduct_universal(const Lattice& l1, const Lattice& l2, const FreeProduct& f,
                                          const Lattice& m, std::size_t budget) {
  const auto homs1 = bounded_homomorphisms(l1, m, budget);
  const auto homs2 = bounded_homomorphisms(l2, m, budget);
  const auto homs_f = bounded_homomorphisms(f.lattice.lattice, m, budget);

  using Pair = std::pair<std::vector<ElementId>, std::vector<ElementId>>;
  std::map<Pair, std::size_t> factorisations;
  for (const auto& h : homs_f) {
    Pair restricted;
    for (ElementId a : f.inject1) restricted.first.push_back(h[a]);
    for (ElementId b : f.inject2) restricted.second.push_back(h[b]);
    ++factorisations[restricted];
  }

  auto describe = [](const std::vector<ElementId>& map) {
    std::string s = "(";
    for (std::size_t i = 0; i < map.size(); ++i) s += (i ? " " : "") + std::to_string(map[i]);
    return s + ")";
  };
  for (const auto& f1 : homs1)
    for (const auto& f2 : homs2) {
      auto it = factorisations.find(Pair{f1, f2});
      const std::size_t count = it == factorisations.end() ? 0 : it->second;
      if (count != 1)
        throw Error(ErrorKind::UniversalityFailure, "pair f1=" + describe(f1) + " f2=" + describe(f2) + " has " +
                                                        std::to_string(count) + " factorisations");
    }
  // Every h restricts to a pair of homomorphisms, so the map h -> (f1, f2) is onto exactly the pairs above.
  if (factorisations.size() != homs1.size() * homs2.size())
    throw Error(ErrorKind::UniversalityFailure, "some h : F -> M restricts to a non-homomorphism pair");
  return CoproductCheck{homs1.size() * homs2.size(), homs_f.size()};
}

}  // namespace aclat
