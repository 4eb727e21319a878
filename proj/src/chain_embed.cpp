#include "aclat/chain_embed.hpp"

#include <algorithm>
#include <bit>

#include "aclat/error.hpp"

namespace aclat {

Lattice adjoin_bounds(const Poset& p) {
  const std::size_t n = p.size();
  auto has_bound = [&](ElementId a, ElementId b, bool lower) {
    auto is_bound = [&](ElementId c) { return lower ? p.leq(c, a) && p.leq(c, b) : p.leq(a, c) && p.leq(b, c); };
    for (ElementId c = 0; c < n; ++c) {
      if (!is_bound(c)) continue;
      bool best = true;
      for (ElementId d = 0; d < n && best; ++d) best = !is_bound(d) || (lower ? p.leq(d, c) : p.leq(c, d));
      if (best) return true;
    }
    return false;
  };
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = a + 1; b < n; ++b) {
      if (!has_bound(a, b, true))
        throw Error(ErrorKind::NotALattice, p.label(a) + " and " + p.label(b) + " have no meet");
      if (!has_bound(a, b, false))
        throw Error(ErrorKind::NotALattice, p.label(a) + " and " + p.label(b) + " have no join");
    }

  bool has_bottom = false, has_top = false;
  for (ElementId a = 0; a < n; ++a) {
    bool below_all = true, above_all = true;
    for (ElementId b = 0; b < n; ++b) {
      below_all = below_all && p.leq(a, b);
      above_all = above_all && p.leq(b, a);
    }
    has_bottom = has_bottom || below_all;
    has_top = has_top || above_all;
  }
  if (has_bottom && has_top) return lattice_from_order(p);

  auto fresh = [&](std::string name) {
    while (p.find(name)) name += "'";
    return name;
  };
  std::vector<std::string> labels = p.labels();
  const std::size_t m = n + (has_bottom ? 0 : 1) + (has_top ? 0 : 1);
  Relation r(m, std::vector<bool>(m));
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) r[a][b] = p.leq(a, b);
  ElementId next = n;
  if (!has_bottom) {
    labels.push_back(fresh("bot"));
    for (ElementId b = 0; b < m; ++b) r[next][b] = true;
    ++next;
  }
  if (!has_top) {
    labels.push_back(fresh("top"));
    for (ElementId a = 0; a < m; ++a) r[a][next] = true;
  }
  return lattice_from_order(validate_poset(std::move(labels), r));
}

PowersetEmbedding powerset_embedding(const Lattice& l) {
  PowersetEmbedding out;
  out.bounded = adjoin_bounds(l.order());
  out.points = prime_ideals(out.bounded);
  if (out.points.ideals.size() > 63) throw Error(ErrorKind::CapExceeded, "more than 63 prime ideals");
  const Lattice& b = out.bounded;
  for (ElementId a = 0; a < l.size(); ++a) {
    const ElementId in_bounded = b.index_of(l.label(a));
    DownSet d;
    for (ElementId k = 0; k < out.points.ideals.size(); ++k)
      if (!out.points.ideals[k].contains(in_bounded)) d.bits |= std::uint64_t{1} << k;
    out.image.push_back(d);
  }

  auto fail = [](const std::string& what) { throw Error(ErrorKind::RoundTripFailure, what); };
  const std::uint64_t everything =
      out.points.ideals.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << out.points.ideals.size()) - 1;
  if (out.image[l.bottom()].bits != 0 || out.image[l.top()].bits != everything)
    fail("bounds are not sent to the empty set and X");
  for (ElementId a = 0; a < l.size(); ++a)
    for (ElementId c = 0; c < l.size(); ++c) {
      if (a != c && out.image[a] == out.image[c]) fail("powerset embedding is not injective");
      if (out.image[l.meet(a, c)].bits != (out.image[a].bits & out.image[c].bits)) fail("meet is not sent to intersection");
      if (out.image[l.join(a, c)].bits != (out.image[a].bits | out.image[c].bits)) fail("join is not sent to union");
    }
  return out;
}

std::vector<Rational> characteristic_embedding(std::size_t point_count, std::uint64_t subset) {
  std::vector<Rational> chi(point_count, Rational(0));
  for (std::size_t x = 0; x < point_count; ++x)
    if ((subset >> x) & 1U) chi[x] = Rational(1);
  return chi;
}

std::vector<std::vector<Rational>> q01_tuple_embedding(const Lattice& l) {
  const PowersetEmbedding pe = powerset_embedding(l);
  const std::size_t points = pe.points.ideals.size();
  std::vector<std::vector<Rational>> image;
  for (const DownSet& d : pe.image) image.push_back(characteristic_embedding(points, d.bits));

  auto pointwise = [&](const std::vector<Rational>& u, const std::vector<Rational>& v, bool take_min) {
    std::vector<Rational> w(points);
    for (std::size_t x = 0; x < points; ++x) w[x] = take_min ? std::min(u[x], v[x]) : std::max(u[x], v[x]);
    return w;
  };
  auto fail = [](const std::string& what) { throw Error(ErrorKind::RoundTripFailure, what); };
  if (image[l.bottom()] != std::vector<Rational>(points, Rational(0)) ||
      image[l.top()] != std::vector<Rational>(points, Rational(1)))
    fail("bounds are not sent to the constant tuples");
  for (ElementId a = 0; a < l.size(); ++a)
    for (ElementId c = 0; c < l.size(); ++c) {
      if (a != c && image[a] == image[c]) fail("tuple embedding is not injective");
      if (image[l.meet(a, c)] != pointwise(image[a], image[c], true)) fail("meet is not sent to pointwise min");
      if (image[l.join(a, c)] != pointwise(image[a], image[c], false)) fail("join is not sent to pointwise max");
    }
  return image;
}

Rational SternBrocotEnumeration::at(std::uint64_t index) const {
  const std::uint64_t level_bits = static_cast<std::uint64_t>(std::bit_width(index + 1)) - 1;  // path length
  if (level_bits > 62) throw Error(ErrorKind::RationalOverflow, "Stern-Brocot depth exceeds 62");
  const std::uint64_t path = index + 1 - (std::uint64_t{1} << level_bits);
  Rational lo(0), hi(1), cur = mediant(lo, hi);
  for (std::uint64_t i = level_bits; i-- > 0;) {
    if ((path >> i) & 1U) {
      lo = cur;
    } else {
      hi = cur;
    }
    cur = mediant(lo, hi);
  }
  return cur;
}

std::optional<std::uint64_t> SternBrocotEnumeration::index_of(const Rational& q) const {
  if (q <= Rational(0) || q >= Rational(1)) return std::nullopt;
  Rational lo(0), hi(1), cur = mediant(lo, hi);
  std::uint64_t path = 0, depth = 0;
  while (cur != q) {
    if (++depth > 62) return std::nullopt;
    path <<= 1;
    if (q < cur) {
      hi = cur;
    } else {
      path |= 1U;
      lo = cur;
    }
    cur = mediant(lo, hi);
  }
  return (std::uint64_t{1} << depth) - 1 + path;
}

SternBrocotEnumeration q01_enumeration_stern_brocot() { return {}; }

namespace {

class MidpointOracle : public ChainOracle {
 public:
  explicit MidpointOracle(bool dyadic_only) : dyadic_only_(dyadic_only) {}

  std::string name() const override { return dyadic_only_ ? "dyadic" : "q01"; }
  Point bottom() const override { return Rational(0); }
  Point top() const override { return Rational(1); }
  bool less(const Point& p, const Point& q) const override {
    check(p);
    check(q);
    return p < q;
  }
  std::optional<Point> between(const Point& p, const Point& q) const override {
    if (!less(p, q)) return std::nullopt;
    return midpoint(p, q);
  }

 private:
  void check(const Point& p) const {
    if (!p.in_unit_interval() || (dyadic_only_ && !p.is_dyadic()))
      throw Error(ErrorKind::OracleInconsistency, p.str() + " is not a point of the " + name() + " chain");
  }

  bool dyadic_only_;
};

class FiniteChainOracle : public ChainOracle {
 public:
  explicit FiniteChainOracle(std::size_t k) : k_(k) {}

  std::string name() const override { return "finite:" + std::to_string(k_); }
  Point bottom() const override { return Rational(0); }
  Point top() const override { return k_ <= 1 ? Rational(0) : Rational(1); }
  bool less(const Point& p, const Point& q) const override {
    step(p);
    step(q);
    return p < q;
  }
  std::optional<Point> between(const Point& p, const Point& q) const override {
    if (!less(p, q)) return std::nullopt;
    const std::int64_t next = step(p) + 1;
    if (next >= step(q)) return std::nullopt;
    return Rational(next, static_cast<std::int64_t>(k_ - 1));
  }

 private:
  std::int64_t step(const Point& p) const {
    if (k_ <= 1) {
      if (p != Rational(0)) throw Error(ErrorKind::OracleInconsistency, p.str() + " is not a point of " + name());
      return 0;
    }
    const Rational scaled = p * Rational(static_cast<std::int64_t>(k_ - 1));
    if (scaled.den() != 1 || !p.in_unit_interval())
      throw Error(ErrorKind::OracleInconsistency, p.str() + " is not a point of " + name());
    return scaled.num();
  }

  std::size_t k_;
};

}  // namespace

std::unique_ptr<ChainOracle> dyadic_oracle() { return std::make_unique<MidpointOracle>(true); }
std::unique_ptr<ChainOracle> q01_oracle() { return std::make_unique<MidpointOracle>(false); }
std::unique_ptr<ChainOracle> finite_chain_oracle(std::size_t k) { return std::make_unique<FiniteChainOracle>(k); }

EmbeddingState embed_q01(const ChainOracle& oracle, std::size_t n) {
  const SternBrocotEnumeration a;
  EmbeddingState state;
  const Rational bottom = oracle.bottom(), top = oracle.top();
  if (!oracle.less(bottom, top))
    throw Error(ErrorKind::OracleInconsistency, "bottom is not strictly below top in " + oracle.name());
  state.pairs.push_back({std::nullopt, Rational(0), bottom, PlacementCase::Endpoint});
  state.pairs.push_back({std::nullopt, Rational(1), top, PlacementCase::Endpoint});

  auto density_violation = [&](std::uint64_t index, const Rational& q, const Rational& lo, const Rational& hi) {
    return Error(ErrorKind::DensityViolation, oracle.name() + " has no point strictly between " + lo.str() + " and " +
                                                  hi.str() + " (placing " + q.str() + " at index " +
                                                  std::to_string(index) + ")");
  };

  for (std::uint64_t index = 0; index < n; ++index) {
    const Rational q = a.at(index);
    Placement placed{index, q, Rational(0), PlacementCase::Base};
    if (index == 0) {
      auto p = oracle.interior();
      if (!p) throw density_violation(index, q, bottom, top);
      placed.point = *p;
    } else {
      // Tightest placed neighbours of q among a_0..a_{index-1}.
      const Placement* lower = nullptr;
      const Placement* upper = nullptr;
      for (auto it = state.pairs.begin() + 2; it != state.pairs.end(); ++it) {
        if (it->rational < q && (!lower || lower->rational < it->rational)) lower = &*it;
        if (q < it->rational && (!upper || it->rational < upper->rational)) upper = &*it;
      }
      placed.rule = !upper ? PlacementCase::AboveAll : !lower ? PlacementCase::BelowAll : PlacementCase::Between;
      const Rational lo = lower ? lower->point : bottom;
      const Rational hi = upper ? upper->point : top;
      auto p = oracle.between(lo, hi);
      if (!p) throw density_violation(index, q, lo, hi);
      placed.point = *p;
    }
    // The new point must fall on the same side of every placed point as q does.
    for (const Placement& old : state.pairs) {
      const bool order_ok = (old.rational < q) == oracle.less(old.point, placed.point) &&
                            (q < old.rational) == oracle.less(placed.point, old.point);
      if (!order_ok)
        throw Error(ErrorKind::OracleInconsistency, oracle.name() + " placed " + q.str() + " at " +
                                                        placed.point.str() + ", out of order with " +
                                                        old.rational.str() + " at " + old.point.str());
    }
    state.pairs.push_back(placed);
  }
  state.pairs_checked = check_order_consistency(oracle, state);
  return state;
}

std::size_t check_order_consistency(const ChainOracle& oracle, const EmbeddingState& state) {
  std::size_t checked = 0;
  for (std::size_t i = 0; i < state.pairs.size(); ++i)
    for (std::size_t j = i + 1; j < state.pairs.size(); ++j) {
      const Placement& x = state.pairs[i];
      const Placement& y = state.pairs[j];
      if ((x.rational < y.rational) != oracle.less(x.point, y.point) ||
          (y.rational < x.rational) != oracle.less(y.point, x.point))
        throw Error(ErrorKind::OracleInconsistency, x.rational.str() + " and " + y.rational.str() + " are out of order");
      ++checked;
    }
  return checked;
}

ChainDensityReport maximal_chain_density_report(const Lattice& l) {
  ChainDensityReport r;
  r.chain = greedy_maximal_chain(l.order(), l.bottom());
  r.contains_bounds = r.chain.contains(l.bottom()) && r.chain.contains(l.top());
  if (!r.contains_bounds) throw Error(ErrorKind::NotAChain, "maximal chain misses a bound");
  r.density = is_dense_chain(l.order(), r.chain);
  r.verdict = gratzer_verdict(l);
  r.consistent = r.density.dense || !r.verdict.affine_complete;
  return r;
}

}  // namespace aclat
