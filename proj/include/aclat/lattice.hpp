#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aclat/poset.hpp"

namespace aclat {

inline constexpr std::size_t kDefaultMaxLatticeSize = 1024;

/// A finite bounded distributive lattice: an order together with its meet and
/// join tables. Only lattice_from_order and the constructions in this library
/// produce values, so the tables always agree with the order.
class Lattice {
 public:
  /// The one-element lattice.
  Lattice();

  const Poset& order() const noexcept { return order_; }
  std::size_t size() const noexcept { return order_.size(); }
  const std::string& label(ElementId i) const { return order_.label(i); }
  ElementId index_of(std::string_view label) const { return order_.index_of(label); }

  ElementId meet(ElementId a, ElementId b) const noexcept { return meet_[a * size() + b]; }
  ElementId join(ElementId a, ElementId b) const noexcept { return join_[a * size() + b]; }
  ElementId bottom() const noexcept { return bottom_; }
  ElementId top() const noexcept { return top_; }
  bool leq(ElementId a, ElementId b) const noexcept { return order_.leq(a, b); }

  /// Builds from tables that are already known to be correct; used by the
  /// product and down-set constructions.
  static Lattice from_trusted_tables(Poset order, std::vector<ElementId> meet, std::vector<ElementId> join,
                                     ElementId bottom, ElementId top);

 private:
  Poset order_;
  std::vector<ElementId> meet_;
  std::vector<ElementId> join_;
  ElementId bottom_ = 0;
  ElementId top_ = 0;
};

/// Derives meet/join from the order. Throws NotALattice (missing bound, glb or
/// lub, with witness) or NotDistributive (witness triple).
Lattice lattice_from_order(const Poset& p);

/// Checks commutativity, associativity, idempotence, absorption,
/// distributivity, bounds and agreement of the tables with the order.
/// Throws NotALattice or NotDistributive naming the first failure.
void verify_lattice_laws(const Lattice& l);

struct Interval {
  ElementId lo = 0;
  ElementId hi = 0;
  std::vector<ElementId> members;  // ascending ids

  bool proper() const noexcept { return lo != hi; }
  bool contains(ElementId x) const;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Throws NotComparable unless a <= b.
Interval interval(const Lattice& l, ElementId a, ElementId b);

/// The relative complement of x in [lo, hi], if any.
std::optional<ElementId> complement_in_interval(const Lattice& l, const Interval& i, ElementId x);

bool is_boolean_interval(const Lattice& l, const Interval& i);

struct AffineVerdict {
  bool affine_complete = true;
  std::optional<Interval> witness;  // a proper Boolean interval when not affine complete
};

/// Scans proper intervals in (lo, hi) order and reports the first Boolean one.
AffineVerdict gratzer_verdict(const Lattice& l);

/// Componentwise product; (i, j) has id i * |L2| + j and label "i,j".
Lattice lattice_product(const Lattice& l1, const Lattice& l2, std::size_t max_size = kDefaultMaxProductSize);

/// Booleanness of an interval of L1 x L2, decided in the product and checked
/// against the conjunction of the two coordinate intervals. Throws
/// ComponentwiseMismatch if the two answers differ.
bool interval_boolean_componentwise(const Lattice& l1, const Lattice& l2, const Interval& product_interval);

/// True iff `map` (indexed by elements of `from`) preserves meet, join, 0 and 1.
bool is_bounded_homomorphism(const Lattice& from, const Lattice& to, std::span<const ElementId> map);

}  // namespace aclat
