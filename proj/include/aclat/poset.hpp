#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace aclat {

using ElementId = std::size_t;
using Relation = std::vector<std::vector<bool>>;
using OrderedPair = std::pair<ElementId, ElementId>;

/// A finite partial order on labelled elements 0..n-1.
///
/// Values are immutable once built; every constructor path validates
/// reflexivity, antisymmetry and transitivity. A finite poset carries the
/// discrete topology, so it is also a finite Priestley space and every subset
/// is clopen.
class Poset {
 public:
  Poset() = default;

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  const std::string& label(ElementId i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  bool leq(ElementId i, ElementId j) const noexcept { return leq_[i * size() + j] != 0; }
  bool less(ElementId i, ElementId j) const noexcept { return i != j && leq(i, j); }
  bool comparable(ElementId i, ElementId j) const noexcept { return leq(i, j) || leq(j, i); }

  std::optional<ElementId> find(std::string_view label) const;
  /// Throws UnknownLabel.
  ElementId index_of(std::string_view label) const;

  Relation relation() const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  friend Poset validate_poset(std::vector<std::string>, const Relation&);

  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
};

/// Accepts the relation as given. Throws ReflexivityViolation,
/// AntisymmetryViolation or TransitivityViolation naming a witness, and
/// DuplicateLabel when labels repeat.
Poset validate_poset(std::vector<std::string> labels, const Relation& leq);

/// Applies the reflexive-transitive closure, then validates.
Poset close_and_validate(std::vector<std::string> labels, Relation leq);

/// Builds the order generated by `lower < upper` pairs.
Poset poset_from_covers(std::vector<std::string> labels, std::span<const OrderedPair> pairs);

/// Same order, new labels.
Poset relabel(const Poset& p, std::vector<std::string> labels);

/// Reflexive-transitive closure (Warshall).
Relation reflexive_transitive_closure(Relation leq);

/// Cover pairs (i, j): i < j with nothing strictly between, sorted lexicographically.
std::vector<OrderedPair> covers(const Poset& p);

/// Lexicographically least (x, y) in `subset` with x < y, if any.
std::optional<OrderedPair> has_comparable_pair(const Poset& p, std::span<const ElementId> subset);
bool is_antichain(const Poset& p, std::span<const ElementId> subset);

/// An order ideal of a poset with at most 63 elements, one bit per element.
struct DownSet {
  std::uint64_t bits = 0;

  bool contains(ElementId i) const noexcept { return ((bits >> i) & 1U) != 0; }
  std::size_t cardinality() const noexcept;
  std::vector<ElementId> members() const;
  bool subset_of(const DownSet& other) const noexcept { return (bits & ~other.bits) == 0; }

  /// (cardinality, bits)
  friend std::strong_ordering operator<=>(const DownSet& a, const DownSet& b) noexcept;
  friend bool operator==(const DownSet&, const DownSet&) = default;
};

inline constexpr std::size_t kDefaultMaxPosetElements = 20;
inline constexpr std::size_t kDefaultMaxDownSets = 1U << 16;
inline constexpr std::size_t kDefaultMaxProductSize = 4096;

bool is_down_set(const Poset& p, std::uint64_t bits);

/// All order ideals sorted by (cardinality, bits). Throws CapExceeded when the
/// poset has more than `max_elements` elements or more than `max_down_sets`
/// ideals turn up.
std::vector<DownSet> down_sets(const Poset& p,
                               std::size_t max_elements = kDefaultMaxPosetElements,
                               std::size_t max_down_sets = kDefaultMaxDownSets);

/// Componentwise order on P x Q. Element (i, j) has id i * |Q| + j and label "p,q".
Poset poset_product(const Poset& p, const Poset& q, std::size_t max_size = kDefaultMaxProductSize);

struct Chain {
  std::vector<ElementId> elements;  // strictly increasing

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(ElementId e) const;
  friend bool operator==(const Chain&, const Chain&) = default;
};

bool is_chain(const Poset& p, std::span<const ElementId> subset);

/// Extends {start} greedily: repeatedly inserts the least-index element that is
/// comparable with every current member, until none remains.
Chain greedy_maximal_chain(const Poset& p, ElementId start);

/// True iff no element outside the chain is comparable with all its members.
bool is_maximal_chain(const Poset& p, const Chain& c);

struct DensityCheck {
  bool dense = true;
  std::optional<OrderedPair> witness;  // a cover pair of the chain with nothing between
};

/// Throws NotAChain when the members are not totally ordered.
DensityCheck is_dense_chain(const Poset& p, std::span<const ElementId> members);
DensityCheck is_dense_chain(const Poset& p, const Chain& c);
DensityCheck is_dense_chain(const Poset& p);

}  // namespace aclat
