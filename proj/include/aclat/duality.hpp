#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "aclat/lattice.hpp"
#include "aclat/poset.hpp"

namespace aclat {

/// A prime ideal of a finite lattice as a membership vector over its elements.
struct PrimeIdeal {
  std::vector<bool> member;

  bool contains(ElementId a) const { return member.at(a); }
  std::vector<ElementId> members() const;
  friend bool operator==(const PrimeIdeal&, const PrimeIdeal&) = default;
};

/// The dual space D(L): prime ideals ordered by inclusion. Ideal k is the
/// complement of the principal filter of the k-th join-irreducible.
struct PrimeIdealSpace {
  Poset poset;
  std::vector<PrimeIdeal> ideals;
  std::vector<ElementId> join_irreducibles;  // generator of each ideal
};

/// Nonzero elements with exactly one lower cover, ascending.
std::vector<ElementId> join_irreducibles(const Lattice& l);

/// The definitional test: proper, nonempty, down-closed, join-closed and prime.
bool is_prime_ideal(const Lattice& l, const std::vector<bool>& member);

/// Throws CapExceeded when |L| > max_size.
PrimeIdealSpace prime_ideals(const Lattice& l, std::size_t max_size = kDefaultMaxLatticeSize);

/// E(X) together with the down-set carried by each lattice element.
struct DownSetLattice {
  Lattice lattice;
  std::vector<DownSet> sets;  // sets[id], sorted by (cardinality, bits)

  /// Throws UnknownLabel if `d` is not a down-set of the underlying poset.
  ElementId index_of(const DownSet& d) const;
};

/// E(X) with union as join, intersection as meet, the empty set at the bottom
/// and X at the top. Labels are "{x,y,...}".
DownSetLattice clopen_downset_lattice(const Poset& x, std::size_t max_elements = kDefaultMaxPosetElements,
                                      std::size_t max_down_sets = kDefaultMaxLatticeSize);

/// L -> E(D(L)), a |-> {I : a not in I}, with its inverse.
struct DualityWitness {
  PrimeIdealSpace dual;
  DownSetLattice bidual;
  std::vector<ElementId> forward;
  std::vector<ElementId> backward;
  bool checked = false;
};

/// Throws RoundTripFailure if the map is not a (0,1)-lattice isomorphism.
DualityWitness birkhoff_roundtrip(const Lattice& l, std::size_t max_size = kDefaultMaxLatticeSize);

/// X -> D(E(X)), x |-> {U : x not in U}.
struct SpaceRoundTrip {
  DownSetLattice lattice;
  PrimeIdealSpace dual;
  std::vector<ElementId> forward;
  bool checked = false;
};

/// Throws RoundTripFailure if the map is not an order isomorphism.
SpaceRoundTrip space_roundtrip(const Poset& x, std::size_t max_elements = kDefaultMaxPosetElements);

/// Whether V \ U is an antichain, checked against Booleanness of [U, V] in
/// E(X). Throws NotComparable unless U is a subset of V, and
/// EquivalenceMismatch if the two answers differ.
bool boolean_iff_antichain(const Poset& x, const DownSet& u, const DownSet& v);
bool boolean_iff_antichain(const Poset& x, const DownSetLattice& ex, const DownSet& u, const DownSet& v);

struct SpaceVerdict {
  bool affine_complete = true;
  std::vector<ElementId> witness;  // a nonempty antichain when not affine complete
};

/// A finite space is affine complete iff every nonempty subset contains two
/// distinct comparable points, i.e. iff it is empty. Cross-checked against
/// the down-set pair criterion and gratzer_verdict(E(X)); throws
/// EquivalenceMismatch on disagreement.
SpaceVerdict affine_complete_space(const Poset& x, std::size_t max_elements = kDefaultMaxPosetElements);

/// The coproduct of L1 and L2 realised as E(D(L1) x D(L2)).
struct FreeProduct {
  DownSetLattice lattice;
  PrimeIdealSpace dual1;
  PrimeIdealSpace dual2;
  Poset dual_product;
  std::vector<ElementId> inject1;  // L1 -> F
  std::vector<ElementId> inject2;  // L2 -> F
};

/// Injections are verified to be (0,1)-homomorphisms, and injective whenever
/// the other factor is nontrivial (anything coproduct the one-element lattice
/// collapses). Throws CapExceeded or RoundTripFailure.
FreeProduct free_product(const Lattice& l1, const Lattice& l2, std::size_t max_elements = kDefaultMaxPosetElements);

inline constexpr std::size_t kDefaultHomBudget = 1U << 22;

/// All (0,1)-homomorphisms, lexicographically sorted. Values are chosen on
/// join-irreducibles with monotonicity pruning and extended by joins. Throws
/// BudgetExceeded when more than `budget` partial assignments are visited.
std::vector<std::vector<ElementId>> bounded_homomorphisms(const Lattice& from, const Lattice& to,
                                                          std::size_t budget = kDefaultHomBudget);

struct CoproductCheck {
  std::size_t hom_pairs = 0;         // |Hom(L1, M)| * |Hom(L2, M)|
  std::size_t homs_from_product = 0; // |Hom(F, M)|
};

/// Every pair f1: L1 -> M, f2: L2 -> M factors through exactly one h: F -> M.
/// Throws UniversalityFailure naming the offending pair.
CoproductCheck verify_coproduct_universal(const Lattice& l1, const Lattice& l2, const FreeProduct& f, const Lattice& m,
                                          std::size_t budget = kDefaultHomBudget);

}  // namespace aclat
