#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "aclat/lattice.hpp"
#include "aclat/poset.hpp"

namespace aclat {

/// Brute-force isomorphism utilities for small instances (up to ~8 elements).

/// The lexicographically least strict-order adjacency bitstring over all
/// relabellings; two posets are isomorphic iff their codes agree.
std::vector<bool> canonical_code(const Poset& p);

/// One representative per isomorphism class of n-element posets, labelled
/// x0..x{n-1} with a natural labelling (i < j in the order implies i < j as ids).
std::vector<Poset> posets_up_to_isomorphism(std::size_t n);

/// A bijection phi with x <= y iff phi(x) <= phi(y), found by backtracking.
std::optional<std::vector<ElementId>> find_order_isomorphism(const Poset& p, const Poset& q);

inline bool order_isomorphic(const Poset& p, const Poset& q) { return find_order_isomorphism(p, q).has_value(); }
inline bool lattice_isomorphic(const Lattice& a, const Lattice& b) { return order_isomorphic(a.order(), b.order()); }

}  // namespace aclat
