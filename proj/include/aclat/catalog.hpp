#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "aclat/lattice.hpp"
#include "aclat/poset.hpp"

namespace aclat {

/// Standard small objects used by tests, the acceptance suite and the CLI.
namespace catalog {

/// k-element chain with labels prefix0 < prefix1 < ...
Poset chain_poset(std::size_t k, const std::string& prefix = "c");
Poset antichain_poset(std::size_t k, const std::string& prefix = "a");

/// C_k: labels 0 < ... < 1; interior labels are "m" for k = 3 and c1..c{k-2} otherwise.
Lattice chain_lattice(std::size_t k);
/// B4 = 2 x 2: 0 < a, b < 1.
Lattice boolean4();
/// The five-element diamond 0 < a, b, c < 1 (not distributive).
Poset m3_order();
/// The pentagon 0 < a < c < 1, 0 < b < 1 (not distributive).
Poset n5_order();

struct NamedLattice {
  std::string name;
  Lattice lattice;
};

/// C1..C5, B4 and C2 x C3.
std::vector<NamedLattice> pool();

}  // namespace catalog
}  // namespace aclat
