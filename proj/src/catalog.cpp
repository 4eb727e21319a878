#include "aclat/catalog.hpp"

namespace aclat::catalog {

Poset chain_poset(std::size_t k, const std::string& prefix) {
  std::vector<std::string> labels;
  std::vector<OrderedPair> pairs;
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(prefix + std::to_string(i));
    if (i > 0) pairs.emplace_back(i - 1, i);
  }
  return poset_from_covers(std::move(labels), pairs);
}

Poset antichain_poset(std::size_t k, const std::string& prefix) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back(prefix + std::to_string(i));
  return poset_from_covers(std::move(labels), {});
}

Lattice chain_lattice(std::size_t k) {
  if (k <= 1) return Lattice{};
  std::vector<std::string> labels{"0"};
  if (k == 3) {
    labels.push_back("m");
  } else {
    for (std::size_t i = 1; i + 1 < k; ++i) labels.push_back("c" + std::to_string(i));
  }
  labels.push_back("1");
  std::vector<OrderedPair> pairs;
  for (std::size_t i = 1; i < k; ++i) pairs.emplace_back(i - 1, i);
  return lattice_from_order(poset_from_covers(std::move(labels), pairs));
}

Lattice boolean4() {
  const std::vector<OrderedPair> pairs{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  return lattice_from_order(poset_from_covers({"0", "a", "b", "1"}, pairs));
}

Poset m3_order() {
  const std::vector<OrderedPair> pairs{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
  return poset_from_covers({"0", "a", "b", "c", "1"}, pairs);
}

Poset n5_order() {
  const std::vector<OrderedPair> pairs{{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}};
  return poset_from_covers({"0", "a", "b", "c", "1"}, pairs);
}

std::vector<NamedLattice> pool() {
  std::vector<NamedLattice> out;
  for (std::size_t k = 1; k <= 5; ++k) out.push_back({"C" + std::to_string(k), chain_lattice(k)});
  out.push_back({"B4", boolean4()});
  out.push_back({"C2xC3", lattice_product(chain_lattice(2), chain_lattice(3))});
  return out;
}

}  // namespace aclat::catalog
