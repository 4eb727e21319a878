#include <doctest.h>

#include <random>

#include "aclat/error.hpp"
#include "aclat/poset.hpp"
#include "aclat/small_posets.hpp"
#include "expect_error.hpp"
#include "oracles.hpp"

using namespace aclat;
using aclat::testing::kind_of;

TEST_CASE("validation rejects each broken axiom with its own error") {
  Relation r{{true, false}, {false, false}};
  CHECK(kind_of([&] { validate_poset({"a", "b"}, r); }) == ErrorKind::ReflexivityViolation);

  r = {{true, true}, {true, true}};
  CHECK(kind_of([&] { validate_poset({"a", "b"}, r); }) == ErrorKind::AntisymmetryViolation);

  r = {{true, true, false}, {false, true, true}, {false, false, true}};
  try {
    validate_poset({"a", "b", "c"}, r);
    FAIL("accepted a non-transitive relation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TransitivityViolation);
    CHECK(std::string(e.detail()).find("a <= b <= c") != std::string::npos);
  }

  CHECK(kind_of([] { validate_poset({"a", "a"}, {{true, false}, {false, true}}); }) == ErrorKind::DuplicateLabel);
}

TEST_CASE("closure of a 3-chain's covers") {
  Relation r{{false, true, false}, {false, false, true}, {false, false, false}};
  auto p = close_and_validate({"a", "b", "c"}, r);
  CHECK(p.leq(0, 2));
  CHECK(covers(p) == std::vector<OrderedPair>{{0, 1}, {1, 2}});
}

TEST_CASE("covers round-trip through closure for every poset with at most 5 elements") {
  for (std::size_t n = 0; n <= 5; ++n)
    for (const auto& p : posets_up_to_isomorphism(n)) {
      auto cs = covers(p);
      auto q = poset_from_covers(p.labels(), cs);
      CHECK(q == p);
      // no cover is implied by the others
      for (std::size_t drop = 0; drop < cs.size(); ++drop) {
        auto fewer = cs;
        fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
        CHECK_FALSE(poset_from_covers(p.labels(), fewer) == p);
      }
    }
}

TEST_CASE("isomorphism class counts") {
  const std::size_t expected[] = {1, 1, 2, 5, 16, 63};
  for (std::size_t n = 0; n <= 5; ++n) CHECK(posets_up_to_isomorphism(n).size() == expected[n]);
}

TEST_CASE("antichain test agrees with pairwise incomparability on every subset") {
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& p : posets_up_to_isomorphism(n))
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        std::vector<ElementId> members;
        for (ElementId i = 0; i < n; ++i)
          if ((s >> i) & 1U) members.push_back(i);
        bool pairwise = true;
        for (auto x : members)
          for (auto y : members)
            if (x != y && p.comparable(x, y)) pairwise = false;
        CHECK(is_antichain(p, members) == pairwise);
      }
}

TEST_CASE("least comparable pair is reported") {
  auto p = oracle::poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  std::vector<ElementId> all{2, 1, 0};
  CHECK(has_comparable_pair(p, all) == OrderedPair{0, 1});
  CHECK(has_comparable_pair(p, std::vector<ElementId>{}) == std::nullopt);
}

TEST_CASE("down-sets of small examples") {
  CHECK(down_sets(Poset{}).size() == 1);
  CHECK(down_sets(catalog::antichain_poset(2)).size() == 4);
  CHECK(down_sets(catalog::chain_poset(3)).size() == 4);
  auto n = oracle::poset({"a", "b", "c", "d"}, {{"a", "c"}, {"b", "c"}, {"b", "d"}});
  CHECK(down_sets(n).size() == 8);
}

TEST_CASE("down-set enumeration matches the subset filter") {
  for (std::size_t n = 0; n <= 5; ++n)
    for (const auto& p : posets_up_to_isomorphism(n)) {
      std::vector<std::uint64_t> got;
      for (auto d : down_sets(p)) got.push_back(d.bits);
      CHECK(got == oracle::down_sets_by_filter(p));
    }
  std::mt19937 rng(7);
  for (int round = 0; round < 40; ++round) {
    auto p = oracle::random_poset(rng, 4 + round % 7, 0.3);
    std::vector<std::uint64_t> got;
    for (auto d : down_sets(p)) got.push_back(d.bits);
    CHECK(got == oracle::down_sets_by_filter(p));
  }
}

TEST_CASE("down-set caps") {
  CHECK(kind_of([] { down_sets(catalog::antichain_poset(21)); }) == ErrorKind::CapExceeded);
  CHECK(kind_of([] { down_sets(catalog::antichain_poset(10), 20, 100); }) == ErrorKind::CapExceeded);
  CHECK(down_sets(catalog::antichain_poset(10), 20, 1024).size() == 1024);
}

TEST_CASE("product order is componentwise") {
  auto c2 = catalog::chain_poset(2);
  auto sq = poset_product(c2, c2);
  CHECK(sq.size() == 4);
  CHECK(sq.label(1) == "c0,c1");
  CHECK(covers(sq).size() == 4);
  CHECK_FALSE(sq.comparable(1, 2));
  CHECK(order_isomorphic(poset_product(catalog::antichain_poset(1), catalog::chain_poset(3)), catalog::chain_poset(3)));
  CHECK(kind_of([] { poset_product(catalog::antichain_poset(70), catalog::antichain_poset(70)); }) ==
        ErrorKind::CapExceeded);
}

TEST_CASE("greedy chains are maximal by brute force") {
  auto brute_maximal = [](const Poset& p, const Chain& c) {
    // no chain strictly containing c exists among all subsets
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << p.size()); ++s) {
      std::vector<ElementId> members;
      bool superset = true;
      for (ElementId i = 0; i < p.size(); ++i)
        if ((s >> i) & 1U) members.push_back(i);
      for (auto e : c.elements) superset &= ((s >> e) & 1U) != 0;
      if (superset && members.size() > c.size() && is_chain(p, members)) return false;
    }
    return true;
  };
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& p : posets_up_to_isomorphism(n))
      for (ElementId s = 0; s < n; ++s) {
        auto c = greedy_maximal_chain(p, s);
        CHECK(c.contains(s));
        CHECK(is_chain(p, c.elements));
        for (std::size_t i = 1; i < c.size(); ++i) CHECK(p.less(c.elements[i - 1], c.elements[i]));
        CHECK(is_maximal_chain(p, c));
        CHECK(brute_maximal(p, c));
      }
}

TEST_CASE("density of finite chains") {
  auto c3 = catalog::chain_poset(3);
  auto d = is_dense_chain(c3);
  CHECK_FALSE(d.dense);
  CHECK(d.witness == OrderedPair{0, 1});
  CHECK(is_dense_chain(catalog::chain_poset(1)).dense);
  CHECK(is_dense_chain(Poset{}).dense);
  CHECK(kind_of([] { is_dense_chain(catalog::antichain_poset(2)); }) == ErrorKind::NotAChain);
}

TEST_CASE("labels") {
  auto p = catalog::chain_poset(2);
  CHECK(p.index_of("c1") == 1);
  CHECK(kind_of([&] { p.index_of("zz"); }) == ErrorKind::UnknownLabel);
  auto q = relabel(p, {"lo", "hi"});
  CHECK(q.leq(q.index_of("lo"), q.index_of("hi")));
}
