#include <doctest.h>

#include <random>

#include "aclat/catalog.hpp"
#include "aclat/congruence.hpp"
#include "expect_error.hpp"
#include "oracles.hpp"

using namespace aclat;
using aclat::testing::kind_of;

namespace {

std::vector<ElementId> table_of(const Lattice& l, std::size_t arity, auto&& f) {
  std::vector<ElementId> t;
  LatticeFunction shape(l.size(), arity, std::vector<ElementId>(tuple_count(l.size(), arity), 0));
  for (std::size_t i = 0; i < shape.tuple_count(); ++i) t.push_back(f(shape.tuple(i)));
  return t;
}

}  // namespace

TEST_CASE("congruence basics") {
  Congruence c({3, 3, 7});
  CHECK(c.block_of() == std::vector<std::size_t>{0, 0, 1});
  CHECK(c.block_count() == 2);
  CHECK(c.related(0, 1));
  CHECK(Congruence::identity(3).block_count() == 3);
  CHECK(Congruence::full(3).block_count() == 1);
  CHECK(congruence_join(Congruence({0, 0, 1, 2}), Congruence({0, 1, 1, 2})) == Congruence({0, 0, 0, 1}));
}

TEST_CASE("congruence counts") {
  CHECK(all_congruences(catalog::chain_lattice(3)).size() == 4);
  CHECK(all_congruences(catalog::boolean4()).size() == 4);
  CHECK(all_congruences(Lattice{}).size() == 1);
  CHECK(kind_of([] { all_congruences(catalog::chain_lattice(9)); }) == ErrorKind::CapExceeded);
}

TEST_CASE("all congruences match the partition filter") {
  for (const auto& [name, l] : oracle::extended_pool()) {
    if (l.size() > 6) continue;
    CAPTURE(name);
    std::set<std::vector<std::size_t>> got;
    for (const auto& c : all_congruences(l)) {
      CHECK(is_congruence(l, c));
      got.insert(c.block_of());
    }
    CHECK(got == oracle::congruences_by_filter(l));
  }
}

TEST_CASE("principal congruences are least") {
  for (const auto& [name, l] : oracle::extended_pool()) {
    if (l.size() > 6) continue;
    CAPTURE(name);
    for (ElementId a = 0; a < l.size(); ++a)
      for (ElementId b = 0; b < l.size(); ++b)
        CHECK(principal_congruence(l, a, b).block_of() == oracle::least_congruence_by_filter(l, a, b));
  }
}

TEST_CASE("compatibility agrees with the all-pairs check on every congruence") {
  std::mt19937 rng(11);
  for (const auto& [name, l] : oracle::extended_pool()) {
    if (l.size() > 5) continue;
    CAPTURE(name);
    const auto congruences = oracle::congruences_by_filter(l);
    for (std::size_t arity = 1; arity <= 2; ++arity) {
      const std::size_t count = tuple_count(l.size(), arity);
      std::uniform_int_distribution<ElementId> pick(0, l.size() - 1);
      for (int round = 0; round < 300; ++round) {
        std::vector<ElementId> table(count);
        for (auto& v : table) v = pick(rng);
        bool expected = true;
        for (const auto& c : congruences) expected &= oracle::preserves_all_pairs(l, table, arity, c);
        auto got = is_compatible(l, LatticeFunction(l.size(), arity, table));
        CHECK(got.compatible == expected);
        if (!got.compatible) {
          REQUIRE(got.counterexample);
          const auto& cx = *got.counterexample;
          CHECK(is_congruence(l, cx.congruence));
          LatticeFunction f(l.size(), arity, table);
          CHECK_FALSE(cx.congruence.related(f(cx.lhs), f(cx.rhs)));
        }
      }
    }
  }
}

TEST_CASE("jump function on C3 fails compatibility") {
  auto c3 = catalog::chain_lattice(3);
  LatticeFunction jump(3, 1, {0, 2, 2});
  auto r = is_compatible(c3, jump);
  CHECK_FALSE(r.compatible);
  REQUIRE(r.counterexample);
  CHECK(r.counterexample->congruence.block_of() == std::vector<std::size_t>{0, 0, 1});
  CHECK(r.counterexample->lhs == std::vector<ElementId>{0});
  CHECK(r.counterexample->rhs == std::vector<ElementId>{1});
}

TEST_CASE("function tables") {
  LatticeFunction f(3, 2, {0, 1, 2, 0, 1, 2, 2, 2, 2});
  CHECK(f.tuple(5) == std::vector<ElementId>{1, 2});
  std::vector<ElementId> args{2, 0};
  CHECK(f.index_of(args) == 6);
  CHECK(kind_of([] { tuple_count(10, 7, 1000); }) == ErrorKind::BudgetExceeded);
  CHECK(tuple_count(4, 2) == 16);
}

TEST_CASE("polynomial DNF of meet and constants") {
  auto c3 = catalog::chain_lattice(3);
  auto meet = table_of(c3, 2, [&](const std::vector<ElementId>& x) { return c3.meet(x[0], x[1]); });
  auto dnf = polynomial_dnf(c3, LatticeFunction(3, 2, meet));
  REQUIRE(dnf);
  CHECK(dnf->coefficients == std::vector<ElementId>{0, 0, 0, 2});

  auto join_m = table_of(c3, 1, [&](const std::vector<ElementId>& x) { return c3.join(x[0], 1); });
  dnf = polynomial_dnf(c3, LatticeFunction(3, 1, join_m));
  REQUIRE(dnf);
  CHECK(dnf->coefficients == std::vector<ElementId>{1, 2});
  std::vector<ElementId> args{0};
  CHECK(dnf->evaluate(c3, args) == 1);

  CHECK_FALSE(polynomial_dnf(c3, LatticeFunction(3, 1, {1, 0, 0})));
}

TEST_CASE("polynomial DNF succeeds exactly on the clone, exhaustively for |L| <= 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto l = catalog::chain_lattice(n);
    for (std::size_t arity = 1; arity <= 2; ++arity) {
      const auto clone = oracle::polynomial_clone(l, arity);
      const std::size_t count = tuple_count(n, arity);
      std::vector<ElementId> table(count, 0);
      for (bool more = true; more;) {
        const bool succeeded = polynomial_dnf(l, LatticeFunction(n, arity, table)).has_value();
        CHECK(succeeded == (clone.count(table) == 1));
        more = false;
        for (std::size_t i = 0; i < count && !more; ++i) {
          if (++table[i] < n) more = true;
          else table[i] = 0;
        }
      }
    }
  }
}

TEST_CASE("polynomial DNF on four-element lattices") {
  for (const auto& l : {catalog::chain_lattice(4), catalog::boolean4()}) {
    for (std::size_t arity = 1; arity <= 2; ++arity) {
      const auto clone = oracle::polynomial_clone(l, arity);
      for (const auto& table : clone) {
        CHECK(polynomial_dnf(l, LatticeFunction(4, arity, table)));
        CHECK(is_compatible(l, LatticeFunction(4, arity, table)).compatible);
      }
      // every coefficient vector evaluates to a clone member, so success implies membership
      const std::size_t masks = std::size_t{1} << arity;
      std::vector<ElementId> coeffs(masks, 0);
      for (bool more = true; more;) {
        PolynomialDNF p{arity, coeffs};
        auto table = table_of(l, arity, [&](const std::vector<ElementId>& x) { return p.evaluate(l, x); });
        CHECK(clone.count(table) == 1);
        more = false;
        for (std::size_t i = 0; i < masks && !more; ++i) {
          if (++coeffs[i] < 4) more = true;
          else coeffs[i] = 0;
        }
      }
    }
  }
}

TEST_CASE("non-polynomial compatible witnesses") {
  CHECK_FALSE(compatible_nonpolynomial_witness(Lattice{}));
  auto c3 = catalog::chain_lattice(3);
  auto w = compatible_nonpolynomial_witness(c3);
  REQUIRE(w);
  CHECK(w->table() == std::vector<ElementId>{1, 0, 0});

  for (const auto& [name, l] : oracle::extended_pool()) {
    if (l.size() < 2) continue;
    CAPTURE(name);
    auto f = compatible_nonpolynomial_witness(l);
    REQUIRE(f);
    bool compatible = true;
    for (const auto& c : oracle::congruences_by_filter(l))
      compatible &= oracle::preserves_all_pairs(l, f->table(), f->arity(), c);
    CHECK(compatible);
    CHECK(oracle::polynomial_clone(l, f->arity()).count(f->table()) == 0);
  }
}

TEST_CASE("principal congruences of covers decide unary compatibility exhaustively") {
  for (const auto& [name, l] : oracle::extended_pool()) {
    if (l.size() > 5) continue;
    CAPTURE(name);
    const auto every = all_congruences(l);
    const std::size_t n = l.size();
    std::vector<ElementId> table(n, 0);
    for (bool more = true; more;) {
      LatticeFunction f(n, 1, table);
      bool full = true;
      for (const auto& c : every) full &= preserves_congruence(f, c).compatible;
      CHECK(is_compatible(l, f).compatible == full);
      more = false;
      for (std::size_t i = 0; i < n && !more; ++i) {
        if (++table[i] < n) more = true;
        else table[i] = 0;
      }
    }
  }
}

TEST_CASE("verdict and witness agree on the pool") {
  for (const auto& [name, l] : oracle::extended_pool()) {
    CAPTURE(name);
    CHECK(gratzer_verdict(l).affine_complete == !compatible_nonpolynomial_witness(l).has_value());
  }
}
