#include <doctest.h>

#include <filesystem>

#include "aclat/catalog.hpp"
#include "aclat/small_posets.hpp"
#include "aclat/text_format.hpp"
#include "expect_error.hpp"

using namespace aclat;
using aclat::testing::kind_of;

namespace {

const std::filesystem::path kData = ACLAT_TEST_DATA_DIR;

std::string parse_error(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    return e.detail();
  }
  FAIL("parsed");
  return {};
}

}  // namespace

TEST_CASE("posets parse and print back") {
  auto p = parse_poset("# the N\nposet N\nelements: a b c d\ncovers: a<c b<c b<d\n");
  CHECK(p.name == "N");
  CHECK(p.poset.size() == 4);
  CHECK(p.poset.leq(p.poset.index_of("b"), p.poset.index_of("d")));
  CHECK_FALSE(p.poset.comparable(p.poset.index_of("a"), p.poset.index_of("d")));
  auto again = parse_poset(format_poset(p.name, p.poset));
  CHECK(again.poset == p.poset);
  CHECK(format_poset(again.name, again.poset) == format_poset(p.name, p.poset));
}

TEST_CASE("lattices parse and are validated") {
  auto l = parse_lattice("lattice C3\nelements: 0 m 1\ncovers: 0<m m<1\n");
  CHECK(l.name == "C3");
  CHECK(lattice_isomorphic(l.lattice, catalog::chain_lattice(3)));
  CHECK(kind_of([] { parse_lattice("lattice M3\nelements: 0 a b c 1\ncovers: 0<a 0<b 0<c a<1 b<1 c<1\n"); }) ==
        ErrorKind::NotDistributive);
  CHECK(kind_of([] { parse_lattice("lattice V\nelements: 0 a b\ncovers: 0<a 0<b\n"); }) == ErrorKind::NotALattice);
  CHECK(kind_of([] { parse_poset("poset P\nelements: a b\ncovers: a<b b<a\n"); }) ==
        ErrorKind::AntisymmetryViolation);
}

TEST_CASE("parse errors carry line and column") {
  CHECK(parse_error([] { parse_poset("poset P\nelements: a b\ncovers: a<z\n"); }).find("line 3") != std::string::npos);
  auto msg = parse_error([] { parse_poset("poset P\nelements: a b\ncovers: a-b\n"); });
  CHECK(msg.rfind("line 3, column ", 0) == 0);
  CHECK(parse_error([] { parse_poset("elements: a\n"); }).rfind("line 1", 0) == 0);
  parse_error([] { parse_poset("poset P\nelements: a a\ncovers:\n"); });
  parse_error([] { parse_poset("poset P\ncovers: a<b\n"); });
  parse_error([] { parse_object("graph G\n"); });
}

TEST_CASE("objects and files") {
  auto c3 = load_lattice(kData / "c3.lattice");
  CHECK(c3.lattice.size() == 3);
  auto n = load_object(kData / "n.poset");
  CHECK(std::holds_alternative<NamedPoset>(n));
  auto en = load_lattice(kData / "n_downsets.lattice");
  CHECK(en.name == "E(N)");
  CHECK(en.lattice.size() == 8);
  CHECK(kind_of([] { read_file(kData / "missing.lattice"); }) == ErrorKind::IoError);
  CHECK(kind_of([] { write_file("/nonexistent-dir/x.txt", "x"); }) == ErrorKind::IoError);
}

TEST_CASE("function tables") {
  auto c3 = load_lattice(kData / "c3.lattice");
  auto f = parse_function(read_file(kData / "c3_meet.fn"), c3);
  CHECK(f.name == "meet");
  CHECK(f.function.arity() == 2);
  for (ElementId a = 0; a < 3; ++a)
    for (ElementId b = 0; b < 3; ++b) {
      std::vector<ElementId> args{a, b};
      CHECK(f.function(args) == c3.lattice.meet(a, b));
    }
  CHECK(format_function(f.name, f.lattice_name, c3.lattice, f.function) == read_file(kData / "c3_meet.fn"));

  parse_error([&] { parse_function("function f arity=1 over C3\n0 -> 0\nm -> m\n", c3); });
  parse_error([&] { parse_function("function f arity=1 over C3\n0 -> 0\n0 -> m\nm -> m\n1 -> 1\n", c3); });
  parse_error([&] { parse_function("function f arity=1 over B4\n0 -> 0\nm -> m\n1 -> 1\n", c3); });
  parse_error([&] { parse_function("function f arity=1 over C3\n0 -> 0\nm -> q\n1 -> 1\n", c3); });
  parse_error([&] { parse_function("function f arity=4 over C3\n", c3); });
  parse_error([&] { parse_function("function f arity=1 over C3\n0 m -> 0\n", c3); });
}

TEST_CASE("DOT export") {
  auto one = to_dot("P", catalog::chain_poset(1));
  CHECK(one.find("n0 [label=\"c0\"];") != std::string::npos);
  CHECK(one.find("->") == std::string::npos);

  auto two = to_dot("C2", catalog::chain_poset(2));
  CHECK(two.find("n0 -> n1;") != std::string::npos);

  auto b4 = to_dot("B4", catalog::boolean4().order());
  std::size_t edges = 0, nodes = 0;
  for (std::size_t at = 0; (at = b4.find(" -> ", at)) != std::string::npos; ++at) ++edges;
  for (std::size_t at = 0; (at = b4.find("[label=", at)) != std::string::npos; ++at) ++nodes;
  CHECK(edges == 4);
  CHECK(nodes == 4);
  CHECK(b4.rfind("digraph \"B4\" {", 0) == 0);
  CHECK(to_dot("B4", catalog::boolean4().order()) == b4);
}

TEST_CASE("reports") {
  auto c3 = catalog::chain_lattice(3);
  auto report = lattice_report("C3", c3);
  CHECK(report.find("affine-complete: no") != std::string::npos);
  CHECK(report.find("witness: [0, m]") != std::string::npos);
  CHECK(lattice_report("C1", Lattice{}).find("witness: none") != std::string::npos);
  CHECK(format_interval(c3, interval(c3, 0, 2)) == "[0, 1]");
  CHECK(format_congruence(c3, Congruence({0, 0, 1})) == "{0,m} {1}");
}
