#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "aclat/congruence.hpp"
#include "aclat/lattice.hpp"
#include "aclat/poset.hpp"

namespace aclat {

// Line-oriented text formats. '#' starts a comment; blank lines are ignored.
//
//   poset <name>                      lattice <name>
//   elements: a b c                   elements: 0 m 1
//   covers: a<b b<c                   covers: 0<m m<1
//
//   lattice from-poset <file>         (E of the poset in <file>, relative to this file)
//
//   function <name> arity=<k> over <lattice-name>
//   <x1> ... <xk> -> <value>          (one line per tuple, all |L|^k of them)
//
// Parse failures throw ParseError with "line L, column C: ..." details.

struct NamedPoset {
  std::string name;
  Poset poset;
};

struct NamedLattice {
  std::string name;
  Lattice lattice;
};

struct NamedFunction {
  std::string name;
  std::string lattice_name;
  LatticeFunction function;
};

using LoadedObject = std::variant<NamedPoset, NamedLattice>;

NamedPoset parse_poset(std::string_view text);
/// `base_dir` resolves `from-poset` references.
NamedLattice parse_lattice(std::string_view text, const std::filesystem::path& base_dir = {});
LoadedObject parse_object(std::string_view text, const std::filesystem::path& base_dir = {});
/// Rejects partial tables, repeated tuples and a lattice-name mismatch.
NamedFunction parse_function(std::string_view text, const NamedLattice& lattice);

/// Throws IoError.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);
LoadedObject load_object(const std::filesystem::path& path);
NamedLattice load_lattice(const std::filesystem::path& path);

std::string format_poset(std::string_view name, const Poset& p);
std::string format_lattice(std::string_view name, const Lattice& l);
std::string format_function(std::string_view name, std::string_view lattice_name, const Lattice& l,
                            const LatticeFunction& f);

/// Hasse diagram: one node per element in id order, one edge per cover pair
/// pointing from the lower to the upper element.
std::string to_dot(std::string_view name, const Poset& p);

/// "[lo, hi]"
std::string format_interval(const Lattice& l, const Interval& i);
/// "{a} {b,c}"
std::string format_congruence(const Lattice& l, const Congruence& c);
/// Size, bounds, cover count and the affine-completeness verdict.
std::string lattice_report(std::string_view name, const Lattice& l);

}  // namespace aclat
