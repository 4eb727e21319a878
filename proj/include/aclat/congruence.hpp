#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "aclat/lattice.hpp"

namespace aclat {

/// A partition of a lattice's elements. Block ids are numbered in order of
/// first occurrence, so equal partitions compare equal.
class Congruence {
 public:
  explicit Congruence(std::vector<std::size_t> block_of);

  static Congruence identity(std::size_t n);
  static Congruence full(std::size_t n);

  std::size_t size() const noexcept { return block_of_.size(); }
  std::size_t block(ElementId a) const { return block_of_.at(a); }
  std::size_t block_count() const noexcept { return blocks_; }
  bool related(ElementId a, ElementId b) const { return block(a) == block(b); }
  const std::vector<std::size_t>& block_of() const noexcept { return block_of_; }
  std::vector<std::vector<ElementId>> blocks() const;

  friend bool operator==(const Congruence&, const Congruence&) = default;
  friend auto operator<=>(const Congruence& a, const Congruence& b) { return a.block_of_ <=> b.block_of_; }

 private:
  std::vector<std::size_t> block_of_;
  std::size_t blocks_ = 0;
};

/// Substitution property for meet and join, checked over all quadruples.
bool is_congruence(const Lattice& l, const Congruence& c);

/// The least congruence containing both arguments' pairs.
Congruence congruence_join(const Congruence& a, const Congruence& b);

/// Least congruence identifying a and b.
Congruence principal_congruence(const Lattice& l, ElementId a, ElementId b);

inline constexpr std::size_t kDefaultMaxCongruenceLattice = 8;

/// All congruences as joins of principal congruences of cover pairs, sorted.
/// Throws CapExceeded when |L| > max_size.
std::vector<Congruence> all_congruences(const Lattice& l, std::size_t max_size = kDefaultMaxCongruenceLattice);

/// A total k-ary operation given by its value table. Tuples are indexed in
/// mixed radix |L| with the first argument most significant.
class LatticeFunction {
 public:
  LatticeFunction(std::size_t lattice_size, std::size_t arity, std::vector<ElementId> table);

  std::size_t arity() const noexcept { return arity_; }
  std::size_t lattice_size() const noexcept { return n_; }
  const std::vector<ElementId>& table() const noexcept { return table_; }

  ElementId operator()(std::span<const ElementId> args) const;
  ElementId at(std::size_t tuple_index) const { return table_.at(tuple_index); }

  std::size_t tuple_count() const noexcept { return table_.size(); }
  std::vector<ElementId> tuple(std::size_t tuple_index) const;
  std::size_t index_of(std::span<const ElementId> args) const;

  friend bool operator==(const LatticeFunction&, const LatticeFunction&) = default;

 private:
  std::size_t n_;
  std::size_t arity_;
  std::vector<ElementId> table_;
};

inline constexpr std::size_t kDefaultFunctionBudget = 1U << 20;

/// Number of k-tuples, or BudgetExceeded if above `budget`.
std::size_t tuple_count(std::size_t lattice_size, std::size_t arity, std::size_t budget = kDefaultFunctionBudget);

struct CompatibilityViolation {
  Congruence congruence;
  std::vector<ElementId> lhs;
  std::vector<ElementId> rhs;
};

struct CompatibilityResult {
  bool compatible = true;
  std::optional<CompatibilityViolation> counterexample;
};

/// Checks one congruence: argument tuples related componentwise must have
/// related images. Only tuples differing in one coordinate are visited;
/// transitivity covers the rest.
CompatibilityResult preserves_congruence(const LatticeFunction& f, const Congruence& c);

/// Checks the principal congruences of all cover pairs (every congruence of
/// a finite lattice is a join of these). Throws BudgetExceeded.
CompatibilityResult is_compatible(const Lattice& l, const LatticeFunction& f,
                                  std::size_t budget = kDefaultFunctionBudget);

/// x |-> join over S of (a_S ^ meet_{i in S} x_i), S ranging over subsets of
/// the argument positions (bit i of the mask is argument i).
struct PolynomialDNF {
  std::size_t arity = 0;
  std::vector<ElementId> coefficients;  // indexed by subset mask

  ElementId evaluate(const Lattice& l, std::span<const ElementId> args) const;
  friend bool operator==(const PolynomialDNF&, const PolynomialDNF&) = default;
};

/// Candidate a_S = f(chi_S), chi_S having top at positions in S and bottom
/// elsewhere; returned iff it reproduces f everywhere. Throws BudgetExceeded.
std::optional<PolynomialDNF> polynomial_dnf(const Lattice& l, const LatticeFunction& f,
                                            std::size_t budget = kDefaultFunctionBudget);

inline constexpr std::size_t kDefaultWitnessSearchCap = 6;

/// A unary compatible function that is not a polynomial, or none for the
/// one-element lattice. Tries the relative complement of (x v a) ^ b in the
/// first Boolean interval [a, b] before an exhaustive search over unary
/// tables (only permitted when |L| <= max_search_size; else CapExceeded).
std::optional<LatticeFunction> compatible_nonpolynomial_witness(const Lattice& l,
                                                                std::size_t max_search_size = kDefaultWitnessSearchCap);

}  // namespace aclat
