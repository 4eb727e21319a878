#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aclat/duality.hpp"
#include "aclat/lattice.hpp"
#include "aclat/poset.hpp"
#include "aclat/rational.hpp"

namespace aclat {

/// Adds a fresh bottom and/or top only where missing. Every pair of existing
/// elements must already have a meet and a join (NotALattice otherwise).
Lattice adjoin_bounds(const Poset& p);

/// L -> P(X) with X = D(L01), a |-> {I : a not in I} as a bitmask over X.
struct PowersetEmbedding {
  Lattice bounded;           // L01
  PrimeIdealSpace points;    // X
  std::vector<DownSet> image;  // indexed by elements of L
};

/// Verified injective and meet/join/bound preserving; throws RoundTripFailure
/// or CapExceeded.
PowersetEmbedding powerset_embedding(const Lattice& l);

/// chi_S over X = {0, .., point_count - 1}: 1 where x is in S, 0 elsewhere.
std::vector<Rational> characteristic_embedding(std::size_t point_count, std::uint64_t subset);

/// powerset_embedding followed by characteristic_embedding: L into pointwise
/// ordered Q01-valued tuples. Throws RoundTripFailure unless the composite is
/// injective and preserves meet (pointwise min), join (pointwise max) and bounds.
std::vector<std::vector<Rational>> q01_tuple_embedding(const Lattice& l);

/// Breadth-first Stern-Brocot order on Q strictly between 0 and 1:
/// 1/2, 1/3, 2/3, 1/4, 2/5, 3/5, 3/4, ...
class SternBrocotEnumeration {
 public:
  /// Throws RationalOverflow past depth 62.
  Rational at(std::uint64_t index) const;
  /// Inverse of at(); nullopt unless 0 < q < 1.
  std::optional<std::uint64_t> index_of(const Rational& q) const;
};

SternBrocotEnumeration q01_enumeration_stern_brocot();

/// A bounded chain the embedding walks through. Points are exact rationals
/// for every oracle here, but only less() may be used to compare them.
class ChainOracle {
 public:
  using Point = Rational;

  virtual ~ChainOracle() = default;
  virtual std::string name() const = 0;
  virtual Point bottom() const = 0;
  virtual Point top() const = 0;
  virtual bool less(const Point& p, const Point& q) const = 0;
  /// A point strictly between p and q, or nullopt if the chain has none.
  virtual std::optional<Point> between(const Point& p, const Point& q) const = 0;
  virtual std::optional<Point> interior() const { return between(bottom(), top()); }
};

/// Dyadic rationals in [0, 1], between = midpoint.
std::unique_ptr<ChainOracle> dyadic_oracle();
/// Q in [0, 1], between = midpoint.
std::unique_ptr<ChainOracle> q01_oracle();
/// The k-point chain {0, 1/(k-1), ..., 1}; not dense, for error paths.
std::unique_ptr<ChainOracle> finite_chain_oracle(std::size_t k);

enum class PlacementCase { Endpoint, Base, AboveAll, BelowAll, Between };

struct Placement {
  std::optional<std::uint64_t> index;  // enumeration index; empty for 0 and 1
  Rational rational;
  Rational point;
  PlacementCase rule = PlacementCase::Endpoint;

  friend bool operator==(const Placement&, const Placement&) = default;
};

struct EmbeddingState {
  /// (0, bottom), (1, top), then a_0, a_1, ... in insertion order.
  std::vector<Placement> pairs;
  std::size_t pairs_checked = 0;
};

/// Places a_0..a_{n-1} of the Stern-Brocot enumeration into the oracle's
/// chain, never revising a placement. Throws DensityViolation when between()
/// has no answer and OracleInconsistency when the oracle's answers break the
/// order built so far.
EmbeddingState embed_q01(const ChainOracle& oracle, std::size_t n);

/// Compares every pair of placements; returns the number of pairs or throws
/// OracleInconsistency.
std::size_t check_order_consistency(const ChainOracle& oracle, const EmbeddingState& state);

struct ChainDensityReport {
  Chain chain;
  DensityCheck density;
  AffineVerdict verdict;
  bool contains_bounds = false;
  /// A non-dense maximal chain only occurs in a lattice that is not affine complete.
  bool consistent = false;
};

ChainDensityReport maximal_chain_density_report(const Lattice& l);

}  // namespace aclat
