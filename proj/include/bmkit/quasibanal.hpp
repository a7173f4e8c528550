#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "bmkit/bmcycles.hpp"
#include "bmkit/numeric.hpp"
#include "bmkit/partitions.hpp"

namespace bmkit {

/// Arithmetic frame for the quasi-banal regime: an odd prime l exceeding n,
/// and a prime power q congruent to 1 mod l. a is the exact l-adic valuation
/// of q-1, so l^a counts the available tame characters.
struct QuasiBanalParams {
  unsigned long l = 0;
  unsigned long q = 0;
  unsigned n = 0;
  unsigned long a = 0;

  QuasiBanalParams(unsigned long l, unsigned long q, unsigned n);

  /// l^a, the number of character indices.
  Int index_count() const;
};

/// The smallest admissible (l, q) for a given n: l the least odd prime
/// exceeding n, q the least prime power congruent to 1 mod l.
QuasiBanalParams default_params(unsigned n);

/// A finitely supported assignment of partitions to character indices
/// (index 1 is the trivial character). Entries sorted by index; empty
/// partitions are dropped.
class TypeSequence {
 public:
  using Entry = std::pair<unsigned, Partition>;

  TypeSequence() = default;
  explicit TypeSequence(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  unsigned degree() const;

  /// The partitions of the support, in index order.
  std::vector<Partition> weights() const;

  friend bool operator==(const TypeSequence&, const TypeSequence&) = default;
  friend auto operator<=>(const TypeSequence&, const TypeSequence&) = default;

 private:
  std::vector<Entry> entries_;
};

/// All mass on the trivial character.
TypeSequence unipotent_sequence(const Partition& p);

/// Indices 1..n, each carrying the partition (1).
TypeSequence principal_series(unsigned n);

/// Every type sequence of the given total degree supported on indices
/// 1..max_index, in a fixed deterministic order.
std::vector<TypeSequence> type_sequences_with_degree(unsigned n, unsigned max_index);

/// A residual representation determined by its Frobenius eigenspace shape Q
/// (maximal unipotent blocks per eigenspace).
struct DistinguishedPoint {
  Partition Q;
  explicit DistinguishedPoint(Partition q) : Q(std::move(q)) {}
};

using MarginMatrix = std::vector<std::vector<unsigned>>;

/// All non-negative integer matrices with row sums p and column sums q,
/// filled row by row, each row left to right with entries tried in
/// decreasing order. Degree mismatch is an argument error.
std::vector<MarginMatrix> bipartitions(const Partition& p, const Partition& q);

/// Number of margin matrices (rows = degrees of the weights, columns = q)
/// whose i-th row, read as a partition, equals weights[i]. Rows are kept in
/// the given order; the count is invariant under permuting them.
Int bip_count(const std::vector<Partition>& weights, const Partition& q);

/// Restriction multiplicities: weight sequence -> number of margin matrices
/// realizing it, over all matrices with row sums p and column sums q.
/// Weight sequences with count zero are absent.
std::map<std::vector<Partition>, Int> mackey_decomposition(const Partition& p,
                                                           const Partition& q);

/// The cycle carried by the distinguished point: bip_count(weights, Q) times
/// the special-fibre class (the zero cycle when no margin matrix matches).
Cycle cycle_at_distinguished(const TypeSequence& tau, const DistinguishedPoint& d,
                             const QuasiBanalParams& params);

/// Reduction of the K-type of tau: sum over P' of lr_mult(P', weights) times
/// the residual class of P'.
VirtualRep red_rep(const TypeSequence& tau);

/// Linear extension of ResidualLabel(P) -> kostka(P, Q) times the
/// special-fibre class. K-type labels are outside the domain.
Cycle bar_cyc_at(const VirtualRep& v, const DistinguishedPoint& d);

/// One instance of the local multiplicity identity, with the two sides
/// computed by disjoint engines: lhs through character inner products, rhs
/// through tableau counts and margin-matrix enumeration.
struct VerifyRecord {
  unsigned n = 0;
  Partition Q;
  TypeSequence tau;
  Int lhs;
  Int rhs;
  bool ok = false;
};

VerifyRecord verify_local_bm(const TypeSequence& tau, const DistinguishedPoint& d,
                             const QuasiBanalParams& params);

/// One distinguished point in the principal-series cycle comparison.
struct IharaCycleCheck {
  Partition Q;
  Int ps_side;        // coefficient of the special fibre for the ps type
  Int weighted_sum;   // sum over P of multinomial(P) * unipotent coefficient
  Int expected;       // multinomial(Q)
};

struct IharaReport {
  unsigned n = 0;
  std::vector<std::pair<Partition, Int>> red_coefficients;  // residual class -> coeff
  std::vector<IharaCycleCheck> cycle_checks;
  bool ok = false;
};

/// Expands the reduction of the principal-series type in the residual basis
/// (coefficients must match both tableau counts and the hook-length formula)
/// and compares the distinguished-point cycles at every Q.
IharaReport ihara_report(unsigned n, const QuasiBanalParams& params);

}  // namespace bmkit
