#pragma once

#include <compare>
#include <iosfwd>
#include <vector>

#include "bmkit/numeric.hpp"

namespace bmkit {

/// Integer partition: weakly decreasing sequence of positive parts.
/// Immutable value with structural equality; trailing zeros are stripped on
/// construction, so (2,0,0) and (2) are the same value. The empty partition
/// has degree 0.
class Partition {
 public:
  Partition() = default;
  /// Parts must be weakly decreasing once zeros are dropped.
  explicit Partition(std::vector<unsigned> parts);
  /// Accepts parts in any order: sorts decreasingly, drops zeros.
  static Partition from_multiset(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned degree() const { return degree_; }
  std::size_t rows() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  /// Part at 1-based-free index i, 0 beyond the last row.
  unsigned part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  friend bool operator==(const Partition&, const Partition&) = default;

  /// Canonical total order used for every matrix and formal-sum index:
  /// by degree, then reverse-lexicographic ((n) first, (1,...,1) last).
  /// partitions_of enumerates in exactly this order, and the order linearly
  /// extends dominance (checked at runtime, see partitions_of).
  std::strong_ordering operator<=>(const Partition& o) const;

 private:
  std::vector<unsigned> parts_;
  unsigned degree_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// All partitions of n in canonical (reverse-lexicographic) order.
/// The returned reference is to an immutable shared cache entry.
/// Throws resource_error when n exceeds the configured maximum degree.
const std::vector<Partition>& partitions_of(unsigned n);

/// p(n), by the Euler recurrence (independent of partitions_of).
Int partition_count(unsigned n);

/// Dominance: equal degree and every prefix sum of p >= that of q.
bool dominates(const Partition& p, const Partition& q);

/// Transposed Young diagram; an involution.
Partition conjugate(const Partition& p);

/// deg(P)! / prod_i P(i)!, the index of the Young subgroup S_P in S_deg.
Int multinomial(const Partition& p);

/// Number of standard Young tableaux of shape p, by the hook length formula.
Int hook_length_count(const Partition& p);

}  // namespace bmkit
