#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bmkit/partitions.hpp"

namespace bmkit {

/// One letter of the cuspidal alphabet: an opaque label, the dimension each
/// box of its partition contributes, and the label of its partner under the
/// duality involution (itself unless stated otherwise). The involution is
/// carried on the letter so that every operation downstream can apply it
/// without a separate side table.
struct BasicType {
  std::string label;
  unsigned dim = 1;
  std::string dual_label;

  BasicType(std::string lbl, unsigned d);
  BasicType(std::string lbl, unsigned d, std::string dual);

  friend auto operator<=>(const BasicType&, const BasicType&) = default;
};

/// A finitely supported assignment of partitions to basic types. Entries are
/// kept sorted by letter, labels are unique, and empty partitions are dropped
/// on construction, so equal assignments compare equal.
class InertialType {
 public:
  using Entry = std::pair<BasicType, Partition>;

  InertialType() = default;
  explicit InertialType(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const InertialType&, const InertialType&) = default;
  friend auto operator<=>(const InertialType&, const InertialType&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Degree function of an inertial type: letter -> degree of its partition.
using ScsMap = std::map<BasicType, unsigned>;

/// Sum of dim(letter) * deg(partition) over the support.
unsigned type_degree(const InertialType& t);

/// The supercuspidal support of t (positive values only).
ScsMap scs(const InertialType& t);

/// Componentwise dominance: equal supports under scs and every assigned
/// partition of a dominates the one of b. False whenever the supports differ.
bool type_dominates(const InertialType& a, const InertialType& b);

/// Every inertial type with the given supercuspidal support, ordered as the
/// lexicographic product of canonical partition orders (first letter most
/// significant). That order refines type_dominates; checked for small fibers.
std::vector<InertialType> types_with_scs(const ScsMap& s);

/// Applies the duality involution letterwise, keeping each partition.
/// Throws if two letters of the support collide after dualizing.
InertialType dual_type(const InertialType& t);

/// The type concentrated on the self-dual letter "1" of dimension 1.
InertialType unipotent_type(const Partition& p);

}  // namespace bmkit
