#pragma once

#include <vector>

#include "bmkit/partitions.hpp"

namespace bmkit {

/// Character table of S_n, rows = shapes, columns = cycle types, both indexed
/// by partitions_of(n) in canonical order. Values are exact integers.
/// Obtain shared instances through character_table(); tables are immutable
/// once built and safe for unrestricted concurrent reads.
class CharacterTable {
 public:
  explicit CharacterTable(unsigned n);

  unsigned degree() const { return n_; }
  const std::vector<Partition>& labels() const { return labels_; }
  std::size_t index_of(const Partition& p) const;

  const Int& value(std::size_t shape, std::size_t cls) const { return values_[shape][cls]; }
  const Int& value(const Partition& shape, const Partition& cls) const;
  /// n!/z_mu, the size of the conjugacy class with cycle type labels()[cls].
  const Int& class_size(std::size_t cls) const { return class_sizes_[cls]; }
  const Int& group_order() const { return group_order_; }

 private:
  unsigned n_;
  std::vector<Partition> labels_;
  std::vector<std::vector<Int>> values_;
  std::vector<Int> class_sizes_;
  Int group_order_;
};

/// Memoized per degree; single-initialization, concurrent readers are safe.
const CharacterTable& character_table(unsigned n);

/// chi^shape(cycle_type) by recursive border-strip removal, sign (-1)^height.
/// Degrees must match (argument_error).
Int character(const Partition& shape, const Partition& cycle_type);

/// prod_i i^{m_i} m_i! over the part multiplicities of mu (centralizer order z_mu).
Int centralizer_order(const Partition& mu);

/// Sign of any permutation with cycle type mu: (-1)^(deg - number of parts).
int cycle_type_sign(const Partition& mu);

/// Kostka number m(P,Q): semistandard tableaux of shape P and content Q,
/// counted by layering horizontal strips (one per content letter).
/// 0 when degrees differ, 1 when both partitions are empty.
Int kostka(const Partition& p, const Partition& q);

/// The same number as an exact character inner product,
/// <chi^P (x) sgn, Ind from S_Q of sgn>, via Murnaghan-Nakayama and class
/// sizes. Deliberately shares no code with kostka() beyond partitions.
Int kostka_oracle(const Partition& p, const Partition& q);

/// Exact integer matrix with rows/columns labeled by partitions of one degree.
struct PartitionMatrix {
  unsigned n = 0;
  std::vector<Partition> order;            // canonical order
  std::vector<std::vector<Int>> entries;   // entries[row][col]
};

/// Matrix of kostka(P,Q) over partitions_of(n); unitriangularity is checked
/// (1s on the diagonal, zeros below), matching the dominance support.
PartitionMatrix kostka_matrix(unsigned n);

/// Exact integer inverse of kostka_matrix(n); the product with the forward
/// matrix is recomputed and checked to be the identity before returning.
PartitionMatrix inverse_kostka_matrix(unsigned n);

/// Multiplicity of the sgn-twisted irreducible of shape `target` in the
/// induction of the tensor of sgn-twisted irreducibles of the given shapes
/// from the corresponding Young subgroup. Equals the iterated
/// Littlewood-Richardson coefficient of the underlying shapes.
/// Computed by exact character inner products.
Int lr_mult(const Partition& target, const std::vector<Partition>& factors);

}  // namespace bmkit
