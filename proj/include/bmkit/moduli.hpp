#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bmkit/numeric.hpp"
#include "bmkit/partitions.hpp"

namespace bmkit {

/// An orbit of multiplication by q on Z/m, named by its smallest element.
struct FrobeniusOrbit {
  Int modulus;
  Int min_rep;
  unsigned long size = 1;

  friend bool operator==(const FrobeniusOrbit& a, const FrobeniusOrbit& b) {
    return a.modulus == b.modulus && a.min_rep == b.min_rep && a.size == b.size;
  }
  friend bool operator<(const FrobeniusOrbit& a, const FrobeniusOrbit& b) {
    if (a.modulus != b.modulus) return a.modulus < b.modulus;
    if (a.min_rep != b.min_rep) return a.min_rep < b.min_rep;
    return a.size < b.size;
  }
};

/// Conjugacy-class datum of a matrix pair: a Jordan partition per eigenvalue
/// orbit, weighted by orbit size. Orbits are listed by increasing min_rep.
struct ComponentDatum {
  std::vector<std::pair<FrobeniusOrbit, Partition>> assignment;

  unsigned weighted_degree() const {
    unsigned total = 0;
    for (const auto& [orbit, p] : assignment)
      total += static_cast<unsigned>(orbit.size) * p.degree();
    return total;
  }

  friend bool operator==(const ComponentDatum&, const ComponentDatum&) = default;
};

/// All orbits of x -> q x on Z/m by direct scan, ordered by min_rep.
/// Requires gcd(q, m) = 1; m is bounded by the orbit scan cap.
std::vector<FrobeniusOrbit> frobenius_orbits(unsigned long q, unsigned long m);

/// The eigenvalue modulus for M(n,q): q^{n!} - 1, or its prime-to-l part when
/// a residue characteristic is supplied (l must be prime and not divide q).
Int component_modulus(unsigned n, unsigned long q,
                      std::optional<unsigned long> residue_char_l = std::nullopt);

/// Every component datum of total weighted degree n over the modulus above,
/// in a fixed order (orbits by min_rep; at each orbit, larger degrees first,
/// partitions canonically, then the orbit is skipped). n > 4 is refused
/// unless allow_large is set, since the modulus explodes.
std::vector<ComponentDatum> enumerate_components(
    unsigned n, unsigned long q,
    std::optional<unsigned long> residue_char_l = std::nullopt, bool allow_large = false);

/// |enumerate_components(n, q)| recounted independently: a full orbit scan of
/// Z/m (no subgroup shortcuts) followed by a generating-function count of
/// partition-weighted orbit multisets.
Int count_components_oracle(unsigned n, unsigned long q);

}  // namespace bmkit
