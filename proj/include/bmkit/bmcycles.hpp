#pragma once

#include <compare>
#include <map>
#include <string>
#include <variant>

#include "bmkit/numeric.hpp"
#include "bmkit/types.hpp"

namespace bmkit {

/// Element of the free Z-module on an ordered label set. Zero coefficients
/// are never stored, so equality of sums is equality of maps.
template <typename Label>
class FormalSum {
 public:
  void add(const Label& l, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = coeffs_.emplace(l, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  const std::map<Label, Int>& coeffs() const { return coeffs_; }
  bool zero() const { return coeffs_.empty(); }

  Int coeff(const Label& l) const {
    auto it = coeffs_.find(l);
    return it == coeffs_.end() ? Int(0) : it->second;
  }

  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  std::map<Label, Int> coeffs_;
};

/// Formal class of the distinguished representation sigma(tau).
struct KTypeLabel {
  InertialType tau;
  friend auto operator<=>(const KTypeLabel&, const KTypeLabel&) = default;
};

/// Formal class of the reduction of the unipotent representation of shape P.
struct ResidualLabel {
  Partition shape;
  friend auto operator<=>(const ResidualLabel&, const ResidualLabel&) = default;
};

using RepLabel = std::variant<KTypeLabel, ResidualLabel>;
using VirtualRep = FormalSum<RepLabel>;

/// Irreducible component indexed by an inertial type.
struct TypeComponentLabel {
  InertialType tau;
  friend auto operator<=>(const TypeComponentLabel&, const TypeComponentLabel&) = default;
};

/// The class of the distinguished closed point on a special fibre.
struct SpecialFibreLabel {
  friend auto operator<=>(const SpecialFibreLabel&, const SpecialFibreLabel&) = default;
};

using ComponentLabel = std::variant<TypeComponentLabel, SpecialFibreLabel>;
using Cycle = FormalSum<ComponentLabel>;

/// The sum with a single term sigma(tau).
VirtualRep sigma(const InertialType& tau);

/// The cycle with a single term Z(tau).
Cycle type_component(const InertialType& tau);

/// Multiplicity of tau_b in sigma(tau_a): the product of kostka numbers over
/// the union of the two supports (a letter missing on one side contributes a
/// degree mismatch, hence 0). Letters sharing a label must agree on dimension
/// and dual.
Int mult(const InertialType& a, const InertialType& b);

/// Linear extension of sigma(tau) -> sum over tau' in the scs fiber of the
/// dual of tau of mult(dual tau, tau') * Z(tau'). Residual labels are outside
/// the domain (argument error).
Cycle cyc(const VirtualRep& theta);

/// The unique integer combination of sigma(tau') over the scs fiber with
/// cyc(r_tau(tau)) = Z(tau); coefficients come from exactly inverting the
/// unitriangular multiplicity matrix of the fiber.
VirtualRep r_tau(const InertialType& tau);

/// "tau[2,1]" for the plain letter "1" of dimension 1, otherwise
/// "tau{a:[2,1],b:[1]}" over the support. Uses the Greek letter in output.
std::string type_name(const InertialType& t);

/// Signed symbolic sums, e.g. "sigma(tau[2,1]) - 2 sigma(tau[1,1,1])" with
/// proper Greek letters and a minus sign U+2212; the zero sum prints "0".
std::string render(const VirtualRep& v);
std::string render(const Cycle& c);

}  // namespace bmkit
