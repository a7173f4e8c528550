#include "bmkit/bmcycles.hpp"

#include <algorithm>
#include <sstream>

#include "bmkit/errors.hpp"
#include "bmkit/symrep.hpp"

namespace bmkit {

VirtualRep sigma(const InertialType& tau) {
  VirtualRep v;
  v.add(KTypeLabel{tau}, 1);
  return v;
}

Cycle type_component(const InertialType& tau) {
  Cycle c;
  c.add(TypeComponentLabel{tau}, 1);
  return c;
}

Int mult(const InertialType& a, const InertialType& b) {
  // Merge the two supports by label; entries are sorted, so one sweep does it.
  Int product = 1;
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  std::size_t i = 0, j = 0;
  Partition none;
  while (i < ea.size() || j < eb.size()) {
    const Partition* pa = &none;
    const Partition* pb = &none;
    if (j == eb.size() || (i < ea.size() && ea[i].first.label < eb[j].first.label)) {
      pa = &ea[i++].second;
    } else if (i == ea.size() || eb[j].first.label < ea[i].first.label) {
      pb = &eb[j++].second;
    } else {
      if (ea[i].first != eb[j].first)
        throw argument_error("label '" + ea[i].first.label +
                             "' names two different basic types");
      pa = &ea[i++].second;
      pb = &eb[j++].second;
    }
    product *= kostka(*pa, *pb);  // 0 on degree mismatch, by convention
    if (product == 0) return 0;
  }
  return product;
}

namespace {

// Exact inverse of a unitriangular integer matrix, with the product recomputed
// as a final check. Lives on small scs fibers only.
std::vector<std::vector<Int>> invert_unitriangular(const std::vector<std::vector<Int>>& u,
                                                   const char* what) {
  std::size_t k = u.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (u[i][i] != 1) throw std::logic_error(std::string(what) + ": diagonal entry is not 1");
    for (std::size_t j = 0; j < i; ++j)
      if (u[i][j] != 0) throw std::logic_error(std::string(what) + ": nonzero below the diagonal");
  }
  std::vector<std::vector<Int>> v(k, std::vector<Int>(k, 0));
  for (std::size_t ii = k; ii-- > 0;) {
    v[ii][ii] = 1;
    for (std::size_t j = ii + 1; j < k; ++j) {
      Int s = 0;
      for (std::size_t t = ii + 1; t <= j; ++t) s += u[ii][t] * v[t][j];
      v[ii][j] = -s;
    }
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Int s = 0;
      for (std::size_t t = 0; t < k; ++t) s += u[i][t] * v[t][j];
      if (s != (i == j ? 1 : 0))
        throw std::logic_error(std::string(what) + ": inverse failed the product check");
    }
  return v;
}

}  // namespace

Cycle cyc(const VirtualRep& theta) {
  Cycle out;
  for (const auto& [label, coeff] : theta.coeffs()) {
    const KTypeLabel* kt = std::get_if<KTypeLabel>(&label);
    if (!kt) throw argument_error("cyc is defined on K-type classes only");
    InertialType dual = dual_type(kt->tau);
    for (const InertialType& other : types_with_scs(scs(dual)))
      out.add(TypeComponentLabel{other}, coeff * mult(dual, other));
  }
  return out;
}

VirtualRep r_tau(const InertialType& tau) {
  std::vector<InertialType> fiber = types_with_scs(scs(tau));
  std::size_t k = fiber.size();
  std::size_t at = static_cast<std::size_t>(
      std::find(fiber.begin(), fiber.end(), tau) - fiber.begin());

  std::vector<std::vector<Int>> m(k, std::vector<Int>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m[i][j] = mult(fiber[i], fiber[j]);
  std::vector<std::vector<Int>> inv = invert_unitriangular(m, "scs multiplicity matrix");

  // cyc(sigma(dual of fiber[j])) expands through row j of m, so row `at` of
  // the inverse assembles exactly Z(tau).
  VirtualRep out;
  for (std::size_t j = 0; j < k; ++j)
    out.add(KTypeLabel{dual_type(fiber[j])}, inv[at][j]);
  return out;
}

namespace {

std::string bracket(const Partition& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.rows(); ++i) {
    if (i) os << ',';
    os << p.parts()[i];
  }
  os << ']';
  return os.str();
}

std::string term_name(const RepLabel& label) {
  if (const auto* kt = std::get_if<KTypeLabel>(&label))
    return "σ(" + type_name(kt->tau) + ")";
  return "red(σ" + bracket(std::get<ResidualLabel>(label).shape) + ")";
}

std::string term_name(const ComponentLabel& label) {
  if (const auto* tc = std::get_if<TypeComponentLabel>(&label))
    return "Z(" + type_name(tc->tau) + ")";
  return "[p]";
}

template <typename Label>
std::string render_sum(const std::map<Label, Int>& coeffs) {
  if (coeffs.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [label, c] : coeffs) {
    Int a = c < 0 ? Int(-c) : c;
    if (first)
      out += c < 0 ? "−" : "";
    else
      out += c < 0 ? " − " : " + ";
    if (a != 1) out += a.get_str();
    out += term_name(label);
    first = false;
  }
  return out;
}

}  // namespace

std::string type_name(const InertialType& t) {
  const auto& es = t.entries();
  if (es.size() == 1 && es[0].first.label == "1" && es[0].first.dim == 1)
    return "τ" + bracket(es[0].second);
  std::string out = "τ{";
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (i) out += ',';
    out += es[i].first.label + ':' + bracket(es[i].second);
  }
  out += '}';
  return out;
}

std::string render(const VirtualRep& v) { return render_sum(v.coeffs()); }

std::string render(const Cycle& c) { return render_sum(c.coeffs()); }

}  // namespace bmkit
