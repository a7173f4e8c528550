#include "bmkit/types.hpp"

#include <algorithm>

#include "bmkit/errors.hpp"

namespace bmkit {

namespace {

void validate_basic(const BasicType& b) {
  if (b.label.empty() || b.dual_label.empty())
    throw argument_error("basic type labels must be nonempty");
  if (b.dim == 0) throw argument_error("basic type dimension must be positive");
}

}  // namespace

BasicType::BasicType(std::string lbl, unsigned d) : label(std::move(lbl)), dim(d) {
  dual_label = label;
  validate_basic(*this);
}

BasicType::BasicType(std::string lbl, unsigned d, std::string dual)
    : label(std::move(lbl)), dim(d), dual_label(std::move(dual)) {
  validate_basic(*this);
}

InertialType::InertialType(std::vector<Entry> entries) {
  for (auto& e : entries)
    if (!e.second.empty()) entries_.push_back(std::move(e));
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i - 1].first.label == entries_[i].first.label)
      throw argument_error("inertial type assigns two partitions to label '" +
                           entries_[i].first.label + "'");
}

unsigned type_degree(const InertialType& t) {
  unsigned total = 0;
  for (const auto& [b, p] : t.entries()) total += b.dim * p.degree();
  return total;
}

ScsMap scs(const InertialType& t) {
  ScsMap s;
  for (const auto& [b, p] : t.entries()) s.emplace(b, p.degree());
  return s;
}

bool type_dominates(const InertialType& a, const InertialType& b) {
  if (scs(a) != scs(b)) return false;
  // Equal scs means equal supports entry by entry (entries are sorted).
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    if (!dominates(a.entries()[i].second, b.entries()[i].second)) return false;
  return true;
}

std::vector<InertialType> types_with_scs(const ScsMap& s) {
  unsigned total = 0;
  std::vector<std::pair<BasicType, const std::vector<Partition>*>> axes;
  for (const auto& [b, d] : s) {
    if (d == 0) throw argument_error("supercuspidal support values must be positive");
    total += b.dim * d;
    axes.emplace_back(b, &partitions_of(d));
  }
  limits::check_degree(total, "types_with_scs");

  std::vector<InertialType> out;
  std::vector<InertialType::Entry> chosen;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == axes.size()) {
      out.emplace_back(chosen);
      return;
    }
    for (const Partition& p : *axes[i].second) {
      chosen.emplace_back(axes[i].first, p);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);

  if (out.size() <= 512) {
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = i + 1; j < out.size(); ++j)
        if (type_dominates(out[j], out[i]))
          throw std::logic_error("types_with_scs order does not refine dominance");
  }
  return out;
}

InertialType dual_type(const InertialType& t) {
  std::vector<InertialType::Entry> entries;
  for (const auto& [b, p] : t.entries())
    entries.emplace_back(BasicType(b.dual_label, b.dim, b.label), p);
  try {
    return InertialType(std::move(entries));
  } catch (const argument_error&) {
    throw argument_error("dual involution collides on the support");
  }
}

InertialType unipotent_type(const Partition& p) {
  if (p.empty()) return InertialType();
  return InertialType({{BasicType("1", 1), p}});
}

}  // namespace bmkit
