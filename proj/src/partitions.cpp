#include "bmkit/partitions.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>

#include "bmkit/errors.hpp"

namespace bmkit {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw argument_error("partition has an interior zero part");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw argument_error("partition parts must be weakly decreasing");
    degree_ += parts_[i];
  }
}

Partition Partition::from_multiset(std::vector<unsigned> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<unsigned>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
  if (degree_ != o.degree_) return degree_ <=> o.degree_;
  // Reverse-lexicographic: the lexicographically larger sequence comes first.
  const auto& a = parts_;
  const auto& b = o.parts_;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return b.size() <=> a.size();  // longer tail of parts sorts later; equal => equal
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  os << '(';
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) os << ',';
    os << p.parts()[i];
  }
  return os << ')';
}

namespace {

std::vector<Partition> enumerate_partitions(unsigned n) {
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<unsigned> a{n};
  for (;;) {
    out.emplace_back(Partition(a));
    // Find the rightmost part > 1; everything after it is a run of 1s.
    std::size_t i = a.size();
    while (i > 0 && a[i - 1] == 1) --i;
    if (i == 0) break;
    unsigned total = static_cast<unsigned>(a.size() - i) + 1;  // the 1s plus the unit we peel off
    a.resize(i);
    a[i - 1] -= 1;
    unsigned v = a[i - 1];
    while (total > 0) {
      unsigned take = std::min(total, v);
      a.push_back(take);
      total -= take;
    }
  }
  return out;
}

// The canonical order must be a linear extension of dominance. This is a
// theorem, but the matrices built on top of it silently depend on it, so it
// is verified once per cached degree (kept cheap by the degree cutoff).
void check_order_refines_dominance(const std::vector<Partition>& list) {
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (dominates(list[i], list[j]))
        throw std::logic_error("canonical partition order fails to refine dominance");
}

}  // namespace

const std::vector<Partition>& partitions_of(unsigned n) {
  limits::check_degree(n, "partitions_of");
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<const std::vector<Partition>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    auto list = enumerate_partitions(n);
    if (n <= 12) check_order_refines_dominance(list);
    for (std::size_t i = 1; i < list.size(); ++i)
      if (!(list[i - 1] < list[i]))
        throw std::logic_error("partition enumeration disagrees with the canonical order");
    it = cache.emplace(n, std::make_unique<const std::vector<Partition>>(std::move(list))).first;
  }
  return *it->second;
}

Int partition_count(unsigned n) {
  // p(k) = sum_{j>=1} (-1)^{j+1} [p(k - j(3j-1)/2) + p(k - j(3j+1)/2)]
  static std::mutex mu;
  static std::vector<Int> table{1};
  std::lock_guard<std::mutex> lock(mu);
  for (unsigned k = table.size(); k <= n; ++k) {
    Int v = 0;
    for (unsigned j = 1;; ++j) {
      unsigned long g1 = static_cast<unsigned long>(j) * (3UL * j - 1) / 2;
      unsigned long g2 = static_cast<unsigned long>(j) * (3UL * j + 1) / 2;
      if (g1 > k) break;
      Int term = table[k - g1];
      if (g2 <= k) term += table[k - g2];
      if (j % 2)
        v += term;
      else
        v -= term;
    }
    table.push_back(v);
  }
  return table[n];
}

bool dominates(const Partition& p, const Partition& q) {
  if (p.degree() != q.degree()) return false;
  unsigned long sp = 0, sq = 0;
  std::size_t len = std::max(p.rows(), q.rows());
  for (std::size_t i = 0; i < len; ++i) {
    sp += p.part(i);
    sq += q.part(i);
    if (sp < sq) return false;
  }
  return true;
}

Partition conjugate(const Partition& p) {
  if (p.empty()) return Partition();
  std::vector<unsigned> cols(p.parts()[0], 0);
  for (unsigned part : p.parts())
    for (unsigned j = 0; j < part; ++j) ++cols[j];
  return Partition(std::move(cols));
}

Int multinomial(const Partition& p) {
  Int r = factorial(p.degree());
  for (unsigned part : p.parts()) r = exact_div(r, factorial(part), "multinomial");
  return r;
}

Int hook_length_count(const Partition& p) {
  if (p.empty()) return 1;
  Partition c = conjugate(p);
  Int hooks = 1;
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (unsigned j = 0; j < p.parts()[i]; ++j)
      hooks *= (p.parts()[i] - j) + (c.parts()[j] - i) - 1;
  return exact_div(factorial(p.degree()), hooks, "hook length formula");
}

}  // namespace bmkit
