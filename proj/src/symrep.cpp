#include "bmkit/symrep.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>

#include "bmkit/errors.hpp"

namespace bmkit {

namespace {

// Beta-set encoding of a partition with a fixed number of rows L:
// beta[i] = lambda[i] + (L-1-i), strictly decreasing. Removing a border strip
// of size k is exactly replacing some beta value b by b-k (the target must be
// free), and the strip height is the number of beta values passed over.
std::vector<unsigned> beta_set(const std::vector<unsigned>& lambda) {
  std::size_t L = lambda.size();
  std::vector<unsigned> beta(L);
  for (std::size_t i = 0; i < L; ++i) beta[i] = lambda[i] + static_cast<unsigned>(L - 1 - i);
  return beta;
}

std::vector<unsigned> partition_from_beta(std::vector<unsigned> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<unsigned>());
  std::size_t L = beta.size();
  std::vector<unsigned> lambda(L);
  for (std::size_t i = 0; i < L; ++i) lambda[i] = beta[i] - static_cast<unsigned>(L - 1 - i);
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  return lambda;
}

using ChiMemo = std::map<std::pair<std::size_t, std::vector<unsigned>>, Int>;

// Murnaghan-Nakayama: peel a border strip of size mu[depth] in every possible
// way. The memo is only valid for one fixed mu (depth determines the suffix).
Int chi_rec(const std::vector<unsigned>& lambda, const std::vector<unsigned>& mu,
            std::size_t depth, ChiMemo& memo) {
  if (lambda.empty()) return 1;
  auto key = std::make_pair(depth, lambda);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  unsigned k = mu[depth];
  std::vector<unsigned> beta = beta_set(lambda);
  Int acc = 0;
  for (std::size_t a = 0; a < beta.size(); ++a) {
    if (beta[a] < k) break;  // beta is strictly decreasing
    unsigned t = beta[a] - k;
    if (std::find(beta.begin(), beta.end(), t) != beta.end()) continue;
    int height = 0;
    for (std::size_t c = a + 1; c < beta.size(); ++c)
      if (beta[c] > t) ++height;
    std::vector<unsigned> nb = beta;
    nb[a] = t;
    Int sub = chi_rec(partition_from_beta(std::move(nb)), mu, depth + 1, memo);
    if (height % 2)
      acc -= sub;
    else
      acc += sub;
  }
  memo.emplace(std::move(key), acc);
  return acc;
}

}  // namespace

Int character(const Partition& shape, const Partition& cycle_type) {
  if (shape.degree() != cycle_type.degree())
    throw argument_error("character: shape and cycle type must have equal degree");
  limits::check_degree(shape.degree(), "character");
  ChiMemo memo;
  return chi_rec(shape.parts(), cycle_type.parts(), 0, memo);
}

Int centralizer_order(const Partition& mu) {
  Int z = 1;
  const auto& parts = mu.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    unsigned long count = j - i;
    z *= int_pow(Int(parts[i]), count) * factorial(count);
    i = j;
  }
  return z;
}

int cycle_type_sign(const Partition& mu) {
  return (mu.degree() - mu.rows()) % 2 ? -1 : 1;
}

CharacterTable::CharacterTable(unsigned n) : n_(n) {
  limits::check_degree(n, "character_table");
  if (n > limits::max_table_degree)
    throw resource_error("character_table: degree " + std::to_string(n) +
                         " exceeds the table bound " + std::to_string(limits::max_table_degree));
  labels_ = partitions_of(n);
  group_order_ = factorial(n);
  std::size_t k = labels_.size();
  values_.assign(k, std::vector<Int>(k));
  class_sizes_.resize(k);
  for (std::size_t j = 0; j < k; ++j) {
    class_sizes_[j] = exact_div(group_order_, centralizer_order(labels_[j]), "class size");
    ChiMemo memo;  // shared across shapes: the column has one fixed cycle type
    for (std::size_t i = 0; i < k; ++i)
      values_[i][j] = chi_rec(labels_[i].parts(), labels_[j].parts(), 0, memo);
  }
}

std::size_t CharacterTable::index_of(const Partition& p) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), p);
  if (it == labels_.end() || *it != p)
    throw argument_error("partition has the wrong degree for this table");
  return static_cast<std::size_t>(it - labels_.begin());
}

const Int& CharacterTable::value(const Partition& shape, const Partition& cls) const {
  return values_[index_of(shape)][index_of(cls)];
}

const CharacterTable& character_table(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<const CharacterTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, std::make_unique<const CharacterTable>(n)).first;
  return *it->second;
}

namespace {

// All ways of growing `base` into a shape inside `bound` by a horizontal
// strip of `add` cells (at most one new cell per column, i.e. row r may not
// grow past the previous row's *old* length).
void for_each_strip_extension(const std::vector<unsigned>& base, const std::vector<unsigned>& bound,
                              unsigned add, std::vector<unsigned>& row_acc, std::size_t r,
                              const std::function<void(const std::vector<unsigned>&)>& fn) {
  if (r == bound.size()) {
    if (add == 0) {
      std::vector<unsigned> shape = row_acc;
      while (!shape.empty() && shape.back() == 0) shape.pop_back();
      fn(shape);
    }
    return;
  }
  unsigned old_here = r < base.size() ? base[r] : 0;
  unsigned cap = bound[r];
  if (r > 0) {
    unsigned old_prev = (r - 1) < base.size() ? base[r - 1] : 0;
    cap = std::min(cap, old_prev);
  }
  unsigned max_grow = cap > old_here ? std::min(cap - old_here, add) : 0;
  for (unsigned g = 0; g <= max_grow; ++g) {
    row_acc[r] = old_here + g;
    for_each_strip_extension(base, bound, add - g, row_acc, r + 1, fn);
  }
  row_acc[r] = old_here;
}

}  // namespace

Int kostka(const Partition& p, const Partition& q) {
  if (p.degree() != q.degree()) return 0;
  if (p.empty()) return 1;
  limits::check_degree(p.degree(), "kostka");
  // Layer one horizontal strip per content letter; count the chains ending at p.
  std::map<std::vector<unsigned>, Int> reached;
  reached[{}] = 1;
  for (unsigned letter = 0; letter < q.rows(); ++letter) {
    std::map<std::vector<unsigned>, Int> next;
    for (const auto& [shape, ways] : reached) {
      std::vector<unsigned> row_acc(p.rows(), 0);
      for (std::size_t r = 0; r < p.rows(); ++r) row_acc[r] = r < shape.size() ? shape[r] : 0;
      for_each_strip_extension(shape, p.parts(), q.parts()[letter], row_acc, 0,
                               [&, w = ways](const std::vector<unsigned>& t) { next[t] += w; });
    }
    reached.swap(next);
  }
  auto it = reached.find(p.parts());
  return it == reached.end() ? Int(0) : it->second;
}

Int kostka_oracle(const Partition& p, const Partition& q) {
  if (p.degree() != q.degree())
    throw argument_error("kostka_oracle: degree mismatch");
  unsigned n = p.degree();
  if (n == 0) return 1;
  const CharacterTable& table = character_table(n);

  // Character of Ind(sgn) from the Young subgroup S_q, as a class function:
  // a tuple of cycle types (one per factor) contributes z_union / prod z_i
  // times its sign to the class of the union.
  std::vector<Int> ind(table.labels().size(), 0);
  std::vector<Partition> chosen(q.rows());
  std::function<void(std::size_t)> tuples = [&](std::size_t j) {
    if (j == q.rows()) {
      std::vector<unsigned> all;
      Int den = 1;
      int sg = 1;
      for (const Partition& mu : chosen) {
        all.insert(all.end(), mu.parts().begin(), mu.parts().end());
        den *= centralizer_order(mu);
        sg *= cycle_type_sign(mu);
      }
      Partition combined = Partition::from_multiset(std::move(all));
      Int ratio = exact_div(centralizer_order(combined), den, "induced character ratio");
      ind[table.index_of(combined)] += sg * ratio;
      return;
    }
    for (const Partition& mu : partitions_of(q.parts()[j])) {
      chosen[j] = mu;
      tuples(j + 1);
    }
  };
  tuples(0);

  Int acc = 0;
  for (std::size_t j = 0; j < table.labels().size(); ++j)
    acc += table.class_size(j) * table.value(table.index_of(p), j) *
           cycle_type_sign(table.labels()[j]) * ind[j];
  Int result = exact_div(acc, table.group_order(), "kostka_oracle inner product");
  if (result < 0) throw std::logic_error("kostka_oracle produced a negative multiplicity");
  return result;
}

PartitionMatrix kostka_matrix(unsigned n) {
  limits::check_degree(n, "kostka_matrix");
  PartitionMatrix m;
  m.n = n;
  m.order = partitions_of(n);
  std::size_t k = m.order.size();
  m.entries.assign(k, std::vector<Int>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m.entries[i][j] = kostka(m.order[i], m.order[j]);
  for (std::size_t i = 0; i < k; ++i) {
    if (m.entries[i][i] != 1) throw std::logic_error("Kostka matrix: diagonal entry is not 1");
    for (std::size_t j = 0; j < i; ++j)
      if (m.entries[i][j] != 0) throw std::logic_error("Kostka matrix: nonzero below the diagonal");
  }
  return m;
}

PartitionMatrix inverse_kostka_matrix(unsigned n) {
  PartitionMatrix u = kostka_matrix(n);
  std::size_t k = u.order.size();
  PartitionMatrix v;
  v.n = n;
  v.order = u.order;
  v.entries.assign(k, std::vector<Int>(k, 0));
  for (std::size_t ii = k; ii-- > 0;) {
    v.entries[ii][ii] = 1;
    for (std::size_t j = ii + 1; j < k; ++j) {
      Int s = 0;
      for (std::size_t t = ii + 1; t <= j; ++t) s += u.entries[ii][t] * v.entries[t][j];
      v.entries[ii][j] = -s;
    }
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Int s = 0;
      for (std::size_t t = 0; t < k; ++t) s += u.entries[i][t] * v.entries[t][j];
      if (s != (i == j ? 1 : 0))
        throw std::logic_error("inverse Kostka matrix failed the product check");
    }
  return v;
}

Int lr_mult(const Partition& target, const std::vector<Partition>& factors) {
  unsigned n = 0;
  std::vector<Partition> fs;
  for (const Partition& f : factors) {
    n += f.degree();
    if (f.degree() > 0) fs.push_back(f);
  }
  if (target.degree() != n)
    throw argument_error("lr_mult: target degree must equal the total factor degree");
  if (n == 0) return 1;
  limits::check_degree(n, "lr_mult");
  const CharacterTable& tn = character_table(n);
  std::size_t target_row = tn.index_of(target);

  // <Ind(tensor of twisted irreducibles), twisted target> over S_n. The sgn
  // twists cancel between the induced character and the target, leaving plain
  // chi factors; denominators are the Young-subgroup factorials.
  Int denom = 1;
  for (const Partition& f : fs) denom *= factorial(f.degree());
  Int acc = 0;
  std::vector<Partition> chosen(fs.size());
  std::function<void(std::size_t, Int)> tuples = [&](std::size_t i, Int partial) {
    if (partial == 0) return;
    if (i == fs.size()) {
      std::vector<unsigned> all;
      for (const Partition& mu : chosen)
        all.insert(all.end(), mu.parts().begin(), mu.parts().end());
      Partition combined = Partition::from_multiset(std::move(all));
      acc += partial * tn.value(target_row, tn.index_of(combined));
      return;
    }
    unsigned d = fs[i].degree();
    const CharacterTable& td = character_table(d);
    for (const Partition& mu : partitions_of(d)) {
      chosen[i] = mu;
      tuples(i + 1, partial * td.class_size(td.index_of(mu)) * td.value(fs[i], mu));
    }
  };
  tuples(0, 1);
  Int result = exact_div(acc, denom, "lr_mult inner product");
  if (result < 0) throw std::logic_error("lr_mult produced a negative multiplicity");
  return result;
}

}  // namespace bmkit
