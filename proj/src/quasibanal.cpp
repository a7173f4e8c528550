#include "bmkit/quasibanal.hpp"

#include <algorithm>
#include <functional>

#include "bmkit/errors.hpp"
#include "bmkit/symrep.hpp"

namespace bmkit {

QuasiBanalParams::QuasiBanalParams(unsigned long l_, unsigned long q_, unsigned n_)
    : l(l_), q(q_), n(n_) {
  if (n == 0) throw argument_error("quasi-banal parameters need n >= 1");
  if (l < 3 || l % 2 == 0 || !is_prime(Int(l)))
    throw argument_error("l must be an odd prime");
  if (l <= n) throw argument_error("the quasi-banal regime requires l > n");
  if (!is_prime_power(q)) throw argument_error("q must be a prime power");
  if (q % l != 1) throw argument_error("the quasi-banal regime requires q = 1 (mod l)");
  a = valuation(Int(q) - 1, Int(l));
}

Int QuasiBanalParams::index_count() const { return int_pow(Int(l), a); }

QuasiBanalParams default_params(unsigned n) {
  if (n == 0) throw argument_error("default_params needs n >= 1");
  unsigned long l = n < 3 ? 3 : n + 1;
  while (l % 2 == 0 || !is_prime(Int(l))) ++l;
  for (unsigned long k = 1;; ++k) {
    unsigned long q = k * l + 1;
    if (is_prime_power(q)) return QuasiBanalParams(l, q, n);
  }
}

TypeSequence::TypeSequence(std::vector<Entry> entries) {
  for (auto& e : entries) {
    if (e.second.empty()) continue;
    if (e.first == 0) throw argument_error("character indices start at 1");
    entries_.push_back(std::move(e));
  }
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i - 1].first == entries_[i].first)
      throw argument_error("type sequence assigns two partitions to index " +
                           std::to_string(entries_[i].first));
}

unsigned TypeSequence::degree() const {
  unsigned total = 0;
  for (const auto& [i, p] : entries_) total += p.degree();
  return total;
}

std::vector<Partition> TypeSequence::weights() const {
  std::vector<Partition> w;
  w.reserve(entries_.size());
  for (const auto& [i, p] : entries_) w.push_back(p);
  return w;
}

TypeSequence unipotent_sequence(const Partition& p) {
  return TypeSequence({{1, p}});
}

TypeSequence principal_series(unsigned n) {
  std::vector<TypeSequence::Entry> entries;
  for (unsigned i = 1; i <= n; ++i) entries.emplace_back(i, Partition({1}));
  return TypeSequence(std::move(entries));
}

std::vector<TypeSequence> type_sequences_with_degree(unsigned n, unsigned max_index) {
  limits::check_degree(n, "type_sequences_with_degree");
  std::vector<TypeSequence> out;
  std::vector<TypeSequence::Entry> chosen;
  auto rec = [&](auto&& self, unsigned index, unsigned rem) -> void {
    if (index > max_index) {
      if (rem == 0) {
        out.emplace_back(chosen);
        if (out.size() > limits::materialize_cap)
          throw resource_error("type_sequences_with_degree: too many sequences");
      }
      return;
    }
    for (unsigned d = rem; d > 0; --d)
      for (const Partition& p : partitions_of(d)) {
        chosen.emplace_back(index, p);
        self(self, index + 1, rem - d);
        chosen.pop_back();
      }
    self(self, index + 1, rem);
  };
  rec(rec, 1, n);
  return out;
}

namespace {

// Row-by-row margin fill. Within a row, cells go left to right and entries
// are tried in decreasing order; the bounds keep every partial fill
// completable, so no dead branches are emitted.
void fill_cells(const std::vector<unsigned>& rows, std::vector<unsigned>& col_rem,
                MarginMatrix& acc, std::size_t r, std::size_t j, unsigned row_rem,
                const std::function<void(const MarginMatrix&)>& emit) {
  if (j == col_rem.size()) {
    if (r + 1 == rows.size()) {
      for (unsigned c : col_rem)
        if (c) return;
      emit(acc);
      return;
    }
    fill_cells(rows, col_rem, acc, r + 1, 0, rows[r + 1], emit);
    return;
  }
  unsigned tail_capacity = 0;
  for (std::size_t t = j + 1; t < col_rem.size(); ++t) tail_capacity += col_rem[t];
  unsigned hi = std::min(row_rem, col_rem[j]);
  unsigned lo = row_rem > tail_capacity ? row_rem - tail_capacity : 0;
  for (unsigned v = hi; v + 1 > lo; --v) {
    acc[r][j] = v;
    col_rem[j] -= v;
    fill_cells(rows, col_rem, acc, r, j + 1, row_rem - v, emit);
    col_rem[j] += v;
    acc[r][j] = 0;
    if (v == 0) break;
  }
}

void for_each_margin_matrix(const Partition& p, const Partition& q,
                            const std::function<void(const MarginMatrix&)>& emit) {
  if (p.degree() != q.degree())
    throw argument_error("margin matrices need equal row and column totals");
  if (p.empty()) {
    emit(MarginMatrix{});
    return;
  }
  std::vector<unsigned> col_rem = q.parts();
  MarginMatrix acc(p.rows(), std::vector<unsigned>(q.rows(), 0));
  fill_cells(p.parts(), col_rem, acc, 0, 0, p.parts()[0], emit);
}

}  // namespace

std::vector<MarginMatrix> bipartitions(const Partition& p, const Partition& q) {
  std::vector<MarginMatrix> out;
  for_each_margin_matrix(p, q, [&](const MarginMatrix& m) {
    if (out.size() >= limits::materialize_cap)
      throw resource_error("bipartitions: more matrices than the materialization bound");
    out.push_back(m);
  });
  return out;
}

Int bip_count(const std::vector<Partition>& weights, const Partition& q) {
  unsigned total = 0;
  for (const Partition& w : weights) total += w.degree();
  if (total != q.degree())
    throw argument_error("bip_count: weights and column margins must have equal degree");

  // Rows are laid down in the order given. Each row ranges over the distinct
  // arrangements of its weight (padded with zeros), kept within what the
  // columns can still absorb.
  std::size_t cols = q.rows();
  std::vector<std::vector<std::vector<unsigned>>> row_choices;
  for (const Partition& w : weights) {
    if (w.rows() > cols) return 0;
    std::vector<unsigned> row(cols, 0);
    std::copy(w.parts().begin(), w.parts().end(), row.begin());
    std::sort(row.begin(), row.end());
    std::vector<std::vector<unsigned>> choices;
    do {
      choices.push_back(row);
    } while (std::next_permutation(row.begin(), row.end()));
    row_choices.push_back(std::move(choices));
  }

  std::vector<unsigned> col_rem = q.parts();
  unsigned long long visited = 0;
  Int count = 0;
  auto rec = [&](auto&& self, std::size_t r) -> void {
    if (r == row_choices.size()) {
      for (unsigned c : col_rem)
        if (c) return;
      ++count;
      return;
    }
    for (const auto& row : row_choices[r]) {
      if (++visited > limits::enumeration_cap)
        throw resource_error("bip_count: enumeration bound exceeded");
      bool fits = true;
      for (std::size_t j = 0; j < cols; ++j)
        if (row[j] > col_rem[j]) {
          fits = false;
          break;
        }
      if (!fits) continue;
      for (std::size_t j = 0; j < cols; ++j) col_rem[j] -= row[j];
      self(self, r + 1);
      for (std::size_t j = 0; j < cols; ++j) col_rem[j] += row[j];
    }
  };
  rec(rec, 0);
  return count;
}

std::map<std::vector<Partition>, Int> mackey_decomposition(const Partition& p,
                                                           const Partition& q) {
  std::map<std::vector<Partition>, Int> out;
  unsigned long long seen = 0;
  for_each_margin_matrix(p, q, [&](const MarginMatrix& m) {
    if (++seen > limits::enumeration_cap)
      throw resource_error("mackey_decomposition: enumeration bound exceeded");
    std::vector<Partition> weight;
    weight.reserve(m.size());
    for (const auto& row : m) weight.push_back(Partition::from_multiset(row));
    out[weight] += 1;
  });
  return out;
}

namespace {

void check_against_params(const TypeSequence& tau, const QuasiBanalParams& params) {
  if (!tau.entries().empty() && Int(tau.entries().back().first) > params.index_count())
    throw argument_error("type sequence uses a character index beyond l^a");
  if (tau.degree() != params.n)
    throw argument_error("type sequence degree differs from the configured n");
}

}  // namespace

Cycle cycle_at_distinguished(const TypeSequence& tau, const DistinguishedPoint& d,
                             const QuasiBanalParams& params) {
  check_against_params(tau, params);
  if (d.Q.degree() != params.n)
    throw argument_error("distinguished point has the wrong degree");
  Cycle out;
  out.add(SpecialFibreLabel{}, bip_count(tau.weights(), d.Q));
  return out;
}

VirtualRep red_rep(const TypeSequence& tau) {
  std::vector<Partition> w = tau.weights();
  VirtualRep out;
  for (const Partition& p : partitions_of(tau.degree()))
    out.add(ResidualLabel{p}, lr_mult(p, w));
  return out;
}

Cycle bar_cyc_at(const VirtualRep& v, const DistinguishedPoint& d) {
  Cycle out;
  for (const auto& [label, coeff] : v.coeffs()) {
    const ResidualLabel* res = std::get_if<ResidualLabel>(&label);
    if (!res) throw argument_error("bar_cyc_at is defined on residual classes only");
    if (res->shape.degree() != d.Q.degree())
      throw argument_error("residual class degree differs from the distinguished point");
    out.add(SpecialFibreLabel{}, coeff * kostka(res->shape, d.Q));
  }
  return out;
}

VerifyRecord verify_local_bm(const TypeSequence& tau, const DistinguishedPoint& d,
                             const QuasiBanalParams& params) {
  check_against_params(tau, params);
  if (d.Q.degree() != params.n)
    throw argument_error("distinguished point has the wrong degree");
  unsigned n = params.n;
  std::vector<Partition> w = tau.weights();

  // Reduction first, cycle second: characters only.
  Int lhs = 0;
  for (const Partition& p : partitions_of(n)) lhs += kostka_oracle(p, d.Q) * lr_mult(p, w);

  // Cycle first, reduction second: tableau counts and margin matrices only.
  Int rhs = 0;
  std::vector<Partition> replaced(w.size());
  auto rec = [&](auto&& self, std::size_t i, const Int& partial) -> void {
    if (partial == 0) return;
    if (i == w.size()) {
      rhs += partial * bip_count(replaced, d.Q);
      return;
    }
    for (const Partition& p : partitions_of(w[i].degree())) {
      replaced[i] = p;
      self(self, i + 1, partial * kostka(w[i], p));
    }
  };
  rec(rec, 0, 1);

  return VerifyRecord{n, d.Q, tau, lhs, rhs, lhs == rhs};
}

IharaReport ihara_report(unsigned n, const QuasiBanalParams& params) {
  if (n == 0) throw argument_error("ihara_report needs n >= 1");
  if (params.n != n)
    throw argument_error("ihara_report: parameters were built for a different n");
  if (params.index_count() < n)
    throw argument_error("ihara_report: fewer than n characters, no principal-series type");

  IharaReport report;
  report.n = n;
  report.ok = true;

  TypeSequence ps = principal_series(n);
  VirtualRep red = red_rep(ps);
  Partition column(std::vector<unsigned>(n, 1));
  for (const Partition& p : partitions_of(n)) {
    Int coeff = red.coeff(ResidualLabel{p});
    report.red_coefficients.emplace_back(p, coeff);
    if (coeff != kostka(p, column) || coeff != hook_length_count(p)) report.ok = false;
  }

  for (const Partition& q : partitions_of(n)) {
    DistinguishedPoint d(q);
    IharaCycleCheck check{q, cycle_at_distinguished(ps, d, params).coeff(SpecialFibreLabel{}),
                          0, multinomial(q)};
    for (const Partition& p : partitions_of(n))
      check.weighted_sum +=
          multinomial(p) *
          cycle_at_distinguished(unipotent_sequence(p), d, params).coeff(SpecialFibreLabel{});
    if (check.ps_side != check.expected || check.weighted_sum != check.expected)
      report.ok = false;
    report.cycle_checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace bmkit
