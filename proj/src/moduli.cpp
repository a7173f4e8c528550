#include "bmkit/moduli.hpp"

#include <map>
#include <numeric>

#include "bmkit/errors.hpp"

namespace bmkit {

std::vector<FrobeniusOrbit> frobenius_orbits(unsigned long q, unsigned long m) {
  if (m == 0) throw argument_error("frobenius_orbits: modulus must be positive");
  if (std::gcd(q % m, m) != 1)
    throw argument_error("frobenius_orbits: q must be invertible mod m");
  if (m > limits::orbit_scan_cap)
    throw resource_error("frobenius_orbits: modulus exceeds the scan bound");
  unsigned long qm = q % m;
  std::vector<bool> visited(m, false);
  std::vector<FrobeniusOrbit> out;
  for (unsigned long x = 0; x < m; ++x) {
    if (visited[x]) continue;
    // x is unvisited, so everything below x sits in earlier orbits: x is the
    // minimum of its own orbit and the scan emits orbits by min_rep.
    unsigned long size = 0;
    unsigned long y = x;
    do {
      visited[y] = true;
      ++size;
      y = y * qm % m;
    } while (y != x);
    out.push_back(FrobeniusOrbit{Int(m), Int(x), size});
  }
  return out;
}

namespace {

unsigned long factorial_exponent(unsigned n) {
  unsigned long f = 1;
  for (unsigned i = 2; i <= n; ++i) {
    if (f > static_cast<unsigned long>(-1) / i)
      throw resource_error("component modulus exponent overflows");
    f *= i;
  }
  return f;
}

}  // namespace

Int component_modulus(unsigned n, unsigned long q,
                      std::optional<unsigned long> residue_char_l) {
  if (n == 0) throw argument_error("component_modulus: n must be positive");
  if (q < 2) throw argument_error("component_modulus: q must be at least 2");
  Int m = int_pow(Int(q), factorial_exponent(n)) - 1;
  if (residue_char_l) {
    unsigned long l = *residue_char_l;
    if (!is_prime(Int(l))) throw argument_error("residue characteristic must be prime");
    if (q % l == 0) throw argument_error("residue characteristic must not divide q");
    Int rest;
    mpz_remove(rest.get_mpz_t(), m.get_mpz_t(), Int(l).get_mpz_t());
    m = rest;
  }
  return m;
}

std::vector<ComponentDatum> enumerate_components(unsigned n, unsigned long q,
                                                 std::optional<unsigned long> residue_char_l,
                                                 bool allow_large) {
  if (n > 4 && !allow_large)
    throw resource_error("enumerate_components: n > 4 needs the large override");
  Int m = component_modulus(n, q, residue_char_l);

  // Orbits of size <= n only. Elements whose orbit size divides d form the
  // subgroup of order gcd(q^d - 1, m), generated by m over that gcd; walking
  // those subgroups finds every short orbit without scanning all of Z/m.
  std::map<Int, unsigned long> orbits;  // min_rep -> size
  unsigned long long walked = 0;
  for (unsigned d = 1; d <= n; ++d) {
    Int g = gcd(int_pow(Int(q), d) - 1, m);
    Int step = exact_div(m, g, "subgroup index");
    for (Int k = 0; k < g; ++k) {
      if (++walked > limits::orbit_scan_cap)
        throw resource_error("enumerate_components: too many short-orbit elements");
      Int x = k * step;
      Int min_rep = x;
      unsigned long size = 0;
      Int y = x;
      do {
        if (y < min_rep) min_rep = y;
        ++size;
        y = y * q % m;
        if (size > d) throw std::logic_error("orbit walked past its subgroup bound");
      } while (y != x);
      orbits.emplace(min_rep, size);
    }
  }

  std::vector<FrobeniusOrbit> pool;
  for (const auto& [rep, size] : orbits)
    if (size <= n) pool.push_back(FrobeniusOrbit{m, rep, size});

  std::vector<ComponentDatum> out;
  std::vector<std::pair<FrobeniusOrbit, Partition>> chosen;
  auto rec = [&](auto&& self, std::size_t i, unsigned rem) -> void {
    if (rem == 0) {
      out.push_back(ComponentDatum{chosen});
      if (out.size() > limits::materialize_cap)
        throw resource_error("enumerate_components: too many components");
      return;
    }
    if (i == pool.size()) return;
    unsigned long size = pool[i].size;
    for (unsigned deg = rem / static_cast<unsigned>(size); deg > 0; --deg)
      for (const Partition& p : partitions_of(deg)) {
        chosen.emplace_back(pool[i], p);
        self(self, i + 1, rem - deg * static_cast<unsigned>(size));
        chosen.pop_back();
      }
    self(self, i + 1, rem);
  };
  rec(rec, 0, n);
  return out;
}

Int count_components_oracle(unsigned n, unsigned long q) {
  if (n == 0) throw argument_error("count_components_oracle: n must be positive");
  Int m_int = component_modulus(n, q);
  if (!m_int.fits_ulong_p() || m_int.get_ui() > limits::orbit_scan_cap)
    throw resource_error("count_components_oracle: modulus exceeds the scan bound");
  std::vector<FrobeniusOrbit> orbits = frobenius_orbits(q, m_int.get_ui());

  // [x^n] of the product over orbits of (1 + sum_d p(d) x^{size*d}).
  std::vector<Int> coeff(n + 1, 0);
  coeff[0] = 1;
  for (const FrobeniusOrbit& orbit : orbits) {
    unsigned long size = orbit.size;
    if (size > n) continue;
    std::vector<Int> next = coeff;
    for (unsigned deg = 1; deg * size <= n; ++deg) {
      Int ways = partition_count(deg);
      for (unsigned base = 0; base + deg * size <= n; ++base)
        if (coeff[base] != 0) next[base + deg * size] += coeff[base] * ways;
    }
    coeff = std::move(next);
  }
  return coeff[n];
}

}  // namespace bmkit
