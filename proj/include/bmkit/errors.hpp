#pragma once

#include <stdexcept>
#include <string>

namespace bmkit {

/// Caller supplied malformed or inconsistent input. The CLI maps this to exit code 2.
struct argument_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Input was well-formed but exceeds a configured size bound. Exit code 3.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace limits {

/// Largest partition degree accepted anywhere. Defaults to 30; the BMKIT_MAX_DEGREE
/// environment variable overrides the default, set_max_degree() overrides both.
unsigned max_degree();
void set_max_degree(unsigned n);

/// Character tables are materialized only up to this degree (p(n)^2 entries).
inline constexpr unsigned max_table_degree = 16;

/// Enumeration-backed counters abort past this many visited objects.
inline constexpr unsigned long long enumeration_cap = 10'000'000ULL;
/// Ops that materialize their enumeration refuse past this many objects.
inline constexpr unsigned long long materialize_cap = 1'048'576ULL;
/// Full orbit scans need the modulus to fit in memory.
inline constexpr unsigned long long orbit_scan_cap = 4'000'000ULL;

/// Throws resource_error when n exceeds max_degree().
void check_degree(unsigned n, const char* what);

}  // namespace limits
}  // namespace bmkit
