#include "bmkit/errors.hpp"

#include <atomic>
#include <cstdlib>

namespace bmkit::limits {

namespace {

unsigned default_from_env() {
  if (const char* s = std::getenv("BMKIT_MAX_DEGREE")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && v >= 1 && v <= 200) return static_cast<unsigned>(v);
  }
  return 30;
}

std::atomic<unsigned> g_max_degree{0};  // 0 = not yet initialized

}  // namespace

unsigned max_degree() {
  unsigned v = g_max_degree.load(std::memory_order_relaxed);
  if (v == 0) {
    v = default_from_env();
    g_max_degree.store(v, std::memory_order_relaxed);
  }
  return v;
}

void set_max_degree(unsigned n) {
  if (n == 0) throw argument_error("max degree must be positive");
  g_max_degree.store(n, std::memory_order_relaxed);
}

void check_degree(unsigned n, const char* what) {
  if (n > max_degree())
    throw resource_error(std::string(what) + ": degree " + std::to_string(n) +
                         " exceeds the configured bound " + std::to_string(max_degree()));
}

}  // namespace bmkit::limits
