#include "alextop/parallel.hpp"

#include <cstdlib>
#include <string>

namespace alextop {

uint32_t default_worker_count() {
  if (const char* env = std::getenv("ALEX_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<uint32_t>(v);
  }
  uint32_t hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace alextop
