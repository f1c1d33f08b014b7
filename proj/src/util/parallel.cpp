#include "sturmlab/util/parallel.hpp"

#include <cstdlib>
#include <string>

namespace sturmlab::util {

unsigned default_threads() {
  if (const char* env = std::getenv("STURMLAB_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace sturmlab::util
