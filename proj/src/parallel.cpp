#include "lpfourier/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace lpfourier {

unsigned default_workers() {
  if (const char* env = std::getenv("LPFOURIER_WORKERS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
      // fall through to hardware concurrency
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace lpfourier
