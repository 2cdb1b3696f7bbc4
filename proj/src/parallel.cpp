#include "adeh/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace adeh {

namespace {
std::atomic<int> override_threads{0};

int env_threads() {
  const char *v = std::getenv("ADEH_THREADS");
  if (!v)
    return 0;
  try {
    int n = std::stoi(v);
    return n > 0 ? n : 0;
  } catch (...) {
    return 0;
  }
}
} // namespace

int thread_count() {
#ifdef _OPENMP
  if (int o = override_threads.load(); o > 0)
    return o;
  static const int from_env = env_threads();
  return from_env > 0 ? from_env : omp_get_max_threads();
#else
  return 1;
#endif
}

void set_thread_count(int n) { override_threads.store(n > 0 ? n : 0); }

} // namespace adeh
