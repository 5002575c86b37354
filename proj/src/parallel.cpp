#include "markov12/parallel.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <string>

namespace markov12 {

int thread_budget() {
  const int available = omp_get_max_threads();
  const char* env = std::getenv("MARKOV12_THREADS");
  if (env == nullptr || *env == '\0') return available;
  try {
    const int requested = std::stoi(env);
    if (requested > 0) return std::min(requested, available);
  } catch (const std::exception&) {
  }
  return available;
}

}  // namespace markov12
