#pragma once

namespace markov12 {

// Worker count for OpenMP kernels: MARKOV12_THREADS when set to a positive
// integer (capped at the OpenMP maximum), otherwise the OpenMP maximum.
int thread_budget();

}  // namespace markov12
