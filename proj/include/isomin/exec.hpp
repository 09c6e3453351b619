#pragma once

#include <exception>

namespace isomin {

// Serial is the reference path; Parallel must give bit-identical results.
enum class Exec { Serial, Parallel };

// Runs f(i) for i in [0, n). Exceptions thrown inside the parallel region are
// carried out and rethrown (the one from the lowest index wins).
template <class F>
void for_each_index(int n, Exec exec, F&& f) {
  if (exec == Exec::Serial) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::exception_ptr error;
  int error_index = n;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    try {
      f(i);
    } catch (...) {
#pragma omp critical(isomin_for_each_index)
      if (i < error_index) {
        error_index = i;
        error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace isomin
