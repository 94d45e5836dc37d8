// Copyright 2026 The reseng Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "reseng/optimize.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <cmath>
#include <memory>

#include "reseng/errors.hpp"

namespace reseng {

namespace {

using Objective = std::function<double(const std::vector<double>&)>;

double trampoline(const gsl_vector* v, void* params) {
  const auto& f = *static_cast<const Objective*>(params);
  std::vector<double> x(v->size);
  for (std::size_t i = 0; i < v->size; ++i) x[i] = gsl_vector_get(v, i);
  const double y = f(x);
  return std::isfinite(y) ? y : GSL_POSINF;
}

struct VectorDeleter {
  void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};
struct MinimizerDeleter {
  void operator()(gsl_multimin_fminimizer* m) const { gsl_multimin_fminimizer_free(m); }
};

}  // namespace

NelderMeadResult nelder_mead(const Objective& f, std::vector<double> x0,
                             const NelderMeadOptions& options) {
  const std::size_t n = x0.size();
  NelderMeadResult out;
  if (n == 0) {
    out.value = f(x0);
    return out;
  }
  static const bool handler_off = [] {
    gsl_set_error_handler_off();
    return true;
  }();
  (void)handler_off;

  Objective fn = f;
  gsl_multimin_function func{&trampoline, n, &fn};
  std::unique_ptr<gsl_vector, VectorDeleter> x(gsl_vector_alloc(n));
  std::unique_ptr<gsl_vector, VectorDeleter> step(gsl_vector_alloc(n));
  std::unique_ptr<gsl_multimin_fminimizer, MinimizerDeleter> solver(
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n));
  if (!x || !step || !solver) throw Error("allocation failure in Nelder-Mead");

  out.x = std::move(x0);
  out.value = f(out.x);
  double step_size = options.initial_step;
  for (int round = 0; round <= options.refreshes; ++round) {
    for (std::size_t i = 0; i < n; ++i) {
      gsl_vector_set(x.get(), i, out.x[i]);
      gsl_vector_set(step.get(), i, step_size);
    }
    if (gsl_multimin_fminimizer_set(solver.get(), &func, x.get(), step.get()) != GSL_SUCCESS) break;
    for (int it = 0; it < options.max_iterations; ++it) {
      ++out.iterations;
      if (gsl_multimin_fminimizer_iterate(solver.get()) != GSL_SUCCESS) break;
      const double size = gsl_multimin_fminimizer_size(solver.get());
      if (gsl_multimin_test_size(size, options.size_tol) == GSL_SUCCESS) break;
    }
    const double val = gsl_multimin_fminimizer_minimum(solver.get());
    if (val <= out.value) {
      out.value = val;
      const gsl_vector* best = gsl_multimin_fminimizer_x(solver.get());
      for (std::size_t i = 0; i < n; ++i) out.x[i] = gsl_vector_get(best, i);
    }
    step_size *= 0.1;
  }
  return out;
}

}  // namespace reseng
