// Copyright 2026 The Authors.
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

#include "knapwin/parallel.h"

#include <omp.h>

#include <mutex>
#include <stdexcept>

namespace knapwin {

Parallelism ParseParallelism(const std::string& name) {
  if (name == "serial") return Parallelism::kSerial;
  if (name == "openmp" || name == "omp") return Parallelism::kOpenMP;
  throw std::invalid_argument("unknown parallelism '" + name +
                              "' (expected serial|openmp)");
}

const char* ParallelismName(Parallelism p) {
  return p == Parallelism::kSerial ? "serial" : "openmp";
}

int MaxThreads() { return omp_get_max_threads(); }

void SetMaxThreads(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

void ParallelFor(size_t n, Parallelism policy,
                 const std::function<void(size_t)>& body) {
  if (policy == Parallelism::kSerial || n < 2) {
    for (size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr first_error;
  std::mutex mu;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) {
    try {
      body(static_cast<size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace knapwin
