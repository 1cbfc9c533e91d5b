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

// Execution policy for the data-parallel kernels. Every kernel keeps a
// serial path; the OpenMP path must produce bit-identical results.

#ifndef KNAPWIN_PARALLEL_H_
#define KNAPWIN_PARALLEL_H_

#include <cstddef>
#include <exception>
#include <functional>
#include <string>

namespace knapwin {

enum class Parallelism { kSerial, kOpenMP };

Parallelism ParseParallelism(const std::string& name);
const char* ParallelismName(Parallelism p);

// Number of threads an OpenMP region would use.
int MaxThreads();
void SetMaxThreads(int threads);

// Runs body(i) for i in [0, n). Under kOpenMP iterations may run
// concurrently and the first exception thrown by any iteration is rethrown
// after the loop joins.
void ParallelFor(size_t n, Parallelism policy,
                 const std::function<void(size_t)>& body);

}  // namespace knapwin

#endif  // KNAPWIN_PARALLEL_H_
