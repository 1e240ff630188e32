/*
 * Copyright 2026 The shortcutbench Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Dense arithmetic used by the reference classifier. Every kernel has a
// scalar reference implementation and, where the target supports it, a SIMD
// variant. The variant is picked once at runtime from CPU features;
// SCB_FORCE_SCALAR=1 in the environment pins the scalar path.
//
// axpy and scale are elementwise and bit-identical across variants.
// sum_squares is a reduction and may differ in the last bits.

#include <cstddef>
#include <span>

namespace scb::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

const char* isa_name(Isa isa);

// Variant currently used by the dispatching entry points.
Isa active_isa();

// True when `isa` can run on this machine (and was compiled in).
bool isa_available(Isa isa);

// Test hook: route dispatching entry points to `isa`. Returns false and
// changes nothing if the variant is unavailable.
bool force_isa(Isa isa);

// y += alpha * x
void axpy(double alpha, std::span<const double> x, std::span<double> y);
// y *= alpha
void scale(double alpha, std::span<double> y);
double sum_squares(std::span<const double> x);

namespace scalar {
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale(double alpha, double* y, std::size_t n);
double sum_squares(const double* x, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale(double alpha, double* y, std::size_t n);
double sum_squares(const double* x, std::size_t n);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale(double alpha, double* y, std::size_t n);
double sum_squares(const double* x, std::size_t n);
}  // namespace neon
#endif

}  // namespace scb::kernels
