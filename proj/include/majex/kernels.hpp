// Copyright 2026 The majex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

namespace majex {

using cplx = std::complex<double>;

/// Row-major 2x2 complex matrix: {m00, m01, m10, m11}.
using Mat2 = std::array<cplx, 4>;

/// Inner loops of the dense simulator. Every entry takes the amplitude
/// buffer as interleaved (re, im) doubles of length 2^num_qubits complex
/// values; qubit q is bit q of the basis index.
///
/// A table exists per instruction set. The scalar table is the reference;
/// the others must agree with it to rounding (see tests/test_kernels.cpp).
struct KernelTable {
    std::string_view name;

    void (*apply_1q)(cplx *amps, std::size_t size, unsigned qubit, const Mat2 &m);
    void (*apply_cx)(cplx *amps, std::size_t size, unsigned control, unsigned target);
    /// Sum of |a_i|^2 over indices with bit `qubit` set.
    double (*prob_one)(const cplx *amps, std::size_t size, unsigned qubit);
    double (*norm2)(const cplx *amps, std::size_t size);
    /// Zero the half where bit `qubit` != keep and multiply the rest by scale.
    void (*collapse)(cplx *amps, std::size_t size, unsigned qubit, unsigned keep, double scale);
    void (*scale)(cplx *amps, std::size_t size, double factor);
};

const KernelTable &scalar_kernels();

/// AVX2+FMA table, or nullptr when the build or the running CPU lacks it.
const KernelTable *avx2_kernels();

/// Table used by default: the widest supported one, unless the environment
/// variable MAJEX_KERNELS=scalar forces the reference path.
const KernelTable &default_kernels();

/// Every table usable on this machine, scalar first.
std::vector<const KernelTable *> available_kernels();

}  // namespace majex
