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

#include <utility>

#include "majex/kernels.hpp"

namespace majex {
namespace {

void apply_1q_scalar(cplx *amps, std::size_t size, unsigned qubit, const Mat2 &m) {
    const std::size_t half = std::size_t{1} << qubit;
    for (std::size_t base = 0; base < size; base += 2 * half) {
        for (std::size_t j = base; j < base + half; ++j) {
            const cplx lo = amps[j];
            const cplx hi = amps[j + half];
            amps[j] = m[0] * lo + m[1] * hi;
            amps[j + half] = m[2] * lo + m[3] * hi;
        }
    }
}

void apply_cx_scalar(cplx *amps, std::size_t size, unsigned control, unsigned target) {
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    for (std::size_t i = 0; i < size; ++i) {
        if ((i & cbit) && !(i & tbit)) {
            std::swap(amps[i], amps[i | tbit]);
        }
    }
}

double prob_one_scalar(const cplx *amps, std::size_t size, unsigned qubit) {
    const std::size_t bit = std::size_t{1} << qubit;
    double total = 0.0;
    for (std::size_t i = 0; i < size; ++i) {
        if (i & bit) {
            total += std::norm(amps[i]);
        }
    }
    return total;
}

double norm2_scalar(const cplx *amps, std::size_t size) {
    double total = 0.0;
    for (std::size_t i = 0; i < size; ++i) {
        total += std::norm(amps[i]);
    }
    return total;
}

void collapse_scalar(cplx *amps, std::size_t size, unsigned qubit, unsigned keep, double scale) {
    const std::size_t bit = std::size_t{1} << qubit;
    for (std::size_t i = 0; i < size; ++i) {
        if (((i & bit) != 0) == (keep != 0)) {
            amps[i] *= scale;
        } else {
            amps[i] = 0.0;
        }
    }
}

void scale_scalar(cplx *amps, std::size_t size, double factor) {
    for (std::size_t i = 0; i < size; ++i) {
        amps[i] *= factor;
    }
}

}  // namespace

const KernelTable &scalar_kernels() {
    static const KernelTable table{
        "scalar", apply_1q_scalar, apply_cx_scalar, prob_one_scalar, norm2_scalar, collapse_scalar, scale_scalar,
    };
    return table;
}

}  // namespace majex
