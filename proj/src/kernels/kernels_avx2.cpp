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

// Built with -mavx2 -mfma. Nothing in here may run before the dispatcher
// has confirmed CPU support.

#include <immintrin.h>

#include "majex/kernels.hpp"

namespace majex::avx2 {
namespace {

// One __m256d holds two complex doubles: [re0, im0, re1, im1].

inline __m256d swap_re_im(__m256d v) {
    return _mm256_permute_pd(v, 0b0101);
}

// (cr + i ci) * v, with per-lane coefficients already spread as
// cr = [c0r, c0r, c1r, c1r] and ci = [c0i, c0i, c1i, c1i].
inline __m256d cmul(__m256d cr, __m256d ci, __m256d v) {
    return _mm256_fmaddsub_pd(cr, v, _mm256_mul_pd(ci, swap_re_im(v)));
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline double *raw(cplx *p) {
    return reinterpret_cast<double *>(p);
}
inline const double *raw(const cplx *p) {
    return reinterpret_cast<const double *>(p);
}

void apply_1q(cplx *amps, std::size_t size, unsigned qubit, const Mat2 &m) {
    double *a = raw(amps);
    if (qubit == 0) {
        // Pair (2k, 2k+1) sits in one register.
        const __m256d col0 = _mm256_setr_pd(m[0].real(), m[0].imag(), m[2].real(), m[2].imag());
        const __m256d col1 = _mm256_setr_pd(m[1].real(), m[1].imag(), m[3].real(), m[3].imag());
        const __m256d c0r = _mm256_movedup_pd(col0), c0i = _mm256_permute_pd(col0, 0b1111);
        const __m256d c1r = _mm256_movedup_pd(col1), c1i = _mm256_permute_pd(col1, 0b1111);
        for (std::size_t i = 0; i < size; i += 2) {
            const __m256d v = _mm256_loadu_pd(a + 2 * i);
            const __m256d lo = _mm256_permute2f128_pd(v, v, 0x00);
            const __m256d hi = _mm256_permute2f128_pd(v, v, 0x11);
            _mm256_storeu_pd(a + 2 * i, _mm256_add_pd(cmul(c0r, c0i, lo), cmul(c1r, c1i, hi)));
        }
        return;
    }
    const std::size_t half = std::size_t{1} << qubit;
    const __m256d m00r = _mm256_set1_pd(m[0].real()), m00i = _mm256_set1_pd(m[0].imag());
    const __m256d m01r = _mm256_set1_pd(m[1].real()), m01i = _mm256_set1_pd(m[1].imag());
    const __m256d m10r = _mm256_set1_pd(m[2].real()), m10i = _mm256_set1_pd(m[2].imag());
    const __m256d m11r = _mm256_set1_pd(m[3].real()), m11i = _mm256_set1_pd(m[3].imag());
    for (std::size_t base = 0; base < size; base += 2 * half) {
        for (std::size_t j = base; j < base + half; j += 2) {
            double *plo = a + 2 * j;
            double *phi = a + 2 * (j + half);
            const __m256d lo = _mm256_loadu_pd(plo);
            const __m256d hi = _mm256_loadu_pd(phi);
            _mm256_storeu_pd(plo, _mm256_add_pd(cmul(m00r, m00i, lo), cmul(m01r, m01i, hi)));
            _mm256_storeu_pd(phi, _mm256_add_pd(cmul(m10r, m10i, lo), cmul(m11r, m11i, hi)));
        }
    }
}

void apply_cx(cplx *amps, std::size_t size, unsigned control, unsigned target) {
    double *a = raw(amps);
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    if (target == 0) {
        for (std::size_t i = 0; i < size; i += 2) {
            if (i & cbit) {
                const __m256d v = _mm256_loadu_pd(a + 2 * i);
                _mm256_storeu_pd(a + 2 * i, _mm256_permute2f128_pd(v, v, 0x01));
            }
        }
        return;
    }
    if (control == 0) {
        // Only the odd element of each register has the control set.
        for (std::size_t i = 0; i < size; i += 2) {
            if (!(i & tbit)) {
                const __m256d lo = _mm256_loadu_pd(a + 2 * i);
                const __m256d hi = _mm256_loadu_pd(a + 2 * (i | tbit));
                _mm256_storeu_pd(a + 2 * i, _mm256_blend_pd(lo, hi, 0b1100));
                _mm256_storeu_pd(a + 2 * (i | tbit), _mm256_blend_pd(hi, lo, 0b1100));
            }
        }
        return;
    }
    for (std::size_t i = 0; i < size; i += 2) {
        if ((i & cbit) && !(i & tbit)) {
            const __m256d lo = _mm256_loadu_pd(a + 2 * i);
            const __m256d hi = _mm256_loadu_pd(a + 2 * (i | tbit));
            _mm256_storeu_pd(a + 2 * i, hi);
            _mm256_storeu_pd(a + 2 * (i | tbit), lo);
        }
    }
}

double prob_one(const cplx *amps, std::size_t size, unsigned qubit) {
    const double *a = raw(amps);
    __m256d acc = _mm256_setzero_pd();
    if (qubit == 0) {
        for (std::size_t i = 0; i < size; i += 2) {
            const __m256d v = _mm256_loadu_pd(a + 2 * i);
            acc = _mm256_fmadd_pd(v, v, acc);
        }
        const __m128d hi = _mm256_extractf128_pd(acc, 1);
        return _mm_cvtsd_f64(_mm_add_sd(hi, _mm_unpackhi_pd(hi, hi)));
    }
    const std::size_t bit = std::size_t{1} << qubit;
    for (std::size_t i = 0; i < size; i += 2) {
        if (i & bit) {
            const __m256d v = _mm256_loadu_pd(a + 2 * i);
            acc = _mm256_fmadd_pd(v, v, acc);
        }
    }
    return hsum(acc);
}

double norm2(const cplx *amps, std::size_t size) {
    const double *a = raw(amps);
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < size; i += 2) {
        const __m256d v = _mm256_loadu_pd(a + 2 * i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    return hsum(acc);
}

void collapse(cplx *amps, std::size_t size, unsigned qubit, unsigned keep, double scale) {
    double *a = raw(amps);
    if (qubit == 0) {
        const __m256d mask = keep ? _mm256_setr_pd(0.0, 0.0, scale, scale) : _mm256_setr_pd(scale, scale, 0.0, 0.0);
        for (std::size_t i = 0; i < size; i += 2) {
            _mm256_storeu_pd(a + 2 * i, _mm256_mul_pd(_mm256_loadu_pd(a + 2 * i), mask));
        }
        return;
    }
    const std::size_t bit = std::size_t{1} << qubit;
    const __m256d s = _mm256_set1_pd(scale);
    const __m256d zero = _mm256_setzero_pd();
    for (std::size_t i = 0; i < size; i += 2) {
        if (((i & bit) != 0) == (keep != 0)) {
            _mm256_storeu_pd(a + 2 * i, _mm256_mul_pd(_mm256_loadu_pd(a + 2 * i), s));
        } else {
            _mm256_storeu_pd(a + 2 * i, zero);
        }
    }
}

void scale(cplx *amps, std::size_t size, double factor) {
    double *a = raw(amps);
    const __m256d s = _mm256_set1_pd(factor);
    for (std::size_t i = 0; i < size; i += 2) {
        _mm256_storeu_pd(a + 2 * i, _mm256_mul_pd(_mm256_loadu_pd(a + 2 * i), s));
    }
}

}  // namespace

const KernelTable &table() {
    static const KernelTable t{"avx2", apply_1q, apply_cx, prob_one, norm2, collapse, scale};
    return t;
}

}  // namespace majex::avx2
