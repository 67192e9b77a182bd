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

#include <cstdlib>
#include <string_view>

#include "majex/kernels.hpp"

namespace majex {

#if defined(MAJEX_HAVE_AVX2)
namespace avx2 {
const KernelTable &table();
}
#endif

const KernelTable *avx2_kernels() {
#if defined(MAJEX_HAVE_AVX2)
    static const bool supported = [] {
        __builtin_cpu_init();
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    }();
    return supported ? &avx2::table() : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable &default_kernels() {
    static const KernelTable *chosen = [] {
        const char *env = std::getenv("MAJEX_KERNELS");
        if (env != nullptr && std::string_view(env) == "scalar") {
            return &scalar_kernels();
        }
        if (const KernelTable *t = avx2_kernels()) {
            return t;
        }
        return &scalar_kernels();
    }();
    return *chosen;
}

std::vector<const KernelTable *> available_kernels() {
    std::vector<const KernelTable *> out{&scalar_kernels()};
    if (const KernelTable *t = avx2_kernels()) {
        out.push_back(t);
    }
    return out;
}

}  // namespace majex
