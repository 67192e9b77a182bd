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

#include "majex/pipeline.hpp"

#include <stdexcept>

namespace majex {

ExchangeRun run_exchange(ReadoutSetting setting, const RunOptions &options) {
    ExchangeRun run;
    run.setting = setting;
    run.circuit = ideal_circuit(run.def, setting);
    if (options.compiled) {
        if (!options.device) {
            throw std::invalid_argument("a compiled run needs a device");
        }
        run.assignment = options.assignment ? *options.assignment : assign_qubits(*options.device);
        run.assignment->score = assignment_cost(*options.device, *run.assignment);
        run.circuit = compile(run.circuit, *options.device, *run.assignment);
        run.def = run.assignment->experiment();
    }
    run.raw = run_shots(run.circuit, options.shots, options.noise, options.seed, options.threads);
    run.kept = postselect(run.raw, run.def);
    return run;
}

TomographyRun run_tomography(const RunOptions &options) {
    constexpr ReadoutSetting settings[3] = {ReadoutSetting::X, ReadoutSetting::Y_YZY, ReadoutSetting::Z};
    TomographyRun t;
    for (int k = 0; k < 3; ++k) {
        RunOptions o = options;
        o.seed = options.seed + static_cast<std::uint64_t>(k);
        t.runs[k] = run_exchange(settings[k], o);
        t.estimates[k] = logical_expectation(t.runs[k].kept, t.runs[k].def, settings[k]);
    }
    t.result = reconstruct(t.estimates[0].value, t.estimates[1].value, t.estimates[2].value);
    for (int k = 0; k < 3; ++k) {
        t.result.bloch_stderr[k] = t.estimates[k].stderr_value;
    }
    return t;
}

}  // namespace majex
