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

#include "majex/device.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "majex/errors.hpp"

namespace majex {
namespace {

using nlohmann::json;

bool is_probability(double p) {
    return p >= 0.0 && p <= 1.0;
}

std::string pair_str(const std::pair<int, int> &p) {
    return "(" + std::to_string(p.first) + ", " + std::to_string(p.second) + ")";
}

std::pair<int, int> parse_pair(const json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
        throw ValidationError("CNOT pair must be [control, target], got " + j.dump());
    }
    return {j[0].get<int>(), j[1].get<int>()};
}

double number(const json &obj, const char *key, double fallback, bool required) {
    if (!obj.contains(key)) {
        if (required) {
            throw ValidationError(std::string("missing field \"") + key + "\"");
        }
        return fallback;
    }
    if (!obj.at(key).is_number()) {
        throw ValidationError(std::string("field \"") + key + "\" must be a number");
    }
    return obj.at(key).get<double>();
}

// Byte offset to 1-based (line, column).
std::pair<int, int> locate(std::string_view text, std::size_t offset) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace

void DeviceModel::validate() const {
    if (qubits.empty()) {
        throw ValidationError("device has no qubits");
    }
    for (std::size_t q = 0; q < qubits.size(); ++q) {
        const auto &d = qubits[q];
        const std::string where = "qubit " + std::to_string(q) + ": ";
        if (!(d.t1_us > 0.0) || !(d.t2_us > 0.0)) {
            throw ValidationError(where + "T1 and T2 must be positive");
        }
        if (d.t2_us > 2.0 * d.t1_us * (1.0 + 1e-12)) {
            throw ValidationError(where + "T2 exceeds 2*T1");
        }
        if (!is_probability(d.readout_err) || !is_probability(d.single_err)) {
            throw ValidationError(where + "error probabilities must lie in [0, 1]");
        }
    }
    if (allowed_cnots.empty()) {
        throw ValidationError("device allows no CNOTs");
    }
    const int n = num_qubits();
    auto check_pair = [n](const std::pair<int, int> &p) {
        if (p.first < 0 || p.first >= n || p.second < 0 || p.second >= n || p.first == p.second) {
            throw ValidationError("invalid CNOT pair " + pair_str(p));
        }
    };
    for (const auto &p : allowed_cnots) {
        check_pair(p);
        if (!cnot_err.count(p) && !cnot_err.count({p.second, p.first})) {
            throw ValidationError("allowed CNOT " + pair_str(p) + " has no error rate");
        }
    }
    for (const auto &[p, e] : cnot_err) {
        check_pair(p);
        if (!is_probability(e)) {
            throw ValidationError("CNOT error for " + pair_str(p) + " outside [0, 1]");
        }
    }
    for (double d : {cnot_ns, single_ns, measure_ns, reset_ns}) {
        if (!(d >= 0.0) || !std::isfinite(d)) {
            throw ValidationError("durations must be finite and non-negative");
        }
    }
}

double DeviceModel::cnot_error(int a, int b) const {
    if (auto it = cnot_err.find({a, b}); it != cnot_err.end()) {
        return it->second;
    }
    if (auto it = cnot_err.find({b, a}); it != cnot_err.end()) {
        return it->second;
    }
    throw RoutingError("no CNOT calibration for " + pair_str({a, b}));
}

std::optional<int> DeviceModel::hub() const {
    std::optional<int> target;
    for (const auto &[c, t] : allowed_cnots) {
        if (target && *target != t) {
            return std::nullopt;
        }
        target = t;
    }
    return target;
}

GateDurations DeviceModel::durations() const {
    GateDurations d;
    d.single = single_ns * 1e-9;
    d.cx = cnot_ns * 1e-9;
    d.measure = measure_ns * 1e-9;
    d.reset = reset_ns * 1e-9;
    return d;
}

DeviceModel DeviceModel::star(int num_qubits, int hub, const DeviceQubit &qubit, double cnot_err, double cnot_ns,
                              double single_ns, double measure_ns) {
    DeviceModel d;
    d.name = "star" + std::to_string(num_qubits) + "-hub" + std::to_string(hub);
    d.synthetic = true;
    d.qubits.assign(num_qubits, qubit);
    for (int q = 0; q < num_qubits; ++q) {
        if (q != hub) {
            d.allowed_cnots.insert({q, hub});
            d.cnot_err[{q, hub}] = cnot_err;
        }
    }
    d.cnot_ns = cnot_ns;
    d.single_ns = single_ns;
    d.measure_ns = measure_ns;
    d.reset_ns = measure_ns;
    d.validate();
    return d;
}

DeviceModel parse_device(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text.begin(), json_text.end());
    } catch (const json::parse_error &e) {
        const auto [line, col] = locate(json_text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError(line, col, e.what());
    }
    if (!j.is_object()) {
        throw ValidationError("device file must be a JSON object");
    }
    DeviceModel d;
    d.name = j.value("name", std::string("device"));
    d.synthetic = j.value("synthetic", false);
    if (!j.contains("qubits") || !j.at("qubits").is_array()) {
        throw ValidationError("missing array \"qubits\"");
    }
    for (const auto &q : j.at("qubits")) {
        DeviceQubit dq;
        dq.t1_us = number(q, "t1_us", 0.0, true);
        dq.t2_us = number(q, "t2_us", 0.0, true);
        dq.readout_err = number(q, "readout_err", 0.0, true);
        dq.single_err = number(q, "single_err", 0.0, false);
        d.qubits.push_back(dq);
    }
    if (!j.contains("allowed_cnots") || !j.at("allowed_cnots").is_array()) {
        throw ValidationError("missing array \"allowed_cnots\"");
    }
    for (const auto &p : j.at("allowed_cnots")) {
        d.allowed_cnots.insert(parse_pair(p));
    }
    if (j.contains("cnots")) {
        for (const auto &c : j.at("cnots")) {
            if (!c.contains("pair")) {
                throw ValidationError("cnots entry without \"pair\"");
            }
            d.cnot_err[parse_pair(c.at("pair"))] = number(c, "err", 0.0, true);
        }
    }
    if (!j.contains("durations") || !j.at("durations").is_object()) {
        throw ValidationError("missing object \"durations\"");
    }
    const json &dur = j.at("durations");
    d.cnot_ns = number(dur, "cnot_ns", 0.0, true);
    d.single_ns = number(dur, "single_ns", 0.0, true);
    d.measure_ns = number(dur, "measure_ns", 0.0, true);
    d.reset_ns = number(dur, "reset_ns", d.measure_ns, false);
    d.validate();
    return d;
}

DeviceModel load_device(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open device file " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_device(buf.str());
}

std::string device_to_json(const DeviceModel &device) {
    json j;
    j["name"] = device.name;
    j["synthetic"] = device.synthetic;
    j["qubits"] = json::array();
    for (const auto &q : device.qubits) {
        j["qubits"].push_back(
            {{"t1_us", q.t1_us}, {"t2_us", q.t2_us}, {"readout_err", q.readout_err}, {"single_err", q.single_err}});
    }
    j["allowed_cnots"] = json::array();
    for (const auto &[c, t] : device.allowed_cnots) {
        j["allowed_cnots"].push_back({c, t});
    }
    j["cnots"] = json::array();
    for (const auto &[p, e] : device.cnot_err) {
        j["cnots"].push_back({{"pair", {p.first, p.second}}, {"err", e}});
    }
    j["durations"] = {{"cnot_ns", device.cnot_ns},
                      {"single_ns", device.single_ns},
                      {"measure_ns", device.measure_ns},
                      {"reset_ns", device.reset_ns}};
    return j.dump(2);
}

NoiseConfig noise_from_device(const DeviceModel &device) {
    device.validate();
    NoiseConfig n;
    n.id = device.name;
    for (const auto &q : device.qubits) {
        QubitNoise qn;
        qn.t1 = q.t1_us * 1e-6;
        qn.t2 = q.t2_us * 1e-6;
        qn.readout_error = q.readout_err;
        qn.single_gate_error = q.single_err;
        n.qubits.push_back(qn);
    }
    double sum = 0.0;
    for (const auto &[p, e] : device.cnot_err) {
        n.cx_error[p] = e;
        sum += e;
    }
    n.default_cx_error = device.cnot_err.empty() ? 0.0 : sum / static_cast<double>(device.cnot_err.size());
    n.durations = device.durations();
    n.validate();
    return n;
}

}  // namespace majex
