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

// Dense-matrix reference used only by tests. Everything here is built from
// Kronecker products of hand-written 2x2 matrices, so it shares no code
// with the library's kernels or Pauli algebra.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "majex/circuit.hpp"
#include "majex/simulate.hpp"
#include "majex/statevec.hpp"

namespace oracle {

using C = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat m2(C a, C b, C c, C d) {
    Mat m(2, 2);
    m << a, b, c, d;
    return m;
}

inline Mat I2() {
    return m2(1, 0, 0, 1);
}
inline Mat X() {
    return m2(0, 1, 1, 0);
}
inline Mat Y() {
    return m2(0, C(0, -1), C(0, 1), 0);
}
inline Mat Z() {
    return m2(1, 0, 0, -1);
}
inline Mat H() {
    const double r = 1.0 / std::sqrt(2.0);
    return m2(r, r, r, -r);
}
inline Mat S() {
    return m2(1, 0, 0, C(0, 1));
}
inline Mat Sdg() {
    return m2(1, 0, 0, C(0, -1));
}

inline Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// factors[q] acts on qubit q; qubit 0 is the least significant bit, so the
/// Kronecker product runs from the highest qubit down.
inline Mat tensor(const std::vector<Mat> &factors) {
    Mat out = Mat::Identity(1, 1);
    for (int q = static_cast<int>(factors.size()) - 1; q >= 0; --q) {
        out = kron(out, factors[q]);
    }
    return out;
}

inline Mat on_qubit(const Mat &m, int q, int n) {
    std::vector<Mat> f(n, I2());
    f[q] = m;
    return tensor(f);
}

/// Projector sum |0><0|_c (x) I + |1><1|_c (x) X_t.
inline Mat cnot(int control, int target, int n) {
    std::vector<Mat> p0(n, I2()), p1(n, I2());
    p0[control] = m2(1, 0, 0, 0);
    p1[control] = m2(0, 0, 0, 1);
    p1[target] = X();
    return tensor(p0) + tensor(p1);
}

inline Mat letter_matrix(char c) {
    switch (c) {
        case 'X':
            return X();
        case 'Y':
            return Y();
        case 'Z':
            return Z();
        default:
            return I2();
    }
}

/// "XIZ": character k acts on qubit k; optional leading sign.
inline Mat pauli(const std::string &text) {
    double sign = 1.0;
    std::string body = text;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
        sign = body[0] == '-' ? -1.0 : 1.0;
        body = body.substr(1);
    }
    std::vector<Mat> f;
    for (char c : body) {
        f.push_back(letter_matrix(c));
    }
    return sign * tensor(f);
}

inline Mat gate_unitary(const majex::Gate &g, int n) {
    using majex::GateKind;
    switch (g.kind) {
        case GateKind::X:
            return on_qubit(X(), g.operands[0], n);
        case GateKind::Y:
            return on_qubit(Y(), g.operands[0], n);
        case GateKind::Z:
            return on_qubit(Z(), g.operands[0], n);
        case GateKind::H:
            return on_qubit(H(), g.operands[0], n);
        case GateKind::S:
            return on_qubit(S(), g.operands[0], n);
        case GateKind::Sdg:
            return on_qubit(Sdg(), g.operands[0], n);
        case GateKind::CX:
            return cnot(g.operands[0], g.operands[1], n);
    }
    return Mat::Identity(1 << n, 1 << n);
}

/// Product of the gates, in circuit order, on n qubits.
inline Mat unitary(const std::vector<majex::Gate> &gates, int n) {
    Mat u = Mat::Identity(1 << n, 1 << n);
    for (const auto &g : gates) {
        u = gate_unitary(g, n) * u;
    }
    return u;
}

inline Vec to_vec(const majex::StateVector &s) {
    Vec v(static_cast<Eigen::Index>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = s.amplitudes()[i];
    }
    return v;
}

inline double fidelity(const Vec &a, const Vec &b) {
    return std::norm(a.dot(b)) / (a.squaredNorm() * b.squaredNorm());
}

/// |0><0| or |1><1| on qubit q.
inline Mat z_projector(int q, int bit, int n) {
    return on_qubit(bit ? m2(0, 0, 0, 1) : m2(1, 0, 0, 0), q, n);
}

/// Exact distribution over classical records of a circuit without resets,
/// by explicit projector branching on dense vectors. Resets are supported
/// by branching and applying X on the 1 branch.
inline void branch(const majex::Circuit &c, std::size_t k, Vec psi, std::uint64_t rec,
                   std::map<std::uint64_t, double> &out) {
    const int n = c.num_qubits();
    for (; k < c.instructions().size(); ++k) {
        const auto &inst = c.instructions()[k];
        if (const auto *g = std::get_if<majex::Gate>(&inst)) {
            psi = gate_unitary(*g, n) * psi;
        } else if (const auto *m = std::get_if<majex::Measure>(&inst)) {
            for (int b : {0, 1}) {
                Vec p = z_projector(m->qubit, b, n) * psi;
                if (p.squaredNorm() > 1e-14) {
                    const std::uint64_t r = b ? (rec | (std::uint64_t{1} << m->cbit)) : (rec & ~(std::uint64_t{1} << m->cbit));
                    branch(c, k + 1, p, r, out);
                }
            }
            return;
        } else if (const auto *r = std::get_if<majex::Reset>(&inst)) {
            for (int b : {0, 1}) {
                Vec p = z_projector(r->qubit, b, n) * psi;
                if (p.squaredNorm() > 1e-14) {
                    if (b) {
                        p = on_qubit(X(), r->qubit, n) * p;
                    }
                    branch(c, k + 1, p, rec, out);
                }
            }
            return;
        }
    }
    out[rec] += psi.squaredNorm();
}

inline std::map<std::uint64_t, double> distribution(const majex::Circuit &c, const Vec &initial) {
    std::map<std::uint64_t, double> out;
    branch(c, 0, initial / initial.norm(), 0, out);
    return out;
}

inline Vec zero_state(int n) {
    Vec v = Vec::Zero(1 << n);
    v(0) = 1.0;
    return v;
}

inline std::vector<std::string> all_paulis(int n) {
    std::vector<std::string> out{""};
    for (int q = 0; q < n; ++q) {
        std::vector<std::string> next;
        for (const auto &s : out) {
            for (char c : {'I', 'X', 'Y', 'Z'}) {
                next.push_back(s + c);
            }
        }
        out = next;
    }
    return out;
}

inline Mat density(const majex::StateVector &s) {
    const Vec v = to_vec(s);
    return v * v.adjoint();
}

// Amplitude damping then dephasing, as Kraus maps on qubit q.
inline Mat idle_channel(const Mat &rho, int q, int n, double t, double t1, double t2) {
    const double g = 1.0 - std::exp(-t / t1);
    const Mat k0 = on_qubit(m2(1, 0, 0, std::sqrt(1 - g)), q, n);
    const Mat k1 = on_qubit(m2(0, std::sqrt(g), 0, 0), q, n);
    Mat out = k0 * rho * k0.adjoint() + k1 * rho * k1.adjoint();
    // Coherences decay overall by exp(-t / T2).
    const double lambda = std::exp(-t / t2) / std::exp(-t / (2 * t1));
    const double pz = 0.5 * (1 - lambda);
    const Mat z = on_qubit(Z(), q, n);
    return (1 - pz) * out + pz * z * out * z;
}

// Trajectory averages of every Pauli expectation that miss the exact
// channel output by more than 3 standard errors of the per-trajectory values.
inline std::vector<std::string> channel_mismatches(
    const majex::StateVector &input, const Mat &rho_out,
    const std::function<void(majex::StateVector &, majex::Rng &)> &trajectory, int trajectories,
    std::uint64_t seed) {
    const auto labels = all_paulis(input.num_qubits());
    std::vector<majex::PauliOperator> ops;
    for (const auto &l : labels) {
        ops.push_back(majex::PauliOperator::from_string(l));
    }
    std::vector<double> sum(labels.size(), 0.0), sum2(labels.size(), 0.0);
    for (int t = 0; t < trajectories; ++t) {
        majex::Rng rng = majex::shot_rng(seed, static_cast<std::uint64_t>(t));
        majex::StateVector s = input;
        trajectory(s, rng);
        for (std::size_t k = 0; k < ops.size(); ++k) {
            const double e = s.expectation(ops[k]);
            sum[k] += e;
            sum2[k] += e * e;
        }
    }
    std::vector<std::string> out;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        const double mean = sum[k] / trajectories;
        const double var = std::max(0.0, sum2[k] / trajectories - mean * mean);
        const double se = std::sqrt(var / trajectories);
        const double exact = (rho_out * pauli(labels[k])).trace().real();
        if (std::abs(mean - exact) > 3 * se + 1e-9) {
            out.push_back(labels[k] + ": mean " + std::to_string(mean) + ", exact " + std::to_string(exact));
        }
    }
    return out;
}

}  // namespace oracle
