// Copyright 2026 The vnqca Authors
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

#include "vnqca/statevector.hpp"

#include <cmath>

#include "vnqca/errors.hpp"

namespace vnqca {

namespace {

constexpr double kClampTol = 1e-10;

void check_qubit(const StateVector &state, int q) {
    if (q < 0 || q >= state.qubit_count()) {
        throw InputError("gate qubit outside the state");
    }
}

}  // namespace

StateVector::StateVector(std::vector<Coord> sites) : sites_(std::move(sites)) {
    if (qubit_count() > kMaxDenseQubits) {
        throw CapacityError("dense simulation of " + std::to_string(qubit_count()) + " qubits exceeds the cap of " +
                            std::to_string(kMaxDenseQubits));
    }
    amps_ = CVector::Zero(Eigen::Index{1} << qubit_count());
    amps_[0] = 1;
}

int StateVector::qubit_of(const Coord &site) const {
    for (size_t k = 0; k < sites_.size(); k++) {
        if (sites_[k] == site) {
            return static_cast<int>(k);
        }
    }
    return -1;
}

StateVector init_product_state(const InputStateParams &delta, const std::vector<Coord> &sites) {
    StateVector state(sites);
    Mat2 v = rotation_matrix(delta.delta);
    const Complex u0 = v(0, 0), u1 = v(1, 0);
    auto &a = state.amplitudes();
    // Build the product by doubling: after qubit k the first 2^{k+1}
    // amplitudes hold the state of qubits 0..k.
    for (int k = 0; k < state.qubit_count(); k++) {
        const Eigen::Index half = Eigen::Index{1} << k;
        for (Eigen::Index i = 0; i < half; i++) {
            a[i + half] = a[i] * u1;
            a[i] *= u0;
        }
    }
    return state;
}

StateVector init_product_state(const InputStateParams &delta, const LatticeSpec &spec) {
    if (spec.site_count() > kMaxDenseQubits) {
        throw CapacityError("lattice of " + std::to_string(spec.site_count()) + " sites exceeds the dense cap");
    }
    std::vector<Coord> sites;
    for (int k = 0; k < spec.site_count(); k++) {
        sites.push_back(spec.coord(k));
    }
    return init_product_state(delta, sites);
}

void apply_single(StateVector &state, int q, const Mat2 &u) {
    check_qubit(state, q);
    auto &a = state.amplitudes();
    const Eigen::Index bit = Eigen::Index{1} << q, size = a.size();
    const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
    for (Eigen::Index hi = 0; hi < size; hi += 2 * bit) {
        for (Eigen::Index i = hi; i < hi + bit; i++) {
            Complex x0 = a[i], x1 = a[i + bit];
            a[i] = u00 * x0 + u01 * x1;
            a[i + bit] = u10 * x0 + u11 * x1;
        }
    }
}

void apply_cphase(StateVector &state, int a, int b, double phi) {
    check_qubit(state, a);
    check_qubit(state, b);
    if (a == b) {
        throw InputError("controlled phase needs two distinct qubits");
    }
    auto &amp = state.amplitudes();
    const Eigen::Index mask = (Eigen::Index{1} << a) | (Eigen::Index{1} << b);
    const Complex ph = std::polar(1.0, phi);
    for (Eigen::Index i = 0; i < amp.size(); i++) {
        if ((i & mask) == mask) {
            amp[i] *= ph;
        }
    }
}

void apply_swap(StateVector &state, int a, int b) {
    check_qubit(state, a);
    check_qubit(state, b);
    if (a == b) {
        throw InputError("swap needs two distinct qubits");
    }
    auto &amp = state.amplitudes();
    const Eigen::Index ba = Eigen::Index{1} << a, bb = Eigen::Index{1} << b;
    for (Eigen::Index i = 0; i < amp.size(); i++) {
        if ((i & ba) && !(i & bb)) {
            std::swap(amp[i], amp[i ^ ba ^ bb]);
        }
    }
}

void apply_dense(StateVector &state, const std::vector<int> &targets, const CMatrix &u) {
    const int k = static_cast<int>(targets.size());
    const Eigen::Index local = Eigen::Index{1} << k;
    if (u.rows() != local || u.cols() != local) {
        throw InputError("dense gate size does not match its targets");
    }
    Eigen::Index tmask = 0;
    for (int q : targets) {
        check_qubit(state, q);
        if (tmask & (Eigen::Index{1} << q)) {
            throw InputError("dense gate targets must be distinct");
        }
        tmask |= Eigen::Index{1} << q;
    }
    // Offsets of every local basis state within the register.
    std::vector<Eigen::Index> offset(local, 0);
    for (Eigen::Index l = 0; l < local; l++) {
        for (int j = 0; j < k; j++) {
            if (l >> j & 1) {
                offset[l] |= Eigen::Index{1} << targets[j];
            }
        }
    }
    auto &amp = state.amplitudes();
    CVector in(local), out(local);
    for (Eigen::Index base = 0; base < amp.size(); base++) {
        if (base & tmask) {
            continue;
        }
        for (Eigen::Index l = 0; l < local; l++) {
            in[l] = amp[base | offset[l]];
        }
        out.noalias() = u * in;
        for (Eigen::Index l = 0; l < local; l++) {
            amp[base | offset[l]] = out[l];
        }
    }
}

void apply_gate(StateVector &state, const Gate &gate) {
    switch (gate.kind) {
        case GateKind::Rotation:
            apply_single(state, gate.qubits.at(0), rotation_matrix(gate.theta));
            break;
        case GateKind::ControlledPhase:
            apply_cphase(state, gate.qubits.at(0), gate.qubits.at(1), gate.phi);
            break;
        case GateKind::Swap:
            apply_swap(state, gate.qubits.at(0), gate.qubits.at(1));
            break;
        case GateKind::Block:
            apply_dense(state, gate.qubits, *gate.block);
            break;
    }
}

void apply_circuit(StateVector &state, const Circuit &circuit) {
    if (circuit.qubit_count() > state.qubit_count()) {
        throw InputError("circuit acts on qubits outside the state");
    }
    for (const auto &layer : circuit.layers()) {
        for (const auto &g : layer) {
            apply_gate(state, g);
        }
    }
}

Mat2 reduced_density(const StateVector &state, int qubit) {
    check_qubit(state, qubit);
    const auto &a = state.amplitudes();
    const Eigen::Index bit = Eigen::Index{1} << qubit;
    Complex r00 = 0, r01 = 0;
    double r11 = 0, n00 = 0;
    for (Eigen::Index hi = 0; hi < a.size(); hi += 2 * bit) {
        for (Eigen::Index i = hi; i < hi + bit; i++) {
            const Complex x0 = a[i], x1 = a[i + bit];
            n00 += std::norm(x0);
            r11 += std::norm(x1);
            r01 += x0 * std::conj(x1);
        }
    }
    r00 = n00;
    Mat2 rho;
    rho << r00, r01, std::conj(r01), r11;
    return rho;
}

double entropy(const Mat2 &rho) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kClampTol) {
        throw NumericalError("density matrix is not Hermitian");
    }
    const double a = rho(0, 0).real(), d = rho(1, 1).real();
    const double tr = a + d;
    if (std::abs(tr - 1) > kClampTol) {
        throw NumericalError("density matrix trace differs from 1");
    }
    const double gap = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(rho(0, 1)));
    double p[2] = {0.5 * tr - gap, 0.5 * tr + gap};
    double s = 0;
    for (double &x : p) {
        if (x < -kClampTol || x > 1 + kClampTol) {
            throw NumericalError("density matrix eigenvalue outside [0, 1]");
        }
        x = std::clamp(x, 0.0, 1.0);
        if (x > 0) {
            s -= x * std::log2(x);
        }
    }
    return s;
}

double dense_cone_entropy(const RuleParams &params, const InputStateParams &delta, int t) {
    if (static_cast<int64_t>(cone_size_formula(params.s, t)) > kMaxDenseQubits) {
        throw CapacityError("causal cone of " + std::to_string(cone_size_formula(params.s, t)) +
                            " sites exceeds the dense cap");
    }
    ConeCircuit cone = compile_cone(params, t);
    StateVector state = init_product_state(delta, cone.sites.sites());
    apply_circuit(state, cone.circuit);
    return entropy(reduced_density(state, 0));
}

}  // namespace vnqca
