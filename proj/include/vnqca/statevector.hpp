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

#pragma once

#include <vector>

#include "vnqca/circuit.hpp"
#include "vnqca/lattice.hpp"
#include "vnqca/linalg.hpp"
#include "vnqca/rules.hpp"

namespace vnqca {

/// Largest register the dense simulator accepts.
constexpr int kMaxDenseQubits = 28;

/// Pure state of n qubits; amplitude index bit k is qubit k, and qubit k
/// sits on sites[k].
class StateVector {
   public:
    explicit StateVector(std::vector<Coord> sites);

    int qubit_count() const {
        return static_cast<int>(sites_.size());
    }
    const std::vector<Coord> &sites() const {
        return sites_;
    }
    CVector &amplitudes() {
        return amps_;
    }
    const CVector &amplitudes() const {
        return amps_;
    }
    /// Qubit carrying `site`, or -1.
    int qubit_of(const Coord &site) const;
    double norm() const {
        return amps_.norm();
    }

   private:
    std::vector<Coord> sites_;
    CVector amps_;
};

/// V(delta)|0> on every site. Throws CapacityError above kMaxDenseQubits.
StateVector init_product_state(const InputStateParams &delta, const std::vector<Coord> &sites);
StateVector init_product_state(const InputStateParams &delta, const LatticeSpec &spec);

void apply_single(StateVector &state, int q, const Mat2 &u);
void apply_cphase(StateVector &state, int a, int b, double phi);
void apply_swap(StateVector &state, int a, int b);
/// General dense gate; qubit k of `u` acts on targets[k].
void apply_dense(StateVector &state, const std::vector<int> &targets, const CMatrix &u);

void apply_gate(StateVector &state, const Gate &gate);
void apply_circuit(StateVector &state, const Circuit &circuit);

Mat2 reduced_density(const StateVector &state, int qubit);

/// Von Neumann entropy in bits of a 2x2 density matrix. Eigenvalues within
/// 1e-10 of [0, 1] are clamped; anything further out, or a non-Hermitian
/// input, raises NumericalError.
double entropy(const Mat2 &rho);

/// Entropy of the origin after t steps of a controlled-phase rule, simulated
/// densely on the pruned causal cone.
double dense_cone_entropy(const RuleParams &params, const InputStateParams &delta, int t);

}  // namespace vnqca
