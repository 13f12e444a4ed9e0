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

#include <json.hpp>
#include <memory>
#include <vector>

#include "vnqca/lattice.hpp"
#include "vnqca/linalg.hpp"
#include "vnqca/rules.hpp"

namespace vnqca {

enum class GateKind { Rotation, ControlledPhase, Swap, Block };

const char *gate_kind_name(GateKind kind);

/// One gate on explicit qubit indices. Block gates carry a dense unitary
/// whose qubit k is qubits[k].
struct Gate {
    GateKind kind = GateKind::Rotation;
    std::vector<int> qubits;
    Angles3 theta{0, 0, 0};
    double phi = 0;
    int axis = -1;  // bond direction of a lattice controlled phase
    std::shared_ptr<const CMatrix> block;

    static Gate rotation(int q, const Angles3 &theta);
    static Gate cphase(int a, int b, double phi, int axis = -1);
    static Gate swap(int a, int b);
    static Gate dense(std::vector<int> qubits, CMatrix unitary);

    /// Dense unitary of the gate on its own qubits.
    CMatrix matrix() const;
};

using Layer = std::vector<Gate>;

/// Ordered layers of gates with pairwise disjoint supports inside each layer.
class Circuit {
   public:
    Circuit(int qubit_count, int block_bound);

    /// Throws InputError when gates overlap, leave the register or exceed
    /// the block bound.
    void add_layer(Layer layer);
    void append(const Circuit &other);

    int qubit_count() const {
        return qubit_count_;
    }
    int block_bound() const {
        return block_bound_;
    }
    int depth() const {
        return static_cast<int>(layers_.size());
    }
    const std::vector<Layer> &layers() const {
        return layers_;
    }
    size_t gate_count() const;

   private:
    int qubit_count_;
    int block_bound_;
    std::vector<Layer> layers_;
};

/// One step of a controlled-phase rule on a periodic lattice: a layer of
/// rotations, then one layer of controlled phases per (axis, parity of the
/// lower bond endpoint), axes in order and even parity first. Depth 2s+1.
Circuit compile_step(const RuleParams &params, const LatticeSpec &spec);

/// Swap chains translating the state by y = +-e_i: the content of site x
/// ends on site x + y. One swap per ring and layer; depth extent_i - 1.
Circuit compile_shift(const Coord &y, const LatticeSpec &spec);

/// Rotation layer followed by the translation carrying operators by the
/// rule's shift vector (the state moves by -shift). Shift rules only.
Circuit compile_shift_step(const RuleParams &params, const LatticeSpec &spec);

/// Depth-2 circuit on the Margolus partition: blocks c + 2j, then c + q + 2j.
/// Controlled-phase rules only.
Circuit compile_margolus(const RuleParams &params, const LatticeSpec &spec, const Coord &q);

/// t steps restricted to the causal cone of the origin in Z^s, keeping only
/// gates that can influence the origin's final state: step k rotates the
/// sites within distance t-k+1 and applies the bonds touching distance t-k.
struct ConeCircuit {
    SiteSet sites;  // qubit k is sites[k]; origin first
    Circuit circuit;
};

ConeCircuit compile_cone(const RuleParams &params, int t);

nlohmann::json circuit_to_json(const Circuit &circuit, const std::vector<Coord> *sites = nullptr);

}  // namespace vnqca
