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

#include <cstdint>
#include <vector>

#include "vnqca/circuit.hpp"
#include "vnqca/linalg.hpp"
#include "vnqca/rules.hpp"

namespace vnqca {

/// Exact evaluator of one qubit's reduced state after a circuit of rotations
/// and lattice controlled phases on a product input, by variable elimination
/// over the ket/bra computational-basis paths. Every rotation binds to the
/// rule's theta and every controlled phase to phi[axis], so one elimination
/// plan serves a whole parameter sweep.
class ConeContraction {
   public:
    /// Plan for the pruned causal cone of the origin, t steps in Z^s.
    ConeContraction(int s, int t);
    /// Plan for an arbitrary rotation/controlled-phase circuit; `open_qubit`
    /// is the qubit whose reduced state is returned.
    ConeContraction(const Circuit &circuit, int open_qubit);

    Mat2 reduced_density(const RuleParams &params, const InputStateParams &delta) const;
    double entropy(const RuleParams &params, const InputStateParams &delta) const;

    /// Largest intermediate tensor rank reached by the plan.
    int max_width() const {
        return max_width_;
    }

   private:
    enum class FactorKind { Init, Rotation, Phase };
    struct Factor {
        FactorKind kind;
        bool bra;
        int axis;
        std::vector<int> vars;  // bit j of the data index is vars[j]
    };
    struct Step {
        std::vector<int> inputs;                   // slots consumed
        int width;                                 // bits of the joint index
        bool sum;                                  // top bit summed out
        std::vector<std::vector<uint32_t>> gather; // joint index -> input index
    };

    void build(const Circuit &circuit, int open_qubit);

    int axes_ = 0;
    std::vector<Factor> factors_;
    std::vector<Step> steps_;
    int max_width_ = 0;
};

}  // namespace vnqca
