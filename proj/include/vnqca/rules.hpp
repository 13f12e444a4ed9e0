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

#include <array>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "vnqca/lattice.hpp"
#include "vnqca/linalg.hpp"

namespace vnqca {

using Angles3 = std::array<double, 3>;

/// Reduce an angle into [0, 2pi).
double reduce_angle(double a);

enum class RuleKind { ControlledPhase, Shift };

/// Free parameters of a classified qubit rule on Z^s: a site-wise rotation
/// V(theta) followed either by the multiply controlled-phase M(phi) or by a
/// shift. For a shift, `shift` is the displacement of operators in the
/// Heisenberg picture: an operator at x is carried to x + shift.
struct RuleParams {
    int s = 1;
    RuleKind kind = RuleKind::ControlledPhase;
    std::vector<double> phi;
    Angles3 theta{0, 0, 0};
    Coord shift;

    static RuleParams controlled_phase(std::vector<double> phi, Angles3 theta);
    static RuleParams shifted(Coord y, Angles3 theta);
    static RuleParams identity(int s);

    /// Throws InputError when the record breaks its invariants.
    void validate() const;
    bool is_shift() const {
        return kind == RuleKind::Shift;
    }
};

struct InputStateParams {
    Angles3 delta{0, 0, 0};
};

/// V(theta) = R_z(theta_1) R_y(theta_2) R_z(theta_3), R_j(l) = exp(-i l sigma^j / 2).
Mat2 rotation_matrix(const Angles3 &theta);

/// diag(1, 1, 1, e^{i phi}).
Eigen::Matrix4cd cphase_matrix(double phi);

/// Unitary W on the 2s+1 neighborhood qubits (qubit j <-> neighborhood
/// element j) with alpha_0(O) = W^dag (O (x) I) W. W is the neighborhood
/// restriction of one rotation-then-entangler step.
struct LocalRuleMatrix {
    int s = 1;
    CMatrix unitary;
};

LocalRuleMatrix local_rule_matrix(const RuleParams &params);

/// alpha_0(O) as an operator on the neighborhood labels.
LocalOperator local_image(const LocalRuleMatrix &rule, const Mat2 &op);

struct RuleViolation {
    Coord offset;
    int a = 1;  // Pauli index of the operator at the origin
    int b = 1;  // Pauli index of the translated operator
    double norm = 0;
};

struct RuleVerdict {
    bool pass = true;
    std::vector<RuleViolation> violations;
};

/// Offsets x != 0 whose neighborhood overlaps that of the origin.
std::vector<Coord> overlap_offsets(int s);

/// Checks that images of sigma^1, sigma^2 at the origin commute with the
/// translated images at every overlapping offset. Throws InputError for a
/// non-unitary matrix.
RuleVerdict verify_local_rule(const LocalRuleMatrix &rule, double tol = 1e-10);

bool is_clifford(const RuleParams &params);

nlohmann::json rule_to_json(const RuleParams &params);
RuleParams rule_from_json(const nlohmann::json &j);

}  // namespace vnqca
