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
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vnqca/rules.hpp"

namespace vnqca {

enum class Backend { Contraction, Dense };

/// Entropy (bits) of the origin after t steps from V(delta)|0> everywhere.
/// Throws CapacityError when the cone exceeds the dense cap.
double entropy_at(const RuleParams &params, const InputStateParams &delta, int t, Backend backend = Backend::Contraction);

enum class SweepMode { PhiTheta, PhiPhi };

const char *sweep_mode_name(SweepMode mode);
SweepMode sweep_mode_from_name(const std::string &name);

struct SweepSpec {
    SweepMode mode = SweepMode::PhiTheta;
    int s = 2;
    int t = 1;
    int resolution = 25;          // points per axis over [0, 2pi]
    int delta_samples = 50;
    int theta_points = 13;        // coarse grid per free rotation angle
    int refine_budget = 200;      // simplex evaluations per refinement
    bool refine = true;
    bool refine_min = false;      // also refine the delta-minimized entropy
    std::uint64_t seed = 1;
    Backend backend = Backend::Contraction;

    /// Throws InputError on a malformed spec or CapacityError when the cone
    /// exceeds the dense cap.
    void validate() const;
    /// theta_1 enters only from three steps on.
    bool theta1_free() const {
        return t >= 3;
    }
    std::vector<double> axis_values() const;
};

nlohmann::json sweep_spec_to_json(const SweepSpec &spec);
SweepSpec sweep_spec_from_json(const nlohmann::json &j);

struct SweepRow {
    int index = 0;  // row-major over (axis1, axis2)
    double axis1 = 0, axis2 = 0;
    double s_max = 0, s_min = 0, delta_s = 0;
    double theta1_star = 0;
    std::int64_t evals = 0;
    std::optional<int> s_max_int;  // Clifford sweeps only
};

struct SweepResult {
    SweepSpec spec;
    std::vector<SweepRow> rows;  // sorted by index

    double grid_max() const;
};

/// delta samples: an R2 low-discrepancy sequence over [0, 2pi)^2 with a
/// seeded offset; delta_3 = 0.
std::vector<InputStateParams> delta_samples(std::uint64_t seed, int count);

struct SweepRunOptions {
    int threads = 1;
    /// Rows already computed (from a resumed run), keyed by grid index.
    std::map<int, SweepRow> completed;
    /// Called from worker threads after each new row, serialized.
    std::function<void(const SweepRow &)> on_row;
};

/// The rule probed at grid point (a1, a2) with the free angles set.
RuleParams sweep_rule(const SweepSpec &spec, double a1, double a2, double theta1, double theta2_free);

/// Max over theta_1 (t >= 3) and delta of S at each (phi_1, theta_2), all
/// phi_i equal, theta_3 = delta_3 = 0. s_min is the delta minimum at the
/// maximizing theta_1.
SweepResult smax_phi_theta(SweepSpec spec, const SweepRunOptions &options = {});
/// As smax_phi_theta with the delta-minimization refined by a simplex
/// search; delta_s is then the reported quantity.
SweepResult delta_S(SweepSpec spec, const SweepRunOptions &options = {});
/// Max over theta (theta_3 = 0) and delta at each (phi_1, phi_2), with
/// phi_3 = phi_2.
SweepResult smax_phi_phi(SweepSpec spec, const SweepRunOptions &options = {});
/// Dispatch on spec.mode; refine_min selects delta_S.
SweepResult run_sweep(const SweepSpec &spec, const SweepRunOptions &options = {});

/// Clifford grid: phi_1 in {0, pi}, second axis theta_2 (PhiTheta) or phi_2
/// (PhiPhi) over its Clifford values; maxima and minima over Clifford
/// theta_1 (and theta_2 in PhiPhi mode) and delta in (pi/2)Z, from the
/// stabilizer tableau.
SweepResult clifford_sweep(SweepMode mode, int s, int t);

std::string csv_header(bool with_int);
std::string format_row(const SweepRow &row);
std::string to_csv(const SweepResult &result);
/// Parses rows written by format_row; grid indices are recovered from the
/// axis values of `spec`. Malformed lines raise InputError.
std::map<int, SweepRow> parse_csv_rows(const std::string &text, const SweepSpec &spec);

}  // namespace vnqca
