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

#include "vnqca/cone_contraction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "vnqca/errors.hpp"
#include "vnqca/statevector.hpp"

namespace vnqca {

namespace {

// Wide enough for the cones the dense sweeps target; far below it in practice.
constexpr int kMaxWidth = 26;

// Cost of eliminating variables in `order`: the summed size of every joint
// tensor formed. Works on the interaction graph alone.
double order_cost(const std::vector<std::set<int>> &adj0, const std::vector<int> &order) {
    auto adj = adj0;
    double cost = 0;
    for (int v : order) {
        cost += std::ldexp(1.0, static_cast<int>(adj[v].size()) + 1);
        for (int a : adj[v]) {
            adj[a].erase(v);
            for (int b : adj[v]) {
                if (a != b) {
                    adj[a].insert(b);
                }
            }
        }
        adj[v].clear();
    }
    return cost;
}

// Randomized greedy orders (min degree, then min fill, ties broken by a
// seeded generator); the cheapest of a fixed number of trials wins.
std::vector<int> elimination_order(const std::vector<std::vector<int>> &factor_vars, const std::set<int> &keep) {
    int nvars = 0;
    for (const auto &f : factor_vars) {
        for (int v : f) {
            nvars = std::max(nvars, v + 1);
        }
    }
    std::vector<std::set<int>> adj0(nvars);
    std::vector<char> present(nvars, 0);
    for (const auto &f : factor_vars) {
        for (int a : f) {
            present[a] = 1;
            for (int b : f) {
                if (a != b) {
                    adj0[a].insert(b);
                }
            }
        }
    }
    std::mt19937_64 rng(0x5eed);
    std::vector<int> best;
    double best_cost = std::numeric_limits<double>::infinity();
    constexpr int kTrials = 64;
    for (int trial = 0; trial < kTrials; trial++) {
        auto adj = adj0;
        std::vector<char> done(nvars, 0);
        std::vector<int> order;
        const bool use_fill = trial % 2 == 1;
        while (true) {
            std::vector<int> cands;
            long best_score = std::numeric_limits<long>::max();
            for (int v = 0; v < nvars; v++) {
                if (!present[v] || done[v] || keep.count(v)) {
                    continue;
                }
                long score = static_cast<long>(adj[v].size());
                if (use_fill) {
                    long fill = 0;
                    for (int a : adj[v]) {
                        for (int b : adj[v]) {
                            if (a < b && !adj[a].count(b)) {
                                fill++;
                            }
                        }
                    }
                    score = score * 4096 + fill;
                }
                if (score < best_score) {
                    best_score = score;
                    cands.clear();
                }
                if (score == best_score) {
                    cands.push_back(v);
                }
            }
            if (cands.empty()) {
                break;
            }
            int v = trial == 0 ? cands.front() : cands[rng() % cands.size()];
            order.push_back(v);
            done[v] = 1;
            for (int a : adj[v]) {
                adj[a].erase(v);
                for (int b : adj[v]) {
                    if (a != b) {
                        adj[a].insert(b);
                    }
                }
            }
            adj[v].clear();
        }
        double c = order_cost(adj0, order);
        if (c < best_cost) {
            best_cost = c;
            best = order;
        }
    }
    return best;
}

}  // namespace

ConeContraction::ConeContraction(int s, int t) : axes_(s) {
    if (s < 1 || t < 0) {
        throw InputError("cone contraction needs s >= 1 and t >= 0");
    }
    ConeCircuit cone = compile_cone(RuleParams::controlled_phase(std::vector<double>(s, 0.0), {0, 0, 0}), t);
    build(cone.circuit, 0);
}

ConeContraction::ConeContraction(const Circuit &circuit, int open_qubit) {
    for (const auto &layer : circuit.layers()) {
        for (const auto &g : layer) {
            axes_ = std::max(axes_, g.axis + 1);
        }
    }
    build(circuit, open_qubit);
}

void ConeContraction::build(const Circuit &circuit, int open_qubit) {
    const int n = circuit.qubit_count();
    if (open_qubit < 0 || open_qubit >= n) {
        throw InputError("open qubit outside the circuit");
    }
    // Ket network: one variable per qubit per rotation boundary.
    int next = 0;
    std::vector<int> cur(n);
    std::vector<Factor> ket;
    for (int q = 0; q < n; q++) {
        cur[q] = next++;
        ket.push_back({FactorKind::Init, false, -1, {cur[q]}});
    }
    for (const auto &layer : circuit.layers()) {
        for (const auto &g : layer) {
            if (g.kind == GateKind::Rotation) {
                int nv = next++;
                ket.push_back({FactorKind::Rotation, false, -1, {nv, cur[g.qubits[0]]}});
                cur[g.qubits[0]] = nv;
            } else if (g.kind == GateKind::ControlledPhase) {
                if (g.axis < 0) {
                    throw InputError("controlled phase without a bond axis");
                }
                ket.push_back({FactorKind::Phase, false, g.axis, {cur[g.qubits[0]], cur[g.qubits[1]]}});
            } else {
                throw InputError("cone contraction supports rotations and controlled phases only");
            }
        }
    }
    const int ket_vars = next;
    // Bra copy; the final variables of traced qubits are shared.
    std::vector<int> bra_of(ket_vars);
    for (int v = 0; v < ket_vars; v++) {
        bra_of[v] = v + ket_vars;
    }
    for (int q = 0; q < n; q++) {
        if (q != open_qubit) {
            bra_of[cur[q]] = cur[q];
        }
    }
    factors_ = ket;
    for (auto f : ket) {
        f.bra = true;
        for (int &v : f.vars) {
            v = bra_of[v];
        }
        factors_.push_back(f);
    }
    const int open_ket = cur[open_qubit], open_bra = bra_of[open_ket];

    std::vector<std::vector<int>> base_vars;
    for (const auto &f : factors_) {
        base_vars.push_back(f.vars);
    }
    std::vector<int> order = elimination_order(base_vars, {open_ket, open_bra});

    std::vector<std::vector<int>> slot_vars = base_vars;
    std::vector<char> alive(slot_vars.size(), 1);
    auto emit = [&](std::vector<int> inputs, std::vector<int> out_vars, int summed) {
        // Joint index: out_vars in order, then the summed variable on top.
        std::vector<int> joint = out_vars;
        if (summed >= 0) {
            joint.push_back(summed);
        }
        const int width = static_cast<int>(joint.size());
        if (width > kMaxWidth) {
            throw CapacityError("contraction plan exceeds the tensor width cap");
        }
        max_width_ = std::max(max_width_, width);
        Step st{inputs, width, summed >= 0, {}};
        for (int in : inputs) {
            const auto &iv = slot_vars[in];
            std::vector<int> pos(iv.size());
            for (size_t j = 0; j < iv.size(); j++) {
                pos[j] = static_cast<int>(std::find(joint.begin(), joint.end(), iv[j]) - joint.begin());
            }
            std::vector<uint32_t> g(size_t{1} << width);
            for (uint32_t i = 0; i < g.size(); i++) {
                uint32_t idx = 0;
                for (size_t j = 0; j < pos.size(); j++) {
                    idx |= ((i >> pos[j]) & 1u) << j;
                }
                g[i] = idx;
            }
            st.gather.push_back(std::move(g));
            alive[in] = 0;
        }
        steps_.push_back(std::move(st));
        slot_vars.push_back(out_vars);
        alive.push_back(1);
    };
    for (int v : order) {
        std::vector<int> inputs;
        std::set<int> u;
        for (size_t k = 0; k < slot_vars.size(); k++) {
            if (alive[k] && std::find(slot_vars[k].begin(), slot_vars[k].end(), v) != slot_vars[k].end()) {
                inputs.push_back(static_cast<int>(k));
                u.insert(slot_vars[k].begin(), slot_vars[k].end());
            }
        }
        u.erase(v);
        emit(inputs, std::vector<int>(u.begin(), u.end()), v);
    }
    std::vector<int> rest;
    for (size_t k = 0; k < slot_vars.size(); k++) {
        if (alive[k]) {
            rest.push_back(static_cast<int>(k));
        }
    }
    emit(rest, {open_ket, open_bra}, -1);
}

Mat2 ConeContraction::reduced_density(const RuleParams &params, const InputStateParams &delta) const {
    if (params.is_shift()) {
        throw InputError("cone contraction evaluates controlled-phase rules");
    }
    if (static_cast<int>(params.phi.size()) < axes_) {
        throw InputError("rule has fewer axes than the contraction plan");
    }
    const Mat2 v = rotation_matrix(params.theta);
    const Mat2 d = rotation_matrix(delta.delta);
    std::vector<std::vector<Complex>> data;
    data.reserve(factors_.size() + steps_.size());
    for (const auto &f : factors_) {
        std::vector<Complex> x;
        switch (f.kind) {
            case FactorKind::Init:
                x = {d(0, 0), d(1, 0)};
                break;
            case FactorKind::Rotation:
                // index = b_new + 2 b_old
                x = {v(0, 0), v(1, 0), v(0, 1), v(1, 1)};
                break;
            case FactorKind::Phase:
                x = {1, 1, 1, std::polar(1.0, params.phi[f.axis])};
                break;
        }
        if (f.bra) {
            for (auto &c : x) {
                c = std::conj(c);
            }
        }
        data.push_back(std::move(x));
    }
    for (const auto &st : steps_) {
        const size_t joint = size_t{1} << st.width;
        const size_t out_size = st.sum ? joint / 2 : joint;
        std::vector<Complex> out(out_size, Complex(0, 0));
        const size_t k_in = st.inputs.size();
        for (size_t i = 0; i < joint; i++) {
            Complex p = 1;
            for (size_t k = 0; k < k_in; k++) {
                p *= data[st.inputs[k]][st.gather[k][i]];
            }
            out[i & (out_size - 1)] += p;
        }
        data.push_back(std::move(out));
    }
    const auto &r = data.back();  // index = b_ket + 2 b_bra
    Mat2 rho;
    rho << r[0], r[2], r[1], r[3];
    return rho;
}

double ConeContraction::entropy(const RuleParams &params, const InputStateParams &delta) const {
    return vnqca::entropy(reduced_density(params, delta));
}

}  // namespace vnqca
