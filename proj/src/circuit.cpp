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

#include "vnqca/circuit.hpp"

#include <algorithm>

#include "vnqca/errors.hpp"

namespace vnqca {

namespace {

int parity(int v) {
    return ((v % 2) + 2) % 2;
}

// All bonds (x, x + e_axis) of the periodic lattice with x_axis of the given
// parity, as flat index pairs.
std::vector<std::pair<int, int>> bonds(const LatticeSpec &spec, int axis, int par) {
    std::vector<std::pair<int, int>> out;
    for (int k = 0; k < spec.site_count(); k++) {
        Coord x = spec.coord(k);
        if (parity(x[axis]) == par) {
            out.emplace_back(k, spec.index(x + unit_coord(spec.dim(), axis)));
        }
    }
    return out;
}

Layer rotation_layer(int n, const Angles3 &theta) {
    Layer layer;
    for (int q = 0; q < n; q++) {
        layer.push_back(Gate::rotation(q, theta));
    }
    return layer;
}

void require_cphase(const RuleParams &params, const LatticeSpec &spec) {
    params.validate();
    if (params.is_shift()) {
        throw InputError("expected a controlled-phase rule");
    }
    if (params.s != spec.dim()) {
        throw InputError("rule and lattice dimensions differ");
    }
    if (!spec.all_even()) {
        throw GeometryError("controlled-phase tiling needs even extents");
    }
}

// Dense unitary of a sequence of gates on `n` local qubits.
CMatrix compose_local(const std::vector<Gate> &gates, int n) {
    const size_t dim = size_t{1} << n;
    CMatrix u = CMatrix::Identity(dim, dim);
    for (const auto &g : gates) {
        u = embed(g.matrix(), g.qubits, n) * u;
    }
    return u;
}

}  // namespace

const char *gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::Rotation:
            return "rotation";
        case GateKind::ControlledPhase:
            return "cphase";
        case GateKind::Swap:
            return "swap";
        case GateKind::Block:
            return "block";
    }
    return "?";
}

Gate Gate::rotation(int q, const Angles3 &theta) {
    Gate g;
    g.kind = GateKind::Rotation;
    g.qubits = {q};
    g.theta = theta;
    return g;
}

Gate Gate::cphase(int a, int b, double phi, int axis) {
    Gate g;
    g.kind = GateKind::ControlledPhase;
    g.qubits = {a, b};
    g.phi = phi;
    g.axis = axis;
    return g;
}

Gate Gate::swap(int a, int b) {
    Gate g;
    g.kind = GateKind::Swap;
    g.qubits = {a, b};
    return g;
}

Gate Gate::dense(std::vector<int> qubits, CMatrix unitary) {
    if (unitary.rows() != (Eigen::Index{1} << qubits.size())) {
        throw InputError("block unitary size does not match its qubits");
    }
    Gate g;
    g.kind = GateKind::Block;
    g.qubits = std::move(qubits);
    g.block = std::make_shared<const CMatrix>(std::move(unitary));
    return g;
}

CMatrix Gate::matrix() const {
    switch (kind) {
        case GateKind::Rotation:
            return rotation_matrix(theta);
        case GateKind::ControlledPhase:
            return cphase_matrix(phi);
        case GateKind::Swap: {
            CMatrix m = CMatrix::Zero(4, 4);
            m(0, 0) = m(3, 3) = m(1, 2) = m(2, 1) = 1;
            return m;
        }
        case GateKind::Block:
            return *block;
    }
    return {};
}

Circuit::Circuit(int qubit_count, int block_bound) : qubit_count_(qubit_count), block_bound_(block_bound) {
    if (qubit_count < 0 || block_bound < 1) {
        throw InputError("invalid circuit dimensions");
    }
}

void Circuit::add_layer(Layer layer) {
    std::vector<char> used(qubit_count_, 0);
    for (const auto &g : layer) {
        if (static_cast<int>(g.qubits.size()) > block_bound_) {
            throw InputError("gate exceeds the circuit block bound");
        }
        if ((g.kind == GateKind::ControlledPhase || g.kind == GateKind::Swap) && g.qubits.size() != 2) {
            throw InputError("two-qubit gate needs two qubits");
        }
        for (int q : g.qubits) {
            if (q < 0 || q >= qubit_count_) {
                throw InputError("gate qubit outside the register");
            }
            if (used[q]) {
                throw InputError("gates inside a layer must act on disjoint qubits");
            }
            used[q] = 1;
        }
    }
    layers_.push_back(std::move(layer));
}

void Circuit::append(const Circuit &other) {
    if (other.qubit_count_ != qubit_count_) {
        throw InputError("cannot append circuits on different registers");
    }
    block_bound_ = std::max(block_bound_, other.block_bound_);
    for (const auto &l : other.layers_) {
        add_layer(l);
    }
}

size_t Circuit::gate_count() const {
    size_t n = 0;
    for (const auto &l : layers_) {
        n += l.size();
    }
    return n;
}

Circuit compile_step(const RuleParams &params, const LatticeSpec &spec) {
    require_cphase(params, spec);
    Circuit c(spec.site_count(), 2);
    c.add_layer(rotation_layer(spec.site_count(), params.theta));
    for (int axis = 0; axis < spec.dim(); axis++) {
        for (int par = 0; par < 2; par++) {
            Layer layer;
            for (auto [a, b] : bonds(spec, axis, par)) {
                layer.push_back(Gate::cphase(a, b, params.phi[axis], axis));
            }
            c.add_layer(std::move(layer));
        }
    }
    return c;
}

Circuit compile_shift(const Coord &y, const LatticeSpec &spec) {
    const int s = spec.dim();
    if (static_cast<int>(y.size()) != s || l1_norm(y) != 1) {
        throw InputError("shift circuits need a unit lattice vector");
    }
    int axis = static_cast<int>(std::find_if(y.begin(), y.end(), [](int v) { return v != 0; }) - y.begin());
    int sign = y[axis];
    const int ring = spec.extents()[axis];
    Circuit c(spec.site_count(), 2);
    if (ring < 2) {
        return c;
    }
    // Transverse coordinates: every site with x_axis == 0 starts a ring.
    std::vector<Coord> starts;
    for (int k = 0; k < spec.site_count(); k++) {
        Coord x = spec.coord(k);
        if (x[axis] == 0) {
            starts.push_back(x);
        }
    }
    for (int step = 0; step < ring - 1; step++) {
        // Moving content forward walks the swap from the top of the ring
        // down; moving backward walks it up.
        int lower = sign > 0 ? ring - 2 - step : step;
        Layer layer;
        for (const auto &x0 : starts) {
            Coord a = x0, b = x0;
            a[axis] = lower;
            b[axis] = lower + 1;
            layer.push_back(Gate::swap(spec.index(a), spec.index(b)));
        }
        c.add_layer(std::move(layer));
    }
    return c;
}

Circuit compile_shift_step(const RuleParams &params, const LatticeSpec &spec) {
    params.validate();
    if (!params.is_shift()) {
        throw InputError("expected a shift rule");
    }
    if (params.s != spec.dim()) {
        throw InputError("rule and lattice dimensions differ");
    }
    Circuit c(spec.site_count(), 2);
    c.add_layer(rotation_layer(spec.site_count(), params.theta));
    if (l1_norm(params.shift) != 0) {
        c.append(compile_shift(-params.shift, spec));
    }
    return c;
}

Circuit compile_margolus(const RuleParams &params, const LatticeSpec &spec, const Coord &q) {
    require_cphase(params, spec);
    const int s = spec.dim();
    auto partition = margolus_partitions(spec, q);
    const int block = 1 << s;
    SiteSet cell = super_cell(s);

    // Every bond lies inside exactly one block of one partition: bonds whose
    // lower endpoint is even along the bond axis sit in the c + 2j blocks,
    // odd ones in the quadrant-shifted blocks. Layer one also carries the
    // rotations, which precede every controlled phase of the step.
    auto block_gates = [&](bool first) {
        std::vector<Gate> gates;
        if (first) {
            for (int k = 0; k < block; k++) {
                gates.push_back(Gate::rotation(k, params.theta));
            }
        }
        for (int axis = 0; axis < s; axis++) {
            for (int k = 0; k < block; k++) {
                if (cell[k][axis] != 0) {
                    continue;
                }
                int partner = cell.index_of(cell[k] + unit_coord(s, axis));
                gates.push_back(Gate::cphase(k, partner, params.phi[axis]));
            }
        }
        return compose_local(gates, s == 0 ? 0 : block);
    };

    CMatrix u_first = block_gates(true);
    CMatrix u_second = block_gates(false);

    Circuit c(spec.site_count(), block);
    Layer l1, l2;
    for (const auto &b : partition.first) {
        l1.push_back(Gate::dense(b, u_first));
    }
    for (const auto &b : partition.second) {
        l2.push_back(Gate::dense(b, u_second));
    }
    c.add_layer(std::move(l1));
    c.add_layer(std::move(l2));
    return c;
}

ConeCircuit compile_cone(const RuleParams &params, int t) {
    params.validate();
    if (params.is_shift()) {
        throw InputError("cone circuits are built for controlled-phase rules");
    }
    const int s = params.s;
    SiteSet sites = future_cone(s, t);
    Circuit c(static_cast<int>(sites.size()), 2);
    for (int k = 1; k <= t; k++) {
        Layer rot;
        for (size_t q = 0; q < sites.size(); q++) {
            if (l1_norm(sites[q]) <= t - k + 1) {
                rot.push_back(Gate::rotation(static_cast<int>(q), params.theta));
            }
        }
        c.add_layer(std::move(rot));
        for (int axis = 0; axis < s; axis++) {
            for (int par = 0; par < 2; par++) {
                Layer layer;
                for (size_t q = 0; q < sites.size(); q++) {
                    const Coord &x = sites[q];
                    if (parity(x[axis]) != par) {
                        continue;
                    }
                    Coord y = x + unit_coord(s, axis);
                    int p = sites.index_of(y);
                    if (p < 0 || std::min(l1_norm(x), l1_norm(y)) > t - k) {
                        continue;
                    }
                    layer.push_back(Gate::cphase(static_cast<int>(q), p, params.phi[axis], axis));
                }
                if (!layer.empty()) {
                    c.add_layer(std::move(layer));
                }
            }
        }
    }
    return {std::move(sites), std::move(c)};
}

nlohmann::json circuit_to_json(const Circuit &circuit, const std::vector<Coord> *sites) {
    nlohmann::json layers = nlohmann::json::array();
    for (const auto &layer : circuit.layers()) {
        nlohmann::json jl = nlohmann::json::array();
        for (const auto &g : layer) {
            nlohmann::json jg;
            jg["kind"] = gate_kind_name(g.kind);
            if (sites) {
                nlohmann::json js = nlohmann::json::array();
                for (int q : g.qubits) {
                    js.push_back((*sites)[q]);
                }
                jg["sites"] = js;
            } else {
                jg["sites"] = g.qubits;
            }
            switch (g.kind) {
                case GateKind::Rotation:
                    jg["angles"] = g.theta;
                    break;
                case GateKind::ControlledPhase:
                    jg["angles"] = {g.phi};
                    break;
                case GateKind::Swap:
                    jg["angles"] = nlohmann::json::array();
                    break;
                case GateKind::Block: {
                    jg["angles"] = nlohmann::json::array();
                    nlohmann::json rows = nlohmann::json::array();
                    for (Eigen::Index r = 0; r < g.block->rows(); r++) {
                        nlohmann::json row = nlohmann::json::array();
                        for (Eigen::Index col = 0; col < g.block->cols(); col++) {
                            row.push_back({(*g.block)(r, col).real(), (*g.block)(r, col).imag()});
                        }
                        rows.push_back(row);
                    }
                    jg["unitary"] = rows;
                    break;
                }
            }
            jl.push_back(jg);
        }
        layers.push_back(jl);
    }
    return {{"qubits", circuit.qubit_count()}, {"depth", circuit.depth()}, {"layers", layers}};
}

}  // namespace vnqca
