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

#include "vnqca/clifford.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "vnqca/errors.hpp"

namespace vnqca {

namespace {

constexpr double kCliffordTol = 1e-9;

// Z4 phase and bits of X^x Z^z * X^x' Z^z' on one site.
void site_product(int x1, int z1, int x2, int z2, int &x, int &z, int &phase) {
    x = x1 ^ x2;
    z = z1 ^ z2;
    phase = 2 * (z1 & x2);
}

// Whether a controlled phase with this angle is the identity (0), CZ (1),
// or non-Clifford (-1).
int cphase_class(double phi) {
    double c = std::cos(phi);
    if (std::abs(c - 1) < 1e-12) {
        return 0;
    }
    if (std::abs(c + 1) < 1e-12) {
        return 1;
    }
    return -1;
}

// Images of X^xa Z^za X^xb Z^zb under CZ, index xa + 2za + 4xb + 8zb.
struct CzTable {
    std::array<int, 16> bits{}, phase{};
    CzTable() {
        const Coord a{0}, b{1};
        const PauliString ix = x_z(a, 1, 0) * x_z(b, 0, 1), iz = x_z(a, 0, 1);
        const PauliString jx = x_z(a, 0, 1) * x_z(b, 1, 0), jz = x_z(b, 0, 1);
        for (int k = 0; k < 16; k++) {
            PauliString p;
            if (k & 1) p = p * ix;
            if (k & 2) p = p * iz;
            if (k & 4) p = p * jx;
            if (k & 8) p = p * jz;
            int code = p.code_at(a) | (p.code_at(b) << 2);
            bits[k] = code;
            phase[k] = p.phase();
        }
    }
};

const CzTable &cz_table() {
    static const CzTable table;
    return table;
}

}  // namespace

PauliString x_z(const Coord &site, int x, int z) {
    PauliString p;
    if (x || z) {
        p.bits_[site] = static_cast<std::uint8_t>((x ? 1 : 0) | (z ? 2 : 0));
    }
    return p;
}

PauliString PauliString::single(const Coord &site, int j) {
    switch (j) {
        case 1:
            return x_z(site, 1, 0);
        case 2: {
            PauliString p = x_z(site, 1, 1);
            p.phase_ = 1;
            return p;
        }
        case 3:
            return x_z(site, 0, 1);
    }
    throw InputError("Pauli index must be 1, 2 or 3");
}

int PauliString::code_at(const Coord &site) const {
    auto it = bits_.find(site);
    return it == bits_.end() ? 0 : it->second;
}

PauliString PauliString::times_i(int k) const {
    PauliString out = *this;
    out.phase_ = ((phase_ + k) % 4 + 4) % 4;
    return out;
}

int PauliString::at(const Coord &site) const {
    auto it = bits_.find(site);
    if (it == bits_.end()) {
        return 0;
    }
    switch (it->second) {
        case 1:
            return 1;
        case 3:
            return 2;
        default:
            return 3;
    }
}

std::vector<Coord> PauliString::support() const {
    std::vector<Coord> out;
    for (const auto &[c, b] : bits_) {
        out.push_back(c);
    }
    return out;
}

int PauliString::sign() const {
    int ys = 0;
    for (const auto &[c, b] : bits_) {
        ys += b == 3;
    }
    int k = ((phase_ - ys) % 4 + 4) % 4;
    return k == 0 ? 1 : k == 2 ? -1 : 0;
}

PauliString PauliString::operator*(const PauliString &other) const {
    PauliString out = *this;
    out.phase_ = (phase_ + other.phase_) % 4;
    for (const auto &[c, b] : other.bits_) {
        auto it = out.bits_.find(c);
        int x1 = 0, z1 = 0;
        if (it != out.bits_.end()) {
            x1 = it->second & 1;
            z1 = it->second >> 1;
        }
        int x, z, ph;
        site_product(x1, z1, b & 1, b >> 1, x, z, ph);
        out.phase_ = (out.phase_ + ph) % 4;
        if (x || z) {
            out.bits_[c] = static_cast<std::uint8_t>(x | (z << 1));
        } else if (it != out.bits_.end()) {
            out.bits_.erase(it);
        }
    }
    return out;
}

bool PauliString::commutes_with(const PauliString &other) const {
    int s = 0;
    for (const auto &[c, b] : bits_) {
        auto it = other.bits_.find(c);
        if (it != other.bits_.end()) {
            s += ((b & 1) & (it->second >> 1)) ^ ((b >> 1) & (it->second & 1));
        }
    }
    return s % 2 == 0;
}

std::string PauliString::to_string() const {
    int sg = sign();
    std::string out = sg == 1 ? "+" : sg == -1 ? "-" : "?";
    if (bits_.empty()) {
        return out + "I";
    }
    for (const auto &[c, b] : bits_) {
        out += "IXZY"[b];
        out += "[" + vnqca::to_string(c).substr(1);
        out.back() = ']';
    }
    return out;
}

CliffordTable1 clifford_table(const Mat2 &u, bool heisenberg) {
    CliffordTable1 t{};
    int ix[2], iz[2], ip[2];
    for (int g = 0; g < 2; g++) {
        const Mat2 p = pauli(g == 0 ? 1 : 3);
        const Mat2 m = heisenberg ? Mat2(u.adjoint() * p * u) : Mat2(u * p * u.adjoint());
        bool found = false;
        for (int j = 1; j <= 3 && !found; j++) {
            for (int sg : {1, -1}) {
                if ((m - double(sg) * pauli(j)).cwiseAbs().maxCoeff() < kCliffordTol) {
                    ix[g] = j != 3;
                    iz[g] = j != 1;
                    ip[g] = (j == 2 ? 1 : 0) + (sg < 0 ? 2 : 0);
                    found = true;
                    break;
                }
            }
        }
        if (!found) {
            throw InputError("single-qubit gate is not Clifford");
        }
    }
    t.x[0] = t.z[0] = t.phase[0] = 0;
    t.x[1] = ix[0], t.z[1] = iz[0], t.phase[1] = ip[0];
    t.x[2] = ix[1], t.z[2] = iz[1], t.phase[2] = ip[1];
    int x, z, ph;
    site_product(ix[0], iz[0], ix[1], iz[1], x, z, ph);
    t.x[3] = x, t.z[3] = z, t.phase[3] = (ip[0] + ip[1] + ph) % 4;
    return t;
}

PauliString propagate_pauli(const RuleParams &params, const PauliString &p, int t) {
    params.validate();
    if (!is_clifford(params)) {
        throw InputError("Pauli propagation needs a Clifford rule");
    }
    if (t < 0) {
        throw InputError("step count must be non-negative");
    }
    const int s = params.s;
    const CliffordTable1 rot = clifford_table(rotation_matrix(params.theta), true);
    PauliString cur = p;
    for (int step = 0; step < t; step++) {
        // W^dagger O W = V^dagger (E^dagger O E) V: entangler first, then the
        // site-wise rotation. Both are homomorphisms, so each canonical
        // factor X^x Z^z maps to the product of the generator images.
        PauliString next = PauliString().times_i(cur.phase());
        for (const Coord &x : cur.support()) {
            const int code = cur.code_at(x);
            const Coord y = params.is_shift() ? x + params.shift : x;
            if (code & 1) {
                PauliString img = x_z(y, 1, 0);
                for (int i = 0; i < s && !params.is_shift(); i++) {
                    if (cphase_class(params.phi[i]) == 1) {
                        img = img * x_z(x + unit_coord(s, i), 0, 1) * x_z(x - unit_coord(s, i), 0, 1);
                    }
                }
                next = next * img;
            }
            if (code & 2) {
                next = next * x_z(y, 0, 1);
            }
        }
        PauliString rotated = PauliString().times_i(next.phase());
        for (const Coord &x : next.support()) {
            const int code = next.code_at(x);
            rotated = rotated * x_z(x, rot.x[code], rot.z[code]).times_i(rot.phase[code]);
        }
        cur = rotated;
    }
    return cur;
}

StabilizerTableau::StabilizerTableau(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 0) {
        throw InputError("negative qubit count");
    }
    x_.assign(static_cast<size_t>(n) * words_, 0);
    z_.assign(static_cast<size_t>(n) * words_, 0);
    phase_.assign(n, 0);
    for (int r = 0; r < n; r++) {
        set(z_, r, r, true);
    }
}

StabilizerTableau StabilizerTableau::product_state(const InputStateParams &delta, int n) {
    StabilizerTableau tab(n);
    const CliffordTable1 table = clifford_table(rotation_matrix(delta.delta), false);
    for (int q = 0; q < n; q++) {
        tab.apply_single(q, table);
    }
    return tab;
}

void StabilizerTableau::set(std::vector<std::uint64_t> &bits, int row, int q, bool v) {
    std::uint64_t &w = bits[static_cast<size_t>(row) * words_ + q / 64];
    const std::uint64_t m = std::uint64_t{1} << (q % 64);
    w = v ? (w | m) : (w & ~m);
}

PauliString StabilizerTableau::generator(int row) const {
    PauliString p = PauliString().times_i(phase_[row]);
    for (int q = 0; q < n_; q++) {
        if (xbit(row, q) || zbit(row, q)) {
            p = p * x_z(Coord{q}, xbit(row, q), zbit(row, q));
        }
    }
    return p;
}

void StabilizerTableau::apply_single(int q, const CliffordTable1 &table) {
    if (q < 0 || q >= n_) {
        throw InputError("qubit outside the tableau");
    }
    for (int r = 0; r < n_; r++) {
        const int code = xbit(r, q) + 2 * zbit(r, q);
        set(x_, r, q, table.x[code]);
        set(z_, r, q, table.z[code]);
        phase_[r] = (phase_[r] + table.phase[code]) % 4;
    }
}

void StabilizerTableau::apply_cz(int a, int b) {
    if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) {
        throw InputError("invalid CZ qubits");
    }
    const CzTable &t = cz_table();
    for (int r = 0; r < n_; r++) {
        const int k = xbit(r, a) + 2 * zbit(r, a) + 4 * xbit(r, b) + 8 * zbit(r, b);
        const int c = t.bits[k];
        set(x_, r, a, c & 1);
        set(z_, r, a, c & 2);
        set(x_, r, b, c & 4);
        set(z_, r, b, c & 8);
        phase_[r] = (phase_[r] + t.phase[k]) % 4;
    }
}

void StabilizerTableau::apply_swap(int a, int b) {
    if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) {
        throw InputError("invalid swap qubits");
    }
    for (int r = 0; r < n_; r++) {
        const bool xa = xbit(r, a), za = zbit(r, a);
        set(x_, r, a, xbit(r, b));
        set(z_, r, a, zbit(r, b));
        set(x_, r, b, xa);
        set(z_, r, b, za);
    }
}

void StabilizerTableau::apply_gate(const Gate &gate) {
    switch (gate.kind) {
        case GateKind::Rotation:
            apply_single(gate.qubits.at(0), clifford_table(rotation_matrix(gate.theta), false));
            return;
        case GateKind::ControlledPhase:
            switch (cphase_class(gate.phi)) {
                case 0:
                    return;
                case 1:
                    apply_cz(gate.qubits.at(0), gate.qubits.at(1));
                    return;
                default:
                    throw InputError("controlled phase is not Clifford");
            }
        case GateKind::Swap:
            apply_swap(gate.qubits.at(0), gate.qubits.at(1));
            return;
        case GateKind::Block:
            throw InputError("dense blocks are not supported by the tableau");
    }
}

void StabilizerTableau::evolve(const Circuit &circuit) {
    if (circuit.qubit_count() > n_) {
        throw InputError("circuit acts on qubits outside the tableau");
    }
    // Rotation tables are classified once per distinct angle triple.
    std::map<Angles3, CliffordTable1> tables;
    for (const auto &layer : circuit.layers()) {
        for (const auto &g : layer) {
            if (g.kind != GateKind::Rotation) {
                apply_gate(g);
                continue;
            }
            auto it = tables.find(g.theta);
            if (it == tables.end()) {
                it = tables.emplace(g.theta, clifford_table(rotation_matrix(g.theta), false)).first;
            }
            apply_single(g.qubits[0], it->second);
        }
    }
}

bool StabilizerTableau::is_valid() const {
    for (int a = 0; a < n_; a++) {
        for (int b = a + 1; b < n_; b++) {
            int s = 0;
            for (int w = 0; w < words_; w++) {
                const size_t ia = static_cast<size_t>(a) * words_ + w, ib = static_cast<size_t>(b) * words_ + w;
                s += std::popcount((x_[ia] & z_[ib]) ^ (z_[ia] & x_[ib]));
            }
            if (s % 2) {
                return false;
            }
        }
    }
    std::vector<std::uint64_t> rows;
    const int w2 = 2 * words_;
    for (int r = 0; r < n_; r++) {
        for (int w = 0; w < words_; w++) {
            rows.push_back(x_[static_cast<size_t>(r) * words_ + w]);
        }
        for (int w = 0; w < words_; w++) {
            rows.push_back(z_[static_cast<size_t>(r) * words_ + w]);
        }
    }
    return gf2_rank(rows, w2) == n_;
}

int StabilizerTableau::entropy(const std::vector<int> &region) const {
    const int m = static_cast<int>(region.size());
    const int words = (2 * m + 63) / 64;
    std::vector<std::uint64_t> rows(static_cast<size_t>(n_) * words, 0);
    for (int r = 0; r < n_; r++) {
        for (int k = 0; k < m; k++) {
            const int q = region[k];
            if (q < 0 || q >= n_) {
                throw InputError("region qubit outside the tableau");
            }
            auto put = [&](int col, bool v) {
                if (v) {
                    rows[static_cast<size_t>(r) * words + col / 64] |= std::uint64_t{1} << (col % 64);
                }
            };
            put(k, xbit(r, q));
            put(m + k, zbit(r, q));
        }
    }
    return gf2_rank(rows, words) - m;
}

int gf2_rank(std::vector<std::uint64_t> rows, int words) {
    if (words == 0) {
        return 0;
    }
    const size_t n = rows.size() / words;
    size_t rank = 0;
    for (int col = 0; col < 64 * words && rank < n; col++) {
        const int w = col / 64;
        const std::uint64_t m = std::uint64_t{1} << (col % 64);
        size_t piv = rank;
        while (piv < n && !(rows[piv * words + w] & m)) {
            piv++;
        }
        if (piv == n) {
            continue;
        }
        if (piv != rank) {
            std::swap_ranges(rows.begin() + piv * words, rows.begin() + (piv + 1) * words, rows.begin() + rank * words);
        }
        for (size_t r = 0; r < n; r++) {
            if (r != rank && (rows[r * words + w] & m)) {
                for (int k = 0; k < words; k++) {
                    rows[r * words + k] ^= rows[rank * words + k];
                }
            }
        }
        rank++;
    }
    return static_cast<int>(rank);
}

int clifford_cone_entropy(const RuleParams &params, const InputStateParams &delta, int t) {
    ConeCircuit cone = compile_cone(params, t);
    StabilizerTableau tab = StabilizerTableau::product_state(delta, static_cast<int>(cone.sites.size()));
    tab.evolve(cone.circuit);
    return tab.entropy({0});
}

}  // namespace vnqca
