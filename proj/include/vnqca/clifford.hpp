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
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vnqca/circuit.hpp"
#include "vnqca/lattice.hpp"
#include "vnqca/rules.hpp"

namespace vnqca {

/// i^phase * prod_x X_x^{x} Z_x^{z}, with X written left of Z on each site.
/// Y is phase 1 with both bits set.
class PauliString {
   public:
    PauliString() = default;
    /// sigma^j at one site, j in {1, 2, 3}.
    static PauliString single(const Coord &site, int j);

    int phase() const {
        return phase_;
    }
    /// Pauli index (0..3) on a site.
    int at(const Coord &site) const;
    /// x + 2z of the canonical factor on a site.
    int code_at(const Coord &site) const;
    /// Multiplies by i^k.
    PauliString times_i(int k) const;
    /// Sites with a non-identity factor.
    std::vector<Coord> support() const;
    bool is_identity() const {
        return bits_.empty();
    }
    /// +1 or -1 when the string is Hermitian, as every Pauli product is.
    int sign() const;

    /// this * other.
    PauliString operator*(const PauliString &other) const;
    bool commutes_with(const PauliString &other) const;
    bool operator==(const PauliString &other) const = default;

    /// e.g. "+Z[-1]X[0]Z[1]" with sites in coordinate order.
    std::string to_string() const;

   private:
    friend PauliString x_z(const Coord &site, int x, int z);
    int phase_ = 0;
    std::map<Coord, std::uint8_t> bits_;  // bit 0: X, bit 1: Z
};

/// X^x Z^z on one site.
PauliString x_z(const Coord &site, int x, int z);

/// Action of a single-qubit Clifford on X and Z: image of X^x Z^z is
/// i^phase[k] X^x'[k] Z^z'[k] with k = x + 2z.
struct CliffordTable1 {
    std::array<int, 4> x, z, phase;
};

/// Conjugation table of u: P -> u P u^dagger (or u^dagger P u when
/// `heisenberg`). Throws InputError when u is not Clifford.
CliffordTable1 clifford_table(const Mat2 &u, bool heisenberg);

/// t applications of the local rule (alpha(O) = W^dagger O W) on Z^s.
/// Throws InputError for non-Clifford parameters.
PauliString propagate_pauli(const RuleParams &params, const PauliString &p, int t);

/// Stabilizer generators (no destabilizers), bit-packed by qubit.
class StabilizerTableau {
   public:
    /// The all-|0> state of n qubits.
    explicit StabilizerTableau(int n);
    /// V(delta)|0> on every qubit; delta must be Clifford.
    static StabilizerTableau product_state(const InputStateParams &delta, int n);

    int qubit_count() const {
        return n_;
    }
    PauliString generator(int row) const;

    void apply_single(int q, const CliffordTable1 &table);
    void apply_cz(int a, int b);
    void apply_swap(int a, int b);
    /// Throws InputError for gates outside the Clifford set.
    void apply_gate(const Gate &gate);
    void evolve(const Circuit &circuit);

    /// Generators commute pairwise and are independent over GF(2).
    bool is_valid() const;

    /// Entanglement entropy (bits) of the qubits in `region`.
    int entropy(const std::vector<int> &region) const;

   private:
    bool xbit(int row, int q) const {
        return (x_[row * words_ + q / 64] >> (q % 64)) & 1;
    }
    bool zbit(int row, int q) const {
        return (z_[row * words_ + q / 64] >> (q % 64)) & 1;
    }
    void set(std::vector<std::uint64_t> &bits, int row, int q, bool v);

    int n_;
    int words_;
    std::vector<std::uint64_t> x_, z_;
    std::vector<int> phase_;
};

/// Rank over GF(2) of bit-packed rows (each `words` words long).
int gf2_rank(std::vector<std::uint64_t> rows, int words);

/// Entropy of the origin after t steps of a Clifford rule, from the
/// stabilizer tableau on the pruned causal cone.
int clifford_cone_entropy(const RuleParams &params, const InputStateParams &delta, int t);

}  // namespace vnqca
