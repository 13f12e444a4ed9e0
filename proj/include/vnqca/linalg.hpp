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

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <vector>

#include "vnqca/lattice.hpp"

namespace vnqca {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Mat2 = Eigen::Matrix2cd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2 * kPi;

/// Pauli matrix: 0 = I, 1 = sigma^1 (X), 2 = sigma^2 (Y), 3 = sigma^3 (Z).
Mat2 pauli(int j);

bool is_unitary(const CMatrix &u, double tol = 1e-12);
double operator_norm(const CMatrix &m);

/// Lift `op`, whose qubit k is targets[k], to an n-qubit operator. Qubit q
/// of the result is bit q of the row/column index.
CMatrix embed(const CMatrix &op, std::span<const int> targets, int n);

/// u applied to each of n qubits.
CMatrix tensor_power(const Mat2 &u, int n);

/// Dense operator on a list of labelled sites, one qubit per label, qubit k
/// being labels[k].
struct LocalOperator {
    std::vector<Coord> labels;
    CMatrix matrix;

    int qubits() const {
        return static_cast<int>(labels.size());
    }
    LocalOperator translated(const Coord &shift) const;
    /// Same operator written on `target_labels`, which must include every
    /// label of this operator; identity on the others.
    LocalOperator on(const std::vector<Coord> &target_labels) const;
};

/// Union of label lists, keeping the order of `a` followed by new labels of `b`.
std::vector<Coord> label_union(const std::vector<Coord> &a, const std::vector<Coord> &b);

/// Operator Schmidt decomposition O = sum_k weight_k * left_k (x) right_k
/// across a split of the qubits. left_k act on `left_qubits` (in that
/// order), right_k on the remaining qubits in increasing order; both
/// families are Hilbert-Schmidt orthonormal.
struct OperatorSchmidt {
    std::vector<double> weights;
    std::vector<CMatrix> left;
    std::vector<CMatrix> right;
    std::vector<int> left_qubits;
    std::vector<int> right_qubits;
};

OperatorSchmidt operator_schmidt(const CMatrix &op, std::span<const int> left_qubits, int n,
                                 double rel_tol = 1e-10);

/// Frobenius norm of [P, Q] for operators on overlapping label sets,
/// evaluated through Schmidt factors on the overlap so the union is never
/// materialized.
double commutator_norm(const LocalOperator &p, const LocalOperator &q);

}  // namespace vnqca
