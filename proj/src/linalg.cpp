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

#include "vnqca/linalg.hpp"

#include <algorithm>

#include "vnqca/errors.hpp"

namespace vnqca {

Mat2 pauli(int j) {
    Mat2 m;
    const Complex i(0, 1);
    switch (j) {
        case 0:
            m << 1, 0, 0, 1;
            break;
        case 1:
            m << 0, 1, 1, 0;
            break;
        case 2:
            m << 0, -i, i, 0;
            break;
        case 3:
            m << 1, 0, 0, -1;
            break;
        default:
            throw InputError("Pauli index must be in 0..3");
    }
    return m;
}

bool is_unitary(const CMatrix &u, double tol) {
    if (u.rows() != u.cols()) {
        return false;
    }
    CMatrix d = u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols());
    return operator_norm(d) <= tol;
}

double operator_norm(const CMatrix &m) {
    if (m.size() == 0) {
        return 0;
    }
    Eigen::JacobiSVD<CMatrix> svd(m);
    return svd.singularValues()(0);
}

CMatrix embed(const CMatrix &op, std::span<const int> targets, int n) {
    const int k = static_cast<int>(targets.size());
    if (op.rows() != (1 << k) || op.cols() != (1 << k)) {
        throw InputError("operator size does not match target count");
    }
    const size_t dim = size_t{1} << n;
    size_t mask = 0;
    for (int t : targets) {
        if (t < 0 || t >= n || (mask >> t) & 1) {
            throw InputError("invalid embedding targets");
        }
        mask |= size_t{1} << t;
    }
    CMatrix out = CMatrix::Zero(dim, dim);
    auto sub = [&](size_t idx) {
        size_t r = 0;
        for (int j = 0; j < k; j++) {
            r |= ((idx >> targets[j]) & 1) << j;
        }
        return r;
    };
    auto spread = [&](size_t local) {
        size_t r = 0;
        for (int j = 0; j < k; j++) {
            r |= ((local >> j) & 1) << targets[j];
        }
        return r;
    };
    for (size_t row = 0; row < dim; row++) {
        size_t rest = row & ~mask;
        size_t rl = sub(row);
        for (size_t cl = 0; cl < (size_t{1} << k); cl++) {
            Complex v = op(rl, cl);
            if (v != Complex(0)) {
                out(row, rest | spread(cl)) = v;
            }
        }
    }
    return out;
}

CMatrix tensor_power(const Mat2 &u, int n) {
    const size_t dim = size_t{1} << n;
    CMatrix out(dim, dim);
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            Complex v = 1;
            for (int q = 0; q < n; q++) {
                v *= u((r >> q) & 1, (c >> q) & 1);
            }
            out(r, c) = v;
        }
    }
    return out;
}

LocalOperator LocalOperator::translated(const Coord &shift) const {
    LocalOperator r{{}, matrix};
    for (const auto &l : labels) {
        r.labels.push_back(l + shift);
    }
    return r;
}

LocalOperator LocalOperator::on(const std::vector<Coord> &target_labels) const {
    std::vector<int> targets;
    for (const auto &l : labels) {
        auto it = std::find(target_labels.begin(), target_labels.end(), l);
        if (it == target_labels.end()) {
            throw InputError("target labels miss a support label " + to_string(l));
        }
        targets.push_back(static_cast<int>(it - target_labels.begin()));
    }
    return {target_labels, embed(matrix, targets, static_cast<int>(target_labels.size()))};
}

std::vector<Coord> label_union(const std::vector<Coord> &a, const std::vector<Coord> &b) {
    std::vector<Coord> out(a);
    for (const auto &l : b) {
        if (std::find(out.begin(), out.end(), l) == out.end()) {
            out.push_back(l);
        }
    }
    return out;
}

OperatorSchmidt operator_schmidt(const CMatrix &op, std::span<const int> left_qubits, int n, double rel_tol) {
    OperatorSchmidt out;
    out.left_qubits.assign(left_qubits.begin(), left_qubits.end());
    for (int q = 0; q < n; q++) {
        if (std::find(left_qubits.begin(), left_qubits.end(), q) == left_qubits.end()) {
            out.right_qubits.push_back(q);
        }
    }
    const int nl = static_cast<int>(out.left_qubits.size());
    const int nr = static_cast<int>(out.right_qubits.size());
    const size_t dl = size_t{1} << nl;
    const size_t dr = size_t{1} << nr;
    // Realign op(row, col) as R[(rl, cl), (rr, cr)].
    CMatrix reshaped = CMatrix::Zero(dl * dl, dr * dr);
    auto split = [&](size_t idx, size_t &l, size_t &r) {
        l = 0;
        r = 0;
        for (int j = 0; j < nl; j++) {
            l |= ((idx >> out.left_qubits[j]) & 1) << j;
        }
        for (int j = 0; j < nr; j++) {
            r |= ((idx >> out.right_qubits[j]) & 1) << j;
        }
    };
    const size_t dim = size_t{1} << n;
    for (size_t row = 0; row < dim; row++) {
        size_t rl, rr;
        split(row, rl, rr);
        for (size_t col = 0; col < dim; col++) {
            size_t cl, cr;
            split(col, cl, cr);
            reshaped(rl * dl + cl, rr * dr + cr) = op(row, col);
        }
    }
    Eigen::BDCSVD<CMatrix> svd(reshaped, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto &sv = svd.singularValues();
    double scale = sv.size() ? sv(0) : 0;
    for (Eigen::Index k = 0; k < sv.size(); k++) {
        if (sv(k) <= rel_tol * scale || sv(k) == 0) {
            break;
        }
        out.weights.push_back(sv(k));
        CMatrix l(dl, dl), r(dr, dr);
        for (size_t a = 0; a < dl; a++) {
            for (size_t b = 0; b < dl; b++) {
                l(a, b) = svd.matrixU()(a * dl + b, k);
            }
        }
        for (size_t a = 0; a < dr; a++) {
            for (size_t b = 0; b < dr; b++) {
                r(a, b) = std::conj(svd.matrixV()(a * dr + b, k));
            }
        }
        out.left.push_back(std::move(l));
        out.right.push_back(std::move(r));
    }
    return out;
}

double commutator_norm(const LocalOperator &p, const LocalOperator &q) {
    std::vector<int> p_overlap, q_overlap;
    std::vector<Coord> overlap;
    for (int i = 0; i < p.qubits(); i++) {
        auto it = std::find(q.labels.begin(), q.labels.end(), p.labels[i]);
        if (it != q.labels.end()) {
            overlap.push_back(p.labels[i]);
            p_overlap.push_back(i);
            q_overlap.push_back(static_cast<int>(it - q.labels.begin()));
        }
    }
    if (overlap.empty()) {
        return 0;
    }
    // P = sum_k w_k a_k (x) p_k, Q = sum_l v_l q_l (x) b_l with orthonormal
    // a_k and b_l, so |[P,Q]|_F^2 = sum w_k^2 v_l^2 |[p_k, q_l]|_F^2.
    auto ps = operator_schmidt(p.matrix, p_overlap, p.qubits());
    auto qs = operator_schmidt(q.matrix, q_overlap, q.qubits());
    double total = 0;
    for (size_t k = 0; k < ps.weights.size(); k++) {
        for (size_t l = 0; l < qs.weights.size(); l++) {
            CMatrix c = ps.left[k] * qs.left[l] - qs.left[l] * ps.left[k];
            total += ps.weights[k] * ps.weights[k] * qs.weights[l] * qs.weights[l] * c.squaredNorm();
        }
    }
    return std::sqrt(total);
}

}  // namespace vnqca
