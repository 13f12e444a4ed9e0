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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "vnqca/circuit.hpp"
#include "vnqca/errors.hpp"
#include "vnqca/statevector.hpp"

using namespace vnqca;

namespace {

std::vector<Coord> line(int n) {
    std::vector<Coord> out;
    for (int k = 0; k < n; k++) {
        out.push_back({k});
    }
    return out;
}

}  // namespace

TEST(StateVector, ProductStates) {
    StateVector zero = init_product_state({{0, 0, 0}}, line(3));
    EXPECT_EQ(zero.amplitudes()[0], Complex(1));
    EXPECT_NEAR(zero.norm(), 1, 1e-15);

    StateVector plus = init_product_state({{0, kPi / 2, 0}}, line(3));
    for (int b = 0; b < 8; b++) {
        EXPECT_NEAR(std::abs(plus.amplitudes()[b]), std::pow(0.5, 1.5), 1e-14);
    }

    StateVector one = init_product_state({{0, kPi, 0}}, line(1));
    EXPECT_NEAR(std::abs(one.amplitudes()[1]), 1, 1e-15);

    std::mt19937_64 rng(1);
    Angles3 d = oracle::random_angles(rng);
    EXPECT_LT((init_product_state({d}, line(5)).amplitudes() - oracle::product_state(d, 5)).norm(), 1e-14);
}

TEST(StateVector, SiteMap) {
    StateVector st({{0, 0}, {0, 1}, {1, 0}});
    EXPECT_EQ(st.qubit_of({1, 0}), 2);
    EXPECT_EQ(st.qubit_of({5, 5}), -1);
}

TEST(StateVector, CapacityCap) {
    std::vector<Coord> many = line(kMaxDenseQubits + 1);
    EXPECT_THROW(StateVector{many}, CapacityError);
}

TEST(StateVector, KernelsMatchEmbeddedMatrices) {
    std::mt19937_64 rng(2);
    const int n = 6;
    for (int trial = 0; trial < 10; trial++) {
        CVector psi = oracle::random_state(n, rng);
        StateVector st(line(n));
        std::uniform_int_distribution<int> pick(0, n - 1);
        int a = pick(rng), b = pick(rng), c = pick(rng);
        while (b == a) {
            b = pick(rng);
        }
        while (c == a || c == b) {
            c = pick(rng);
        }

        Mat2 u = oracle::rotation(oracle::random_angles(rng));
        st.amplitudes() = psi;
        apply_single(st, a, u);
        EXPECT_LT((st.amplitudes() - oracle::lift(u, {a}, n) * psi).norm(), 1e-12);

        st.amplitudes() = psi;
        apply_cphase(st, a, b, 0.9);
        EXPECT_LT((st.amplitudes() - oracle::lift(cphase_matrix(0.9), {a, b}, n) * psi).norm(), 1e-12);

        st.amplitudes() = psi;
        apply_swap(st, a, b);
        CMatrix sw = CMatrix::Zero(4, 4);
        sw(0, 0) = sw(3, 3) = sw(1, 2) = sw(2, 1) = 1;
        EXPECT_LT((st.amplitudes() - oracle::lift(sw, {a, b}, n) * psi).norm(), 1e-12);

        CMatrix g = CMatrix::Random(8, 8);
        Eigen::HouseholderQR<CMatrix> qr(g);
        CMatrix block = qr.householderQ();
        st.amplitudes() = psi;
        apply_dense(st, {a, b, c}, block);
        EXPECT_LT((st.amplitudes() - oracle::lift(block, {a, b, c}, n) * psi).norm(), 1e-12);
        EXPECT_NEAR(st.norm(), 1, 1e-12);
    }
}

TEST(StateVector, ControlledZOnOneOne) {
    StateVector st(line(2));
    st.amplitudes().setZero();
    st.amplitudes()[3] = 1;
    apply_gate(st, Gate::cphase(0, 1, kPi));
    EXPECT_NEAR(st.amplitudes()[3].real(), -1, 1e-15);
}

TEST(StateVector, NormPreserved) {
    std::mt19937_64 rng(3);
    LatticeSpec spec({4, 4});
    Circuit c = compile_step(oracle::random_cphase(2, rng), spec);
    StateVector st = init_product_state({oracle::random_angles(rng)}, spec);
    for (int k = 0; k < 5; k++) {
        apply_circuit(st, c);
    }
    EXPECT_NEAR(st.norm(), 1, 1e-12);
}

TEST(StateVector, ReducedDensity) {
    std::mt19937_64 rng(4);
    CVector psi = oracle::random_state(5, rng);
    StateVector st(line(5));
    st.amplitudes() = psi;
    for (int q = 0; q < 5; q++) {
        Mat2 rho = reduced_density(st, q);
        EXPECT_LT((rho - oracle::partial_trace(psi, q)).norm(), 1e-13);
        // Tr[rho O] = <psi| O_q |psi> for the Pauli basis.
        for (int j = 0; j < 4; j++) {
            Complex lhs = (rho * oracle::sigma(j)).trace();
            Complex rhs = psi.dot(oracle::lift(oracle::sigma(j), {q}, 5) * psi);
            EXPECT_LT(std::abs(lhs - rhs), 1e-12);
        }
    }

    StateVector bell(line(2));
    bell.amplitudes() << 1 / std::sqrt(2.0), 0, 0, 1 / std::sqrt(2.0);
    EXPECT_LT((reduced_density(bell, 0) - Mat2::Identity() / 2).norm(), 1e-15);
    EXPECT_NEAR(entropy(reduced_density(bell, 1)), 1, 1e-12);

    // (|00> + |01> + |10>)/sqrt 3: rho_0 = [[2/3, 1/3], [1/3, 1/3]].
    StateVector w(line(2));
    w.amplitudes() << 1 / std::sqrt(3.0), 1 / std::sqrt(3.0), 1 / std::sqrt(3.0), 0;
    Mat2 expected;
    expected << 2.0 / 3, 1.0 / 3, 1.0 / 3, 1.0 / 3;
    EXPECT_LT((reduced_density(w, 0) - expected).norm(), 1e-15);
    EXPECT_NEAR(entropy(expected), oracle::entropy_bits(expected), 1e-12);
}

TEST(StateVector, EntropyValues) {
    Mat2 pure;
    pure << 1, 0, 0, 0;
    EXPECT_EQ(entropy(pure), 0);
    EXPECT_NEAR(entropy(Mat2::Identity() / 2), 1, 1e-15);
    Mat2 quarter;
    quarter << 0.25, 0, 0, 0.75;
    EXPECT_NEAR(entropy(quarter), 0.811278, 1e-6);
    EXPECT_NEAR(entropy(quarter), -(0.25 * std::log2(0.25) + 0.75 * std::log2(0.75)), 1e-14);

    std::mt19937_64 rng(5);
    for (int k = 0; k < 20; k++) {
        Mat2 rho = oracle::partial_trace(oracle::random_state(4, rng), 0);
        EXPECT_NEAR(entropy(rho), oracle::entropy_bits(rho), 1e-12);
    }
}

TEST(StateVector, EntropyRejectsInvalidInput) {
    Mat2 skew;
    skew << 0.5, 0.3, -0.3, 0.5;
    EXPECT_THROW(entropy(skew), NumericalError);
    Mat2 big;
    big << 1.5, 0, 0, -0.5;
    EXPECT_THROW(entropy(big), NumericalError);
    Mat2 trace;
    trace << 0.7, 0, 0, 0.7;
    EXPECT_THROW(entropy(trace), NumericalError);
    Mat2 tiny;
    tiny << 1 + 5e-11, 0, 0, -5e-11;
    EXPECT_NEAR(entropy(tiny), 0, 1e-9);
}

TEST(StateVector, ConeMatchesFullLattice) {
    std::mt19937_64 rng(6);
    struct Case {
        int s, t;
        std::vector<int> extents;
    };
    for (const Case &c : {Case{1, 1, {4}}, Case{1, 2, {6}}, Case{1, 3, {8}}, Case{2, 1, {4, 4}}}) {
        for (int k = 0; k < 3; k++) {
            RuleParams p = oracle::random_cphase(c.s, rng);
            Angles3 d = oracle::random_angles(rng);
            double full = oracle::lattice_entropy(p, d, LatticeSpec(c.extents), c.t);
            EXPECT_NEAR(dense_cone_entropy(p, {d}, c.t), full, 1e-10) << c.s << "," << c.t;
        }
    }
}

TEST(StateVector, TranslationInvariantReducedStates) {
    std::mt19937_64 rng(7);
    LatticeSpec spec({4, 4});
    RuleParams p = oracle::random_cphase(2, rng);
    StateVector st = init_product_state({oracle::random_angles(rng)}, spec);
    Circuit c = compile_step(p, spec);
    apply_circuit(st, c);
    apply_circuit(st, c);
    Mat2 rho0 = reduced_density(st, 0);
    for (int q = 1; q < 16; q++) {
        EXPECT_LT((reduced_density(st, q) - rho0).norm(), 1e-10);
    }
}

TEST(StateVector, TrivialEntanglersGiveZeroEntropy) {
    std::mt19937_64 rng(8);
    RuleParams p = RuleParams::controlled_phase({0, 0}, oracle::random_angles(rng));
    EXPECT_NEAR(dense_cone_entropy(p, {oracle::random_angles(rng)}, 2), 0, 1e-12);
}
