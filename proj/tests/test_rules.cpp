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
#include "vnqca/errors.hpp"
#include "vnqca/rules.hpp"

using namespace vnqca;

namespace {

double dist(const CMatrix &a, const CMatrix &b) {
    return (a - b).norm();
}

}  // namespace

TEST(Rules, RotationClosedForms) {
    EXPECT_LT(dist(rotation_matrix({0, 0, 0}), Mat2::Identity()), 1e-15);
    Mat2 ry;
    ry << 0, -1, 1, 0;
    EXPECT_LT(dist(rotation_matrix({0, kPi, 0}), ry), 1e-15);
    Mat2 rz;
    rz << Complex(0, -1), 0, 0, Complex(0, 1);
    EXPECT_LT(dist(rotation_matrix({kPi, 0, 0}), rz), 1e-15);

    std::mt19937_64 rng(11);
    for (int k = 0; k < 20; k++) {
        Angles3 t = oracle::random_angles(rng);
        Mat2 v = rotation_matrix(t);
        EXPECT_LT(dist(v, oracle::rotation(t)), 1e-13);
        EXPECT_TRUE(is_unitary(v, 1e-12));
        EXPECT_NEAR(std::abs(v.determinant()), 1.0, 1e-12);
    }
}

TEST(Rules, ControlledPhase) {
    EXPECT_LT(dist(cphase_matrix(0), Eigen::Matrix4cd::Identity()), 1e-15);
    Eigen::Matrix4cd cz = Eigen::Matrix4cd::Identity();
    cz(3, 3) = -1;
    EXPECT_LT(dist(cphase_matrix(kPi), cz), 1e-15);
    Eigen::Matrix4cd cs = Eigen::Matrix4cd::Identity();
    cs(3, 3) = Complex(0, 1);
    EXPECT_LT(dist(cphase_matrix(kPi / 2), cs), 1e-15);

    // Symmetric under exchanging control and target.
    CMatrix c = cphase_matrix(1.234);
    CMatrix swapped = oracle::lift(c, {1, 0}, 2);
    EXPECT_LT(dist(c, swapped), 1e-15);
}

TEST(Rules, IdentityRuleMatrix) {
    for (int s = 1; s <= 2; s++) {
        LocalRuleMatrix w = local_rule_matrix(RuleParams::identity(s));
        EXPECT_LT(dist(w.unitary, CMatrix::Identity(w.unitary.rows(), w.unitary.cols())), 1e-14);
    }
}

TEST(Rules, CliffordImageOneDimension) {
    // alpha_0(sigma^1) = sigma^3 (x) sigma^1 (x) sigma^3 for phi = pi.
    LocalRuleMatrix w = local_rule_matrix(RuleParams::controlled_phase({kPi}, {0, 0, 0}));
    LocalOperator img = local_image(w, oracle::sigma(1));
    ASSERT_EQ(img.labels, (std::vector<Coord>{{0}, {1}, {-1}}));
    CMatrix expected = oracle::lift(oracle::sigma(1), {0}, 3) * oracle::lift(oracle::sigma(3), {1}, 3) *
                       oracle::lift(oracle::sigma(3), {2}, 3);
    EXPECT_LT(dist(img.matrix, expected), 1e-13);

    LocalOperator z = local_image(w, oracle::sigma(3));
    EXPECT_LT(dist(z.matrix, oracle::lift(oracle::sigma(3), {0}, 3)), 1e-13);
}

TEST(Rules, ShiftImage) {
    std::mt19937_64 rng(3);
    LocalRuleMatrix w = local_rule_matrix(RuleParams::shifted({1}, {0, 0, 0}));
    CMatrix o = CMatrix::Random(2, 2);
    LocalOperator img = local_image(w, o);
    EXPECT_LT(dist(img.matrix, oracle::lift(o, {1}, 3)), 1e-13);

    // Two dimensions, shift -e_2: neighborhood slot 4.
    LocalRuleMatrix w2 = local_rule_matrix(RuleParams::shifted({0, -1}, {0, 0, 0}));
    LocalOperator img2 = local_image(w2, o);
    EXPECT_LT(dist(img2.matrix, oracle::lift(o, {4}, 5)), 1e-13);
}

TEST(Rules, Homomorphism) {
    std::mt19937_64 rng(5);
    for (int s = 1; s <= 2; s++) {
        for (int k = 0; k < 5; k++) {
            LocalRuleMatrix w = local_rule_matrix(oracle::random_cphase(s, rng));
            EXPECT_TRUE(is_unitary(w.unitary, 1e-12));
            Mat2 a = Mat2::Random(), b = Mat2::Random();
            CMatrix ab = local_image(w, a * b).matrix;
            CMatrix prod = local_image(w, a).matrix * local_image(w, b).matrix;
            EXPECT_LT(dist(ab, prod), 1e-12);
            EXPECT_LT(dist(local_image(w, a.adjoint()).matrix, local_image(w, a).matrix.adjoint()), 1e-12);
        }
    }
}

TEST(Rules, ControlledPhaseImageMatchesBruteForce) {
    // W = M(phi) V^{(x)n}; alpha(O) = W^dag (O (x) I) W, assembled from the
    // gates one by one.
    std::mt19937_64 rng(8);
    RuleParams p = oracle::random_cphase(2, rng);
    const int n = 5;
    CMatrix w = CMatrix::Identity(32, 32);
    for (int q = 0; q < n; q++) {
        w = oracle::lift(oracle::rotation(p.theta), {q}, n) * w;
    }
    for (int i = 0; i < 2; i++) {
        for (int slot : {1 + 2 * i, 2 + 2 * i}) {
            w = oracle::lift(cphase_matrix(p.phi[i]), {0, slot}, n) * w;
        }
    }
    LocalRuleMatrix rule = local_rule_matrix(p);
    for (int j = 1; j <= 3; j++) {
        CMatrix expected = w.adjoint() * oracle::lift(oracle::sigma(j), {0}, n) * w;
        EXPECT_LT(dist(local_image(rule, oracle::sigma(j)).matrix, expected), 1e-12);
    }
}

TEST(Rules, OverlapOffsets) {
    EXPECT_EQ(overlap_offsets(1).size(), 4u);   // +-1, +-2
    EXPECT_EQ(overlap_offsets(2).size(), 12u);  // +-e_i, +-2e_i, +-e_1+-e_2
}

TEST(Rules, VerifyAcceptsClassifiedRules) {
    std::mt19937_64 rng(21);
    for (int s = 1; s <= 2; s++) {
        EXPECT_TRUE(verify_local_rule(local_rule_matrix(RuleParams::identity(s))).pass);
        for (int k = 0; k < 5; k++) {
            EXPECT_TRUE(verify_local_rule(local_rule_matrix(oracle::random_cphase(s, rng))).pass);
        }
        for (int i = 0; i < s; i++) {
            for (int d : {-1, 1}) {
                RuleParams p = RuleParams::shifted(unit_coord(s, i, d), oracle::random_angles(rng));
                EXPECT_TRUE(verify_local_rule(local_rule_matrix(p)).pass);
            }
        }
    }
}

TEST(Rules, VerifyRejectsControlledNot) {
    // CNOT from the origin onto +e_1. The image of sigma^1 at the origin
    // reaches +e_1 and fails to commute with the translated images.
    Eigen::Matrix4cd cnot = Eigen::Matrix4cd::Zero();
    cnot(0, 0) = cnot(2, 2) = 1;  // control bit 0 = 0
    cnot(3, 1) = cnot(1, 3) = 1;  // control set: flip bit 1
    LocalRuleMatrix rule{1, oracle::lift(cnot, {0, 1}, 3)};
    RuleVerdict v = verify_local_rule(rule);
    ASSERT_FALSE(v.pass);
    bool saw_e1 = false;
    for (const auto &x : v.violations) {
        EXPECT_GT(x.norm, 1e-10);
        saw_e1 = saw_e1 || x.offset == Coord{1} || x.offset == Coord{-1};
    }
    EXPECT_TRUE(saw_e1);

    LocalRuleMatrix bad{1, CMatrix::Random(8, 8)};
    EXPECT_THROW(verify_local_rule(bad), InputError);
}

TEST(Rules, IsClifford) {
    EXPECT_TRUE(is_clifford(RuleParams::controlled_phase({kPi, kPi}, {kPi / 2, 0, 0})));
    EXPECT_FALSE(is_clifford(RuleParams::controlled_phase({kPi / 3, kPi}, {0, 0, 0})));
    EXPECT_FALSE(is_clifford(RuleParams::controlled_phase({kPi, kPi}, {0.1, 0, 0})));
    EXPECT_TRUE(is_clifford(RuleParams::shifted({1, 0}, {0, 0, 0})));
    EXPECT_TRUE(is_clifford(RuleParams::controlled_phase({3 * kPi}, {-kPi / 2, 5 * kPi / 2, 0})));
}

TEST(Rules, AnglesReduced) {
    RuleParams p = RuleParams::controlled_phase({-kPi / 2, 5 * kPi}, {7, -1, 0});
    EXPECT_NEAR(p.phi[0], 3 * kPi / 2, 1e-12);
    EXPECT_NEAR(p.phi[1], kPi, 1e-12);
    for (double a : p.theta) {
        EXPECT_GE(a, 0);
        EXPECT_LT(a, kTwoPi);
    }
}

TEST(Rules, ValidateAndJson) {
    EXPECT_THROW(RuleParams::shifted({2, 0}, {0, 0, 0}), InputError);
    EXPECT_THROW(RuleParams::shifted({1, 1}, {0, 0, 0}), InputError);

    RuleParams p = RuleParams::controlled_phase({1.0, 2.0}, {0.1, 0.2, 0.3});
    RuleParams q = rule_from_json(rule_to_json(p));
    EXPECT_EQ(q.s, 2);
    EXPECT_EQ(q.phi, p.phi);
    EXPECT_EQ(q.theta, p.theta);

    RuleParams sh = rule_from_json(nlohmann::json::parse(R"({"s":2,"kind":"shift","shift":[-1,0],"theta":[0,0,0]})"));
    EXPECT_TRUE(sh.is_shift());
    EXPECT_EQ(sh.shift, (Coord{-1, 0}));
    EXPECT_THROW(rule_from_json(nlohmann::json::parse(R"({"s":2,"kind":"cphase","phi":[1]})")), InputError);
    EXPECT_THROW(rule_from_json(nlohmann::json::parse(R"({"s":2,"kind":"bogus"})")), InputError);
}
