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

#include "vnqca/rules.hpp"

#include <cmath>

#include "vnqca/errors.hpp"

namespace vnqca {

namespace {

constexpr double kAngleTol = 1e-12;

// Distance of a to the nearest multiple of `step`.
double off_grid(double a, double step) {
    double r = std::fmod(a, step);
    if (r < 0) {
        r += step;
    }
    return std::min(r, step - r);
}

Mat2 rz(double a) {
    Mat2 m;
    m << std::polar(1.0, -a / 2), 0, 0, std::polar(1.0, a / 2);
    return m;
}

Mat2 ry(double a) {
    Mat2 m;
    double c = std::cos(a / 2), s = std::sin(a / 2);
    m << c, -s, s, c;
    return m;
}

}  // namespace

double reduce_angle(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0) {
        r += kTwoPi;
    }
    if (r >= kTwoPi) {
        r = 0;
    }
    return r;
}

RuleParams RuleParams::controlled_phase(std::vector<double> phi, Angles3 theta) {
    RuleParams p;
    p.s = static_cast<int>(phi.size());
    p.kind = RuleKind::ControlledPhase;
    for (auto &a : phi) {
        a = reduce_angle(a);
    }
    for (auto &a : theta) {
        a = reduce_angle(a);
    }
    p.phi = std::move(phi);
    p.theta = theta;
    p.validate();
    return p;
}

RuleParams RuleParams::shifted(Coord y, Angles3 theta) {
    RuleParams p;
    p.s = static_cast<int>(y.size());
    p.kind = RuleKind::Shift;
    p.phi.assign(p.s, 0.0);
    for (auto &a : theta) {
        a = reduce_angle(a);
    }
    p.theta = theta;
    p.shift = std::move(y);
    p.validate();
    return p;
}

RuleParams RuleParams::identity(int s) {
    return controlled_phase(std::vector<double>(s, 0.0), {0, 0, 0});
}

void RuleParams::validate() const {
    if (s < 1) {
        throw InputError("rule dimension must be positive");
    }
    if (static_cast<int>(phi.size()) != s) {
        throw InputError("phi must carry one angle per axis");
    }
    for (double a : phi) {
        if (!std::isfinite(a)) {
            throw InputError("non-finite phi");
        }
    }
    for (double a : theta) {
        if (!std::isfinite(a)) {
            throw InputError("non-finite theta");
        }
    }
    if (kind == RuleKind::Shift) {
        if (static_cast<int>(shift.size()) != s || !von_neumann_neighborhood(s).contains(shift)) {
            throw InputError("shift vector must lie in the von Neumann neighborhood");
        }
        for (double a : phi) {
            if (a != 0) {
                throw InputError("shift rules carry no controlled phases");
            }
        }
    }
}

Mat2 rotation_matrix(const Angles3 &theta) {
    return rz(theta[0]) * ry(theta[1]) * rz(theta[2]);
}

Eigen::Matrix4cd cphase_matrix(double phi) {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
    m(3, 3) = std::polar(1.0, phi);
    return m;
}

LocalRuleMatrix local_rule_matrix(const RuleParams &params) {
    params.validate();
    const int s = params.s;
    const int n = 2 * s + 1;
    const size_t dim = size_t{1} << n;
    SiteSet nb = von_neumann_neighborhood(s);

    CMatrix rotations = tensor_power(rotation_matrix(params.theta), n);

    CMatrix entangler = CMatrix::Identity(dim, dim);
    if (params.is_shift()) {
        int y = nb.index_of(params.shift);
        if (y != 0) {
            CMatrix swap = CMatrix::Zero(dim, dim);
            for (size_t idx = 0; idx < dim; idx++) {
                size_t b0 = idx & 1, by = (idx >> y) & 1;
                size_t j = (idx & ~(size_t{1} | (size_t{1} << y))) | (by) | (b0 << y);
                swap(j, idx) = 1;
            }
            entangler = swap;
        }
    } else {
        // M(phi): product of the 2s controlled phases between the origin and
        // its neighbours; all diagonal.
        for (size_t idx = 0; idx < dim; idx++) {
            if (!(idx & 1)) {
                continue;
            }
            double phase = 0;
            for (int i = 0; i < s; i++) {
                phase += params.phi[i] * static_cast<double>(((idx >> (1 + 2 * i)) & 1) + ((idx >> (2 + 2 * i)) & 1));
            }
            entangler(idx, idx) = std::polar(1.0, phase);
        }
    }
    return {s, entangler * rotations};
}

LocalOperator local_image(const LocalRuleMatrix &rule, const Mat2 &op) {
    const int n = 2 * rule.s + 1;
    const int origin[1] = {0};
    CMatrix lifted = embed(op, origin, n);
    return {von_neumann_neighborhood(rule.s).sites(), rule.unitary.adjoint() * lifted * rule.unitary};
}

std::vector<Coord> overlap_offsets(int s) {
    std::vector<Coord> out;
    for (int i = 0; i < s; i++) {
        for (int sign : {+1, -1}) {
            out.push_back(unit_coord(s, i, sign));
            out.push_back(unit_coord(s, i, 2 * sign));
        }
    }
    for (int i = 0; i < s; i++) {
        for (int j = i + 1; j < s; j++) {
            for (int si : {+1, -1}) {
                for (int sj : {+1, -1}) {
                    out.push_back(unit_coord(s, i, si) + unit_coord(s, j, sj));
                }
            }
        }
    }
    return out;
}

RuleVerdict verify_local_rule(const LocalRuleMatrix &rule, double tol) {
    const size_t dim = size_t{1} << (2 * rule.s + 1);
    if (rule.unitary.rows() != static_cast<Eigen::Index>(dim) || !is_unitary(rule.unitary, 1e-10)) {
        throw InputError("local rule is not a unitary on the neighborhood qubits");
    }
    RuleVerdict verdict;
    LocalOperator images[2] = {local_image(rule, pauli(1)), local_image(rule, pauli(2))};
    for (const auto &x : overlap_offsets(rule.s)) {
        for (int a = 0; a < 2; a++) {
            for (int b = 0; b < 2; b++) {
                double norm = commutator_norm(images[a], images[b].translated(x));
                if (norm > tol) {
                    verdict.pass = false;
                    verdict.violations.push_back({x, a + 1, b + 1, norm});
                }
            }
        }
    }
    return verdict;
}

bool is_clifford(const RuleParams &params) {
    for (double a : params.phi) {
        if (off_grid(a, kPi) > kAngleTol) {
            return false;
        }
    }
    for (double a : params.theta) {
        if (off_grid(a, kPi / 2) > kAngleTol) {
            return false;
        }
    }
    return true;
}

nlohmann::json rule_to_json(const RuleParams &params) {
    nlohmann::json j;
    j["s"] = params.s;
    j["kind"] = params.is_shift() ? "shift" : "cphase";
    j["phi"] = params.phi;
    j["theta"] = params.theta;
    if (params.is_shift()) {
        j["shift"] = params.shift;
    }
    return j;
}

RuleParams rule_from_json(const nlohmann::json &j) {
    try {
        int s = j.at("s").get<int>();
        std::string kind = j.value("kind", std::string("cphase"));
        Angles3 theta{0, 0, 0};
        if (j.contains("theta")) {
            auto t = j.at("theta").get<std::vector<double>>();
            if (t.size() != 3) {
                throw InputError("theta needs three angles");
            }
            theta = {t[0], t[1], t[2]};
        }
        if (kind == "cphase") {
            auto phi = j.at("phi").get<std::vector<double>>();
            if (static_cast<int>(phi.size()) != s) {
                throw InputError("phi length must equal s");
            }
            return RuleParams::controlled_phase(phi, theta);
        }
        if (kind == "shift") {
            auto y = j.at("shift").get<std::vector<int>>();
            if (static_cast<int>(y.size()) != s) {
                throw InputError("shift length must equal s");
            }
            return RuleParams::shifted(y, theta);
        }
        throw InputError("unknown rule kind '" + kind + "'");
    } catch (const nlohmann::json::exception &e) {
        throw InputError(std::string("malformed rule JSON: ") + e.what());
    }
}

}  // namespace vnqca
