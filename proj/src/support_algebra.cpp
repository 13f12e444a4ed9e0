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

#include "vnqca/support_algebra.hpp"

#include <algorithm>
#include <cmath>

#include "vnqca/errors.hpp"

namespace vnqca {

namespace {

Eigen::Map<const CVector> vec(const CMatrix &m) {
    return {m.data(), m.size()};
}

// Incremental Hilbert-Schmidt orthonormal basis.
class SpanBuilder {
   public:
    SpanBuilder(Eigen::Index dim, double tol) : dim_(dim), tol_(tol) {
    }

    // Adds m when it leaves the span by more than tol (relative to its norm).
    bool add(const CMatrix &m) {
        CVector v = vec(m);
        const double norm = v.norm();
        if (norm == 0) {
            return false;
        }
        for (int pass = 0; pass < 2; pass++) {
            for (const auto &b : basis_) {
                v -= vec(b) * vec(b).dot(v);
            }
        }
        if (v.norm() <= tol_ * std::max(1.0, norm)) {
            return false;
        }
        v /= v.norm();
        basis_.emplace_back(Eigen::Map<CMatrix>(v.data(), dim_, dim_));
        return true;
    }

    double residual(const CMatrix &m) const {
        CVector v = vec(m);
        for (const auto &b : basis_) {
            v -= vec(b) * vec(b).dot(v);
        }
        return v.norm();
    }

    std::vector<CMatrix> &basis() {
        return basis_;
    }

   private:
    Eigen::Index dim_;
    double tol_;
    std::vector<CMatrix> basis_;
};

// Dimension of {z in span(basis) : [z, g] = 0 for all g}.
int center_dimension(const std::vector<CMatrix> &basis, const std::vector<CMatrix> &gens, double tol) {
    if (basis.size() <= 1) {
        return static_cast<int>(basis.size());
    }
    const Eigen::Index dd = basis[0].size();
    CMatrix k = CMatrix::Zero(dd * static_cast<Eigen::Index>(std::max<size_t>(gens.size(), 1)),
                              static_cast<Eigen::Index>(basis.size()));
    for (size_t c = 0; c < basis.size(); c++) {
        for (size_t g = 0; g < gens.size(); g++) {
            CMatrix comm = basis[c] * gens[g] - gens[g] * basis[c];
            k.block(static_cast<Eigen::Index>(g) * dd, static_cast<Eigen::Index>(c), dd, 1) = vec(comm);
        }
    }
    Eigen::BDCSVD<CMatrix> svd(k);
    const auto &sv = svd.singularValues();
    const double scale = std::max(1.0, sv.size() ? sv(0) : 0.0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); i++) {
        rank += sv(i) > tol * scale;
    }
    return static_cast<int>(basis.size()) - rank;
}

bool label_in_quadrant(const Coord &label, const Coord &sign) {
    const int s = static_cast<int>(sign.size());
    for (int i = 0; i < s; i++) {
        // Quadrant c + q covers q_i + {0, 1} on axis i.
        const int lo = sign[i];
        if (label[i] != lo && label[i] != lo + 1) {
            return false;
        }
    }
    return true;
}

}  // namespace

int MatrixAlgebra::sqrt_dim() const {
    if (!is_simple()) {
        return 0;
    }
    int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(dim()))));
    return d * d == dim() ? d : 0;
}

MatrixAlgebra generate_algebra(std::vector<Coord> region, const std::vector<CMatrix> &generators, double tol) {
    const Eigen::Index dim = Eigen::Index{1} << region.size();
    SpanBuilder span(dim, tol);
    span.add(CMatrix::Identity(dim, dim));
    std::vector<CMatrix> gens;
    for (const auto &g : generators) {
        if (g.rows() != dim || g.cols() != dim) {
            throw InputError("generator does not act on the algebra's region");
        }
        gens.push_back(g);
        gens.push_back(g.adjoint());
        span.add(g);
        span.add(g.adjoint());
    }
    // Close under products: every new element is multiplied with every
    // element already present, on both sides, until nothing new appears.
    const size_t cap = static_cast<size_t>(dim * dim);
    auto &basis = span.basis();
    for (size_t i = 0; i < basis.size(); i++) {
        for (size_t j = 0; j <= i; j++) {
            CMatrix a = basis[i] * basis[j];
            CMatrix b = basis[j] * basis[i];
            span.add(a);
            span.add(b);
        }
        span.add(CMatrix(basis[i].adjoint()));
        if (basis.size() > cap) {
            throw NumericalError("algebra closure did not stabilize");
        }
    }
    MatrixAlgebra out;
    out.region = std::move(region);
    out.basis = std::move(basis);
    out.center_dim = center_dimension(out.basis, gens, tol);
    return out;
}

MatrixAlgebra support_on(const std::vector<LocalOperator> &images, const std::vector<Coord> &subregion,
                         double tol) {
    std::vector<Coord> used;
    for (const Coord &c : subregion) {
        for (const auto &img : images) {
            if (std::find(img.labels.begin(), img.labels.end(), c) != img.labels.end()) {
                used.push_back(c);
                break;
            }
        }
    }
    std::vector<CMatrix> factors;
    for (const auto &img : images) {
        std::vector<int> inside;
        std::vector<Coord> inside_labels;
        for (const Coord &c : used) {
            auto it = std::find(img.labels.begin(), img.labels.end(), c);
            if (it != img.labels.end()) {
                inside.push_back(static_cast<int>(it - img.labels.begin()));
                inside_labels.push_back(c);
            }
        }
        if (inside.empty()) {
            continue;
        }
        auto schmidt = operator_schmidt(img.matrix, inside, img.qubits(), tol);
        for (const auto &f : schmidt.left) {
            factors.push_back(LocalOperator{inside_labels, f}.on(used).matrix);
        }
    }
    return generate_algebra(std::move(used), factors, tol);
}

MatrixAlgebra join(const MatrixAlgebra &a, const MatrixAlgebra &b, double tol) {
    std::vector<Coord> region = label_union(a.region, b.region);
    std::vector<CMatrix> gens;
    for (int k = 0; k < a.dim(); k++) {
        gens.push_back(a.element(k).on(region).matrix);
    }
    for (int k = 0; k < b.dim(); k++) {
        gens.push_back(b.element(k).on(region).matrix);
    }
    return generate_algebra(std::move(region), gens, tol);
}

bool contains(const MatrixAlgebra &outer, const MatrixAlgebra &inner, double tol) {
    // Both sides are written on the union of labels, identity elsewhere.
    std::vector<Coord> region = label_union(outer.region, inner.region);
    SpanBuilder span(Eigen::Index{1} << region.size(), tol);
    for (int k = 0; k < outer.dim(); k++) {
        span.add(outer.element(k).on(region).matrix);
    }
    for (int k = 0; k < inner.dim(); k++) {
        if (span.residual(inner.element(k).on(region).matrix) > tol) {
            return false;
        }
    }
    return true;
}

double max_commutator(const MatrixAlgebra &a, const MatrixAlgebra &b) {
    double worst = 0;
    for (int i = 1; i < a.dim(); i++) {
        for (int j = 1; j < b.dim(); j++) {
            worst = std::max(worst, commutator_norm(a.element(i), b.element(j)));
        }
    }
    return worst;
}

std::optional<std::array<double, 3>> bloch_axis(const MatrixAlgebra &a) {
    if (a.dim() != 2 || a.region.size() != 1 || !a.is_abelian()) {
        return std::nullopt;
    }
    const CMatrix &b = a.basis[1];
    CMatrix h = b + b.adjoint();
    if (h.norm() < 1e-6) {
        h = Complex(0, 1) * (b - b.adjoint());
    }
    std::array<double, 3> n{};
    double norm = 0;
    for (int j = 0; j < 3; j++) {
        n[j] = (h * pauli(j + 1)).trace().real();
        norm += n[j] * n[j];
    }
    norm = std::sqrt(norm);
    for (double &x : n) {
        x /= norm;
    }
    for (double x : n) {
        if (std::abs(x) > 1e-12) {
            if (x < 0) {
                for (double &y : n) {
                    y = -y;
                }
            }
            break;
        }
    }
    return n;
}

std::vector<LocalOperator> generator_images(const LocalRuleMatrix &rule, const std::vector<Coord> &region) {
    const LocalOperator i1 = local_image(rule, pauli(1));
    const LocalOperator i2 = local_image(rule, pauli(2));
    std::vector<LocalOperator> out;
    for (const Coord &x : region) {
        out.push_back(i1.translated(x));
        out.push_back(i2.translated(x));
    }
    return out;
}

MatrixAlgebra region_support(const LocalRuleMatrix &rule, const std::vector<Coord> &lambda,
                             const std::vector<Coord> &omega) {
    return support_on(generator_images(rule, lambda), omega);
}

const char *case_name(ConfigurationCase c) {
    switch (c) {
        case ConfigurationCase::CaseI:
            return "CASE_I";
        case ConfigurationCase::CaseII:
            return "CASE_II";
        case ConfigurationCase::Unclassified:
            return "UNCLASSIFIED";
    }
    return "?";
}

Configuration classify_configuration(const LocalRuleMatrix &rule) {
    if (!verify_local_rule(rule).pass) {
        throw InputError("local rule fails verification; no configuration to classify");
    }
    const int s = rule.s;
    const SiteSet nbhd = von_neumann_neighborhood(s);
    const auto images = generator_images(rule, {zero_coord(s)});
    Configuration conf;
    for (const Coord &y : nbhd) {
        MatrixAlgebra a = support_on(images, {y});
        conf.sites.push_back({y, a.dim(), a.is_abelian(), bloch_axis(a)});
    }
    auto is_full = [](const SiteSupport &x) { return x.dim == 4 && !x.abelian; };
    int full = 0, trivial = 0;
    for (const auto &x : conf.sites) {
        full += is_full(x);
        trivial += x.dim == 1;
    }
    if (full == 1 && trivial == static_cast<int>(conf.sites.size()) - 1) {
        conf.kind = ConfigurationCase::CaseI;
        for (const auto &x : conf.sites) {
            if (is_full(x)) {
                conf.offset = x.site;
            }
        }
        return conf;
    }
    if (!is_full(conf.sites[0])) {
        return conf;
    }
    conf.active_axes.assign(s, false);
    for (int i = 0; i < s; i++) {
        const SiteSupport &plus = conf.sites[1 + 2 * i], &minus = conf.sites[2 + 2 * i];
        if (plus.dim == 1 && minus.dim == 1) {
            continue;
        }
        if (plus.dim != 2 || minus.dim != 2 || !plus.axis || !minus.axis) {
            return conf;
        }
        double dev = 0;
        for (int j = 0; j < 3; j++) {
            dev = std::max(dev, std::abs((*plus.axis)[j] - (*minus.axis)[j]));
        }
        if (dev > 1e-8) {
            return conf;
        }
        conf.active_axes[i] = true;
    }
    conf.kind = ConfigurationCase::CaseII;
    return conf;
}

Configuration classify_configuration(const RuleParams &params) {
    return classify_configuration(local_rule_matrix(params));
}

QuadrantReport quadrant_supports(const std::vector<LocalOperator> &cell_images, int s, int local_qubits) {
    QuadrantReport rep;
    rep.s = s;
    rep.local_qubits = local_qubits;
    std::vector<Coord> labels;
    for (const auto &img : cell_images) {
        labels = label_union(labels, img.labels);
    }
    int log_total = 0;
    std::vector<int> ns;
    for (const auto &quad : quadrants(s)) {
        std::vector<Coord> region;
        for (const Coord &c : labels) {
            if (label_in_quadrant(c, quad.sign)) {
                region.push_back(c);
            }
        }
        QuadrantSupport qs{quad.sign, support_on(cell_images, region), 0, -1};
        qs.d = qs.algebra.sqrt_dim();
        if (qs.d == 0) {
            rep.all_simple = false;
        } else {
            int m = 0;
            while ((1 << m) < qs.d) {
                m++;
            }
            log_total += m;
            if ((1 << m) == qs.d && m % local_qubits == 0) {
                qs.n = m / local_qubits;
                ns.push_back(qs.n);
            }
        }
        rep.quadrants.push_back(std::move(qs));
    }
    if (!rep.all_simple) {
        rep.failure = "direct sum: a quadrant support has a nontrivial center";
        rep.product_matches = false;
        rep.parity_fixed = false;
        return rep;
    }
    rep.product_matches = log_total == local_qubits * (1 << s);
    for (int n : ns) {
        rep.parity_fixed = rep.parity_fixed && (n % 2 == ns.front() % 2);
    }
    if (static_cast<int>(ns.size()) != static_cast<int>(rep.quadrants.size())) {
        rep.parity_fixed = false;
        rep.failure = "nonprime ambiguity: a quadrant dimension is not a power of the local dimension";
    } else if (!rep.product_matches) {
        rep.failure = "quadrant dimensions do not multiply to the super-cell dimension";
    }
    return rep;
}

QuadrantReport quadrant_supports(const RuleParams &params) {
    const LocalRuleMatrix rule = local_rule_matrix(params);
    return quadrant_supports(generator_images(rule, super_cell(params.s).sites()), params.s, 1);
}

CommutationVerdict check_quadrant_commutation(const QuadrantReport &report, double tol) {
    CommutationVerdict v;
    const auto &qs = report.quadrants;
    std::vector<MatrixAlgebra> moved;
    for (const auto &q : qs) {
        MatrixAlgebra a = q.algebra;
        for (Coord &c : a.region) {
            c = c - q.sign;
        }
        moved.push_back(std::move(a));
    }
    for (size_t a = 0; a < qs.size(); a++) {
        for (size_t b = a + 1; b < qs.size(); b++) {
            double norm = max_commutator(moved[a], moved[b]);
            v.max_norm = std::max(v.max_norm, norm);
            if (norm > tol) {
                v.pass = false;
                v.failing.emplace_back(static_cast<int>(a), static_cast<int>(b));
            }
        }
    }
    return v;
}

CommutationVerdict check_quadrant_commutation(const RuleParams &params, double tol) {
    return check_quadrant_commutation(quadrant_supports(params), tol);
}

Rational Rational::power_of_two(int exponent) {
    if (exponent > 62 || exponent < -62) {
        throw NumericalError("index component out of range");
    }
    return exponent >= 0 ? Rational{std::int64_t{1} << exponent, 1} : Rational{1, std::int64_t{1} << -exponent};
}

std::string Rational::to_string() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

std::string Rational::compact() const {
    return den == 1 ? std::to_string(num) : to_string();
}

bool IndexVector::is_trivial() const {
    return std::all_of(components.begin(), components.end(), [](const Rational &r) { return r.is_one(); });
}

std::string IndexVector::to_string() const {
    std::string out;
    for (size_t i = 0; i < components.size(); i++) {
        out += (i ? "," : "") + components[i].compact();
    }
    return out;
}

IndexVector index_vector(const QuadrantReport &report) {
    if (!report.all_simple) {
        throw NumericalError("index undefined: " + report.failure);
    }
    const int s = report.s;
    const int root = 1 << (s - 1);
    IndexVector iv;
    for (int axis = 0; axis < s; axis++) {
        int log_num = 0;
        for (int q : left_quadrants(s, axis)) {
            int m = 0;
            while ((1 << m) < report.quadrants[q].d) {
                m++;
            }
            if ((1 << m) != report.quadrants[q].d) {
                throw NumericalError("quadrant dimension is not a power of two");
            }
            log_num += m;
        }
        const int exponent = log_num - report.local_qubits * root;
        if (exponent % root != 0) {
            throw NumericalError("index component is not rational");
        }
        iv.components.push_back(Rational::power_of_two(exponent / root));
    }
    return iv;
}

IndexVector index_vector(const RuleParams &params) {
    return index_vector(quadrant_supports(params));
}

}  // namespace vnqca
