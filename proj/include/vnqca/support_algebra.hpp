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
#include <optional>
#include <string>
#include <vector>

#include "vnqca/lattice.hpp"
#include "vnqca/linalg.hpp"
#include "vnqca/rules.hpp"

namespace vnqca {

/// Rank threshold shared by every closure, span and commutator decision.
inline constexpr double kAlgebraTol = 1e-10;

/// Unital *-subalgebra of the operators on `region`, given by a
/// Hilbert-Schmidt orthonormal basis whose first element is I/sqrt(D).
struct MatrixAlgebra {
    std::vector<Coord> region;  // qubit labels the basis acts on
    std::vector<CMatrix> basis;
    int center_dim = 1;

    int dim() const {
        return static_cast<int>(basis.size());
    }
    bool is_simple() const {
        return center_dim == 1;
    }
    bool is_abelian() const {
        return center_dim == dim();
    }
    /// d with d^2 = dim for a simple algebra; 0 otherwise.
    int sqrt_dim() const;
    /// Basis element k as an operator on its labels.
    LocalOperator element(int k) const {
        return {region, basis[k]};
    }
};

/// Smallest unital *-algebra on `region` containing `generators`.
MatrixAlgebra generate_algebra(std::vector<Coord> region, const std::vector<CMatrix> &generators,
                               double tol = kAlgebraTol);

/// Support algebra of the algebra generated by `images` on the labels in
/// `subregion`. The result acts on the labels of `subregion` touched by
/// some image; it is the identity on the remaining ones.
MatrixAlgebra support_on(const std::vector<LocalOperator> &images, const std::vector<Coord> &subregion,
                         double tol = kAlgebraTol);

/// Algebra generated by two algebras, on the union of their regions.
MatrixAlgebra join(const MatrixAlgebra &a, const MatrixAlgebra &b, double tol = kAlgebraTol);

/// Every basis element of `inner` lies in the span of `outer`.
bool contains(const MatrixAlgebra &outer, const MatrixAlgebra &inner, double tol = kAlgebraTol);

/// Largest Frobenius norm of a commutator between basis elements.
double max_commutator(const MatrixAlgebra &a, const MatrixAlgebra &b);

/// Unit Bloch vector n of an abelian two-dimensional algebra D(n) on one
/// qubit, with its first nonzero component positive.
std::optional<std::array<double, 3>> bloch_axis(const MatrixAlgebra &a);

/// Images alpha(sigma^1_x), alpha(sigma^2_x) for every x in `region`.
std::vector<LocalOperator> generator_images(const LocalRuleMatrix &rule, const std::vector<Coord> &region);

/// Support of alpha(A_lambda) on omega.
MatrixAlgebra region_support(const LocalRuleMatrix &rule, const std::vector<Coord> &lambda,
                             const std::vector<Coord> &omega);

enum class ConfigurationCase { CaseI, CaseII, Unclassified };

const char *case_name(ConfigurationCase c);

struct SiteSupport {
    Coord site;
    int dim = 1;
    bool abelian = true;
    std::optional<std::array<double, 3>> axis;
};

struct Configuration {
    ConfigurationCase kind = ConfigurationCase::Unclassified;
    Coord offset;                     // CaseI: site receiving the full algebra
    std::vector<SiteSupport> sites;   // in neighborhood order
    std::vector<bool> active_axes;    // CaseII: axis pairs with D(n) supports
};

/// Pattern of single-site supports of alpha(A_0) over the neighborhood.
/// Throws InputError when the rule fails verification.
Configuration classify_configuration(const LocalRuleMatrix &rule);
Configuration classify_configuration(const RuleParams &params);

struct QuadrantSupport {
    Coord sign;
    MatrixAlgebra algebra;
    int d = 0;  // sqrt dimension, 0 when not simple
    int n = -1; // d = p^n, -1 when d is not a power of p
};

/// Supports of alpha(A_c) on the 2^s quadrants c + q.
struct QuadrantReport {
    int s = 1;
    int local_qubits = 1;  // p = 2^local_qubits
    std::vector<QuadrantSupport> quadrants;
    bool all_simple = true;
    bool product_matches = true;  // prod_q d(q) = p^(2^s)
    bool parity_fixed = true;     // every n(q) has the same parity
    std::string failure;          // empty when supports are usable

    bool usable() const {
        return failure.empty();
    }
};

/// From images of generators of A_c. Labels are lattice sites, optionally
/// followed by extra components naming qubits inside a site; a label
/// belongs to a quadrant when its first s components do.
QuadrantReport quadrant_supports(const std::vector<LocalOperator> &cell_images, int s, int local_qubits = 1);
QuadrantReport quadrant_supports(const RuleParams &params);

struct CommutationVerdict {
    bool pass = true;
    double max_norm = 0;
    std::vector<std::pair<int, int>> failing;  // quadrant index pairs
};

/// [tau^{-q} S_q, tau^{-p} S_p] = 0 for every pair of quadrants.
CommutationVerdict check_quadrant_commutation(const QuadrantReport &report, double tol = kAlgebraTol);
CommutationVerdict check_quadrant_commutation(const RuleParams &params, double tol = kAlgebraTol);

/// Positive rational in lowest terms.
struct Rational {
    std::int64_t num = 1;
    std::int64_t den = 1;

    static Rational power_of_two(int exponent);
    bool operator==(const Rational &other) const = default;
    bool is_one() const {
        return num == 1 && den == 1;
    }
    /// "2/1", "1/2".
    std::string to_string() const;
    /// "2", "1/2".
    std::string compact() const;
};

struct IndexVector {
    std::vector<Rational> components;

    bool is_trivial() const;
    /// Components joined by commas in compact form.
    std::string to_string() const;
};

/// Index from quadrant supports. Throws NumericalError when the supports
/// are not simple or the components are not rational.
IndexVector index_vector(const QuadrantReport &report);
IndexVector index_vector(const RuleParams &params);

}  // namespace vnqca
