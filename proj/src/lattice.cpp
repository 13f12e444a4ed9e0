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

#include "vnqca/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "vnqca/errors.hpp"

namespace vnqca {

namespace {

int positive_mod(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    std::int64_t r = 1;
    for (int i = 1; i <= k; i++) {
        r = r * (n - k + i) / i;
    }
    return r;
}

// Every sign vector in {-1,+1}^s, lexicographic with -1 first.
std::vector<Coord> sign_vectors(int s) {
    std::vector<Coord> out;
    for (int mask = 0; mask < (1 << s); mask++) {
        Coord q(s);
        for (int i = 0; i < s; i++) {
            q[i] = ((mask >> (s - 1 - i)) & 1) ? 1 : -1;
        }
        out.push_back(q);
    }
    return out;
}

}  // namespace

Coord zero_coord(int s) {
    return Coord(s, 0);
}

Coord unit_coord(int s, int axis, int sign) {
    Coord c(s, 0);
    c[axis] = sign;
    return c;
}

Coord operator+(const Coord &a, const Coord &b) {
    // Trailing label components present in only one operand pass through.
    const Coord &longer = a.size() >= b.size() ? a : b;
    const Coord &shorter = a.size() >= b.size() ? b : a;
    Coord r(longer);
    for (size_t k = 0; k < shorter.size(); k++) {
        r[k] += shorter[k];
    }
    return r;
}

Coord operator-(const Coord &a) {
    Coord r(a);
    for (auto &v : r) {
        v = -v;
    }
    return r;
}

Coord operator-(const Coord &a, const Coord &b) {
    Coord r(a);
    for (size_t k = 0; k < b.size() && k < r.size(); k++) {
        r[k] -= b[k];
    }
    return r;
}

Coord scaled(const Coord &a, int factor) {
    Coord r(a);
    for (auto &v : r) {
        v *= factor;
    }
    return r;
}

int l1_norm(const Coord &a) {
    int n = 0;
    for (int v : a) {
        n += v < 0 ? -v : v;
    }
    return n;
}

std::string to_string(const Coord &a) {
    std::string out = "(";
    for (size_t k = 0; k < a.size(); k++) {
        if (k) {
            out += ",";
        }
        out += std::to_string(a[k]);
    }
    return out + ")";
}

LatticeSpec::LatticeSpec(std::vector<int> extents) : extents_(std::move(extents)), site_count_(1) {
    if (extents_.empty()) {
        throw GeometryError("lattice needs at least one axis");
    }
    for (int e : extents_) {
        if (e < 1) {
            throw GeometryError("lattice extents must be positive");
        }
        site_count_ *= e;
    }
}

LatticeSpec LatticeSpec::cubic(int s, int extent) {
    return LatticeSpec(std::vector<int>(s, extent));
}

bool LatticeSpec::all_even() const {
    return std::all_of(extents_.begin(), extents_.end(), [](int e) { return e % 2 == 0; });
}

Coord LatticeSpec::wrap(const Coord &c) const {
    if (static_cast<int>(c.size()) != dim()) {
        throw GeometryError("coordinate dimension mismatch");
    }
    Coord r(c);
    for (int i = 0; i < dim(); i++) {
        r[i] = positive_mod(r[i], extents_[i]);
    }
    return r;
}

int LatticeSpec::index(const Coord &c) const {
    Coord w = wrap(c);
    int idx = 0;
    for (int i = 0; i < dim(); i++) {
        idx = idx * extents_[i] + w[i];
    }
    return idx;
}

Coord LatticeSpec::coord(int index) const {
    if (index < 0 || index >= site_count_) {
        throw GeometryError("site index out of range");
    }
    Coord c(dim());
    for (int i = dim() - 1; i >= 0; i--) {
        c[i] = index % extents_[i];
        index /= extents_[i];
    }
    return c;
}

SiteSet::SiteSet(std::vector<Coord> sites) {
    for (auto &c : sites) {
        insert(c);
    }
}

bool SiteSet::insert(const Coord &c) {
    if (contains(c)) {
        return false;
    }
    sites_.push_back(c);
    return true;
}

bool SiteSet::contains(const Coord &c) const {
    return index_of(c) >= 0;
}

int SiteSet::index_of(const Coord &c) const {
    auto it = std::find(sites_.begin(), sites_.end(), c);
    return it == sites_.end() ? -1 : static_cast<int>(it - sites_.begin());
}

SiteSet SiteSet::translated(const Coord &shift) const {
    SiteSet out;
    for (const auto &c : sites_) {
        out.insert(c + shift);
    }
    return out;
}

bool SiteSet::same_elements(const SiteSet &other) const {
    if (size() != other.size()) {
        return false;
    }
    return std::all_of(sites_.begin(), sites_.end(), [&](const Coord &c) { return other.contains(c); });
}

SiteSet von_neumann_neighborhood(int s) {
    if (s < 1) {
        throw InputError("spatial dimension must be positive");
    }
    SiteSet n;
    n.insert(zero_coord(s));
    for (int i = 0; i < s; i++) {
        n.insert(unit_coord(s, i, +1));
        n.insert(unit_coord(s, i, -1));
    }
    return n;
}

std::int64_t cone_size_formula(int s, int t) {
    std::int64_t total = 0;
    for (int k = 0; k <= std::min(s, t); k++) {
        total += binomial(s, k) * binomial(t, k) * (std::int64_t{1} << k);
    }
    return total;
}

SiteSet future_cone(int s, int t) {
    if (t < 0) {
        throw InputError("cone radius must be non-negative");
    }
    std::map<std::pair<int, Coord>, bool> ordered;
    // Breadth-first expansion; the map orders by (distance, coordinate).
    std::vector<Coord> frontier{zero_coord(s)};
    ordered[{0, zero_coord(s)}] = true;
    SiteSet nb = von_neumann_neighborhood(s);
    for (int step = 1; step <= t; step++) {
        std::vector<Coord> next;
        for (const auto &x : frontier) {
            for (const auto &d : nb) {
                Coord y = x + d;
                int r = l1_norm(y);
                if (r == step && !ordered.count({r, y})) {
                    ordered[{r, y}] = true;
                    next.push_back(y);
                }
            }
        }
        frontier = std::move(next);
    }
    SiteSet out;
    for (const auto &[key, _] : ordered) {
        out.insert(key.second);
    }
    return out;
}

SiteSet future_cone(const Coord &origin, int t, const LatticeSpec &spec) {
    for (int e : spec.extents()) {
        if (e < 2 * t + 1) {
            throw GeometryError(
                "causal cone of radius " + std::to_string(t) + " overlaps itself on an axis of extent " +
                std::to_string(e));
        }
    }
    SiteSet out;
    for (const auto &c : future_cone(spec.dim(), t)) {
        out.insert(spec.wrap(origin + c));
    }
    return out;
}

SiteSet super_cell(int s) {
    SiteSet c;
    for (int mask = 0; mask < (1 << s); mask++) {
        Coord x(s);
        for (int i = 0; i < s; i++) {
            x[i] = (mask >> (s - 1 - i)) & 1;
        }
        c.insert(x);
    }
    return c;
}

std::vector<Quadrant> quadrants(int s) {
    if (s < 1) {
        throw InputError("spatial dimension must be positive");
    }
    SiteSet cell = super_cell(s);
    std::vector<Quadrant> out;
    for (auto &q : sign_vectors(s)) {
        out.push_back({q, cell.translated(q)});
    }
    return out;
}

std::vector<int> left_quadrants(int s, int axis) {
    std::vector<int> out;
    auto qs = quadrants(s);
    for (size_t k = 0; k < qs.size(); k++) {
        if (qs[k].sign[axis] == -1) {
            out.push_back(static_cast<int>(k));
        }
    }
    return out;
}

MargolusPartition margolus_partitions(const LatticeSpec &spec, const Coord &q) {
    if (!spec.all_even()) {
        throw GeometryError("Margolus partitioning needs even extents on every axis");
    }
    int s = spec.dim();
    if (static_cast<int>(q.size()) != s || l1_norm(q) != s) {
        throw InputError("quadrant sign vector must have entries +-1");
    }
    SiteSet cell = super_cell(s);
    Coord half(s);
    int blocks = 1;
    for (int i = 0; i < s; i++) {
        half[i] = spec.extents()[i] / 2;
        blocks *= half[i];
    }
    MargolusPartition out;
    for (int b = 0; b < blocks; b++) {
        Coord j(s);
        int rest = b;
        for (int i = s - 1; i >= 0; i--) {
            j[i] = rest % half[i];
            rest /= half[i];
        }
        Coord base = scaled(j, 2);
        std::vector<int> first, second;
        for (const auto &x : cell) {
            first.push_back(spec.index(base + x));
            second.push_back(spec.index(base + q + x));
        }
        out.first.push_back(first);
        out.second.push_back(second);
    }
    return out;
}

}  // namespace vnqca
