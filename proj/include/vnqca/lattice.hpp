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

#include <cstdint>
#include <string>
#include <vector>

namespace vnqca {

/// Integer lattice coordinate in Z^s. Components beyond the spatial
/// dimension are allowed as internal labels (several qubits per site).
using Coord = std::vector<int>;

Coord zero_coord(int s);
/// sign * e_axis in Z^s.
Coord unit_coord(int s, int axis, int sign = 1);
Coord operator+(const Coord &a, const Coord &b);
Coord operator-(const Coord &a, const Coord &b);
Coord operator-(const Coord &a);
Coord scaled(const Coord &a, int factor);
int l1_norm(const Coord &a);
std::string to_string(const Coord &a);

/// Finite periodic hypercubic lattice. Sites are flattened row-major (the
/// last axis varies fastest) and qubit k of any state on the lattice is the
/// site with flat index k.
class LatticeSpec {
   public:
    explicit LatticeSpec(std::vector<int> extents);
    static LatticeSpec cubic(int s, int extent);

    int dim() const {
        return static_cast<int>(extents_.size());
    }
    const std::vector<int> &extents() const {
        return extents_;
    }
    int site_count() const {
        return site_count_;
    }
    bool all_even() const;

    Coord wrap(const Coord &c) const;
    int index(const Coord &c) const;
    Coord coord(int index) const;

    bool operator==(const LatticeSpec &other) const = default;

   private:
    std::vector<int> extents_;
    int site_count_;
};

/// Ordered set of distinct coordinates. Insertion order is preserved and
/// duplicates are dropped.
class SiteSet {
   public:
    SiteSet() = default;
    explicit SiteSet(std::vector<Coord> sites);

    bool insert(const Coord &c);
    bool contains(const Coord &c) const;
    /// Position of c in insertion order, or -1.
    int index_of(const Coord &c) const;

    size_t size() const {
        return sites_.size();
    }
    bool empty() const {
        return sites_.empty();
    }
    const Coord &operator[](size_t k) const {
        return sites_[k];
    }
    const std::vector<Coord> &sites() const {
        return sites_;
    }
    auto begin() const {
        return sites_.begin();
    }
    auto end() const {
        return sites_.end();
    }

    SiteSet translated(const Coord &shift) const;
    /// Same elements regardless of order.
    bool same_elements(const SiteSet &other) const;

   private:
    std::vector<Coord> sites_;
};

/// {0} followed by +e_1, -e_1, +e_2, -e_2, ... This order is also the qubit
/// order of local rule matrices.
SiteSet von_neumann_neighborhood(int s);

/// Closed-form size of the radius-t von Neumann ball in Z^s.
std::int64_t cone_size_formula(int s, int t);

/// Sites reachable from the origin of Z^s in at most t neighborhood
/// expansions, ordered by distance and then lexicographically. The origin
/// is element 0.
SiteSet future_cone(int s, int t);

/// Periodic version. Throws GeometryError when some extent is below 2t+1,
/// since the cone would then overlap itself through the boundary.
SiteSet future_cone(const Coord &origin, int t, const LatticeSpec &spec);

/// The super-cell {x : x_i in {0,1}}.
SiteSet super_cell(int s);

struct Quadrant {
    Coord sign;  // entries in {-1,+1}
    SiteSet sites;
};

/// All 2^s quadrants c + q, sign vectors in lexicographic order with -1
/// before +1.
std::vector<Quadrant> quadrants(int s);

/// Positions (into quadrants(s)) of the quadrants with sign[axis] == -1.
std::vector<int> left_quadrants(int s, int axis);

struct MargolusPartition {
    std::vector<std::vector<int>> first;   // blocks c + 2j, flat site indices
    std::vector<std::vector<int>> second;  // blocks c + q + 2j
};

MargolusPartition margolus_partitions(const LatticeSpec &spec, const Coord &q);

}  // namespace vnqca
