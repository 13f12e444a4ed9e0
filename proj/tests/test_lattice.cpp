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

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "vnqca/errors.hpp"
#include "vnqca/lattice.hpp"

using namespace vnqca;

TEST(Lattice, FlattenRoundTrip) {
    LatticeSpec spec({4, 3, 2});
    EXPECT_EQ(spec.site_count(), 24);
    for (int k = 0; k < spec.site_count(); k++) {
        EXPECT_EQ(spec.index(spec.coord(k)), k);
    }
    // Row-major: the last axis varies fastest.
    EXPECT_EQ(spec.index({0, 0, 1}), 1);
    EXPECT_EQ(spec.index({0, 1, 0}), 2);
    EXPECT_EQ(spec.index({1, 0, 0}), 6);
    EXPECT_EQ(spec.wrap({-1, 4, 5}), (Coord{3, 1, 1}));
}

TEST(Lattice, RejectsBadExtents) {
    EXPECT_THROW(LatticeSpec(std::vector<int>{}), GeometryError);
    EXPECT_THROW(LatticeSpec(std::vector<int>{3, 0}), GeometryError);
}

TEST(Lattice, NeighborhoodOrder) {
    for (int s = 1; s <= 3; s++) {
        SiteSet n = von_neumann_neighborhood(s);
        ASSERT_EQ(n.size(), static_cast<size_t>(2 * s + 1));
        EXPECT_EQ(n[0], zero_coord(s));
        for (int i = 0; i < s; i++) {
            EXPECT_EQ(n[1 + 2 * i], unit_coord(s, i, 1));
            EXPECT_EQ(n[2 + 2 * i], unit_coord(s, i, -1));
        }
    }
}

TEST(Lattice, ConeMatchesBreadthFirstBall) {
    for (int s = 1; s <= 3; s++) {
        for (int t = 0; t <= 4; t++) {
            SiteSet cone = future_cone(s, t);
            EXPECT_EQ(cone.size(), oracle::cone_size(s, t)) << s << "," << t;
            EXPECT_EQ(static_cast<size_t>(cone_size_formula(s, t)), cone.size());
            EXPECT_EQ(cone[0], zero_coord(s));
            for (const Coord &c : cone) {
                EXPECT_LE(l1_norm(c), t);
            }
        }
    }
    EXPECT_EQ(cone_size_formula(2, 0), 1);
    EXPECT_EQ(cone_size_formula(2, 1), 5);
    EXPECT_EQ(cone_size_formula(2, 2), 13);
    EXPECT_EQ(cone_size_formula(3, 2), 25);
}

TEST(Lattice, ConeMonotone) {
    for (int t = 0; t < 4; t++) {
        SiteSet a = future_cone(2, t), b = future_cone(2, t + 1);
        for (const Coord &c : a) {
            EXPECT_TRUE(b.contains(c));
        }
    }
}

TEST(Lattice, PeriodicCone) {
    LatticeSpec spec({6, 6});
    SiteSet cone = future_cone({5, 5}, 2, spec);
    EXPECT_EQ(cone.size(), 13u);
    EXPECT_TRUE(cone.contains({1, 5}));  // wrapped +2 e_1
    EXPECT_THROW(future_cone({0, 0}, 3, spec), GeometryError);
}

TEST(Lattice, Quadrants) {
    auto q1 = quadrants(1);
    ASSERT_EQ(q1.size(), 2u);
    EXPECT_TRUE(q1[0].sites.same_elements(SiteSet({{-1}, {0}})));
    EXPECT_TRUE(q1[1].sites.same_elements(SiteSet({{1}, {2}})));

    for (int s = 1; s <= 3; s++) {
        auto qs = quadrants(s);
        ASSERT_EQ(qs.size(), static_cast<size_t>(1 << s));
        std::set<Coord> all;
        for (const auto &q : qs) {
            EXPECT_EQ(q.sites.size(), static_cast<size_t>(1 << s));
            for (const Coord &c : q.sites) {
                EXPECT_TRUE(all.insert(c).second) << "quadrants overlap";
                for (int i = 0; i < s; i++) {
                    EXPECT_GE(c[i], -1);
                    EXPECT_LE(c[i], 2);
                }
            }
        }
        EXPECT_EQ(all.size(), static_cast<size_t>(1) << (2 * s));
        for (int i = 0; i < s; i++) {
            auto left = left_quadrants(s, i);
            EXPECT_EQ(left.size(), static_cast<size_t>(1 << (s - 1)));
            for (int k : left) {
                EXPECT_EQ(qs[k].sign[i], -1);
            }
        }
    }
}

TEST(Lattice, MargolusPartitions1D) {
    LatticeSpec spec({6});
    auto parts = margolus_partitions(spec, {1});
    auto sorted = [](std::vector<std::vector<int>> blocks) {
        for (auto &b : blocks) {
            std::sort(b.begin(), b.end());
        }
        std::sort(blocks.begin(), blocks.end());
        return blocks;
    };
    EXPECT_EQ(sorted(parts.first), (std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4, 5}}));
    EXPECT_EQ(sorted(parts.second), (std::vector<std::vector<int>>{{0, 5}, {1, 2}, {3, 4}}));
}

TEST(Lattice, MargolusCoverage) {
    LatticeSpec spec({4, 4});
    for (Coord q : {Coord{1, 1}, Coord{-1, 1}, Coord{1, -1}, Coord{-1, -1}}) {
        auto parts = margolus_partitions(spec, q);
        for (const auto *blocks : {&parts.first, &parts.second}) {
            EXPECT_EQ(blocks->size(), 4u);
            std::set<int> seen;
            for (const auto &b : *blocks) {
                EXPECT_EQ(b.size(), 4u);
                for (int k : b) {
                    EXPECT_TRUE(seen.insert(k).second);
                }
            }
            EXPECT_EQ(seen.size(), 16u);
        }
    }
    EXPECT_THROW(margolus_partitions(LatticeSpec({3, 4}), {1, 1}), GeometryError);
}
