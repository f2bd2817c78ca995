/*
 * Copyright 2026 The mbtd Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "mbtd/catalog.hpp"
#include "mbtd/classifiers.hpp"
#include "mbtd/error.hpp"
#include "oracles.hpp"

using namespace mbtd;

namespace {

Graph
relabel(const Graph& g, const std::vector<Vertex>& perm)
{
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
    return Graph::from_edge_list(g.order(), edges);
}

Graph
friendship(int k)
{
    std::vector<Edge> edges;
    for (int i = 0; i < k; i++) {
        edges.push_back({0, 2 * i + 1});
        edges.push_back({0, 2 * i + 2});
        edges.push_back({2 * i + 1, 2 * i + 2});
    }
    return Graph::from_edge_list(2 * k + 1, edges);
}

int
rank(ClassLabel c)
{
    return c == ClassLabel::D ? 2 : c == ClassLabel::N ? 1 : 0;
}

// Replays a cactus witness: each removal must be an end-block 4-cycle of what is left.
void
check_witness(const Graph& g, const CactusClassification& w)
{
    VertexSet left = g.vertices();
    for (VertexSet b : w.removed) {
        REQUIRE(b.subset_of(left));
        REQUIRE(b.size() == 4);
        const Graph c = g.induced(b);
        CHECK(isomorphic(c, cycle(4)));
        VertexSet comp;
        for (VertexSet k : connected_components(g, left)) {
            if (k.intersects(b)) comp = k;
        }
        const BlockDecomposition bd = block_decomposition(g, comp);
        const auto it = std::find(bd.blocks.begin(), bd.blocks.end(), b);
        REQUIRE(it != bd.blocks.end());
        CHECK(bd.is_end_block(static_cast<std::size_t>(it - bd.blocks.begin())));
        left -= b;
    }
    CHECK(left == w.remainder);
    if (w.label == ClassLabel::D) CHECK(w.remainder.empty());
    if (w.label == ClassLabel::N) {
        REQUIRE_FALSE(w.remainder.empty());
        CHECK(is_N_star_cactus(g.induced(w.remainder)));
    }
}

}

TEST_SUITE("classifiers")
{
    TEST_CASE("partial outcomes")
    {
        const PartialOutcome full = PartialOutcome::make(Player::Dominator, Player::Staller);
        CHECK(full.label == ClassLabel::N);
        const PartialOutcome half = PartialOutcome::make(std::nullopt, Player::Staller);
        CHECK_FALSE(half.label.has_value());
        CHECK(half.s_game == Player::Staller);
        CHECK_THROWS_AS(PartialOutcome::make(Player::Staller, Player::Dominator), InconsistentOutcome);
        CHECK(PartialOutcome::of(ClassLabel::D) == PartialOutcome::make(Player::Dominator, Player::Dominator));
        CHECK(PartialOutcome::of(ClassLabel::S).d_game == Player::Staller);
    }

    TEST_CASE("union table")
    {
        using enum ClassLabel;
        CHECK(combine_union(D, D) == D);
        CHECK(combine_union(D, N) == N);
        CHECK(combine_union(N, D) == N);
        CHECK(combine_union(D, S) == S);
        CHECK(combine_union(N, N) == S);
        CHECK(combine_union(N, S) == S);
        CHECK(combine_union(S, S) == S);
    }

    TEST_CASE("union table against the solver")
    {
        const std::vector<Graph> parts = {cycle(3), cycle(4), path(2), path(3), cycle(5), star(3)};
        for (const Graph& a : parts) {
            for (const Graph& b : parts) {
                const Graph u = disjoint_union(a, b);
                if (u.order() > 12) continue;
                CHECK(outcome_class(u) == combine_union(outcome_class(a), outcome_class(b)));
            }
        }
    }

    TEST_CASE("block decomposition examples")
    {
        const BlockDecomposition k1 = block_decomposition(empty_graph(1));
        CHECK(k1.blocks.size() == 1);
        CHECK(k1.cut_vertices.empty());

        const BlockDecomposition p4 = block_decomposition(path(4));
        CHECK(p4.blocks.size() == 3);
        CHECK(p4.cut_vertices == VertexSet{1, 2});

        const BlockDecomposition c5 = block_decomposition(cycle(5));
        CHECK(c5.blocks.size() == 1);
        CHECK(c5.blocks[0] == VertexSet::range(5));

        // bowtie: two triangles sharing vertex 0
        const BlockDecomposition bow = block_decomposition(friendship(2));
        CHECK(bow.blocks.size() == 2);
        CHECK(bow.cut_vertices == VertexSet{0});
        for (std::size_t i = 0; i < 2; i++) CHECK(bow.is_end_block(i));

        CHECK_THROWS_AS(block_decomposition(empty_graph(2)), InvalidArgument);
        CHECK_THROWS_AS(block_decomposition(empty_graph(0)), InvalidArgument);
        CHECK_THROWS_AS(block_decomposition(path(3), VertexSet{0, 2}), InvalidArgument);
        CHECK_THROWS_AS(block_decomposition(path(3), VertexSet{0, 5}), InvalidArgument);
    }

    TEST_CASE("block decomposition invariants")
    {
        for (std::uint64_t seed = 0; seed < 60; seed++) {
            const Graph g = seed % 2 ? random_cactus(5 + static_cast<int>(seed % 20), seed)
                                     : oracle::random_graph(4 + static_cast<int>(seed % 9), 0.4, seed);
            if (!is_connected(g)) continue;
            const BlockDecomposition bd = block_decomposition(g);
            // every edge in exactly one block
            for (const Edge& e : g.edges()) {
                int holders = 0;
                for (VertexSet b : bd.blocks) holders += b.contains(e.u) && b.contains(e.v);
                CHECK(holders == 1);
            }
            // cut vertices are exactly those in two or more blocks; removing one disconnects g
            VertexSet multi;
            for (Vertex v : g.vertices()) {
                int count = 0;
                for (VertexSet b : bd.blocks) count += b.contains(v);
                if (count > 1) multi.insert(v);
                if (g.order() > 1) {
                    CHECK((connected_components(g, g.vertices().without(v)).size() > 1) == (count > 1));
                }
            }
            CHECK(multi == bd.cut_vertices);
            for (std::size_t i = 0; i < bd.blocks.size(); i++) {
                CHECK(bd.block_cuts[i] == (bd.blocks[i] & bd.cut_vertices));
                // blocks are 2-connected or a bridge
                const VertexSet b = bd.blocks[i];
                if (b.size() > 2) {
                    for (Vertex v : b) CHECK(connected_components(g, b.without(v)).size() == 1);
                }
            }
            // block-cut tree: blocks + cuts - 1 edges
            int incidences = 0;
            for (VertexSet c : bd.block_cuts) incidences += c.size();
            CHECK(incidences == static_cast<int>(bd.blocks.size()) + bd.cut_vertices.size() - 1);
        }
    }

    TEST_CASE("cactus recognition")
    {
        CHECK(is_cactus(cycle(7)));
        CHECK(is_cactus(path(5)));
        CHECK(is_cactus(friendship(3)));
        CHECK(is_cactus(cactus_exemplar_n()));
        CHECK_FALSE(is_cactus(complete(4)));
        CHECK_FALSE(is_cactus(grid(2, 3)));
        CHECK_FALSE(is_cactus(complete_bipartite(2, 3)));
        for (std::uint64_t seed = 0; seed < 20; seed++) CHECK(is_cactus(random_cactus(12, seed)));
    }

    TEST_CASE("star cacti")
    {
        CHECK(is_star_cactus(star(4)));
        CHECK(is_star_cactus(friendship(3)));
        CHECK(is_star_cactus(cycle(6)));
        CHECK_FALSE(is_star_cactus(path(4)));
        CHECK_THROWS_AS(is_star_cactus(complete(4)), InvalidArgument);

        CHECK(is_N_star_cactus(cycle(3)));
        CHECK(is_N_star_cactus(path(3)));
        CHECK(is_N_star_cactus(star(5)));
        CHECK(is_N_star_cactus(friendship(2)));
        CHECK_FALSE(is_N_star_cactus(path(2)));
        CHECK_FALSE(is_N_star_cactus(cycle(4)));
        CHECK_FALSE(is_N_star_cactus(cycle(5)));
        CHECK_FALSE(is_N_star_cactus(path(4)));
        // C5 plus a pendant edge at one cycle vertex: two blocks, one of them a K2
        const Graph c5_tail = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}});
        CHECK_FALSE(is_N_star_cactus(c5_tail));
        // C6 with a pendant edge has a long cycle
        const Graph c6_tail = Graph::from_edge_list(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}});
        CHECK_FALSE(is_N_star_cactus(c6_tail));
        CHECK_THROWS_AS(is_N_star_cactus(grid(3, 3)), InvalidArgument);
    }

    TEST_CASE("N-star cacti are class N")
    {
        std::vector<Graph> stars = {cycle(3), path(3), star(3), friendship(2), friendship(3)};
        // C3, C4 and C5 sharing one vertex
        stars.push_back(Graph::from_edge_list(10, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}, {5, 0},
                                                   {0, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 0}}));
        for (const Graph& g : stars) {
            REQUIRE(is_N_star_cactus(g));
            CHECK(outcome_class(g) == ClassLabel::N);
        }
    }

    TEST_CASE("family classifiers")
    {
        CHECK(classify_cycle(3) == ClassLabel::N);
        CHECK(classify_cycle(4) == ClassLabel::D);
        CHECK(classify_cycle(9) == ClassLabel::S);
        CHECK_THROWS_AS(classify_cycle(2), InvalidArgument);
        CHECK(classify_path(3) == ClassLabel::N);
        CHECK(classify_path(2) == ClassLabel::S);
        CHECK(classify_path(1) == ClassLabel::S);
        CHECK_THROWS_AS(classify_path(0), InvalidArgument);
        CHECK(classify_grid(2, 4) == ClassLabel::D);
        CHECK(classify_grid(3, 4) == ClassLabel::S);
        CHECK(classify_grid(1, 3) == ClassLabel::N);
        CHECK_THROWS_AS(classify_grid(0, 3), InvalidArgument);
        CHECK(classify_prism_cycle(2, 5).label == ClassLabel::D);
        CHECK(classify_prism_cycle(5, 4).label == ClassLabel::D);
        const PartialOutcome p3 = classify_prism_cycle(3, 7);
        CHECK_FALSE(p3.d_game.has_value());
        CHECK(p3.s_game == Player::Staller);
        CHECK_FALSE(classify_prism_cycle(5, 5).s_game.has_value());
        CHECK(classify_tree(star(4)) == ClassLabel::N);
        CHECK(classify_tree(path(6)) == ClassLabel::S);
        CHECK(classify_tree(empty_graph(1)) == ClassLabel::S);
        CHECK_THROWS_AS(classify_tree(cycle(4)), InvalidArgument);
    }

    TEST_CASE("family classifiers against the solver")
    {
        for (int n = 3; n <= 14; n++) CHECK(classify_cycle(n) == outcome_class(cycle(n)));
        for (int n = 1; n <= 14; n++) CHECK(classify_path(n) == outcome_class(path(n)));
        for (int m = 1; m <= 4; m++) {
            for (int n = m; m * n <= 16; n++) CHECK(classify_grid(m, n) == outcome_class(grid(m, n)));
        }
        for (int rows = 2; rows <= 4; rows++) {
            for (int m = 3; rows * m <= 18; m++) {
                const PartialOutcome p = classify_prism_cycle(rows, m);
                const Outcome o = solve_outcome(prism(rows, m));
                if (p.d_game) CHECK(*p.d_game == o.d_game);
                if (p.s_game) CHECK(*p.s_game == o.s_game);
            }
        }
        for (int n = 1; n <= 10; n++) {
            for (const Graph& t : nonisomorphic_trees(n)) CHECK(classify_tree(t) == outcome_class(t));
        }
    }

    TEST_CASE("cactus exemplars")
    {
        CHECK(classify_cactus(cactus_exemplar_d()) == ClassLabel::D);
        CHECK(classify_cactus(cactus_exemplar_n()) == ClassLabel::N);
        CHECK(classify_cactus(cactus_exemplar_s()) == ClassLabel::S);
        for (const Graph& g : {cactus_exemplar_d(), cactus_exemplar_n(), cactus_exemplar_s()}) {
            check_witness(g, classify_cactus_with_witness(g));
        }
        CHECK_THROWS_AS(classify_cactus(complete(4)), InvalidArgument);
    }

    TEST_CASE("cactus classifier against the solver and the cover oracle")
    {
        for (std::uint64_t seed = 0; seed < 80; seed++) {
            const Graph g = random_cactus(4 + static_cast<int>(seed % 13), seed * 7 + 3);
            const CactusClassification w = classify_cactus_with_witness(g);
            check_witness(g, w);
            CHECK(w.label == outcome_class(g));
            // greedy only explores one removal order, so it can only do worse
            CHECK(rank(classify_cactus_greedy(g)) <= rank(w.label));
            // a cactus is D exactly when it splits into 4-cycles
            CHECK((w.label == ClassLabel::D) == oracle::c4_partition_exists(g));
        }
    }

    TEST_CASE("removal order matters")
    {
        // pendant vertex 1 and a 4-cycle at 0, plus a bridge 0-2 to a second 4-cycle
        const Graph g = Graph::from_edge_list(
            9, {{0, 1}, {0, 2}, {0, 6}, {0, 8}, {2, 3}, {2, 5}, {3, 4}, {4, 5}, {6, 7}, {7, 8}});
        const CactusClassification w = classify_cactus_with_witness(g);
        CHECK(w.label == ClassLabel::N);
        CHECK(w.removed == std::vector<VertexSet>{VertexSet{2, 3, 4, 5}});
        check_witness(g, w);
        CHECK(outcome_class(g) == ClassLabel::N);
        // stripping the lowest end-block first strands vertex 1
        CHECK(classify_cactus_greedy(g) == ClassLabel::S);
    }

    TEST_CASE("cactus classification ignores vertex names")
    {
        std::mt19937_64 rng(17);
        for (std::uint64_t seed = 0; seed < 30; seed++) {
            const Graph g = random_cactus(10 + static_cast<int>(seed % 15), seed + 500);
            std::vector<Vertex> perm(g.order());
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(classify_cactus(relabel(g, perm)) == classify_cactus(g));
        }
    }

    TEST_CASE("cactus classifier examples")
    {
        // two 4-cycles joined by a bridge
        const Graph bridged = Graph::from_edge_list(
            8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {0, 4}});
        CHECK(classify_cactus(bridged) == ClassLabel::D);
        CHECK(classify_cactus(path(3)) == ClassLabel::N);
        CHECK(classify_cactus(empty_graph(1)) == ClassLabel::S);
        CHECK(classify_cactus(path(2)) == ClassLabel::S);
        CHECK(classify_cactus(cycle(4)) == ClassLabel::D);
        // two 5-cycles and a pendant edge at a shared vertex
        const Graph c5c5k2 = Graph::from_edge_list(
            10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 0}, {0, 9}});
        CHECK(is_star_cactus(c5c5k2));
        CHECK_FALSE(is_N_star_cactus(c5c5k2));
        CHECK(classify_cactus(c5c5k2) == outcome_class(c5c5k2));
        // a 4-cycle hanging off a triangle
        const Graph hang = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 2}});
        CHECK(is_cactus(hang));
        CHECK(classify_cactus(hang) == outcome_class(hang));
        CHECK_THROWS_AS(classify_cactus(disjoint_union(cycle(4), cycle(4))), InvalidArgument);
        CHECK_THROWS_AS(classify_cactus_greedy(disjoint_union(cycle(3), path(2))), InvalidArgument);
    }

    TEST_CASE("a 4-cycle partition always lets Dominator win")
    {
        for (const auto& e : catalog()) {
            if (e.graph.order() > 16 || e.graph.order() % 4 != 0) continue;
            if (oracle::c4_partition_exists(e.graph)) CHECK(outcome_class(e.graph) == ClassLabel::D);
        }
    }
}
