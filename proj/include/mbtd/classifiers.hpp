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

#ifndef MBTD_CLASSIFIERS_HPP
#define MBTD_CLASSIFIERS_HPP

#include <optional>
#include <string>
#include <vector>

#include "mbtd/graph.hpp"
#include "mbtd/solver.hpp"

namespace mbtd {

/// Per-game winners where known; `label` is set iff both are.
struct PartialOutcome
{
    std::optional<Player> d_game;
    std::optional<Player> s_game;
    std::optional<ClassLabel> label;

    /// Throws InconsistentOutcome for (Staller, Dominator).
    static PartialOutcome make(std::optional<Player> d_game, std::optional<Player> s_game);
    static PartialOutcome of(ClassLabel c);

    friend bool operator==(const PartialOutcome&, const PartialOutcome&) = default;
};

ClassLabel combine_union(ClassLabel a, ClassLabel b);

struct BlockDecomposition
{
    /// Maximal 2-connected pieces and bridges; a lone vertex is its own block.
    std::vector<VertexSet> blocks;
    VertexSet cut_vertices;
    /// block_cuts[i] = cut vertices lying in blocks[i] (block-cut tree adjacency).
    std::vector<VertexSet> block_cuts;

    bool is_end_block(std::size_t i) const { return block_cuts[i].size() <= 1; }
};

/// Throws InvalidArgument on a disconnected or empty graph.
BlockDecomposition block_decomposition(const Graph& g);
/// Same, restricted to the subgraph induced by `within` (which must be connected).
BlockDecomposition block_decomposition(const Graph& g, VertexSet within);

bool is_cactus(const Graph& g);
bool is_star_cactus(const Graph& g);
bool is_N_star_cactus(const Graph& g);

ClassLabel classify_cycle(int n);
ClassLabel classify_path(int n);
ClassLabel classify_grid(int m, int n);
PartialOutcome classify_prism_cycle(int rows, int m);
ClassLabel classify_tree(const Graph& t);

struct CactusClassification
{
    ClassLabel label = ClassLabel::S;
    /// End-block 4-cycles in removal order (vertex sets of the input graph).
    std::vector<VertexSet> removed;
    /// What is left after the removals: empty for D, an N-star cactus for N.
    VertexSet remainder;
};

CactusClassification classify_cactus_with_witness(const Graph& g);
ClassLabel classify_cactus(const Graph& g);
/// Always strips the lowest end-block C4 first instead of searching removal orders.
ClassLabel classify_cactus_greedy(const Graph& g);

}

#endif
