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

#ifndef MBTD_STRATEGY_HPP
#define MBTD_STRATEGY_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mbtd/graph.hpp"
#include "mbtd/solver.hpp"

namespace mbtd {

/// What a Dominator move rule gets to see.
struct StrategyView
{
    VertexSet dom;
    VertexSet sta;
    VertexSet free;
    /// Staller's most recent move; empty when Dominator opens the game.
    std::optional<Vertex> last_staller_move;
};

/// Deterministic Dominator policy. Must return an unclaimed vertex.
using DominatorRule = std::function<Vertex(const StrategyView&)>;

struct MoveRecord
{
    Player player;
    Vertex vertex;
    friend bool operator==(const MoveRecord&, const MoveRecord&) = default;
};

struct VerificationReport
{
    bool verified = false;
    /// Move sequence ending with Staller isolating a vertex; empty when verified.
    std::vector<MoveRecord> counterexample;
    std::uint64_t leaves = 0;
    std::uint64_t positions = 0;
};

/**
 * Plays `rule` for Dominator against every Staller reply sequence on the total
 * domination board of `g`. Verified iff Dominator ends every line holding a total
 * dominating set. Throws IllegalMove if the rule picks a claimed or out-of-range
 * vertex and CapExceeded above `max_vertices`.
 */
VerificationReport verify_strategy(const Graph& g, const DominatorRule& rule, Player first,
                                   int max_vertices = solver_vertex_cap());

/// Always the lowest-index unclaimed vertex.
DominatorRule lowest_index_strategy();

/**
 * Pairing strategy on a partition of V(g) into 4-sets that each induce C4: answer
 * Staller inside her 4-set with the vertex opposite to hers. Throws InvalidArgument
 * unless the classes are disjoint, cover V(g) and induce 4-cycles.
 */
DominatorRule c4_pairing_strategy(const Graph& g, const std::vector<std::array<Vertex, 4>>& partition);

/**
 * Ordering of the (4l+2) vertices of P2 □ C_{2l+1} (vertex (i,j) = i*(2l+1)+j) as a
 * cycle in which every vertex's three neighbours appear consecutively.
 */
std::vector<Vertex> prism_imaginary_cycle(int ell);

/// Answer Staller's v_i with v_{i+1}, else v_{i-1}, else the lowest free vertex.
DominatorRule prism_cycle_strategy(int ell);

}

#endif
