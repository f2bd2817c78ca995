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

#ifndef MBTD_HYPERGRAPH_HPP
#define MBTD_HYPERGRAPH_HPP

#include <string_view>
#include <vector>

#include "mbtd/graph.hpp"
#include "mbtd/vertex_set.hpp"

namespace mbtd {

/**
 * Maker-Breaker board: a vertex universe 0..n-1 and a family of winning sets.
 * Hyperedges are deduplicated on construction (order of first appearance is kept).
 * An empty hyperedge is legal and means Maker has already won.
 */
class Hypergraph
{
public:
    Hypergraph() = default;
    Hypergraph(int n, std::vector<VertexSet> edges);

    int order() const { return n_; }
    VertexSet universe() const { return VertexSet::range(n_); }
    const std::vector<VertexSet>& edges() const { return edges_; }
    bool has_empty_edge() const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    int n_ = 0;
    std::vector<VertexSet> edges_;
};

/// Role binding of the generic game to the graph game.
struct GameConvention
{
    static constexpr std::string_view maker_name = "Staller";
    static constexpr std::string_view breaker_name = "Dominator";
};

/// One hyperedge N(v) per vertex: the total domination board.
Hypergraph open_neighborhood_hypergraph(const Graph& g);
/// One hyperedge N[v] per vertex: the (plain) domination board.
Hypergraph closed_neighborhood_hypergraph(const Graph& g);

/**
 * Erdős–Selfridge test: true iff sum over edges of 2^-|e| < 1/2, which guarantees a
 * Breaker win when Maker moves first. False is inconclusive. Exact integer arithmetic.
 * Throws InvalidArgument if the board has an empty edge.
 */
bool erdos_selfridge_breaker_check(const Hypergraph& h);

}

#endif
