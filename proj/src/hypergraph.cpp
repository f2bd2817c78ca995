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

#include "mbtd/hypergraph.hpp"

#include <algorithm>
#include <unordered_set>

#include "mbtd/error.hpp"

namespace mbtd {

Hypergraph::Hypergraph(int n, std::vector<VertexSet> edges) : n_(n)
{
    if (n < 0 || n > kMaxVertices) throw InvalidArgument("hypergraph order out of range");
    std::unordered_set<VertexSet> seen;
    for (VertexSet e : edges) {
        if (!e.subset_of(universe())) throw InvalidArgument("hyperedge outside the vertex universe");
        if (seen.insert(e).second) edges_.push_back(e);
    }
}

bool
Hypergraph::has_empty_edge() const
{
    return std::any_of(edges_.begin(), edges_.end(), [](VertexSet e) { return e.empty(); });
}

Hypergraph
open_neighborhood_hypergraph(const Graph& g)
{
    std::vector<VertexSet> es;
    for (Vertex v = 0; v < g.order(); v++) es.push_back(g.open_neighborhood(v));
    return Hypergraph(g.order(), std::move(es));
}

Hypergraph
closed_neighborhood_hypergraph(const Graph& g)
{
    std::vector<VertexSet> es;
    for (Vertex v = 0; v < g.order(); v++) es.push_back(g.closed_neighborhood(v));
    return Hypergraph(g.order(), std::move(es));
}

bool
erdos_selfridge_breaker_check(const Hypergraph& h)
{
    if (h.has_empty_edge()) throw InvalidArgument("empty hyperedge: Maker has already won");
    // scale by 2^64: an edge of size s contributes 2^(64-s); the threshold 1/2 becomes 2^63
    unsigned __int128 sum = 0;
    for (VertexSet e : h.edges()) sum += static_cast<unsigned __int128>(1) << (64 - e.size());
    return sum < (static_cast<unsigned __int128>(1) << 63);
}

}
