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

#ifndef MBTD_GRAPH_HPP
#define MBTD_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mbtd/vertex_set.hpp"

namespace mbtd {

struct Edge
{
    Vertex u;
    Vertex v;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/**
 * Simple undirected graph on vertices 0..n-1 (n <= 64).
 *
 * Immutable once built: every constructor goes through a validator that checks
 * symmetry, loop-freeness and index range. Optional per-vertex labels carry the
 * coordinate scheme of named families (e.g. "(i,j)" for grids).
 */
class Graph
{
public:
    Graph() = default;

    /// Duplicate edges (in either orientation) collapse; self-loops and bad indices throw.
    static Graph from_edge_list(int n, std::span<const Edge> edges, std::string name = {});
    static Graph from_edge_list(int n, std::initializer_list<Edge> edges, std::string name = {})
    {
        return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(name));
    }

    int order() const { return n_; }
    int size() const;
    VertexSet vertices() const { return VertexSet::range(n_); }

    VertexSet open_neighborhood(Vertex v) const;
    VertexSet closed_neighborhood(Vertex v) const { return open_neighborhood(v).with(v); }
    int degree(Vertex v) const { return open_neighborhood(v).size(); }
    int min_degree() const;
    bool adjacent(Vertex u, Vertex v) const;

    /// All edges with u < v, sorted.
    std::vector<Edge> edges() const;

    const std::string& name() const { return name_; }
    Graph named(std::string name) const;

    bool has_labels() const { return !labels_.empty(); }
    /// Family coordinate label, or the decimal index when the graph carries none.
    std::string label(Vertex v) const;
    Graph with_labels(std::vector<std::string> labels) const;

    Graph without_edge(Vertex u, Vertex v) const;

    /// Subgraph induced by `keep`, reindexed in increasing order. `original` maps new -> old.
    Graph induced(VertexSet keep, std::vector<Vertex>* original = nullptr) const;

    /// Same vertex set and adjacency (names and labels ignored).
    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    void check_vertex(Vertex v) const;
    void validate() const;

    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::string name_;
    std::vector<std::string> labels_;
};

// Families. Vertices are numbered in natural order; the product constructions map
// (g,h) to g*|V(H)| + h.

Graph empty_graph(int n);
Graph complete(int n);
Graph path(int n);
/// Cycle 0-1-...-(n-1)-0.
Graph cycle(int n);
/// K_{a,b}: part A is 0..a-1, part B is a..a+b-1.
Graph complete_bipartite(int a, int b);
/// K_{1,k} with centre 0.
Graph star(int k);
/// P_m □ P_n, vertex (i,j) is i*n + j.
Graph grid(int m, int n);
/// P_rows □ C_m, vertex (i,j) is i*m + j.
Graph prism(int rows, int m);
Graph petersen();
Graph heawood();
/// Incidence graph of [n] against its k-subsets. Points are 0..n-1, then k-subsets in lexicographic order.
Graph gnk(int n, int k);

Graph cartesian_product(const Graph& g, const Graph& h);
Graph lexicographic_product(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

/**
 * G_u[H]: replace u by a copy of H whose every vertex is joined to N_G(u).
 * The vertices of G other than u keep their relative order and come first;
 * the copy of H follows.
 */
Graph blow_up(const Graph& g, Vertex u, const Graph& h);

/**
 * Glue g2 onto g1 along `iso` (pairs g1-vertex -> g2-vertex). The map must be
 * injective and the two induced subgraphs must agree on adjacency. Vertices of
 * g1 keep their indices; unmapped vertices of g2 follow in their original order.
 */
Graph amalgamation(const Graph& g1, const Graph& g2, std::span<const std::pair<Vertex, Vertex>> iso);

struct CactusWeights
{
    double k2 = 3;
    double c3 = 2;
    double c4 = 3;
    double c5 = 1;
    double c6 = 1;
};

/// Connected cactus on exactly n vertices grown from K1 by attaching K2 or C3..C6 blocks.
Graph random_cactus(int n, std::uint64_t seed, const CactusWeights& weights = {});

/// One representative of every isomorphism class of trees on n vertices (1 <= n <= 16).
std::vector<Graph> nonisomorphic_trees(int n);

// Structural queries.

std::vector<VertexSet> connected_components(const Graph& g);
/// Components of the subgraph induced by `within`.
std::vector<VertexSet> connected_components(const Graph& g, VertexSet within);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_tree(const Graph& g);
/// -1 when disconnected.
int diameter(const Graph& g);
/// 0 for acyclic graphs.
int girth(const Graph& g);

/// Brute-force permutation search; only for graphs of order <= 10.
bool isomorphic(const Graph& a, const Graph& b);

}

#endif
