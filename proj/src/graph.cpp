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

#include "mbtd/graph.hpp"

#include <algorithm>
#include <string>

#include "mbtd/error.hpp"

namespace mbtd {

Graph
Graph::from_edge_list(int n, std::span<const Edge> edges, std::string name)
{
    if (n < 0 || n > kMaxVertices) {
        throw InvalidArgument("graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
    }
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, VertexSet{});
    g.name_ = std::move(name);
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
            throw InvalidArgument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") out of range for " + std::to_string(n) + " vertices");
        }
        if (e.u == e.v) throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
        g.adj_[e.u].insert(e.v);
        g.adj_[e.v].insert(e.u);
    }
    g.validate();
    return g;
}

void
Graph::validate() const
{
    if (static_cast<int>(adj_.size()) != n_) throw InvalidArgument("adjacency size mismatch");
    const VertexSet all = vertices();
    for (Vertex v = 0; v < n_; v++) {
        if (adj_[v].contains(v)) throw InvalidArgument("self-loop at vertex " + std::to_string(v));
        if (!adj_[v].subset_of(all)) throw InvalidArgument("neighbour index out of range");
        for (Vertex w : adj_[v]) {
            if (!adj_[w].contains(v)) throw InvalidArgument("asymmetric adjacency");
        }
    }
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n_) {
        throw InvalidArgument("label count does not match order");
    }
}

void
Graph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= n_) {
        throw InvalidArgument("vertex " + std::to_string(v) + " out of range for " + std::to_string(n_) + " vertices");
    }
}

int
Graph::size() const
{
    int twice = 0;
    for (VertexSet s : adj_) twice += s.size();
    return twice / 2;
}

VertexSet
Graph::open_neighborhood(Vertex v) const
{
    check_vertex(v);
    return adj_[v];
}

int
Graph::min_degree() const
{
    int best = n_ == 0 ? 0 : kMaxVertices;
    for (VertexSet s : adj_) best = std::min(best, s.size());
    return best;
}

bool
Graph::adjacent(Vertex u, Vertex v) const
{
    check_vertex(u);
    check_vertex(v);
    return adj_[u].contains(v);
}

std::vector<Edge>
Graph::edges() const
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; u++) {
        for (Vertex v : adj_[u]) {
            if (u < v) out.push_back({u, v});
        }
    }
    return out;
}

Graph
Graph::named(std::string name) const
{
    Graph g = *this;
    g.name_ = std::move(name);
    return g;
}

std::string
Graph::label(Vertex v) const
{
    check_vertex(v);
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

Graph
Graph::with_labels(std::vector<std::string> labels) const
{
    Graph g = *this;
    g.labels_ = std::move(labels);
    g.validate();
    return g;
}

Graph
Graph::without_edge(Vertex u, Vertex v) const
{
    if (!adjacent(u, v)) {
        throw InvalidArgument("no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    Graph g = *this;
    g.adj_[u].erase(v);
    g.adj_[v].erase(u);
    return g;
}

Graph
Graph::induced(VertexSet keep, std::vector<Vertex>* original) const
{
    keep &= vertices();
    std::vector<Vertex> old = keep.to_vector();
    std::vector<int> index(n_, -1);
    for (std::size_t i = 0; i < old.size(); i++) index[old[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    std::vector<std::string> labels;
    for (Vertex u : old) {
        for (Vertex w : adj_[u] & keep) {
            if (u < w) es.push_back({index[u], index[w]});
        }
        if (!labels_.empty()) labels.push_back(labels_[u]);
    }
    Graph g = from_edge_list(static_cast<int>(old.size()), es, name_);
    g.labels_ = std::move(labels);
    if (original) *original = std::move(old);
    return g;
}

}
