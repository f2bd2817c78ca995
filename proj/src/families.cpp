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
#include <random>
#include <string>

#include "mbtd/error.hpp"
#include "mbtd/graph.hpp"

namespace mbtd {

namespace {

void
require(bool ok, const std::string& what)
{
    if (!ok) throw InvalidArgument(what);
}

std::string
pair_label(const std::string& a, const std::string& b)
{
    return "(" + a + "," + b + ")";
}

std::vector<std::string>
all_labels(const Graph& g)
{
    std::vector<std::string> out;
    for (Vertex v = 0; v < g.order(); v++) out.push_back(g.label(v));
    return out;
}

}

Graph
empty_graph(int n)
{
    require(n >= 0, "negative order");
    return Graph::from_edge_list(n, {}, n == 0 ? "empty" : std::to_string(n) + "K1");
}

Graph
complete(int n)
{
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<Edge> es;
    for (Vertex u = 0; u < n; u++) {
        for (Vertex v = u + 1; v < n; v++) es.push_back({u, v});
    }
    return Graph::from_edge_list(n, es, "K" + std::to_string(n));
}

Graph
path(int n)
{
    require(n >= 1, "path needs n >= 1");
    std::vector<Edge> es;
    for (Vertex v = 0; v + 1 < n; v++) es.push_back({v, v + 1});
    return Graph::from_edge_list(n, es, "P" + std::to_string(n));
}

Graph
cycle(int n)
{
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> es;
    for (Vertex v = 0; v < n; v++) es.push_back({v, (v + 1) % n});
    return Graph::from_edge_list(n, es, "C" + std::to_string(n));
}

Graph
complete_bipartite(int a, int b)
{
    require(a >= 1 && b >= 1, "complete bipartite graph needs a, b >= 1");
    std::vector<Edge> es;
    for (Vertex u = 0; u < a; u++) {
        for (Vertex v = a; v < a + b; v++) es.push_back({u, v});
    }
    return Graph::from_edge_list(a + b, es, "K" + std::to_string(a) + "," + std::to_string(b));
}

Graph
star(int k)
{
    require(k >= 1, "star needs k >= 1");
    return complete_bipartite(1, k).named("K1," + std::to_string(k));
}

Graph
grid(int m, int n)
{
    require(m >= 1 && n >= 1, "grid needs m, n >= 1");
    return cartesian_product(path(m), path(n)).named("P" + std::to_string(m) + "xP" + std::to_string(n));
}

Graph
prism(int rows, int m)
{
    require(rows >= 1, "prism needs rows >= 1");
    return cartesian_product(path(rows), cycle(m)).named("P" + std::to_string(rows) + "xC" + std::to_string(m));
}

Graph
petersen()
{
    std::vector<Edge> es;
    for (Vertex i = 0; i < 5; i++) {
        es.push_back({i, (i + 1) % 5});         // outer C5
        es.push_back({5 + i, 5 + (i + 2) % 5}); // inner pentagram
        es.push_back({i, 5 + i});               // spokes
    }
    return Graph::from_edge_list(10, es, "petersen");
}

Graph
heawood()
{
    // LCF notation [5,-5]^7
    std::vector<Edge> es;
    for (Vertex i = 0; i < 14; i++) {
        es.push_back({i, (i + 1) % 14});
        if (i % 2 == 0) es.push_back({i, (i + 5) % 14});
    }
    return Graph::from_edge_list(14, es, "heawood");
}

Graph
gnk(int n, int k)
{
    require(k >= 1, "gnk needs k >= 1");
    require(n >= k, "gnk needs n >= k");
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == k) {
            subsets.push_back(cur);
            return;
        }
        for (int i = next; i < n; i++) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
            if (n + static_cast<int>(subsets.size()) > kMaxVertices) return;
        }
    };
    rec(rec, 0);
    const int order = n + static_cast<int>(subsets.size());
    if (order > kMaxVertices) {
        throw InvalidArgument("gnk(" + std::to_string(n) + "," + std::to_string(k) + ") exceeds " +
                              std::to_string(kMaxVertices) + " vertices");
    }
    std::vector<Edge> es;
    std::vector<std::string> labels;
    for (int i = 0; i < n; i++) labels.push_back(std::to_string(i + 1));
    for (std::size_t s = 0; s < subsets.size(); s++) {
        std::string lab = "{";
        for (int i : subsets[s]) {
            es.push_back({i, n + static_cast<int>(s)});
            lab += (lab.size() > 1 ? "," : "") + std::to_string(i + 1);
        }
        labels.push_back(lab + "}");
    }
    return Graph::from_edge_list(order, es, "G" + std::to_string(n) + "," + std::to_string(k)).with_labels(labels);
}

Graph
cartesian_product(const Graph& g, const Graph& h)
{
    require(g.order() >= 1 && h.order() >= 1, "cartesian product of an empty graph");
    const int m = h.order();
    require(g.order() * m <= kMaxVertices, "product exceeds vertex limit");
    std::vector<Edge> es;
    std::vector<std::string> labels;
    for (Vertex a = 0; a < g.order(); a++) {
        for (Vertex b = 0; b < m; b++) {
            labels.push_back(pair_label(g.label(a), h.label(b)));
            for (Vertex b2 : h.open_neighborhood(b)) {
                if (b < b2) es.push_back({a * m + b, a * m + b2});
            }
            for (Vertex a2 : g.open_neighborhood(a)) {
                if (a < a2) es.push_back({a * m + b, a2 * m + b});
            }
        }
    }
    return Graph::from_edge_list(g.order() * m, es, g.name() + "x" + h.name()).with_labels(labels);
}

Graph
lexicographic_product(const Graph& g, const Graph& h)
{
    require(g.order() >= 1 && h.order() >= 1, "lexicographic product of an empty graph");
    const int m = h.order();
    require(g.order() * m <= kMaxVertices, "product exceeds vertex limit");
    std::vector<Edge> es;
    std::vector<std::string> labels;
    for (Vertex a = 0; a < g.order(); a++) {
        for (Vertex b = 0; b < m; b++) {
            labels.push_back(pair_label(g.label(a), h.label(b)));
            for (Vertex b2 : h.open_neighborhood(b)) {
                if (b < b2) es.push_back({a * m + b, a * m + b2});
            }
            for (Vertex a2 : g.open_neighborhood(a)) {
                if (a >= a2) continue;
                for (Vertex b2 = 0; b2 < m; b2++) es.push_back({a * m + b, a2 * m + b2});
            }
        }
    }
    return Graph::from_edge_list(g.order() * m, es, g.name() + "[" + h.name() + "]").with_labels(labels);
}

Graph
disjoint_union(const Graph& g, const Graph& h)
{
    const int off = g.order();
    require(off + h.order() <= kMaxVertices, "union exceeds vertex limit");
    std::vector<Edge> es = g.edges();
    for (Edge e : h.edges()) es.push_back({e.u + off, e.v + off});
    std::string name = g.order() == 0 ? h.name() : h.order() == 0 ? g.name() : g.name() + "+" + h.name();
    Graph out = Graph::from_edge_list(off + h.order(), es, name);
    if (g.has_labels() || h.has_labels()) {
        std::vector<std::string> labels = all_labels(g);
        for (Vertex v = 0; v < h.order(); v++) labels.push_back(std::to_string(off + v));
        if (h.has_labels()) {
            for (Vertex v = 0; v < h.order(); v++) labels[off + v] = h.label(v) + "'";
        }
        out = out.with_labels(std::move(labels));
    }
    return out;
}

Graph
blow_up(const Graph& g, Vertex u, const Graph& h)
{
    if (u < 0 || u >= g.order()) throw InvalidArgument("blow-up vertex " + std::to_string(u) + " out of range");
    require(h.order() >= 1, "blow-up by an empty graph");
    const int base = g.order() - 1;
    require(base + h.order() <= kMaxVertices, "blow-up exceeds vertex limit");
    auto remap = [u](Vertex w) { return w < u ? w : w - 1; };
    std::vector<Edge> es;
    for (Edge e : g.edges()) {
        if (e.u != u && e.v != u) es.push_back({remap(e.u), remap(e.v)});
    }
    for (Edge e : h.edges()) es.push_back({base + e.u, base + e.v});
    for (Vertex w : g.open_neighborhood(u)) {
        for (Vertex x = 0; x < h.order(); x++) es.push_back({remap(w), base + x});
    }
    return Graph::from_edge_list(base + h.order(), es,
                                 g.name() + "_" + std::to_string(u) + "[" + h.name() + "]");
}

Graph
amalgamation(const Graph& g1, const Graph& g2, std::span<const std::pair<Vertex, Vertex>> iso)
{
    std::vector<int> to_g1(g2.order(), -1);
    VertexSet dom;
    for (auto [a, b] : iso) {
        if (a < 0 || a >= g1.order() || b < 0 || b >= g2.order()) {
            throw InvalidArgument("amalgamation map index out of range");
        }
        if (dom.contains(a) || to_g1[b] != -1) throw InvalidArgument("amalgamation map is not injective");
        dom.insert(a);
        to_g1[b] = a;
    }
    for (auto [a, b] : iso) {
        for (auto [c, d] : iso) {
            if (a < c && g1.adjacent(a, c) != g2.adjacent(b, d)) {
                throw InvalidArgument("amalgamation map does not preserve adjacency");
            }
        }
    }
    int next = g1.order();
    for (Vertex b = 0; b < g2.order(); b++) {
        if (to_g1[b] == -1) to_g1[b] = next++;
    }
    require(next <= kMaxVertices, "amalgamation exceeds vertex limit");
    std::vector<Edge> es = g1.edges();
    for (Edge e : g2.edges()) es.push_back({to_g1[e.u], to_g1[e.v]});
    return Graph::from_edge_list(next, es, g1.name() + "*" + g2.name());
}

Graph
random_cactus(int n, std::uint64_t seed, const CactusWeights& weights)
{
    require(n >= 1 && n <= kMaxVertices, "random cactus size out of range");
    std::mt19937_64 rng(seed);
    // block size b adds b-1 new vertices; index 0 is K2
    const double w[5] = {weights.k2, weights.c3, weights.c4, weights.c5, weights.c6};
    std::vector<Edge> es;
    int count = 1;
    while (count < n) {
        const int room = n - count;
        double fit[5];
        double total = 0;
        for (int i = 0; i < 5; i++) {
            fit[i] = (i + 1 <= room) ? std::max(0.0, w[i]) : 0.0;
            total += fit[i];
        }
        int kind = 0;
        if (total > 0) {
            std::discrete_distribution<int> pick(std::begin(fit), std::end(fit));
            kind = pick(rng);
        }
        const Vertex at = std::uniform_int_distribution<int>(0, count - 1)(rng);
        const int fresh = kind + 1;
        Vertex prev = at;
        for (int i = 0; i < fresh; i++) {
            es.push_back({prev, count + i});
            prev = count + i;
        }
        if (kind > 0) es.push_back({prev, at});
        count += fresh;
    }
    return Graph::from_edge_list(n, es, "cactus:" + std::to_string(seed) + "," + std::to_string(n));
}

namespace {

std::string
rooted_code(const std::vector<std::vector<Vertex>>& adj, Vertex v, Vertex parent)
{
    std::vector<std::string> kids;
    for (Vertex w : adj[v]) {
        if (w != parent) kids.push_back(rooted_code(adj, w, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string code = "(";
    for (const auto& k : kids) code += k;
    return code + ")";
}

// AHU code rooted at the centre; the smaller one when there are two centres.
std::string
tree_code(const std::vector<std::vector<Vertex>>& adj)
{
    const int n = static_cast<int>(adj.size());
    std::vector<int> deg(n);
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; v++) {
        deg[v] = static_cast<int>(adj[v].size());
        if (deg[v] <= 1) layer.push_back(v);
    }
    int left = n;
    while (left > 2) {
        left -= static_cast<int>(layer.size());
        std::vector<Vertex> next;
        for (Vertex v : layer) {
            for (Vertex w : adj[v]) {
                if (--deg[w] == 1) next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    std::string best;
    for (Vertex c : layer) {
        std::string code = rooted_code(adj, c, -1);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

}

std::vector<Graph>
nonisomorphic_trees(int n)
{
    if (n < 1 || n > 16) throw InvalidArgument("tree enumeration supports 1 <= n <= 16");
    std::vector<std::vector<std::vector<Vertex>>> level{{{}}};
    for (int size = 2; size <= n; size++) {
        std::vector<std::vector<std::vector<Vertex>>> next;
        std::vector<std::string> seen;
        for (const auto& t : level) {
            for (Vertex p = 0; p < size - 1; p++) {
                auto grown = t;
                grown.push_back({p});
                grown[p].push_back(size - 1);
                std::string code = tree_code(grown);
                if (std::find(seen.begin(), seen.end(), code) != seen.end()) continue;
                seen.push_back(std::move(code));
                next.push_back(std::move(grown));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    for (const auto& t : level) {
        std::vector<Edge> es;
        for (Vertex v = 0; v < n; v++) {
            for (Vertex w : t[v]) {
                if (v < w) es.push_back({v, w});
            }
        }
        out.push_back(Graph::from_edge_list(n, es, "tree" + std::to_string(n) + "#" + std::to_string(out.size())));
    }
    return out;
}

}
