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
#include <queue>

#include "mbtd/error.hpp"
#include "mbtd/graph.hpp"

namespace mbtd {

std::vector<VertexSet>
connected_components(const Graph& g, VertexSet within)
{
    std::vector<VertexSet> out;
    VertexSet left = within & g.vertices();
    while (!left.empty()) {
        VertexSet comp = VertexSet::single(left.lowest());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (Vertex v : frontier) next |= g.open_neighborhood(v);
            next = (next & left) - comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        left -= comp;
    }
    return out;
}

std::vector<VertexSet>
connected_components(const Graph& g)
{
    return connected_components(g, g.vertices());
}

bool
is_connected(const Graph& g)
{
    return connected_components(g).size() <= 1;
}

bool
is_bipartite(const Graph& g)
{
    std::vector<int> side(g.order(), -1);
    for (Vertex s = 0; s < g.order(); s++) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : g.open_neighborhood(v)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    q.push(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool
is_tree(const Graph& g)
{
    return g.order() >= 1 && is_connected(g) && g.size() == g.order() - 1;
}

namespace {

std::vector<int>
bfs_distances(const Graph& g, Vertex s)
{
    std::vector<int> dist(g.order(), -1);
    dist[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.open_neighborhood(v)) {
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

}

int
diameter(const Graph& g)
{
    int best = 0;
    for (Vertex s = 0; s < g.order(); s++) {
        for (int d : bfs_distances(g, s)) {
            if (d < 0) return -1;
            best = std::max(best, d);
        }
    }
    return best;
}

int
girth(const Graph& g)
{
    // shortest cycle through each root via BFS; a non-tree edge (v,w) closes a cycle of length d[v]+d[w]+1
    int best = 0;
    for (Vertex s = 0; s < g.order(); s++) {
        std::vector<int> dist(g.order(), -1), parent(g.order(), -1);
        dist[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : g.open_neighborhood(v)) {
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                } else if (parent[v] != w) {
                    int len = dist[v] + dist[w] + 1;
                    if (best == 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

bool
isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() > 10 || b.order() > 10) throw CapExceeded("isomorphism check is limited to 10 vertices");
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<int> da, db;
    for (Vertex v = 0; v < a.order(); v++) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::vector<int> sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;

    std::vector<Vertex> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (Vertex v = 0; v < a.order() && ok; v++) {
            if (da[v] != db[perm[v]]) ok = false;
            for (Vertex w : a.open_neighborhood(v)) {
                if (!b.adjacent(perm[v], perm[w])) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}
