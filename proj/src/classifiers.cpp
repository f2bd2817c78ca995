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

#include "mbtd/classifiers.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "mbtd/error.hpp"

namespace mbtd {

PartialOutcome
PartialOutcome::make(std::optional<Player> d_game, std::optional<Player> s_game)
{
    PartialOutcome out{d_game, s_game, std::nullopt};
    if (d_game && s_game) out.label = class_from_winners(*d_game, *s_game);
    return out;
}

PartialOutcome
PartialOutcome::of(ClassLabel c)
{
    switch (c) {
    case ClassLabel::D: return make(Player::Dominator, Player::Dominator);
    case ClassLabel::N: return make(Player::Dominator, Player::Staller);
    case ClassLabel::S: return make(Player::Staller, Player::Staller);
    }
    throw InvalidArgument("bad class label");
}

ClassLabel
combine_union(ClassLabel a, ClassLabel b)
{
    if (a == ClassLabel::D) return b;
    if (b == ClassLabel::D) return a;
    return ClassLabel::S;
}

namespace {

int
edges_within(const Graph& g, VertexSet s)
{
    int twice = 0;
    for (Vertex v : s) twice += (g.open_neighborhood(v) & s).size();
    return twice / 2;
}

class BlockFinder
{
public:
    BlockFinder(const Graph& g, VertexSet within) : g_(g), within_(within), disc_(g.order(), -1), low_(g.order(), 0) { }

    BlockDecomposition run()
    {
        const Vertex root = within_.lowest();
        if (within_.size() == 1) {
            out_.blocks.push_back(VertexSet::single(root));
        } else {
            dfs(root, -1);
        }
        for (VertexSet b : out_.blocks) out_.block_cuts.push_back(b & out_.cut_vertices);
        return std::move(out_);
    }

private:
    void dfs(Vertex v, Vertex parent)
    {
        disc_[v] = low_[v] = clock_++;
        int children = 0;
        for (Vertex w : g_.open_neighborhood(v) & within_) {
            if (disc_[w] < 0) {
                stack_.push_back({v, w});
                children++;
                dfs(w, v);
                low_[v] = std::min(low_[v], low_[w]);
                if (low_[w] >= disc_[v]) {
                    if (parent >= 0 || children > 1) out_.cut_vertices.insert(v);
                    pop_block(v, w);
                }
            } else if (w != parent && disc_[w] < disc_[v]) {
                stack_.push_back({v, w});
                low_[v] = std::min(low_[v], disc_[w]);
            }
        }
    }

    void pop_block(Vertex v, Vertex w)
    {
        VertexSet block;
        while (!stack_.empty()) {
            const Edge e = stack_.back();
            stack_.pop_back();
            block.insert(e.u);
            block.insert(e.v);
            if (e.u == v && e.v == w) break;
        }
        out_.blocks.push_back(block);
    }

    const Graph& g_;
    VertexSet within_;
    std::vector<int> disc_;
    std::vector<int> low_;
    int clock_ = 0;
    std::vector<Edge> stack_;
    BlockDecomposition out_;
};

bool
is_cycle_block(const Graph& g, VertexSet b)
{
    return b.size() >= 3 && edges_within(g, b) == b.size();
}

bool
cactus_blocks(const Graph& g, const BlockDecomposition& bd)
{
    return std::all_of(bd.blocks.begin(), bd.blocks.end(),
                       [&](VertexSet b) { return b.size() <= 2 || is_cycle_block(g, b); });
}

bool
star_blocks(const BlockDecomposition& bd)
{
    VertexSet common = bd.blocks.front();
    for (VertexSet b : bd.blocks) common &= b;
    return !common.empty();
}

bool
n_star_blocks(const Graph& g, const BlockDecomposition& bd)
{
    if (bd.blocks.size() == 1) return bd.blocks[0].size() == 3 && is_cycle_block(g, bd.blocks[0]);
    if (!star_blocks(bd)) return false;
    int k2 = 0;
    bool small_cycle = false;
    for (VertexSet b : bd.blocks) {
        if (b.size() == 2) k2++;
        if (b.size() > 5) return false;
        if (b.size() == 3 || b.size() == 4) small_cycle = true;
    }
    return small_cycle || k2 >= 2;
}

void
require_cactus(const Graph& g, const BlockDecomposition& bd)
{
    if (!cactus_blocks(g, bd)) throw InvalidArgument("graph is not a cactus");
}

int
rank(ClassLabel c)
{
    return c == ClassLabel::D ? 2 : c == ClassLabel::N ? 1 : 0;
}

class CactusSearch
{
public:
    CactusSearch(const Graph& g, bool greedy) : g_(g), greedy_(greedy) { }

    CactusClassification of_set(VertexSet rest)
    {
        CactusClassification acc{ClassLabel::D, {}, {}};
        for (VertexSet comp : connected_components(g_, rest)) {
            const CactusClassification& part = of_component(comp);
            acc.label = combine_union(acc.label, part.label);
            acc.removed.insert(acc.removed.end(), part.removed.begin(), part.removed.end());
            acc.remainder |= part.remainder;
        }
        return acc;
    }

    const CactusClassification& of_component(VertexSet comp)
    {
        if (auto it = memo_.find(comp.bits()); it != memo_.end()) return it->second;
        CactusClassification best = evaluate(comp);
        return memo_.emplace(comp.bits(), std::move(best)).first->second;
    }

private:
    CactusClassification evaluate(VertexSet comp)
    {
        if (comp.size() == 1) return {ClassLabel::S, {}, comp};
        const BlockDecomposition bd = block_decomposition(g_, comp);
        if (bd.blocks.size() == 1) {
            if (comp.size() == 2) return {ClassLabel::S, {}, comp};
            const ClassLabel c = classify_cycle(comp.size());
            if (c == ClassLabel::D) return {c, {comp}, {}};
            return {c, {}, comp};
        }

        std::vector<VertexSet> pendant_c4;
        for (std::size_t i = 0; i < bd.blocks.size(); i++) {
            const VertexSet b = bd.blocks[i];
            if (bd.is_end_block(i) && b.size() == 4 && is_cycle_block(g_, b)) pendant_c4.push_back(b);
        }
        std::sort(pendant_c4.begin(), pendant_c4.end(), [](VertexSet a, VertexSet b) { return a.lowest() < b.lowest(); });

        CactusClassification best{n_star_blocks(g_, bd) ? ClassLabel::N : ClassLabel::S, {}, comp};
        if (greedy_) {
            if (best.label == ClassLabel::N || pendant_c4.empty()) return best;
            pendant_c4.resize(1);
        }
        for (VertexSet b : pendant_c4) {
            if (best.label == ClassLabel::D) break;
            CactusClassification after = of_set(comp - b);
            if (greedy_ || rank(after.label) > rank(best.label)) {
                after.removed.insert(after.removed.begin(), b);
                best = std::move(after);
            }
        }
        return best;
    }

    const Graph& g_;
    bool greedy_;
    std::unordered_map<std::uint64_t, CactusClassification> memo_;
};

BlockDecomposition
checked_cactus(const Graph& g)
{
    BlockDecomposition bd = block_decomposition(g);
    require_cactus(g, bd);
    return bd;
}

}

BlockDecomposition
block_decomposition(const Graph& g, VertexSet within)
{
    if (within.empty()) throw InvalidArgument("block decomposition of an empty graph");
    if (!within.subset_of(g.vertices())) throw InvalidArgument("vertex set outside the graph");
    if (connected_components(g, within).size() != 1) throw InvalidArgument("graph is not connected");
    return BlockFinder(g, within).run();
}

BlockDecomposition
block_decomposition(const Graph& g)
{
    return block_decomposition(g, g.vertices());
}

bool
is_cactus(const Graph& g)
{
    return cactus_blocks(g, block_decomposition(g));
}

bool
is_star_cactus(const Graph& g)
{
    return star_blocks(checked_cactus(g));
}

bool
is_N_star_cactus(const Graph& g)
{
    return n_star_blocks(g, checked_cactus(g));
}

ClassLabel
classify_cycle(int n)
{
    if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
    if (n == 3) return ClassLabel::N;
    if (n == 4) return ClassLabel::D;
    return ClassLabel::S;
}

ClassLabel
classify_path(int n)
{
    if (n < 1) throw InvalidArgument("path needs at least 1 vertex");
    return n == 3 ? ClassLabel::N : ClassLabel::S;
}

ClassLabel
classify_grid(int m, int n)
{
    if (m < 1 || n < 1) throw InvalidArgument("grid sides must be positive");
    if (m == 1 || n == 1) return classify_path(m * n);
    return m % 2 == 0 && n % 2 == 0 ? ClassLabel::D : ClassLabel::S;
}

PartialOutcome
classify_prism_cycle(int rows, int m)
{
    if (rows < 2 || m < 3) throw InvalidArgument("prism needs rows >= 2 and m >= 3");
    if (rows % 2 == 0 || m == 4) return PartialOutcome::of(ClassLabel::D);
    if (rows == 3) return PartialOutcome::make(std::nullopt, Player::Staller);
    return PartialOutcome::make(std::nullopt, std::nullopt);
}

ClassLabel
classify_tree(const Graph& t)
{
    if (!is_tree(t)) throw InvalidArgument("graph is not a tree");
    const int n = t.order();
    if (n >= 3) {
        for (Vertex v : t.vertices()) {
            if (t.degree(v) == n - 1) return ClassLabel::N;
        }
    }
    return ClassLabel::S;
}

CactusClassification
classify_cactus_with_witness(const Graph& g)
{
    checked_cactus(g);
    CactusSearch search(g, false);
    return search.of_component(g.vertices());
}

ClassLabel
classify_cactus(const Graph& g)
{
    return classify_cactus_with_witness(g).label;
}

ClassLabel
classify_cactus_greedy(const Graph& g)
{
    checked_cactus(g);
    CactusSearch search(g, true);
    return search.of_component(g.vertices()).label;
}

}
