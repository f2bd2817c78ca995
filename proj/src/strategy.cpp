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

#include "mbtd/strategy.hpp"

#include <string>
#include <unordered_set>

#include "mbtd/error.hpp"

namespace mbtd {

namespace {

struct VisitKey
{
    std::uint64_t dom;
    std::uint64_t sta;
    int last;
    bool operator==(const VisitKey&) const = default;
};

struct VisitKeyHash
{
    std::size_t operator()(const VisitKey& k) const noexcept
    {
        std::uint64_t h = k.dom * 0x9e3779b97f4a7c15ULL ^ (k.sta * 0xc2b2ae3d27d4eb4fULL) ^ std::uint64_t(k.last + 1);
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

class Traversal
{
public:
    Traversal(const Graph& g, const DominatorRule& rule) : board_(open_neighborhood_hypergraph(g)), rule_(rule) { }

    // true when every continuation ends in a Dominator win
    bool run(Position pos, std::optional<Vertex> last)
    {
        if (staller_won(board_, pos)) {
            report.leaves++;
            report.counterexample = history_;
            return false;
        }
        const VertexSet free = board_.universe() - pos.claimed();
        if (dominator_won(board_, pos) || free.empty()) {
            report.leaves++;
            return true;
        }
        const VisitKey key{pos.dom.bits(), pos.sta.bits(), last.value_or(-1)};
        if (proven_.contains(key)) return true;
        report.positions++;

        if (pos.to_move == Player::Dominator) {
            const Vertex v = rule_(StrategyView{pos.dom, pos.sta, free, last});
            if (v < 0 || v >= board_.order() || !free.contains(v)) {
                throw IllegalMove("strategy chose vertex " + std::to_string(v) + " which is not free");
            }
            if (!step(pos, v, last)) return false;
        } else {
            for (Vertex v : free) {
                if (!step(pos, v, v)) return false;
            }
        }
        proven_.insert(key);
        return true;
    }

    VerificationReport report;

private:
    bool step(const Position& pos, Vertex v, std::optional<Vertex> last)
    {
        history_.push_back({pos.to_move, v});
        const bool ok = run(pos.play(v), last);
        history_.pop_back();
        return ok;
    }

    Hypergraph board_;
    const DominatorRule& rule_;
    std::vector<MoveRecord> history_;
    std::unordered_set<VisitKey, VisitKeyHash> proven_;
};

}

VerificationReport
verify_strategy(const Graph& g, const DominatorRule& rule, Player first, int max_vertices)
{
    if (g.order() > std::min(max_vertices, kMaxVertices)) {
        throw CapExceeded("strategy verification is capped at " + std::to_string(max_vertices) + " vertices");
    }
    Traversal t(g, rule);
    t.report.verified = t.run(Position::start(first), std::nullopt);
    return t.report;
}

DominatorRule
lowest_index_strategy()
{
    return [](const StrategyView& view) { return view.free.lowest(); };
}

DominatorRule
c4_pairing_strategy(const Graph& g, const std::vector<std::array<Vertex, 4>>& partition)
{
    std::vector<Vertex> partner(g.order(), -1);
    VertexSet covered;
    for (const auto& cls : partition) {
        VertexSet s;
        for (Vertex v : cls) {
            if (v < 0 || v >= g.order()) throw InvalidArgument("partition vertex out of range");
            s.insert(v);
        }
        if (s.size() != 4) throw InvalidArgument("partition class has repeated vertices");
        if (s.intersects(covered)) throw InvalidArgument("partition classes overlap");
        covered |= s;
        for (Vertex v : s) {
            const VertexSet inside = g.open_neighborhood(v) & s;
            if (inside.size() != 2) throw InvalidArgument("partition class does not induce a 4-cycle");
            partner[v] = (s - inside).without(v).lowest();
        }
    }
    if (covered != g.vertices()) throw InvalidArgument("partition does not cover every vertex");

    return [partner](const StrategyView& view) {
        if (view.last_staller_move) {
            const Vertex opposite = partner[*view.last_staller_move];
            if (view.free.contains(opposite)) return opposite;
        }
        // a pair Staller has entered but Dominator has not answered
        for (Vertex x : view.sta) {
            if (view.free.contains(partner[x])) return partner[x];
        }
        return view.free.lowest();
    };
}

std::vector<Vertex>
prism_imaginary_cycle(int ell)
{
    if (ell < 1) throw InvalidArgument("prism cycle strategy needs l >= 1");
    const int m = 2 * ell + 1;
    auto at = [m](int row, int col) { return (row - 1) * m + (col - 1); }; // 1-based coordinates
    std::vector<Vertex> cyc;
    for (int i = 1; i <= m; i++) cyc.push_back(i % 2 == 1 ? at(1, i) : at(2, i));
    for (int i = 1; i <= m; i++) cyc.push_back(i % 2 == 1 ? at(2, i) : at(1, i));
    return cyc;
}

DominatorRule
prism_cycle_strategy(int ell)
{
    const std::vector<Vertex> cyc = prism_imaginary_cycle(ell);
    const int len = static_cast<int>(cyc.size());
    std::vector<int> where(len, -1);
    for (int i = 0; i < len; i++) where[cyc[i]] = i;

    return [cyc, where, len](const StrategyView& view) {
        if (view.last_staller_move && *view.last_staller_move < len) {
            const int i = where[*view.last_staller_move];
            const Vertex next = cyc[(i + 1) % len];
            const Vertex prev = cyc[(i + len - 1) % len];
            if (view.free.contains(next)) return next;
            if (view.free.contains(prev)) return prev;
        }
        return view.free.lowest();
    };
}

}
