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

#include "mbtd/solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_map>

#include "mbtd/error.hpp"

namespace mbtd {

std::string_view
to_string(Player p)
{
    return p == Player::Dominator ? "Dominator" : "Staller";
}

std::string_view
to_string(ClassLabel c)
{
    switch (c) {
    case ClassLabel::D: return "D";
    case ClassLabel::N: return "N";
    case ClassLabel::S: return "S";
    }
    return "?";
}

ClassLabel
class_from_winners(Player d_game, Player s_game)
{
    if (d_game == Player::Dominator && s_game == Player::Dominator) return ClassLabel::D;
    if (d_game == Player::Staller && s_game == Player::Staller) return ClassLabel::S;
    if (d_game == Player::Dominator) return ClassLabel::N;
    throw InconsistentOutcome("Staller wins the D-game but Dominator wins the S-game");
}

Hypergraph
board_for(const Graph& g, GameKind kind)
{
    return kind == GameKind::TotalDomination ? open_neighborhood_hypergraph(g) : closed_neighborhood_hypergraph(g);
}

Position
Position::play(Vertex v) const
{
    Position next = *this;
    if (to_move == Player::Dominator) {
        next.dom.insert(v);
    } else {
        next.sta.insert(v);
    }
    next.to_move = opponent(to_move);
    return next;
}

void
check_position(const Hypergraph& board, const Position& pos)
{
    if (pos.dom.intersects(pos.sta)) throw InvalidArgument("a vertex is claimed by both players");
    if (!pos.claimed().subset_of(board.universe())) throw InvalidArgument("claimed vertex outside the board");
}

bool
staller_won(const Hypergraph& board, const Position& pos)
{
    return std::any_of(board.edges().begin(), board.edges().end(), [&](VertexSet e) { return e.subset_of(pos.sta); });
}

bool
dominator_won(const Hypergraph& board, const Position& pos)
{
    return std::all_of(board.edges().begin(), board.edges().end(), [&](VertexSet e) { return e.intersects(pos.dom); });
}

int
solver_vertex_cap()
{
    if (const char* env = std::getenv("MBTD_MAX_VERTICES")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0') return static_cast<int>(std::clamp(v, 1L, static_cast<long>(kMaxVertices)));
    }
    return 22;
}

namespace {

using u64 = std::uint64_t;

/// Open-addressing map from (a, b, mover) to a win/loss bit. Grow-only.
class TranspositionTable
{
public:
    TranspositionTable() { slots_.resize(1 << 12); }

    int find(u64 a, u64 b, unsigned mover) const
    {
        const std::size_t mask = slots_.size() - 1;
        for (std::size_t i = hash(a, b, mover) & mask;; i = (i + 1) & mask) {
            const Slot& s = slots_[i];
            if (s.tag == 0) return -1;
            if (s.a == a && s.b == b && ((s.tag >> 1) & 1U) == mover) return (s.tag >> 2) & 1U;
        }
    }

    void store(u64 a, u64 b, unsigned mover, bool value)
    {
        if ((count_ + 1) * 2 > slots_.size()) grow();
        insert(a, b, static_cast<std::uint8_t>(1U | (mover << 1) | (unsigned(value) << 2)));
    }

    std::size_t size() const { return count_; }

private:
    struct Slot
    {
        u64 a = 0;
        u64 b = 0;
        std::uint8_t tag = 0; // bit0 occupied, bit1 mover, bit2 mover wins
    };

    static std::size_t hash(u64 a, u64 b, unsigned mover)
    {
        u64 h = a * 0x9e3779b97f4a7c15ULL;
        h ^= std::rotl(b * 0xc2b2ae3d27d4eb4fULL, 29) ^ (u64{mover} << 63);
        h ^= h >> 32;
        h *= 0xd6e8feb86659fd93ULL;
        return static_cast<std::size_t>(h ^ (h >> 29));
    }

    void insert(u64 a, u64 b, std::uint8_t tag)
    {
        const unsigned mover = (tag >> 1) & 1U;
        const std::size_t mask = slots_.size() - 1;
        for (std::size_t i = hash(a, b, mover) & mask;; i = (i + 1) & mask) {
            Slot& s = slots_[i];
            if (s.tag == 0) {
                s = {a, b, tag};
                count_++;
                return;
            }
            if (s.a == a && s.b == b && ((s.tag >> 1) & 1U) == mover) {
                s.tag = tag;
                return;
            }
        }
    }

    void grow()
    {
        std::vector<Slot> old(slots_.size() * 2);
        old.swap(slots_);
        count_ = 0;
        for (const Slot& s : old) {
            if (s.tag) insert(s.a, s.b, s.tag);
        }
    }

    std::vector<Slot> slots_;
    std::size_t count_ = 0;
};

constexpr unsigned kDominator = 0;
constexpr unsigned kStaller = 1;

struct MoveList
{
    std::array<std::uint8_t, 64> v;
    int size = 0;
};

/// Outcome of inspecting a node before expanding it.
struct NodeInfo
{
    int decided = -1; // 1 mover wins, 0 mover loses, -1 needs search
    u64 key_a = 0;
    u64 key_b = 0;
    MoveList moves;
};

class Engine
{
public:
    Engine(const Hypergraph& board, const SolveOptions& opts) : opts_(opts)
    {
        univ_ = board.universe().bits();
        for (VertexSet e : board.edges()) edges_.push_back(e.bits());
        if (edges_.size() > 64) throw CapExceeded("board has more than 64 distinct hyperedges");
        if (opts_.memo_key == MemoKey::Reduced && !opts_.prune_dead_moves) {
            throw InvalidArgument("the reduced memo key requires dead-move pruning");
        }
    }

    NodeInfo inspect(u64 dom, u64 sta, unsigned mover) const
    {
        NodeInfo info;
        const u64 free = univ_ & ~(dom | sta);
        std::array<u64, 64> rems;
        std::array<int, 64> idx;
        int cnt = 0;
        u64 inter = ~u64{0};
        u64 singles = 0;
        for (int i = 0; i < static_cast<int>(edges_.size()); i++) {
            const u64 e = edges_[i];
            if (e & dom) continue;
            const u64 rem = e & free;
            if (rem == 0) {
                info.decided = mover == kStaller;
                return info;
            }
            rems[cnt] = rem;
            idx[cnt] = i;
            cnt++;
            inter &= rem;
            if ((rem & (rem - 1)) == 0) singles |= rem;
        }
        if (cnt == 0) {
            info.decided = mover == kDominator;
            return info;
        }
        if (mover == kStaller) {
            if (singles) {
                info.decided = 1;
                return info;
            }
            // Dominator would hit every live edge with any vertex of `inter`
            if (std::popcount(inter) >= 2) {
                info.decided = 0;
                return info;
            }
        } else {
            if (inter) {
                info.decided = 1;
                return info;
            }
            if (std::popcount(singles) >= 2) {
                info.decided = 0;
                return info;
            }
        }

        // Minimal live remainders: any edge containing another one is implied by it.
        std::array<int, 64> order;
        for (int i = 0; i < cnt; i++) order[i] = i;
        std::sort(order.begin(), order.begin() + cnt, [&](int x, int y) {
            int px = std::popcount(rems[x]), py = std::popcount(rems[y]);
            return px != py ? px < py : x < y;
        });
        std::array<u64, 64> minimal;
        int mcnt = 0;
        u64 live_mask = 0;
        u64 relevant = 0;
        for (int k = 0; k < cnt; k++) {
            const u64 r = rems[order[k]];
            bool implied = false;
            for (int j = 0; j < mcnt && !implied; j++) implied = (minimal[j] & ~r) == 0;
            if (implied) continue;
            minimal[mcnt++] = r;
            live_mask |= u64{1} << idx[order[k]];
            relevant |= r;
        }

        if (opts_.memo_key == MemoKey::Reduced) {
            info.key_a = relevant;
            info.key_b = live_mask;
        } else {
            info.key_a = dom;
            info.key_b = sta;
        }

        u64 forced = 0;
        if (mover == kStaller && inter) forced = inter;
        if (mover == kDominator && singles) forced = singles;
        if (forced) {
            info.moves.v[0] = static_cast<std::uint8_t>(std::countr_zero(forced));
            info.moves.size = 1;
            return info;
        }

        // Erdős–Selfridge style potential: small live edges weigh most.
        std::array<double, 64> score{};
        for (int j = 0; j < mcnt; j++) {
            const double w = 1.0 / static_cast<double>(u64{1} << std::min(std::popcount(minimal[j]), 62));
            for (u64 r = minimal[j]; r; r &= r - 1) score[std::countr_zero(r)] += w;
        }
        const u64 candidates = opts_.prune_dead_moves ? relevant : free;
        for (u64 c = candidates; c; c &= c - 1) info.moves.v[info.moves.size++] = static_cast<std::uint8_t>(std::countr_zero(c));
        std::stable_sort(info.moves.v.begin(), info.moves.v.begin() + info.moves.size,
                         [&](std::uint8_t x, std::uint8_t y) { return score[x] > score[y]; });
        return info;
    }

    bool wins(u64 dom, u64 sta, unsigned mover)
    {
        NodeInfo info = inspect(dom, sta, mover);
        if (info.decided >= 0) return info.decided == 1;
        const int cached = table_.find(info.key_a, info.key_b, mover);
        if (cached >= 0) return cached == 1;
        if (opts_.node_budget && nodes_ >= opts_.node_budget) {
            throw BudgetExceeded("node budget of " + std::to_string(opts_.node_budget) + " exhausted", nodes_);
        }
        nodes_++;
        bool result = false;
        for (int i = 0; i < info.moves.size && !result; i++) {
            const u64 bit = u64{1} << info.moves.v[i];
            result = mover == kDominator ? !wins(dom | bit, sta, kStaller) : !wins(dom, sta | bit, kDominator);
        }
        table_.store(info.key_a, info.key_b, mover, result);
        return result;
    }

    std::uint64_t nodes() const { return nodes_; }
    std::size_t entries() const { return table_.size(); }

private:
    SolveOptions opts_;
    u64 univ_ = 0;
    std::vector<u64> edges_;
    TranspositionTable table_;
    std::uint64_t nodes_ = 0;
};

unsigned
code(Player p)
{
    return p == Player::Dominator ? kDominator : kStaller;
}

void
check_cap(const Hypergraph& board, const SolveOptions& options)
{
    check_solver_cap(board.order(), options);
}

}

void
check_solver_cap(int order, const SolveOptions& options)
{
    const int cap = std::min(options.max_vertices, kMaxVertices);
    if (order > cap) {
        throw CapExceeded("board has " + std::to_string(order) + " vertices, solver cap is " + std::to_string(cap));
    }
}

struct Solver::Impl
{
    Impl(const Hypergraph& b, SolveOptions o) : board(b), options(o), engine(board, options) { }

    bool wins_parallel(const Position& pos)
    {
        const unsigned mover = code(pos.to_move);
        NodeInfo info = engine.inspect(pos.dom.bits(), pos.sta.bits(), mover);
        if (info.decided >= 0) return info.decided == 1;
        std::atomic<bool> found{false};
        std::atomic<int> next{0};
        std::mutex mu;
        std::exception_ptr error;
        std::uint64_t worker_nodes = 0;
        {
            std::vector<std::jthread> workers;
            for (unsigned t = 0; t < options.threads; t++) {
                workers.emplace_back([&] {
                    Engine local(board, options);
                    try {
                        for (int i = next++; i < info.moves.size && !found; i = next++) {
                            const Position child = pos.play(info.moves.v[i]);
                            if (!local.wins(child.dom.bits(), child.sta.bits(), code(child.to_move))) found = true;
                        }
                    } catch (...) {
                        std::lock_guard lock(mu);
                        if (!error) error = std::current_exception();
                        found = true;
                    }
                    std::lock_guard lock(mu);
                    worker_nodes += local.nodes();
                });
            }
        }
        extra_nodes += worker_nodes + 1;
        if (error) std::rethrow_exception(error);
        return found;
    }

    bool wins(const Position& pos)
    {
        check_position(board, pos);
        if (options.threads > 1) return wins_parallel(pos);
        return engine.wins(pos.dom.bits(), pos.sta.bits(), code(pos.to_move));
    }

    Hypergraph board;
    SolveOptions options;
    Engine engine;
    std::uint64_t extra_nodes = 0;
};

Solver::Solver(const Hypergraph& board, SolveOptions options)
{
    check_cap(board, options);
    impl_ = std::make_unique<Impl>(board, options);
}

Solver::~Solver() = default;
Solver::Solver(Solver&&) noexcept = default;
Solver& Solver::operator=(Solver&&) noexcept = default;

const Hypergraph&
Solver::board() const
{
    return impl_->board;
}

Player
Solver::winner(const Position& pos)
{
    return impl_->wins(pos) ? pos.to_move : opponent(pos.to_move);
}

Vertex
Solver::best_move(const Position& pos)
{
    check_position(impl_->board, pos);
    if (is_terminal(impl_->board, pos)) throw InvalidArgument("best_move called on a finished game");
    const VertexSet free = impl_->board.universe() - pos.claimed();
    const bool staller = pos.to_move == Player::Staller;
    for (Vertex v : free) {
        const Position next = pos.play(v);
        if (staller ? staller_won(impl_->board, next) : dominator_won(impl_->board, next)) return v;
    }
    for (Vertex v : free) {
        if (winner(pos.play(v)) == pos.to_move) return v;
    }
    return free.lowest();
}

SolveResult
Solver::solve(const Position& pos)
{
    SolveResult r;
    r.winner = winner(pos);
    if (!is_terminal(impl_->board, pos)) r.principal_move = best_move(pos);
    r.nodes_expanded = nodes_expanded();
    r.table_entries = table_entries();
    return r;
}

std::vector<Vertex>
Solver::principal_variation(Position pos)
{
    std::vector<Vertex> line;
    while (!is_terminal(impl_->board, pos)) {
        const Vertex v = best_move(pos);
        line.push_back(v);
        pos = pos.play(v);
    }
    return line;
}

std::uint64_t
Solver::nodes_expanded() const
{
    return impl_->engine.nodes() + impl_->extra_nodes;
}

std::size_t
Solver::table_entries() const
{
    return impl_->engine.entries();
}

SolveResult
solve(const Hypergraph& board, Player first, const SolveOptions& options)
{
    Solver s(board, options);
    return s.solve(Position::start(first));
}

Vertex
best_move(const Hypergraph& board, const Position& pos, const SolveOptions& options)
{
    Solver s(board, options);
    return s.best_move(pos);
}

namespace {

struct PassKey
{
    u64 dom;
    u64 sta;
    std::uint8_t mover;
    std::uint8_t passes;
    friend bool operator==(const PassKey&, const PassKey&) = default;
};

struct PassKeyHash
{
    std::size_t operator()(const PassKey& k) const noexcept
    {
        u64 h = k.dom * 0x9e3779b97f4a7c15ULL ^ std::rotl(k.sta * 0xc2b2ae3d27d4eb4fULL, 23);
        h ^= (u64{k.mover} << 56) ^ (u64{k.passes} << 48);
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

class PassSearch
{
public:
    PassSearch(const Hypergraph& board, Player passer, const SolveOptions& opts)
        : board_(board), passer_(code(passer)), opts_(opts)
    {
    }

    bool wins(u64 dom, u64 sta, unsigned mover, int passes)
    {
        const Position pos{VertexSet(dom), VertexSet(sta), mover == kDominator ? Player::Dominator : Player::Staller};
        if (staller_won(board_, pos)) return mover == kStaller;
        if (dominator_won(board_, pos)) return mover == kDominator;
        const u64 free = board_.universe().bits() & ~(dom | sta);
        if (free == 0) return mover == kDominator;
        const PassKey key{dom, sta, static_cast<std::uint8_t>(mover), static_cast<std::uint8_t>(passes)};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        if (opts_.node_budget && nodes_ >= opts_.node_budget) {
            throw BudgetExceeded("node budget of " + std::to_string(opts_.node_budget) + " exhausted", nodes_);
        }
        nodes_++;
        bool result = false;
        for (u64 c = free; c && !result; c &= c - 1) {
            const u64 bit = c & (~c + 1);
            result = mover == kDominator ? !wins(dom | bit, sta, kStaller, passes) : !wins(dom, sta | bit, kDominator, passes);
        }
        if (!result && mover == passer_ && passes < board_.order()) result = !wins(dom, sta, mover ^ 1U, passes + 1);
        memo_.emplace(key, result);
        return result;
    }

    std::uint64_t nodes() const { return nodes_; }
    std::size_t entries() const { return memo_.size(); }

private:
    const Hypergraph& board_;
    unsigned passer_;
    SolveOptions opts_;
    std::unordered_map<PassKey, bool, PassKeyHash> memo_;
    std::uint64_t nodes_ = 0;
};

}

SolveResult
solve_with_pass(const Hypergraph& board, Player first, Player pass_allowed_for, const SolveOptions& options)
{
    check_cap(board, options);
    PassSearch search(board, pass_allowed_for, options);
    const unsigned mover = code(first);
    SolveResult r;
    const bool mover_wins = search.wins(0, 0, mover, 0);
    r.winner = mover_wins ? first : opponent(first);
    const Position start = Position::start(first);
    if (!is_terminal(board, start)) {
        const VertexSet free = board.universe();
        r.principal_move = free.lowest();
        for (Vertex v : free) {
            const Position child = start.play(v);
            const bool keeps = !search.wins(child.dom.bits(), child.sta.bits(), code(child.to_move), 0);
            if (keeps == mover_wins) {
                r.principal_move = v;
                break;
            }
        }
    }
    r.nodes_expanded = search.nodes();
    r.table_entries = search.entries();
    return r;
}

Outcome
solve_outcome(const Graph& g, GameKind kind, const SolveOptions& options)
{
    Solver s(board_for(g, kind), options);
    const Player d = s.winner(Position::start(Player::Dominator));
    const Player st = s.winner(Position::start(Player::Staller));
    return {d, st, class_from_winners(d, st), s.nodes_expanded()};
}

ClassLabel
outcome_class(const Graph& g, const SolveOptions& options)
{
    return solve_outcome(g, GameKind::TotalDomination, options).label;
}

}
