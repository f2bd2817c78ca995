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

#ifndef MBTD_SOLVER_HPP
#define MBTD_SOLVER_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "mbtd/graph.hpp"
#include "mbtd/hypergraph.hpp"
#include "mbtd/vertex_set.hpp"

namespace mbtd {

/// Dominator plays Breaker, Staller plays Maker.
enum class Player : std::uint8_t
{
    Dominator,
    Staller,
};

constexpr Player
opponent(Player p)
{
    return p == Player::Dominator ? Player::Staller : Player::Dominator;
}

std::string_view to_string(Player p);

enum class ClassLabel : std::uint8_t
{
    D,
    N,
    S,
};

std::string_view to_string(ClassLabel c);

/// Maps the (D-game, S-game) winners to D/N/S. Throws InconsistentOutcome for (Staller, Dominator).
ClassLabel class_from_winners(Player d_game, Player s_game);

/// Which neighbourhoods form the board.
enum class GameKind
{
    TotalDomination, // open neighbourhoods
    Domination,      // closed neighbourhoods
};

Hypergraph board_for(const Graph& g, GameKind kind = GameKind::TotalDomination);

struct Position
{
    VertexSet dom;
    VertexSet sta;
    Player to_move = Player::Dominator;

    static Position start(Player first) { return {VertexSet{}, VertexSet{}, first}; }
    VertexSet claimed() const { return dom | sta; }
    /// Current mover claims v; no legality check.
    Position play(Vertex v) const;
    Position pass() const { return {dom, sta, opponent(to_move)}; }

    friend bool operator==(const Position&, const Position&) = default;
};

/// Throws InvalidArgument if the claims overlap or leave the universe.
void check_position(const Hypergraph& board, const Position& pos);

/// Some hyperedge lies entirely inside Staller's claims.
bool staller_won(const Hypergraph& board, const Position& pos);
/// Every hyperedge meets Dominator's claims.
bool dominator_won(const Hypergraph& board, const Position& pos);
inline bool is_terminal(const Hypergraph& board, const Position& pos)
{
    return staller_won(board, pos) || dominator_won(board, pos);
}

/// What the transposition table is keyed on.
enum class MemoKey
{
    /// (dom, sta, to_move) verbatim.
    Claims,
    /// (free vertices still in a minimal live edge, minimal live edges, to_move).
    Reduced,
};

/// Default full-solve vertex cap: 22, or MBTD_MAX_VERTICES when set (clamped to 1..64).
int solver_vertex_cap();

struct SolveOptions
{
    int max_vertices = solver_vertex_cap();
    /// 0 means unlimited.
    std::uint64_t node_budget = 0;
    /// Root moves are split across this many workers when > 1.
    unsigned threads = 1;
    MemoKey memo_key = MemoKey::Claims;
    /// Skip moves on vertices outside every minimal live edge. Required by MemoKey::Reduced.
    bool prune_dead_moves = true;
};

/// Throws CapExceeded when a board of `order` vertices is over the configured cap.
void check_solver_cap(int order, const SolveOptions& options);

struct SolveResult
{
    Player winner = Player::Dominator;
    /// Lowest-index value-preserving move; empty at terminal positions.
    std::optional<Vertex> principal_move;
    std::uint64_t nodes_expanded = 0;
    std::size_t table_entries = 0;
};

/**
 * Exact Maker-Breaker solver over one board. Keeps its transposition table across
 * queries, so repeated calls on related positions (best_move, principal variations)
 * are cheap. Not thread-safe; use one instance per thread.
 */
class Solver
{
public:
    explicit Solver(const Hypergraph& board, SolveOptions options = {});
    ~Solver();
    Solver(Solver&&) noexcept;
    Solver& operator=(Solver&&) noexcept;

    const Hypergraph& board() const;

    /// Winner under optimal play from `pos`.
    Player winner(const Position& pos);
    SolveResult solve(const Position& pos);
    /// Lowest immediately winning move if any, else the lowest-index move that keeps the
    /// mover's game value. Throws on terminal positions.
    Vertex best_move(const Position& pos);
    /// Moves played by best_move on both sides until the game ends.
    std::vector<Vertex> principal_variation(Position pos);

    std::uint64_t nodes_expanded() const;
    std::size_t table_entries() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

SolveResult solve(const Hypergraph& board, Player first, const SolveOptions& options = {});
Vertex best_move(const Hypergraph& board, const Position& pos, const SolveOptions& options = {});

/**
 * Plain exhaustive search in which `pass_allowed_for` may also pass on any turn
 * (at most order() passes). No move pruning: this is the independent check of
 * the claim that passing never helps.
 */
SolveResult solve_with_pass(const Hypergraph& board, Player first, Player pass_allowed_for,
                            const SolveOptions& options = {});

struct Outcome
{
    Player d_game;
    Player s_game;
    ClassLabel label;
    std::uint64_t nodes = 0;
};

Outcome solve_outcome(const Graph& g, GameKind kind = GameKind::TotalDomination, const SolveOptions& options = {});
ClassLabel outcome_class(const Graph& g, const SolveOptions& options = {});

}

#endif
