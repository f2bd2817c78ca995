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

#include "mbtd/structural.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <sstream>
#include <unordered_map>

#include "mbtd/error.hpp"
#include "mbtd/hypergraph.hpp"
#include "text_lines.hpp"

namespace mbtd {

bool
is_total_dominating_set(const Graph& g, VertexSet s)
{
    if (!s.subset_of(g.vertices())) throw InvalidArgument("set contains vertices outside the graph");
    for (Vertex v : g.vertices()) {
        if (!g.open_neighborhood(v).intersects(s)) return false;
    }
    return true;
}

namespace {

void
require_exhaustive(const Graph& g, int cap)
{
    if (g.order() > cap) {
        throw CapExceeded("exhaustive search is capped at " + std::to_string(cap) + " vertices");
    }
    for (Vertex v : g.vertices()) {
        if (g.degree(v) == 0) {
            throw InvalidArgument("vertex " + std::to_string(v) + " is isolated; no total dominating set exists");
        }
    }
}

// Some neighbour of the lowest undominated vertex must join the set.
bool
extend_tds(const Graph& g, VertexSet chosen, int budget, VertexSet& out)
{
    Vertex open = -1;
    for (Vertex v : g.vertices()) {
        if (!g.open_neighborhood(v).intersects(chosen)) {
            open = v;
            break;
        }
    }
    if (open < 0) {
        out = chosen;
        return true;
    }
    if (budget == 0) return false;
    for (Vertex w : g.open_neighborhood(open)) {
        if (extend_tds(g, chosen.with(w), budget - 1, out)) return true;
    }
    return false;
}

class DomaticSearch
{
public:
    DomaticSearch(const Graph& g, int k)
        : g_(g), k_(k), color_(g.order(), -1), free_(g.order()), seen_(g.order(), std::vector<int>(k, 0)), missing_(g.order(), k)
    {
        for (Vertex v : g.vertices()) free_[v] = g.degree(v);
    }

    bool run() { return feasible() && assign(0, 0); }

    std::vector<VertexSet> classes() const
    {
        std::vector<VertexSet> out(k_);
        for (Vertex v : g_.vertices()) out[color_[v]].insert(v);
        return out;
    }

private:
    bool feasible() const
    {
        for (Vertex u : g_.vertices()) {
            if (free_[u] < missing_[u]) return false;
        }
        return true;
    }

    void paint(Vertex v, int c, int delta)
    {
        for (Vertex u : g_.open_neighborhood(v)) {
            free_[u] -= delta;
            if (delta > 0 && seen_[u][c]++ == 0) missing_[u]--;
            if (delta < 0 && --seen_[u][c] == 0) missing_[u]++;
        }
    }

    // colours are introduced in order, so class labels are never permuted
    bool assign(Vertex v, int used)
    {
        if (v == g_.order()) return used == k_;
        for (int c = 0; c < std::min(used + 1, k_); c++) {
            color_[v] = c;
            paint(v, c, +1);
            if (feasible() && assign(v + 1, std::max(used, c + 1))) return true;
            paint(v, c, -1);
        }
        color_[v] = -1;
        return false;
    }

    const Graph& g_;
    int k_;
    std::vector<int> color_;
    std::vector<int> free_;
    std::vector<std::vector<int>> seen_;
    std::vector<int> missing_;
};

}

TotalDominatingSet
min_total_dominating_set(const Graph& g, int cap)
{
    require_exhaustive(g, cap);
    VertexSet found;
    for (int k = 0; k <= g.order(); k++) {
        if (extend_tds(g, VertexSet{}, k, found)) return {found.size(), found};
    }
    throw InvalidArgument("no total dominating set");
}

int
gamma_t(const Graph& g, int cap)
{
    return min_total_dominating_set(g, cap).size;
}

bool
tdom_at_least(const Graph& g, int k, int cap)
{
    require_exhaustive(g, cap);
    if (k <= 1) return true;
    return DomaticSearch(g, k).run();
}

TotalDomaticPartition
total_domatic_partition(const Graph& g, int cap)
{
    require_exhaustive(g, cap);
    TotalDomaticPartition best{1, {g.vertices()}};
    for (int k = 2;; k++) {
        DomaticSearch search(g, k);
        if (!search.run()) return best;
        best = {k, search.classes()};
    }
}

int
tdom(const Graph& g, int cap)
{
    return total_domatic_partition(g, cap).tdom;
}

std::optional<Player>
tdom_implies_staller(const Graph& g, int cap)
{
    if (tdom_at_least(g, 2, cap)) return std::nullopt;
    return Player::Staller;
}

StructuralReport
structural_report(const Graph& g, int cap)
{
    StructuralReport r;
    if (g.order() == 0 || g.order() > cap || g.min_degree() == 0) return r;
    const auto tds = min_total_dominating_set(g, cap);
    r.gamma_t = tds.size;
    r.gamma_t_witness = tds.witness;
    auto part = total_domatic_partition(g, cap);
    r.tdom = part.tdom;
    r.tdom_witness = std::move(part.classes);
    return r;
}

bool
d_minimal_check(const Graph& g, const SolveOptions& options)
{
    if (outcome_class(g, options) != ClassLabel::D) return false;
    for (Edge e : g.edges()) {
        if (outcome_class(g.without_edge(e.u, e.v), options) == ClassLabel::D) return false;
    }
    return true;
}

PosCnf
PosCnf::make(int num_vars, std::vector<std::vector<int>> clauses)
{
    if (num_vars < 0) throw InvalidArgument("negative variable count");
    for (auto& c : clauses) {
        if (c.empty()) throw InvalidArgument("empty clause");
        for (int x : c) {
            if (x < 1 || x > num_vars) {
                throw InvalidArgument("variable " + std::to_string(x) + " outside 1.." + std::to_string(num_vars));
            }
        }
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
    }
    return PosCnf{num_vars, std::move(clauses)};
}

PosCnf
parse_pos_cnf(std::string_view text)
{
    const auto lines = detail::content_lines(text);
    if (lines.empty()) throw ParseError("missing 'nvars nclauses' header");
    const auto head = detail::integers(lines[0], 1);
    if (head.size() != 2 || head[0] < 0 || head[1] < 0) throw ParseError("header must be 'nvars nclauses'");
    if (static_cast<long long>(lines.size()) - 1 != head[1]) {
        throw ParseError("expected " + std::to_string(head[1]) + " clause lines, found " +
                         std::to_string(lines.size() - 1));
    }
    std::vector<std::vector<int>> clauses;
    for (std::size_t i = 1; i < lines.size(); i++) {
        auto xs = detail::integers(lines[i], i + 1);
        if (xs.empty() || xs.back() != 0) throw ParseError("clause '" + std::string(lines[i]) + "' is not 0-terminated");
        xs.pop_back();
        std::vector<int> clause;
        for (long long x : xs) {
            if (x < 1 || x > head[0]) throw ParseError("clause '" + std::string(lines[i]) + "' has a bad variable");
            clause.push_back(static_cast<int>(x));
        }
        if (clause.empty()) throw ParseError("empty clause on line " + std::to_string(i + 1));
        clauses.push_back(std::move(clause));
    }
    return PosCnf::make(static_cast<int>(head[0]), std::move(clauses));
}

PosCnf
read_pos_cnf_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open formula file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pos_cnf(buf.str());
}

std::string
write_pos_cnf(const PosCnf& f)
{
    std::ostringstream out;
    out << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const auto& c : f.clauses) {
        for (int x : c) out << x << ' ';
        out << "0\n";
    }
    return out.str();
}

std::string_view
to_string(CnfPlayer p)
{
    return p == CnfPlayer::Prover ? "Prover" : "Disprover";
}

namespace {

class CnfGame
{
public:
    explicit CnfGame(const PosCnf& f) : n_(f.num_vars)
    {
        for (const auto& c : f.clauses) {
            std::uint32_t mask = 0;
            for (int x : c) mask |= 1u << (x - 1);
            clauses_.push_back(mask);
        }
    }

    bool prover_wins(std::uint32_t t, std::uint32_t f, bool prover_moves)
    {
        bool all_true = true;
        for (std::uint32_t c : clauses_) {
            if ((c & ~f) == 0) return false;
            if ((c & t) == 0) all_true = false;
        }
        if (all_true) return true;
        const std::uint64_t key = (std::uint64_t(t) << 32 | f) << 1 | prover_moves;
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        // clauses are still open, so some variable is free
        bool result = !prover_moves;
        for (int x = 0; x < n_; x++) {
            const std::uint32_t bit = 1u << x;
            if ((t | f) & bit) continue;
            const bool w = prover_moves ? prover_wins(t | bit, f, false) : prover_wins(t, f | bit, true);
            if (w == prover_moves) {
                result = w;
                break;
            }
        }
        memo_.emplace(key, result);
        return result;
    }

private:
    int n_;
    std::vector<std::uint32_t> clauses_;
    std::unordered_map<std::uint64_t, bool> memo_;
};

std::vector<std::string>
u_labels(int n, int m)
{
    std::vector<std::string> labels;
    for (int i = 1; i <= n; i++) labels.push_back("u" + std::to_string(i));
    for (int j = 1; j <= m; j++) labels.push_back("v" + std::to_string(j));
    return labels;
}

}

CnfPlayer
pos_cnf_winner(const PosCnf& f, CnfPlayer first)
{
    if (f.num_vars > kPosCnfCap) {
        throw CapExceeded("POS-CNF game is capped at " + std::to_string(kPosCnfCap) + " variables");
    }
    CnfGame game(f);
    return game.prover_wins(0, 0, first == CnfPlayer::Prover) ? CnfPlayer::Prover : CnfPlayer::Disprover;
}

Graph
to_split_graph(const PosCnf& f)
{
    const int n = std::max(f.num_vars, 4);
    const int m = static_cast<int>(f.clauses.size());
    std::vector<Edge> es;
    for (int i = 0; i < n; i++) {
        for (int j = i + 1; j < n; j++) es.push_back({i, j});
    }
    for (int j = 0; j < m; j++) {
        for (int x : f.clauses[j]) es.push_back({x - 1, n + j});
    }
    return Graph::from_edge_list(n + m, es, "split").with_labels(u_labels(n, m));
}

Graph
to_bipartite_graph(const PosCnf& f)
{
    const int n = std::max(f.num_vars, 4);
    const int m = static_cast<int>(f.clauses.size());
    const Vertex w = n + m;
    std::vector<Edge> es;
    for (int i = 0; i < n; i++) {
        es.push_back({i, w});
        es.push_back({i, w + 1});
    }
    for (int j = 0; j < m; j++) {
        for (int x : f.clauses[j]) es.push_back({x - 1, n + j});
    }
    auto labels = u_labels(n, m);
    labels.push_back("w1");
    labels.push_back("w2");
    return Graph::from_edge_list(n + m + 2, es, "bipartite").with_labels(std::move(labels));
}

ReductionReport
reduction_equivalence_check(const PosCnf& f, const SolveOptions& options)
{
    const Graph split = to_split_graph(f);
    const Graph bip = to_bipartite_graph(f);
    check_solver_cap(split.order(), options);
    check_solver_cap(bip.order(), options);

    struct Job
    {
        const char* construction;
        const Graph* g;
        CnfPlayer first;
    };
    const Job jobs[] = {{"split", &split, CnfPlayer::Prover},
                        {"split", &split, CnfPlayer::Disprover},
                        {"bipartite", &bip, CnfPlayer::Prover},
                        {"bipartite", &bip, CnfPlayer::Disprover}};

    std::vector<std::future<Player>> solves;
    for (const Job& job : jobs) {
        solves.push_back(std::async(std::launch::async, [&job, &options] {
            const Player first = job.first == CnfPlayer::Prover ? Player::Dominator : Player::Staller;
            return solve(open_neighborhood_hypergraph(*job.g), first, options).winner;
        }));
    }

    ReductionReport report;
    for (std::size_t i = 0; i < solves.size(); i++) {
        const CnfPlayer cnf = pos_cnf_winner(f, jobs[i].first);
        const Player mbtd = solves[i].get();
        const bool agrees = (cnf == CnfPlayer::Prover) == (mbtd == Player::Dominator);
        report.rows.push_back({jobs[i].construction, jobs[i].first, cnf, mbtd, agrees});
        report.ok = report.ok && agrees;
    }
    return report;
}

}
