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

// Acceptance run: one PASS/FAIL line per criterion. Tolerances and time limits are
// fixed below. Exit status is 0 when every criterion passes except the pinned known
// failures, which must still fail.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mbtd/catalog.hpp"
#include "mbtd/classifiers.hpp"
#include "mbtd/error.hpp"
#include "mbtd/hypergraph.hpp"
#include "mbtd/solver.hpp"
#include "mbtd/strategy.hpp"
#include "mbtd/structural.hpp"

using namespace mbtd;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kCyclesSeconds = 5;
constexpr double kGridSeconds = 30;
constexpr double kP4P4Seconds = 300;
constexpr double kPetersenSeconds = 60;
constexpr double kReductionSeconds = 600;
constexpr int kCactusSamples = 200;
constexpr int kCactusMaxOrder = 13;
constexpr int kTreeSamples = 50;

// Criteria expected to fail, with the reason printed next to the FAIL line.
const std::vector<std::pair<int, std::string>> kKnownFailures = {
    {8, "gnk(3,2) is a 6-cycle, and C6 is S in both games, so the expected N is unattainable"},
};

double
seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string
fmt(double s)
{
    std::ostringstream o;
    o << std::fixed;
    o.precision(3);
    o << s << "s";
    return o.str();
}

std::string
label(std::optional<ClassLabel> c)
{
    return c ? std::string(to_string(*c)) : std::string("inconsistent");
}

// Every (D-game, S-game) pair produced in criteria 1-15, kept for criterion 16.
struct Pair
{
    std::string where;
    Player d_game;
    Player s_game;
};

std::vector<Pair> pairs;

void
record(const std::string& where, Player d, Player s)
{
    pairs.push_back({where, d, s});
}

// Solves the two games separately so an inconsistent pair is seen rather than thrown.
std::optional<ClassLabel>
classify(const std::string& where, const Graph& g, const SolveOptions& o = {})
{
    const Hypergraph board = open_neighborhood_hypergraph(g);
    const Player d = solve(board, Player::Dominator, o).winner;
    const Player s = solve(board, Player::Staller, o).winner;
    record(where, d, s);
    if (d == Player::Staller && s == Player::Dominator) return std::nullopt;
    return class_from_winners(d, s);
}

struct Verdict
{
    bool pass = true;
    std::string detail;

    void fail(const std::string& why)
    {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
    void note(const std::string& what)
    {
        if (pass && detail.empty()) detail = what;
    }
};

Verdict
cycles()
{
    Verdict v;
    const ClassLabel want[] = {ClassLabel::N, ClassLabel::D, ClassLabel::S, ClassLabel::S,
                               ClassLabel::S, ClassLabel::S, ClassLabel::S, ClassLabel::S};
    const auto t0 = Clock::now();
    for (int n = 3; n <= 10; n++) {
        const auto c = classify("C" + std::to_string(n), cycle(n));
        if (c != want[n - 3]) v.fail("C" + std::to_string(n) + " " + label(c));
    }
    const double t = seconds_since(t0);
    if (t >= kCyclesSeconds) v.fail("took " + fmt(t));
    v.note("C3..C10 = N D S S S S S S");
    return v;
}

Verdict
grids()
{
    Verdict v;
    int count = 0;
    double slowest = 0;
    for (int m = 2; m <= 4; m++) {
        for (int n = 2; n <= 5; n++) {
            if (m * n > 20) continue;
            const std::string name = "P" + std::to_string(m) + "xP" + std::to_string(n);
            const auto t0 = Clock::now();
            const auto c = classify(name, grid(m, n));
            const double t = seconds_since(t0);
            slowest = std::max(slowest, t);
            const ClassLabel want = m % 2 == 0 && n % 2 == 0 ? ClassLabel::D : ClassLabel::S;
            if (c != want) v.fail(name + " " + label(c));
            const double limit = m == 4 && n == 4 ? kP4P4Seconds : kGridSeconds;
            if (t >= limit) v.fail(name + " took " + fmt(t));
            count++;
        }
    }
    v.note(std::to_string(count) + " grids, slowest " + fmt(slowest));
    return v;
}

Verdict
prisms()
{
    Verdict v;
    const std::pair<int, int> ds[] = {{2, 3}, {2, 4}, {2, 5}, {2, 6}, {4, 3}};
    for (auto [rows, m] : ds) {
        const std::string name = "P" + std::to_string(rows) + "xC" + std::to_string(m);
        const auto c = classify(name, prism(rows, m));
        if (c != ClassLabel::D) v.fail(name + " " + label(c));
    }
    for (int ell : {1, 2}) {
        for (Player first : {Player::Dominator, Player::Staller}) {
            const auto r = verify_strategy(prism(2, 2 * ell + 1), prism_cycle_strategy(ell), first);
            if (!r.verified) {
                v.fail("strategy loses on P2xC" + std::to_string(2 * ell + 1) + " with " +
                       std::string(to_string(first)) + " first");
            }
        }
    }
    v.note("5 prisms D; cycle strategy verified on P2xC3, P2xC5");
    return v;
}

Verdict
p3_cycles()
{
    Verdict v;
    for (int k : {3, 5}) {
        const std::string name = "P3xC" + std::to_string(k);
        const Hypergraph board = open_neighborhood_hypergraph(prism(3, k));
        const Player d = solve(board, Player::Dominator).winner;
        const Player s = solve(board, Player::Staller).winner;
        record(name, d, s);
        if (s != Player::Staller) v.fail(name + " S-game won by Dominator");
    }
    const auto c = classify("P3xC4", prism(3, 4));
    if (c != ClassLabel::D) v.fail("P3xC4 " + label(c));
    v.note("Staller wins S-game on P3xC3, P3xC5; P3xC4 D");
    return v;
}

Verdict
petersen_graph()
{
    Verdict v;
    const auto t0 = Clock::now();
    const auto c = classify("Petersen", petersen());
    const double t = seconds_since(t0);
    if (c != ClassLabel::S) v.fail("class " + label(c));
    if (t >= kPetersenSeconds) v.fail("took " + fmt(t));
    v.note("S in both games");
    return v;
}

Verdict
total_domatic()
{
    Verdict v;
    if (const int t = tdom(heawood()); t != 1) v.fail("tdom(Heawood)=" + std::to_string(t));
    if (const int t = tdom(petersen()); t != 2) v.fail("tdom(Petersen)=" + std::to_string(t));

    std::vector<Graph> trees;
    for (int n = 2; n <= 10; n++) {
        for (Graph& t : nonisomorphic_trees(n)) trees.push_back(std::move(t));
    }
    std::mt19937_64 rng(20260101);
    std::shuffle(trees.begin(), trees.end(), rng);
    trees.resize(kTreeSamples);
    for (const Graph& t : trees) {
        if (tdom(t) != 1) v.fail(t.name() + " tdom " + std::to_string(tdom(t)));
    }

    int checked = 0;
    for (const auto& e : catalog()) {
        const Graph& g = e.graph;
        if (g.order() > kExhaustiveCap || g.order() > solver_vertex_cap() || g.min_degree() == 0) continue;
        if (!tdom_implies_staller(g)) continue;
        const Player s = solve(open_neighborhood_hypergraph(g), Player::Staller).winner;
        const Player d = solve(open_neighborhood_hypergraph(g), Player::Dominator).winner;
        record(e.name, d, s);
        checked++;
        if (s != Player::Staller) v.fail(e.name + ": tdom 1 but Dominator wins the S-game");
    }
    v.note("Heawood 1, Petersen 2, " + std::to_string(kTreeSamples) + " trees 1, implication holds on " +
           std::to_string(checked) + " catalog graphs");
    return v;
}

Verdict
gamma_t_formula()
{
    Verdict v;
    for (auto [n, k] : {std::pair{2, 1}, {3, 1}, {4, 1}, {4, 2}}) {
        const int want = (n + k - 1) / k + n - k + 1;
        const int have = gamma_t(gnk(n, k));
        if (have != want) {
            v.fail("gnk(" + std::to_string(n) + "," + std::to_string(k) + ") " + std::to_string(have) +
                   " != " + std::to_string(want));
        }
    }
    v.note("gnk (2,1)=4 (3,1)=6 (4,1)=8 (4,2)=5");
    return v;
}

Verdict
gnk_classes()
{
    Verdict v;
    const struct
    {
        int n, k;
        ClassLabel want;
    } cases[] = {{2, 1, ClassLabel::S}, {4, 2, ClassLabel::S}, {3, 2, ClassLabel::N}};
    std::string seen;
    for (const auto& c : cases) {
        const std::string name = "gnk(" + std::to_string(c.n) + "," + std::to_string(c.k) + ")";
        const auto have = classify(name, gnk(c.n, c.k));
        seen += (seen.empty() ? "" : ", ") + name + "=" + label(have);
        if (have != c.want) v.fail(name + " is " + label(have) + ", expected " + std::string(to_string(c.want)));
    }
    if (!v.pass) {
        v.detail += " [" + seen + "; gnk(3,2) isomorphic to C6: " + (isomorphic(gnk(3, 2), cycle(6)) ? "yes" : "no") + "]";
    }
    return v;
}

Verdict
d_minimality()
{
    Verdict v;
    const std::pair<const char*, Graph> graphs[] = {
        {"K2,2", complete_bipartite(2, 2)}, {"K2,3", complete_bipartite(2, 3)}, {"P2xC3", prism(2, 3)}};
    for (const auto& [name, g] : graphs) {
        if (!d_minimal_check(g)) v.fail(std::string(name) + " not D-minimal");
        if (classify(name, g) != ClassLabel::D) v.fail(std::string(name) + " not D");
        for (const Edge& e : g.edges()) {
            const std::string sub = std::string(name) + "-" + std::to_string(e.u) + std::to_string(e.v);
            if (classify(sub, g.without_edge(e.u, e.v)) == ClassLabel::D) v.fail(sub + " still D");
        }
    }
    v.note("K2,2 K2,3 P2xC3 D-minimal; every edge deletion leaves a non-D graph");
    return v;
}

Verdict
cacti()
{
    Verdict v;
    int agree = 0, total = 0;
    for (std::uint64_t seed = 0; total < kCactusSamples; seed++) {
        const int n = 2 + static_cast<int>(seed % (kCactusMaxOrder - 1));
        const Graph g = random_cactus(n, 1000 + seed);
        if (!is_cactus(g) || !is_connected(g) || g.order() > kCactusMaxOrder) {
            v.fail("generator produced a bad cactus for seed " + std::to_string(1000 + seed));
            continue;
        }
        total++;
        const ClassLabel predicted = classify_cactus(g);
        const auto solved = classify("cactus seed=" + std::to_string(1000 + seed), g);
        if (solved == predicted) {
            agree++;
        } else {
            v.fail("seed " + std::to_string(1000 + seed) + ": classifier " + std::string(to_string(predicted)) +
                   ", solver " + label(solved));
        }
    }

    // exemplar labels; the N exemplar has 28 vertices, so raise the cap for it
    SolveOptions big;
    big.max_vertices = 28;
    const struct
    {
        const char* name;
        Graph g;
        ClassLabel want;
    } ex[] = {{"cactus-D", cactus_exemplar_d(), ClassLabel::D},
              {"cactus-N", cactus_exemplar_n(), ClassLabel::N},
              {"cactus-S", cactus_exemplar_s(), ClassLabel::S}};
    for (const auto& e : ex) {
        if (classify_cactus(e.g) != e.want) v.fail(std::string(e.name) + " classifier disagrees");
        const auto c = classify(e.name, e.g, big);
        if (c != e.want) v.fail(std::string(e.name) + " solver " + label(c));
        SolveOptions reduced = big;
        reduced.memo_key = MemoKey::Reduced;
        const auto r = classify(std::string(e.name) + " reduced key", e.g, reduced);
        if (r != e.want) v.fail(std::string(e.name) + " solver (reduced key) " + label(r));
    }
    v.note(std::to_string(agree) + "/" + std::to_string(total) + " random cacti agree; 3 exemplars match");
    return v;
}

Verdict
trees()
{
    Verdict v;
    int count = 0;
    for (int n = 1; n <= 9; n++) {
        for (const Graph& t : nonisomorphic_trees(n)) {
            count++;
            const ClassLabel predicted = classify_tree(t);
            const auto solved = classify(t.name(), t);
            if (solved != predicted) v.fail(t.name() + " solver " + label(solved));
            bool star = false;
            for (Vertex x : t.vertices()) star = star || (n >= 3 && t.degree(x) == n - 1);
            if (predicted != (star ? ClassLabel::N : ClassLabel::S)) v.fail(t.name() + " classifier");
        }
    }
    v.note(std::to_string(count) + " trees on 1..9 vertices");
    return v;
}

Verdict
union_table()
{
    Verdict v;
    // representatives of D, N, S and the expected class of each ordered union
    const std::pair<const char*, Graph> reps[] = {{"C4", cycle(4)}, {"C3", cycle(3)}, {"K2", complete(2)}};
    const ClassLabel table[3][3] = {{ClassLabel::D, ClassLabel::N, ClassLabel::S},
                                    {ClassLabel::N, ClassLabel::S, ClassLabel::S},
                                    {ClassLabel::S, ClassLabel::S, ClassLabel::S}};
    for (int i = 0; i < 3; i++) {
        for (int j = 0; j < 3; j++) {
            const std::string name = std::string(reps[i].first) + "+" + reps[j].first;
            const auto c = classify(name, disjoint_union(reps[i].second, reps[j].second));
            if (c != table[i][j]) v.fail(name + " " + label(c));
        }
    }
    v.note("9/9 unions");
    return v;
}

Verdict
no_skip()
{
    Verdict v;
    int graphs = 0;
    for (const auto& e : catalog()) {
        if (e.graph.order() > 8) continue;
        graphs++;
        const Hypergraph board = open_neighborhood_hypergraph(e.graph);
        Player plain[2];
        int i = 0;
        for (Player first : {Player::Dominator, Player::Staller}) {
            plain[i++] = solve(board, first).winner;
            for (Player passer : {Player::Dominator, Player::Staller}) {
                if (solve_with_pass(board, first, passer).winner != plain[i - 1]) {
                    v.fail(e.name + " " + std::string(to_string(passer)) + " passing, " +
                           std::string(to_string(first)) + " first");
                }
            }
        }
        record(e.name, plain[0], plain[1]);
    }
    v.note(std::to_string(graphs) + " catalog graphs");
    return v;
}

Verdict
blow_ups()
{
    Verdict v;
    const std::pair<const char*, Graph> hs[] = {{"K1", empty_graph(1)}, {"K2", complete(2)}, {"2K1", empty_graph(2)},
                                                {"3K1", empty_graph(3)}, {"P3", path(3)},     {"K3", complete(3)},
                                                {"C4", cycle(4)}};
    int count = 0;
    for (const auto& e : catalog()) {
        if (e.graph.order() > 12 || classify(e.name, e.graph) != ClassLabel::D) continue;
        for (Vertex u : e.graph.vertices()) {
            for (const auto& [hn, h] : hs) {
                const Graph b = blow_up(e.graph, u, h);
                if (b.order() > 16) continue;
                const std::string name = e.name + "_" + std::to_string(u) + "[" + hn + "]";
                count++;
                if (const auto c = classify(name, b); c != ClassLabel::D) v.fail(name + " " + label(c));
            }
        }
    }
    if (const auto c = classify("C5", cycle(5)); c != ClassLabel::S) v.fail("C5 " + label(c));
    for (Vertex u : cycle(5).vertices()) {
        const std::string name = "C5_" + std::to_string(u) + "[C4]";
        if (const auto c = classify(name, blow_up(cycle(5), u, cycle(4))); c != ClassLabel::D) {
            v.fail(name + " " + label(c));
        }
    }
    v.note(std::to_string(count) + " blow-ups D; C5 S while every C5_u[C4] is D");
    return v;
}

Verdict
reductions()
{
    Verdict v;
    const auto t0 = Clock::now();
    int formulas = 0;
    for (int n = 1; n <= 3; n++) {
        const int subsets = (1 << n) - 1;
        // clause lists of 0..3 distinct nonempty subsets of {1..n}
        std::vector<int> pick;
        std::function<void(int)> walk = [&](int start) {
            std::vector<std::vector<int>> clauses;
            for (int mask : pick) {
                std::vector<int> c;
                for (int x = 0; x < n; x++) {
                    if (mask >> x & 1) c.push_back(x + 1);
                }
                clauses.push_back(c);
            }
            const PosCnf f = PosCnf::make(n, clauses);
            formulas++;
            const ReductionReport r = reduction_equivalence_check(f);
            if (!r.ok) v.fail("formula " + write_pos_cnf(f));
            for (const std::string construction : {"split", "bipartite"}) {
                std::optional<Player> d, s;
                for (const auto& row : r.rows) {
                    if (row.construction != construction) continue;
                    (row.cnf_first == CnfPlayer::Prover ? d : s) = row.mbtd_winner;
                }
                if (d && s) record(construction + " " + std::to_string(formulas), *d, *s);
            }
            if (pick.size() == 3) return;
            for (int mask = start; mask <= subsets; mask++) {
                pick.push_back(mask);
                walk(mask + 1);
                pick.pop_back();
            }
        };
        walk(1);
    }
    const double t = seconds_since(t0);
    if (t >= kReductionSeconds) v.fail("took " + fmt(t));
    v.note(std::to_string(formulas) + " formulas, both constructions and orders");
    return v;
}

Verdict
consistency()
{
    Verdict v;
    for (const Pair& p : pairs) {
        if (p.d_game == Player::Staller && p.s_game == Player::Dominator) v.fail(p.where);
    }
    v.note(std::to_string(pairs.size()) + " recorded pairs, none (Staller, Dominator)");
    return v;
}

}

int
main()
{
    const std::vector<std::pair<const char*, Verdict (*)()>> criteria = {
        {"cycles", cycles},
        {"grids", grids},
        {"prisms", prisms},
        {"P3 x cycles", p3_cycles},
        {"Petersen", petersen_graph},
        {"total domatic number", total_domatic},
        {"total domination formula", gamma_t_formula},
        {"subset graph classes", gnk_classes},
        {"D-minimality", d_minimality},
        {"cacti", cacti},
        {"trees", trees},
        {"union table", union_table},
        {"no skipping", no_skip},
        {"blow-ups", blow_ups},
        {"POS-CNF reductions", reductions},
        {"consistency", consistency},
    };

    int unexpected = 0;
    for (std::size_t i = 0; i < criteria.size(); i++) {
        const int id = static_cast<int>(i) + 1;
        Verdict v;
        const auto t0 = Clock::now();
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v.fail(std::string("exception: ") + e.what());
        }
        const auto known = std::find_if(kKnownFailures.begin(), kKnownFailures.end(),
                                        [&](const auto& k) { return k.first == id; });
        std::cout << (v.pass ? "PASS " : "FAIL ") << (id < 10 ? " " : "") << id << " " << criteria[i].first
                  << ": " << v.detail << " (" << fmt(seconds_since(t0)) << ")";
        if (known != kKnownFailures.end()) {
            std::cout << (v.pass ? " [known failure did not occur]" : " [known failure: " + known->second + "]");
            if (v.pass) unexpected++;
        } else if (!v.pass) {
            unexpected++;
        }
        std::cout << std::endl;
    }
    std::cout << (unexpected == 0 ? "acceptance: ok" : "acceptance: " + std::to_string(unexpected) + " unexpected")
              << std::endl;
    return unexpected == 0 ? 0 : 1;
}
