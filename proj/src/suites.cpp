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

#include "mbtd/suites.hpp"

#include <functional>
#include <map>

#include "mbtd/catalog.hpp"
#include "mbtd/classifiers.hpp"
#include "mbtd/error.hpp"
#include "mbtd/hypergraph.hpp"
#include "mbtd/strategy.hpp"
#include "mbtd/structural.hpp"

namespace mbtd {

namespace {

class Recorder
{
public:
    Recorder(std::ostream& out, SuiteOutcome& tally) : out_(out), tally_(tally) { }

    void check(const std::string& name, bool ok, const std::string& why = {})
    {
        if (ok) {
            tally_.passed++;
            out_ << "PASS " << name << '\n';
        } else {
            tally_.failed++;
            out_ << "FAIL " << name << (why.empty() ? "" : ": " + why) << '\n';
        }
    }

private:
    std::ostream& out_;
    SuiteOutcome& tally_;
};

bool
within(const Graph& g, const SolveOptions& o)
{
    return g.order() <= std::min(o.max_vertices, kMaxVertices);
}

std::string
got(ClassLabel c)
{
    return "got " + std::string(to_string(c));
}

void
table1(Recorder& rec, const SolveOptions& o)
{
    const std::pair<const char*, Graph> reps[] = {{"C4", cycle(4)}, {"C3", cycle(3)}, {"K2", complete(2)}};
    for (const auto& [na, a] : reps) {
        for (const auto& [nb, b] : reps) {
            const ClassLabel want = combine_union(outcome_class(a, o), outcome_class(b, o));
            const ClassLabel have = outcome_class(disjoint_union(a, b), o);
            rec.check(std::string(na) + "+" + nb + " -> " + std::string(to_string(want)), have == want, got(have));
        }
    }
}

void
noskip(Recorder& rec, const SolveOptions& o)
{
    for (const auto& e : catalog()) {
        if (e.graph.order() > 8) continue;
        const Hypergraph board = open_neighborhood_hypergraph(e.graph);
        for (Player first : {Player::Dominator, Player::Staller}) {
            const Player plain = solve(board, first, o).winner;
            for (Player passer : {Player::Dominator, Player::Staller}) {
                const Player with = solve_with_pass(board, first, passer, o).winner;
                rec.check(e.name + " first=" + std::string(to_string(first)) + " pass=" + std::string(to_string(passer)),
                          with == plain, "pass variant changes the winner");
            }
        }
    }
}

void
blowup(Recorder& rec, const SolveOptions& o)
{
    const std::pair<const char*, Graph> hs[] = {
        {"K1", empty_graph(1)}, {"K2", complete(2)}, {"2K1", empty_graph(2)}, {"P3", path(3)}};
    for (const auto& e : catalog()) {
        if (e.graph.order() > 8 || outcome_class(e.graph, o) != ClassLabel::D) continue;
        for (Vertex u : e.graph.vertices()) {
            for (const auto& [hn, h] : hs) {
                const Graph b = blow_up(e.graph, u, h);
                if (!within(b, o)) continue;
                const ClassLabel c = outcome_class(b, o);
                rec.check(e.name + "_" + std::to_string(u) + "[" + hn + "]", c == ClassLabel::D, got(c));
            }
        }
    }
    const ClassLabel c5 = outcome_class(cycle(5), o);
    rec.check("C5 is S", c5 == ClassLabel::S, got(c5));
    for (Vertex u : cycle(5).vertices()) {
        const ClassLabel c = outcome_class(blow_up(cycle(5), u, cycle(4)), o);
        rec.check("C5_" + std::to_string(u) + "[C4] is D", c == ClassLabel::D, got(c));
    }
}

void
tdom_implication(Recorder& rec, const SolveOptions& o)
{
    for (const auto& e : catalog()) {
        const Graph& g = e.graph;
        if (!within(g, o) || g.order() > kExhaustiveCap || g.min_degree() == 0) continue;
        if (!tdom_implies_staller(g)) continue;
        const Player s = solve(open_neighborhood_hypergraph(g), Player::Staller, o).winner;
        rec.check(e.name + " tdom=1 -> Staller wins S-game", s == Player::Staller, "Dominator won the S-game");
    }
}

void
for_each_small_cnf(const std::function<void(const PosCnf&, const std::string&)>& fn)
{
    for (int n = 1; n <= 3; n++) {
        const int subsets = (1 << n) - 1;
        std::vector<int> pick;
        std::function<void(int)> rec = [&](int start) {
            std::vector<std::vector<int>> clauses;
            std::string name = "n=" + std::to_string(n);
            for (int mask : pick) {
                std::vector<int> c;
                name += " {";
                for (int x = 0; x < n; x++) {
                    if (mask >> x & 1) {
                        c.push_back(x + 1);
                        name += std::to_string(x + 1);
                    }
                }
                name += "}";
                clauses.push_back(std::move(c));
            }
            fn(PosCnf::make(n, std::move(clauses)), name);
            if (pick.size() == 3) return;
            for (int mask = start; mask <= subsets; mask++) {
                pick.push_back(mask);
                rec(mask + 1);
                pick.pop_back();
            }
        };
        rec(1);
    }
}

void
reductions(Recorder& rec, const SolveOptions& o)
{
    for_each_small_cnf([&](const PosCnf& f, const std::string& name) {
        const ReductionReport r = reduction_equivalence_check(f, o);
        std::string why;
        for (const auto& row : r.rows) {
            if (!row.agrees) {
                why += row.construction + " " + std::string(to_string(row.cnf_first)) + "-first; ";
            }
        }
        rec.check(name, r.ok, why);
    });
}

void
strategies(Recorder& rec, const SolveOptions& o)
{
    auto verify = [&](const std::string& name, const Graph& g, const DominatorRule& rule, Player first) {
        const auto r = verify_strategy(g, rule, first, o.max_vertices);
        rec.check(name + " first=" + std::string(to_string(first)), r.verified,
                  "counterexample of length " + std::to_string(r.counterexample.size()));
    };
    for (Player first : {Player::Staller, Player::Dominator}) {
        const Graph g22 = grid(2, 2);
        verify("pairing P2xP2", g22, c4_pairing_strategy(g22, {{0, 1, 2, 3}}), first);
        const Graph g24 = grid(2, 4);
        verify("pairing P2xP4", g24, c4_pairing_strategy(g24, {{0, 1, 4, 5}, {2, 3, 6, 7}}), first);
        const Graph p34 = prism(3, 4);
        verify("pairing P3xC4 fibres", p34, c4_pairing_strategy(p34, {{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}}),
               first);
        for (int ell = 1; ell <= 3; ell++) {
            verify("prism-cycle P2xC" + std::to_string(2 * ell + 1), prism(2, 2 * ell + 1), prism_cycle_strategy(ell),
                   first);
        }
    }
    const auto c6 = verify_strategy(cycle(6), lowest_index_strategy(), Player::Dominator);
    rec.check("lowest-index on C6 is refuted", !c6.verified && !c6.counterexample.empty());
}

void
oracle(Recorder& rec, const SolveOptions& o)
{
    auto compare = [&](const std::string& name, const Graph& g, ClassLabel predicted) {
        if (!within(g, o)) return;
        const ClassLabel c = outcome_class(g, o);
        rec.check(name + " " + std::string(to_string(predicted)), c == predicted, "solver " + got(c));
    };
    for (int n = 3; n <= 12; n++) compare("C" + std::to_string(n), cycle(n), classify_cycle(n));
    for (int n = 1; n <= 12; n++) compare("P" + std::to_string(n), path(n), classify_path(n));
    for (int m = 2; m <= 10; m++) {
        for (int n = m; m * n <= 20; n++) {
            compare("P" + std::to_string(m) + "xP" + std::to_string(n), grid(m, n), classify_grid(m, n));
        }
    }
    for (int rows = 2; rows <= 6; rows++) {
        for (int m = 3; rows * m <= 18; m++) {
            const PartialOutcome p = classify_prism_cycle(rows, m);
            const std::string name = "P" + std::to_string(rows) + "xC" + std::to_string(m);
            const Outcome s = solve_outcome(prism(rows, m), GameKind::TotalDomination, o);
            const bool ok = (!p.d_game || *p.d_game == s.d_game) && (!p.s_game || *p.s_game == s.s_game);
            rec.check(name + " partial", ok, "solver " + got(s.label));
        }
    }
    for (int n = 1; n <= 10; n++) {
        for (const Graph& t : nonisomorphic_trees(n)) compare(t.name(), t, classify_tree(t));
    }
    for (std::uint64_t seed = 0; seed < 200; seed++) {
        const Graph g = random_cactus(4 + static_cast<int>(seed % 10), seed);
        compare("cactus seed=" + std::to_string(seed), g, classify_cactus(g));
    }
    SolveOptions other = o;
    other.memo_key = o.memo_key == MemoKey::Claims ? MemoKey::Reduced : MemoKey::Claims;
    other.prune_dead_moves = true;
    for (const auto& e : catalog()) {
        if (!within(e.graph, o)) continue;
        const ClassLabel a = outcome_class(e.graph, o);
        const ClassLabel b = outcome_class(e.graph, other);
        rec.check(e.name + " memo keys agree", a == b, got(a) + " vs " + got(b));
    }
}

using SuiteFn = void (*)(Recorder&, const SolveOptions&);

const std::map<std::string, SuiteFn, std::less<>>&
registry()
{
    static const std::map<std::string, SuiteFn, std::less<>> r{
        {"table1", table1},         {"noskip", noskip},
        {"blowup", blowup},         {"tdom-implication", tdom_implication},
        {"reductions", reductions}, {"strategies", strategies},
        {"oracle", oracle}};
    return r;
}

}

const std::vector<std::string>&
suite_names()
{
    static const std::vector<std::string> names{"table1",     "noskip",     "blowup", "tdom-implication",
                                                "reductions", "strategies", "oracle"};
    return names;
}

SuiteOutcome
run_suite(std::string_view name, std::ostream& out, const SolveOptions& options)
{
    const auto it = registry().find(name);
    if (it == registry().end()) throw InvalidArgument("unknown suite '" + std::string(name) + "'");
    SuiteOutcome tally;
    Recorder rec(out, tally);
    it->second(rec, options);
    return tally;
}

}
