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

#include "cli.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mbtd/classifiers.hpp"
#include "mbtd/error.hpp"
#include "mbtd/graph_io.hpp"
#include "mbtd/hypergraph.hpp"
#include "mbtd/structural.hpp"
#include "mbtd/suites.hpp"

namespace mbtd::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string
vertex_name(const Graph& g, Vertex v)
{
    return g.has_labels() ? g.label(v) + "#" + std::to_string(v) : std::to_string(v);
}

Json
vertex_list(const Graph& g, VertexSet s)
{
    Json a = Json::array();
    for (Vertex v : s) a.push_back(vertex_name(g, v));
    return a;
}

Json
winner_json(std::optional<Player> p)
{
    return p ? Json(std::string(to_string(*p))) : Json(nullptr);
}

Json
edges_json(const Graph& g)
{
    Json a = Json::array();
    for (Edge e : g.edges()) a.push_back({e.u, e.v});
    return a;
}

void
apply_seed(FamilySpec& f, std::uint64_t seed)
{
    if (f.kind == FamilyKind::Cactus && !f.seed_given) f.seed = seed;
    for (auto& c : f.children) apply_seed(c, seed);
}

bool
needs_seed(const FamilySpec& f)
{
    if (f.kind == FamilyKind::Cactus && !f.seed_given) return true;
    for (const auto& c : f.children) {
        if (needs_seed(c)) return true;
    }
    return false;
}

struct GraphArgs
{
    std::string spec;
    std::optional<std::uint64_t> seed;

    FamilySpec family() const
    {
        FamilySpec f = parse_family(spec);
        apply_seed(f, seed.value_or(0));
        return f;
    }
};

Json
header(const Graph& g, const GraphArgs& a)
{
    Json j;
    j["graph"] = g.name();
    j["order"] = g.order();
    j["size"] = g.size();
    // the seed actually used, or null when nothing in the spec draws on it
    const bool used = a.seed || needs_seed(parse_family(a.spec));
    j["seed"] = used ? Json(a.seed.value_or(0)) : Json(nullptr);
    return j;
}

SolveOptions
solve_options(std::uint64_t budget, int threads, const std::string& memo)
{
    SolveOptions o;
    o.node_budget = budget;
    o.threads = threads;
    o.memo_key = memo == "reduced" ? MemoKey::Reduced : MemoKey::Claims;
    return o;
}

struct Classification
{
    PartialOutcome outcome;
    std::string method;
    std::optional<CactusClassification> cactus;
};

Classification
closed_form(const FamilySpec& f, const Graph& g)
{
    const auto& p = f.params;
    switch (f.kind) {
    case FamilyKind::Cycle: return {PartialOutcome::of(classify_cycle(p[0])), "prop-cycles", {}};
    case FamilyKind::Path: return {PartialOutcome::of(classify_path(p[0])), "thm-trees", {}};
    case FamilyKind::Grid:
        if (p[0] == 1 || p[1] == 1) return {PartialOutcome::of(classify_path(p[0] * p[1])), "thm-trees", {}};
        return {PartialOutcome::of(classify_grid(p[0], p[1])), "thm-grids", {}};
    case FamilyKind::Prism:
        if (p[0] == 1) return {PartialOutcome::of(classify_cycle(p[1])), "prop-cycles", {}};
        if (p[0] % 2 == 0) return {classify_prism_cycle(p[0], p[1]), "thm-prism-even", {}};
        if (p[1] == 4) return {classify_prism_cycle(p[0], p[1]), "prism-c4-fibers", {}};
        if (p[0] == 3) return {classify_prism_cycle(p[0], p[1]), "thm-p3-cycle", {}};
        return {classify_prism_cycle(p[0], p[1]), "none", {}};
    case FamilyKind::Gnk:
        if (p[0] >= 2 * p[1]) return {PartialOutcome::of(ClassLabel::S), "thm-gnk", {}};
        break;
    default: break;
    }
    if (g.order() > 0 && is_connected(g)) {
        if (is_tree(g)) return {PartialOutcome::of(classify_tree(g)), "thm-trees", {}};
        if (is_cactus(g)) {
            CactusClassification c = classify_cactus_with_witness(g);
            return {PartialOutcome::of(c.label), "thm-cactus", std::move(c)};
        }
    }
    return {PartialOutcome::make(std::nullopt, std::nullopt), "none", {}};
}

Json
partial_json(const PartialOutcome& p)
{
    Json j;
    j["d_game"] = p.d_game ? Json(std::string(to_string(*p.d_game))) : Json("unknown");
    j["s_game"] = p.s_game ? Json(std::string(to_string(*p.s_game))) : Json("unknown");
    j["class"] = p.label ? Json(std::string(to_string(*p.label))) : Json(nullptr);
    return j;
}

int
cmd_solve(const GraphArgs& ga, const std::string& first, const std::string& game, std::uint64_t budget,
          int threads, const std::string& memo, std::ostream& out)
{
    const Graph g = build_family(ga.family());
    const GameKind kind = game == "mbd" ? GameKind::Domination : GameKind::TotalDomination;
    const Hypergraph board = board_for(g, kind);
    const SolveOptions opts = solve_options(budget, threads, memo);

    std::optional<Player> d_game, s_game;
    std::vector<Vertex> pv;
    std::uint64_t nodes = 0;
    for (Player p : {Player::Dominator, Player::Staller}) {
        if (first != "both" && first != (p == Player::Dominator ? "dominator" : "staller")) continue;
        Solver solver(board, opts);
        const Position start = Position::start(p);
        const Player w = solver.winner(start);
        (p == Player::Dominator ? d_game : s_game) = w;
        if (pv.empty()) pv = solver.principal_variation(start);
        nodes += solver.nodes_expanded();
    }

    Json j = header(g, ga);
    j["game"] = game;
    j["d_game"] = winner_json(d_game);
    j["s_game"] = winner_json(s_game);
    j["class"] = d_game && s_game ? Json(std::string(to_string(class_from_winners(*d_game, *s_game)))) : Json(nullptr);
    j["pv_game"] = first == "staller" ? "s_game" : "d_game";
    j["pv"] = pv;
    Json names = Json::array();
    for (Vertex v : pv) names.push_back(vertex_name(g, v));
    j["pv_labels"] = names;
    j["nodes"] = nodes;
    j["budget"] = budget;
    out << j.dump(2) << '\n';
    return kOk;
}

int
cmd_classify(const GraphArgs& ga, std::uint64_t budget, std::ostream& out)
{
    const FamilySpec f = ga.family();
    const Graph g = build_family(f);
    const SolveOptions opts = solve_options(budget, 1, "claims");
    Classification c = closed_form(f, g);

    Json j = header(g, ga);
    const bool complete = c.outcome.label.has_value();
    if (!complete && c.method == "none") {
        // nothing closed-form applies; the exhaustive answer is the answer
        const Outcome o = solve_outcome(g, GameKind::TotalDomination, opts);
        c = {PartialOutcome::make(o.d_game, o.s_game), "exhaustive", {}};
    }
    j.update(partial_json(c.outcome));
    j["method"] = c.method;
    if (c.cactus) {
        Json removed = Json::array();
        for (VertexSet b : c.cactus->removed) removed.push_back(vertex_list(g, b));
        j["witness"] = {{"removed", removed}, {"remainder", vertex_list(g, c.cactus->remainder)}};
    }
    if (!c.outcome.label) {
        // a partial closed form: settle the rest by search when it fits
        if (g.order() <= solver_vertex_cap()) {
            j["exhaustive"] = partial_json(PartialOutcome::of(outcome_class(g, opts)));
        } else {
            j["exhaustive"] = nullptr;
        }
    }
    j["budget"] = budget;
    out << j.dump(2) << '\n';
    return kOk;
}

int
cmd_family(const GraphArgs& ga, std::ostream& out)
{
    const Graph g = build_family(ga.family());
    Json j = header(g, ga);
    j["edges"] = edges_json(g);
    Json labels = Json::array();
    for (Vertex v : g.vertices()) labels.push_back(g.label(v));
    j["labels"] = labels;
    j["connected"] = g.order() > 0 && is_connected(g);
    j["bipartite"] = is_bipartite(g);
    j["min_degree"] = g.order() > 0 ? g.min_degree() : 0;
    j["girth"] = girth(g);
    j["diameter"] = diameter(g);
    out << j.dump(2) << '\n';
    return kOk;
}

int
cmd_tdom(const GraphArgs& ga, int cap, std::ostream& out)
{
    const Graph g = build_family(ga.family());
    const TotalDomaticPartition p = total_domatic_partition(g, cap);
    Json j = header(g, ga);
    j["tdom"] = p.tdom;
    Json classes = Json::array();
    for (VertexSet c : p.classes) classes.push_back(vertex_list(g, c));
    j["partition"] = classes;
    j["tdom_implies_staller"] = p.tdom == 1;
    out << j.dump(2) << '\n';
    return kOk;
}

int
cmd_gammat(const GraphArgs& ga, int cap, std::ostream& out)
{
    const Graph g = build_family(ga.family());
    const TotalDominatingSet t = min_total_dominating_set(g, cap);
    Json j = header(g, ga);
    j["gamma_t"] = t.size;
    j["witness"] = vertex_list(g, t.witness);
    out << j.dump(2) << '\n';
    return kOk;
}

int
cmd_dmin(const GraphArgs& ga, std::uint64_t budget, std::ostream& out)
{
    const Graph g = build_family(ga.family());
    const SolveOptions opts = solve_options(budget, 1, "claims");
    Json j = header(g, ga);
    j["class"] = std::string(to_string(outcome_class(g, opts)));
    j["d_minimal"] = d_minimal_check(g, opts);
    j["budget"] = budget;
    out << j.dump(2) << '\n';
    return kOk;
}

Json
construction_json(const Graph& g)
{
    Json j;
    j["order"] = g.order();
    Json labels = Json::array();
    for (Vertex v : g.vertices()) labels.push_back(g.label(v));
    j["labels"] = labels;
    j["edges"] = edges_json(g);
    return j;
}

int
cmd_reduce(const std::string& file, bool check, std::uint64_t budget, std::ostream& out)
{
    const PosCnf f = read_pos_cnf_file(file);
    Json j;
    j["formula"] = {{"vars", f.num_vars}, {"clauses", f.clauses}};
    j["prover_first"] = std::string(to_string(pos_cnf_winner(f, CnfPlayer::Prover)));
    j["disprover_first"] = std::string(to_string(pos_cnf_winner(f, CnfPlayer::Disprover)));
    j["split"] = construction_json(to_split_graph(f));
    j["bipartite"] = construction_json(to_bipartite_graph(f));
    int code = kOk;
    if (check) {
        const ReductionReport r = reduction_equivalence_check(f, solve_options(budget, 1, "claims"));
        Json rows = Json::array();
        for (const auto& row : r.rows) {
            rows.push_back({{"construction", row.construction},
                            {"cnf_first", std::string(to_string(row.cnf_first))},
                            {"cnf_winner", std::string(to_string(row.cnf_winner))},
                            {"mbtd_winner", std::string(to_string(row.mbtd_winner))},
                            {"agrees", row.agrees}});
        }
        j["equivalence"] = {{"ok", r.ok}, {"rows", rows}};
        if (!r.ok) code = kVerifyFailed;
    }
    j["budget"] = budget;
    out << j.dump(2) << '\n';
    return code;
}

int
cmd_verify(const std::string& suite, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
    bool ok = true;
    for (const auto& name : names) {
        const SuiteOutcome r = run_suite(name, out);
        err << name << ": " << r.passed << " passed, " << r.failed << " failed\n";
        ok = ok && r.ok();
    }
    return ok ? kOk : kVerifyFailed;
}

std::string
set_text(const Graph& g, VertexSet s)
{
    std::string text = "{";
    for (Vertex v : s) text += (text.size() > 1 ? " " : "") + vertex_name(g, v);
    return text + "}";
}

int
cmd_play(const GraphArgs& ga, const std::string& side, const std::string& first, const std::string& game,
         std::istream& in, std::ostream& out)
{
    const Graph g = build_family(ga.family());
    const Hypergraph board = board_for(g, game == "mbd" ? GameKind::Domination : GameKind::TotalDomination);
    Solver engine(board);
    const Player human = side == "dominator" ? Player::Dominator : Player::Staller;
    Position pos = Position::start(first == "dominator" ? Player::Dominator : Player::Staller);

    out << g.name() << ": " << g.order() << " vertices, you play " << to_string(human) << ", "
        << to_string(pos.to_move) << " moves first\n";
    out << "engine: " << to_string(engine.winner(pos)) << " wins with best play\n";
    for (;;) {
        out << "Dominator " << set_text(g, pos.dom) << "  Staller " << set_text(g, pos.sta) << '\n';
        if (staller_won(board, pos)) {
            out << "Staller wins\n";
            return kOk;
        }
        if (dominator_won(board, pos) || pos.claimed() == board.universe()) {
            out << "Dominator wins\n";
            return kOk;
        }
        if (pos.to_move != human) {
            const Vertex v = engine.best_move(pos);
            out << "engine plays " << vertex_name(g, v) << '\n';
            pos = pos.play(v);
            continue;
        }
        out << "your move> " << std::flush;
        std::string line;
        if (!std::getline(in, line)) {
            out << "\nend of input\n";
            return kOk;
        }
        std::istringstream parse(line);
        long long v = -1;
        std::string rest;
        if (!(parse >> v) || (parse >> rest)) {
            out << "enter one vertex index\n";
            continue;
        }
        if (v < 0 || v >= g.order() || pos.claimed().contains(static_cast<Vertex>(v))) {
            out << "vertex " << line << " is not free\n";
            continue;
        }
        pos = pos.play(static_cast<Vertex>(v));
        out << "engine: " << to_string(engine.winner(pos)) << " wins with best play\n";
    }
}

}

int
run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Maker-Breaker total domination game toolkit", "mbtd"};
    app.require_subcommand(1);

    GraphArgs ga;
    std::string first = "both", game = "mbtd", memo = "claims", side = "staller", play_first = "dominator";
    std::string suite, file;
    std::uint64_t budget = 0;
    int threads = 1, cap = kExhaustiveCap;
    bool check = false;

    auto graph_cmd = [&](const char* name, const char* about) {
        CLI::App* c = app.add_subcommand(name, about);
        c->add_option("graph", ga.spec, "family spec, e.g. grid:3x4 or file:g.txt")->required();
        c->add_option("--seed", ga.seed, "seed for random families given without one");
        return c;
    };
    auto game_opt = [&](CLI::App* c) {
        c->add_option("--game", game, "mbtd (open neighbourhoods) or mbd (closed)")
            ->check(CLI::IsMember({"mbtd", "mbd"}));
    };

    CLI::App* solve = graph_cmd("solve", "exact outcome of the game");
    solve->add_option("--first", first, "which game(s) to solve")->check(CLI::IsMember({"dominator", "staller", "both"}));
    game_opt(solve);
    solve->add_option("--budget", budget, "node budget per solve, 0 for none");
    solve->add_option("--threads", threads, "root-level worker threads")->check(CLI::Range(1, 256));
    solve->add_option("--memo", memo, "transposition key")->check(CLI::IsMember({"claims", "reduced"}));

    CLI::App* classify = graph_cmd("classify", "closed-form class where one is known");
    classify->add_option("--budget", budget, "node budget for the exhaustive fallback");

    CLI::App* family = graph_cmd("family", "build a graph and describe it");
    CLI::App* tdomc = graph_cmd("tdom", "total domatic number with a partition");
    tdomc->add_option("--cap", cap, "vertex cap of the exhaustive search")->check(CLI::Range(1, kMaxVertices));
    CLI::App* gammat = graph_cmd("gammat", "total domination number with a witness");
    gammat->add_option("--cap", cap, "vertex cap of the exhaustive search")->check(CLI::Range(1, kMaxVertices));
    CLI::App* dmin = graph_cmd("dmin", "check D-minimality");
    dmin->add_option("--budget", budget, "node budget per solve");

    CLI::App* reduce = app.add_subcommand("reduce", "POS-CNF to split and bipartite graphs");
    reduce->add_option("formula", file, "formula file")->required();
    reduce->add_flag("--check", check, "solve both constructions and compare with the formula game");
    reduce->add_option("--budget", budget, "node budget per solve");

    CLI::App* verify = app.add_subcommand("verify", "run a property suite");
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suites));

    CLI::App* play = graph_cmd("play", "play against the engine");
    play->add_option("--side", side, "your side")->check(CLI::IsMember({"dominator", "staller"}));
    play->add_option("--first", play_first, "who moves first")->check(CLI::IsMember({"dominator", "staller"}));
    game_opt(play);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (solve->parsed()) return cmd_solve(ga, first, game, budget, threads, memo, out);
        if (classify->parsed()) return cmd_classify(ga, budget, out);
        if (family->parsed()) return cmd_family(ga, out);
        if (tdomc->parsed()) return cmd_tdom(ga, cap, out);
        if (gammat->parsed()) return cmd_gammat(ga, cap, out);
        if (dmin->parsed()) return cmd_dmin(ga, budget, out);
        if (reduce->parsed()) return cmd_reduce(file, check, budget, out);
        if (verify->parsed()) return cmd_verify(suite, out, err);
        if (play->parsed()) return cmd_play(ga, side, play_first, game, in, out);
    } catch (const ParseError& e) {
        err << "mbtd: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidArgument& e) {
        err << "mbtd: " << e.what() << '\n';
        return kUsage;
    } catch (const CapExceeded& e) {
        err << "mbtd: " << e.what() << '\n';
        return kResource;
    } catch (const BudgetExceeded& e) {
        err << "mbtd: " << e.what() << " (after " << e.nodes() << " nodes)\n";
        return kResource;
    } catch (const std::exception& e) {
        err << "mbtd: " << e.what() << '\n';
        return kVerifyFailed;
    }
    return kUsage;
}

}
