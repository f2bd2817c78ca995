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

#ifndef MBTD_STRUCTURAL_HPP
#define MBTD_STRUCTURAL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mbtd/graph.hpp"
#include "mbtd/solver.hpp"

namespace mbtd {

inline constexpr int kExhaustiveCap = 20;
inline constexpr int kPosCnfCap = 12;

bool is_total_dominating_set(const Graph& g, VertexSet s);

struct TotalDominatingSet
{
    int size = 0;
    VertexSet witness;
};

/// Minimum total dominating set. Throws InvalidArgument on isolated vertices, CapExceeded above `cap`.
TotalDominatingSet min_total_dominating_set(const Graph& g, int cap = kExhaustiveCap);
int gamma_t(const Graph& g, int cap = kExhaustiveCap);

struct TotalDomaticPartition
{
    int tdom = 0;
    /// `tdom` disjoint total dominating sets covering V.
    std::vector<VertexSet> classes;
};

TotalDomaticPartition total_domatic_partition(const Graph& g, int cap = kExhaustiveCap);
int tdom(const Graph& g, int cap = kExhaustiveCap);
/// True when V(g) splits into k total dominating sets (exhaustive search).
bool tdom_at_least(const Graph& g, int k, int cap = kExhaustiveCap);

/// Staller when tdom(g) = 1 (she then wins the S-game); nothing otherwise.
std::optional<Player> tdom_implies_staller(const Graph& g, int cap = kExhaustiveCap);

struct StructuralReport
{
    std::optional<int> gamma_t;
    std::optional<int> tdom;
    std::optional<VertexSet> gamma_t_witness;
    std::vector<VertexSet> tdom_witness;
};

/// Fields stay empty where the quantity is undefined or over the cap.
StructuralReport structural_report(const Graph& g, int cap = kExhaustiveCap);

/// True iff g is class D and no single-edge deletion is.
bool d_minimal_check(const Graph& g, const SolveOptions& options = {});

/// Positive CNF; clauses hold sorted distinct 1-based variables.
struct PosCnf
{
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;

    /// Throws InvalidArgument on empty clauses or variables outside 1..num_vars.
    static PosCnf make(int num_vars, std::vector<std::vector<int>> clauses);
    friend bool operator==(const PosCnf&, const PosCnf&) = default;
};

/// "nvars nclauses" then one 0-terminated clause per line; '#' starts a comment line.
PosCnf parse_pos_cnf(std::string_view text);
PosCnf read_pos_cnf_file(const std::string& path);
std::string write_pos_cnf(const PosCnf& f);

enum class CnfPlayer { Prover, Disprover };
std::string_view to_string(CnfPlayer p);

/// Exhaustive game value. Throws CapExceeded above kPosCnfCap variables.
CnfPlayer pos_cnf_winner(const PosCnf& f, CnfPlayer first);

/// Clique u_1..u_n' (n' = max(n,4)), then one independent v_j per clause.
Graph to_split_graph(const PosCnf& f);
/// Independent u_1..u_n', clause vertices, then w and w' joined to every u_i.
Graph to_bipartite_graph(const PosCnf& f);

struct ReductionRow
{
    std::string construction;
    CnfPlayer cnf_first;
    CnfPlayer cnf_winner;
    Player mbtd_winner;
    bool agrees;
};

struct ReductionReport
{
    bool ok = true;
    std::vector<ReductionRow> rows;
};

/// Prover moving first is matched with Dominator moving first.
ReductionReport reduction_equivalence_check(const PosCnf& f, const SolveOptions& options = {});

}

#endif
