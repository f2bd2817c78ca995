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

#ifndef MBTD_GRAPH_IO_HPP
#define MBTD_GRAPH_IO_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mbtd/graph.hpp"

namespace mbtd {

/**
 * Edge-list text format:
 *
 *     n m
 *     u v        (m lines, 0 <= u < v < n)
 *
 * '#' lines and blank lines are ignored, CRLF is accepted.
 */
Graph parse_graph_text(std::string_view text, std::string name = {});
std::string write_graph_text(const Graph& g);
Graph read_graph_file(const std::string& path);

enum class FamilyKind
{
    Path,
    Cycle,
    Star,
    Complete,
    CompleteBipartite,
    Grid,
    Prism,
    Gnk,
    Petersen,
    Heawood,
    Cactus,
    Cartesian,
    Lexicographic,
    Union,
    File,
    CactusFile,
};

/**
 * Parsed family expression, e.g. `grid:3x4` or `cartesian(path:2,cycle:5)`.
 * Random cacti are `cactus:SEED,N` or `cactus:N`.
 */
struct FamilySpec
{
    FamilyKind kind = FamilyKind::Path;
    std::vector<int> params;
    std::vector<FamilySpec> children;
    std::string file;
    std::uint64_t seed = 0;
    /// False for `cactus:N`, whose seed is left to the caller.
    bool seed_given = true;
    std::string text;
};

FamilySpec parse_family(std::string_view spec);
Graph build_family(const FamilySpec& spec);
inline Graph graph_from_spec(std::string_view spec) { return build_family(parse_family(spec)); }

}

#endif
