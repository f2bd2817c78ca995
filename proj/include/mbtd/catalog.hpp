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

#ifndef MBTD_CATALOG_HPP
#define MBTD_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "mbtd/graph.hpp"
#include "mbtd/solver.hpp"

namespace mbtd {

/// Cactus made of four pendant-linked 4-cycles (16 vertices), class D.
Graph cactus_exemplar_d();
/// Star-like cactus with five removable 4-cycles (28 vertices), class N.
Graph cactus_exemplar_n();
/// Two 4-cycles hung on a small core (12 vertices), class S.
Graph cactus_exemplar_s();

struct CatalogEntry
{
    std::string name;
    Graph graph;
    /// Published class where one is known.
    std::optional<ClassLabel> expected;
};

/// Named small graphs used by the verification suites.
std::vector<CatalogEntry> catalog();

}

#endif
