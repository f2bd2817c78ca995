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

#include "mbtd/catalog.hpp"

#include <map>

namespace mbtd {

namespace {

class NamedBuilder
{
public:
    explicit NamedBuilder(std::initializer_list<const char*> names)
    {
        for (const char* s : names) {
            index_[s] = static_cast<Vertex>(labels_.size());
            labels_.push_back(s);
        }
    }

    // chain a-b-c-...; close=true also joins last to first
    NamedBuilder& walk(std::initializer_list<const char*> names, bool close = false)
    {
        const std::vector<const char*> v(names);
        for (std::size_t i = 0; i + 1 < v.size(); i++) edges_.push_back({index_.at(v[i]), index_.at(v[i + 1])});
        if (close) edges_.push_back({index_.at(v.back()), index_.at(v.front())});
        return *this;
    }

    Graph build(std::string name) const
    {
        return Graph::from_edge_list(static_cast<int>(labels_.size()), edges_, std::move(name)).with_labels(labels_);
    }

private:
    std::map<std::string, Vertex> index_;
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
};

}

Graph
cactus_exemplar_d()
{
    NamedBuilder b({"a1", "b1", "c1", "d1", "a2", "b2", "c2", "d2", "a3", "b3", "c3", "d3", "a4", "b4", "c4", "d4"});
    b.walk({"a1", "b1", "c1", "d1"}, true)
        .walk({"a2", "b2", "c2", "d2"}, true)
        .walk({"a3", "b3", "c3", "d3"}, true)
        .walk({"a4", "b4", "c4", "d4"}, true)
        .walk({"a1", "a3", "a4"}, true)
        .walk({"b1", "a2"});
    return b.build("cactus-d");
}

Graph
cactus_exemplar_n()
{
    NamedBuilder b({"cent", "a", "b", "c", "d", "e", "f", "t1", "t2", "h1", "h2", "v1", "v2", "v3",
                    "w1", "w2", "w3", "x1", "x2", "x3", "y1", "y2", "y3", "y4", "z1", "z2", "z3", "z4"});
    b.walk({"cent", "a"})
        .walk({"cent", "b", "c"}, true)
        .walk({"cent", "d"})
        .walk({"cent", "e", "h1", "h2", "f"}, true)
        .walk({"b", "t1", "t2"}, true)
        .walk({"t1", "v1", "v2", "v3"}, true)
        .walk({"t2", "w1", "w2", "w3"}, true)
        .walk({"d", "x1", "x2", "x3"}, true)
        .walk({"y1", "y2", "y3", "y4"}, true)
        .walk({"z1", "z2", "z3", "z4"}, true)
        .walk({"h2", "y1"})
        .walk({"y3", "z1"});
    return b.build("cactus-n");
}

Graph
cactus_exemplar_s()
{
    NamedBuilder b({"a", "b", "c", "d", "e1", "e2", "e3", "e4", "f1", "f2", "f3", "f4"});
    b.walk({"e1", "e2", "e3", "e4"}, true)
        .walk({"e1", "a", "c", "d", "f1"})
        .walk({"f1", "f2", "f3", "f4"}, true)
        .walk({"f1", "c"})
        .walk({"a", "b"});
    return b.build("cactus-s");
}

std::vector<CatalogEntry>
catalog()
{
    using C = ClassLabel;
    std::vector<CatalogEntry> out;
    auto add = [&](Graph g, std::optional<ClassLabel> expected) {
        std::string name = g.name();
        out.push_back({std::move(name), std::move(g), expected});
    };
    add(empty_graph(1).named("K1"), C::S);
    add(complete(2).named("K2"), C::S);
    for (int n = 3; n <= 10; n++) add(cycle(n).named("C" + std::to_string(n)), n == 3 ? C::N : n == 4 ? C::D : C::S);
    for (int n = 3; n <= 8; n++) add(path(n).named("P" + std::to_string(n)), n == 3 ? C::N : C::S);
    for (int k = 3; k <= 5; k++) add(star(k).named("K1," + std::to_string(k)), C::N);
    add(complete_bipartite(2, 2).named("K2,2"), C::D);
    add(complete_bipartite(2, 3).named("K2,3"), C::D);
    add(complete_bipartite(2, 4).named("K2,4"), C::D);
    add(complete(4).named("K4"), std::nullopt);
    add(complete(5).named("K5"), std::nullopt);
    for (auto [m, n] : {std::pair{2, 3}, {2, 4}, {3, 3}, {2, 5}, {3, 4}, {4, 4}}) {
        add(grid(m, n).named("P" + std::to_string(m) + "xP" + std::to_string(n)),
            m % 2 == 0 && n % 2 == 0 ? C::D : C::S);
    }
    for (int m = 3; m <= 6; m++) add(prism(2, m).named("P2xC" + std::to_string(m)), C::D);
    add(prism(3, 4).named("P3xC4"), C::D);
    add(prism(4, 3).named("P4xC3"), C::D);
    add(prism(3, 3).named("P3xC3"), std::nullopt);
    add(petersen().named("Petersen"), C::S);
    add(heawood().named("Heawood"), std::nullopt);
    add(gnk(2, 1).named("G2,1"), C::S);
    add(gnk(3, 1).named("G3,1"), C::S);
    add(gnk(3, 2).named("G3,2"), C::S);
    add(gnk(4, 2).named("G4,2"), C::S);
    add(disjoint_union(cycle(4), cycle(4)).named("2C4"), C::D);
    add(disjoint_union(cycle(4), cycle(3)).named("C4+C3"), C::N);
    add(blow_up(cycle(5), 0, cycle(4)).named("C5[C4]"), C::D);
    add(cactus_exemplar_d(), C::D);
    add(cactus_exemplar_n(), C::N);
    add(cactus_exemplar_s(), C::S);
    return out;
}

}
