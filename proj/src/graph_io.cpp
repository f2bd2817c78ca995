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

#include "mbtd/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "mbtd/error.hpp"
#include "text_lines.hpp"

namespace mbtd {

using detail::content_lines;
using detail::integers;

Graph
parse_graph_text(std::string_view text, std::string name)
{
    auto lines = content_lines(text);
    if (lines.empty()) throw ParseError("missing 'n m' header");
    auto head = integers(lines[0], 1);
    if (head.size() != 2 || head[0] < 0 || head[1] < 0) throw ParseError("header must be 'n m'");
    const long long n = head[0], m = head[1];
    if (n > kMaxVertices) throw ParseError("graph has more than " + std::to_string(kMaxVertices) + " vertices");
    if (static_cast<long long>(lines.size()) - 1 != m) {
        throw ParseError("expected " + std::to_string(m) + " edge lines, found " + std::to_string(lines.size() - 1));
    }
    std::vector<Edge> es;
    for (std::size_t i = 1; i < lines.size(); i++) {
        auto uv = integers(lines[i], i + 1);
        if (uv.size() != 2) throw ParseError("edge line must be 'u v': '" + std::string(lines[i]) + "'");
        if (uv[0] < 0 || uv[1] >= n || uv[0] >= uv[1]) {
            throw ParseError("edge '" + std::string(lines[i]) + "' violates 0 <= u < v < n");
        }
        es.push_back({static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1])});
    }
    return Graph::from_edge_list(static_cast<int>(n), es, std::move(name));
}

std::string
write_graph_text(const Graph& g)
{
    std::ostringstream out;
    auto es = g.edges();
    out << g.order() << ' ' << es.size() << '\n';
    for (Edge e : es) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Graph
read_graph_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open graph file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph_text(buf.str(), path);
}

namespace {

class SpecParser
{
public:
    explicit SpecParser(std::string_view s) : s_(s) { }

    FamilySpec parse_all()
    {
        FamilySpec f = parse(0);
        if (pos_ != s_.size()) fail("trailing characters");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& why) const
    {
        throw ParseError("family spec '" + std::string(s_) + "': " + why + " at offset " + std::to_string(pos_));
    }

    bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
    void expect(char c)
    {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        pos_++;
    }

    std::string ident()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-' ||
                                    s_[pos_] == '_')) {
            pos_++;
        }
        if (start == pos_) fail("expected a family name");
        return std::string(s_.substr(start, pos_ - start));
    }

    long long number()
    {
        long long v = 0;
        auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
        if (ec != std::errc()) fail("expected a number");
        pos_ = static_cast<std::size_t>(ptr - s_.data());
        return v;
    }

    // numbers separated by `sep`; stops when the separator is not followed by a digit
    std::vector<long long> numbers(char sep, std::size_t count)
    {
        std::vector<long long> out{number()};
        while (out.size() < count && peek(sep)) {
            pos_++;
            out.push_back(number());
        }
        if (out.size() != count) fail("expected " + std::to_string(count) + " parameters");
        return out;
    }

    int small(long long v)
    {
        if (v < 0 || v > 4096) fail("parameter out of range");
        return static_cast<int>(v);
    }

    FamilySpec parse(int depth)
    {
        if (depth > 16) fail("nesting too deep");
        const std::size_t start = pos_;
        FamilySpec f;
        const std::string name = ident();
        auto params = [&](char sep, std::size_t count) {
            expect(':');
            for (long long v : numbers(sep, count)) f.params.push_back(small(v));
        };
        if (name == "path") {
            f.kind = FamilyKind::Path;
            params(',', 1);
        } else if (name == "cycle") {
            f.kind = FamilyKind::Cycle;
            params(',', 1);
        } else if (name == "star") {
            f.kind = FamilyKind::Star;
            params(',', 1);
        } else if (name == "complete") {
            f.kind = FamilyKind::Complete;
            params(',', 1);
        } else if (name == "kbip") {
            f.kind = FamilyKind::CompleteBipartite;
            params(',', 2);
        } else if (name == "grid") {
            f.kind = FamilyKind::Grid;
            params('x', 2);
        } else if (name == "prism") {
            f.kind = FamilyKind::Prism;
            params(',', 2);
        } else if (name == "gnk") {
            f.kind = FamilyKind::Gnk;
            params(',', 2);
        } else if (name == "petersen") {
            f.kind = FamilyKind::Petersen;
        } else if (name == "heawood") {
            f.kind = FamilyKind::Heawood;
        } else if (name == "cactus") {
            f.kind = FamilyKind::Cactus;
            expect(':');
            const long long first = number();
            // `cactus:N` nested in a product is followed by ',' and a family name
            if (peek(',') && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
                pos_++;
                if (first < 0) fail("seed must be non-negative");
                f.seed = static_cast<std::uint64_t>(first);
                f.params.push_back(small(number()));
            } else {
                f.seed_given = false;
                f.params.push_back(small(first));
            }
        } else if (name == "cartesian" || name == "lex" || name == "union") {
            f.kind = name == "cartesian" ? FamilyKind::Cartesian
                     : name == "lex"     ? FamilyKind::Lexicographic
                                         : FamilyKind::Union;
            expect('(');
            f.children.push_back(parse(depth + 1));
            expect(',');
            f.children.push_back(parse(depth + 1));
            expect(')');
        } else if (name == "file" || name == "cactus-file") {
            f.kind = name == "file" ? FamilyKind::File : FamilyKind::CactusFile;
            expect(':');
            std::size_t from = pos_;
            // nested paths end at the enclosing ',' or ')'
            if (depth > 0) {
                while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ')') pos_++;
            } else {
                pos_ = s_.size();
            }
            f.file = std::string(s_.substr(from, pos_ - from));
            if (f.file.empty()) fail("empty file path");
        } else {
            pos_ = start;
            fail("unknown family '" + name + "'");
        }
        f.text = std::string(s_.substr(start, pos_ - start));
        return f;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}

FamilySpec
parse_family(std::string_view spec)
{
    return SpecParser(spec).parse_all();
}

Graph
build_family(const FamilySpec& f)
{
    const auto& p = f.params;
    Graph g;
    switch (f.kind) {
    case FamilyKind::Path: g = path(p[0]); break;
    case FamilyKind::Cycle: g = cycle(p[0]); break;
    case FamilyKind::Star: g = star(p[0]); break;
    case FamilyKind::Complete: g = complete(p[0]); break;
    case FamilyKind::CompleteBipartite: g = complete_bipartite(p[0], p[1]); break;
    case FamilyKind::Grid: g = grid(p[0], p[1]); break;
    case FamilyKind::Prism: g = prism(p[0], p[1]); break;
    case FamilyKind::Gnk: g = gnk(p[0], p[1]); break;
    case FamilyKind::Petersen: g = petersen(); break;
    case FamilyKind::Heawood: g = heawood(); break;
    case FamilyKind::Cactus: g = random_cactus(p[0], f.seed); break;
    case FamilyKind::Cartesian: g = cartesian_product(build_family(f.children[0]), build_family(f.children[1])); break;
    case FamilyKind::Lexicographic:
        g = lexicographic_product(build_family(f.children[0]), build_family(f.children[1]));
        break;
    case FamilyKind::Union: g = disjoint_union(build_family(f.children[0]), build_family(f.children[1])); break;
    case FamilyKind::File:
    case FamilyKind::CactusFile: g = read_graph_file(f.file); break;
    }
    return g.named(f.text);
}

}
