// Copyright 2026 The Metamour Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "metamour/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "metamour/constructions.hpp"
#include "metamour/trees.hpp"

namespace metamour {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t parse_count(std::string_view s, std::string_view what) {
  s = trim(s);
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
    throw FormatError("expected a number for " + std::string(what) + ", got '" + std::string(s) +
                      "'");
  }
  return v;
}

std::vector<std::size_t> parse_counts(std::string_view s, std::size_t expect,
                                      std::string_view what) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    out.push_back(parse_count(s.substr(start, comma - start), what));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.size() != expect) {
    throw FormatError(std::string(what) + " takes " + std::to_string(expect) + " arguments");
  }
  return out;
}

std::vector<std::string_view> split_blocks(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() ||
        (s[i] == ',' && !(i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1]))))) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

// Wraps constructor errors so callers only see FormatError.
template <typename F>
Graph build(F&& f) {
  try {
    return f();
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(e.what());
  }
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxGraph6Order) {
    throw FormatError("graph6: only n <= 62 is supported, got " + std::to_string(n));
  }
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int used = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>(63 + (acc << (6 - used))));
  return out;
}

Graph decode_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw FormatError("graph6: empty input");
  const int head = static_cast<unsigned char>(text[0]);
  if (head < 63 || head > 63 + static_cast<int>(kMaxGraph6Order)) {
    throw FormatError("graph6: bad header byte (long form is not supported)");
  }
  const std::size_t n = head - 63;
  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - 1 < bytes) throw FormatError("graph6: truncated payload");
  if (text.size() - 1 > bytes) throw FormatError("graph6: trailing bytes after payload");
  GraphBuilder b(n);
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int c = static_cast<unsigned char>(text[1 + bit / 6]);
      if (c < 63 || c > 126) throw FormatError("graph6: byte out of range");
      if (((c - 63) >> (5 - bit % 6)) & 1) b.add_edge(i, j);
    }
  }
  for (std::size_t k = 1; k < text.size(); ++k) {
    const int c = static_cast<unsigned char>(text[k]);
    if (c < 63 || c > 126) throw FormatError("graph6: byte out of range");
  }
  return std::move(b).build();
}

std::string export_dot(const Graph& g, const std::vector<std::string>* labels) {
  if (labels && labels->size() != g.order()) {
    throw FormatError("export_dot: label count does not match vertex count");
  }
  std::ostringstream os;
  os << "graph G {\n";
  for (Vertex x = 0; x < g.order(); ++x) {
    os << "  " << x;
    if (labels) os << " [label=\"" << (*labels)[x] << "\"]";
    os << ";\n";
  }
  for (const auto& [x, y] : g.edges()) os << "  " << x << " -- " << y << ";\n";
  os << "}\n";
  return os.str();
}

std::string export_edgelist(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.order() << "\n";
  for (const auto& [x, y] : g.edges()) os << x << " " << y << "\n";
  return os.str();
}

Graph parse_edgelist(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string tag;
  std::size_t n = 0;
  if (!(is >> tag >> n) || tag != "n") throw FormatError("edgelist: expected 'n <order>' header");
  std::vector<Edge> edges;
  std::size_t x = 0, y = 0;
  while (is >> x) {
    if (!(is >> y)) throw FormatError("edgelist: dangling vertex");
    edges.emplace_back(x, y);
  }
  if (!is.eof()) throw FormatError("edgelist: unexpected token");
  return build([&] { return Graph::from_edges(n, edges); });
}

ParsedGraph parse_graph_spec(std::string_view spec) {
  spec = trim(spec);
  const std::size_t colon = spec.find(':');
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? std::string_view{}
                                                               : spec.substr(colon + 1);
  ParsedGraph out{Graph(0), std::string(spec), {}};
  auto need_arg = [&] {
    if (colon == std::string_view::npos) {
      throw FormatError("graph spec '" + std::string(kind) + "' needs an argument");
    }
  };
  if (kind == "c5hat") {
    if (colon != std::string_view::npos) throw FormatError("c5hat takes no argument");
    out.graph = c5hat();
  } else if (kind == "cycle" || kind == "path" || kind == "complete" || kind == "edgeless") {
    need_arg();
    const std::size_t n = parse_count(arg, kind);
    out.graph = build([&] {
      if (kind == "cycle") return cycle(n);
      if (kind == "path") return path(n);
      if (kind == "complete") return complete(n);
      return edgeless(n);
    });
  } else if (kind == "paley") {
    need_arg();
    const std::size_t q = parse_count(arg, kind);
    out.graph = build([&] { return paley(q); });
  } else if (kind == "petersen") {
    need_arg();
    const auto v = parse_counts(arg, 2, kind);
    out.graph = build([&] {
      const PetersenSpec p = PetersenSpec::make(v[0], v[1]);
      out.labels = p.labels();
      return generalized_petersen(p);
    });
  } else if (kind == "tree") {
    need_arg();
    const auto v = parse_counts(arg, 2, kind);
    out.graph = build([&] {
      Graph t = mary_tree(v[0], v[1]);
      out.labels = TreeShape(v[0], v[1]).labels();
      return t;
    });
  } else if (kind == "g6") {
    need_arg();
    out.graph = decode_graph6(arg);
  } else if (kind == "joinalong") {
    need_arg();
    const std::size_t semi = arg.find(';');
    if (semi == std::string_view::npos) throw FormatError("joinalong needs '<base>;<blocks>'");
    const Graph base = parse_graph_spec(arg.substr(0, semi)).graph;
    std::vector<Graph> blocks;
    for (std::string_view b : split_blocks(arg.substr(semi + 1))) {
      blocks.push_back(parse_graph_spec(b).graph);
    }
    out.graph = build([&] { return join_along(base, blocks); });
  } else {
    throw FormatError("unknown graph spec '" + std::string(spec) + "'");
  }
  return out;
}

}  // namespace metamour
