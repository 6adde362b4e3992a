#include "genus/generators.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "genus/cage_fixtures.hpp"
#include "genus/graph_io.hpp"

namespace genus {

namespace {

[[noreturn]] void invalid(const std::string& why) {
  throw InputError(InputErrorKind::InvalidParameters, why);
}

Graph from_sorted(int n, std::vector<Edge> edges) {
  for (Edge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  return Graph::from_edges(n, std::move(edges));
}

int parse_int(std::string_view token, std::string_view spec) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    invalid("bad number '" + std::string(token) + "' in generator '" + std::string(spec) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(sep, pos);
    out.push_back(s.substr(pos, next == std::string_view::npos ? next : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

std::vector<int> parse_list(std::string_view s, std::string_view spec) {
  std::vector<int> out;
  for (std::string_view token : split(s, ',')) out.push_back(parse_int(token, spec));
  return out;
}

}  // namespace

Graph complete(int n) {
  if (n < 1) invalid("complete: n must be >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) invalid("complete_bipartite: both sides need at least one vertex");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = a; v < a + b; ++v) edges.push_back({u, v});
  }
  return Graph::from_edges(a + b, std::move(edges));
}

Graph complete_multipartite(std::span<const int> part_sizes) {
  if (part_sizes.empty()) invalid("complete_multipartite: no parts");
  std::vector<int> part_of;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    if (part_sizes[p] < 1) invalid("complete_multipartite: empty part");
    part_of.insert(part_of.end(), part_sizes[p], static_cast<int>(p));
  }
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (part_of[u] != part_of[v]) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph circulant(int n, std::span<const int> connections) {
  if (n < 2) invalid("circulant: n must be >= 2");
  if (connections.empty()) invalid("circulant: empty connection set");
  std::set<std::pair<Vertex, Vertex>> seen;
  std::vector<Edge> edges;
  for (int s : connections) {
    if (s <= 0 || s >= n) {
      invalid("circulant: connection " + std::to_string(s) + " outside 1.." + std::to_string(n - 1));
    }
    for (Vertex i = 0; i < n; ++i) {
      Vertex j = (i + s) % n;
      auto key = std::minmax(i, j);
      if (seen.insert(key).second) edges.push_back({key.first, key.second});
    }
  }
  return from_sorted(n, std::move(edges));
}

Graph cycle(int n) {
  if (n < 3) invalid("cycle: n must be >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return from_sorted(n, std::move(edges));
}

Graph path(int n) {
  if (n < 1) invalid("path: n must be >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::from_edges(n, std::move(edges));
}

Graph cubic_cage(int girth) {
  for (const CageFixture& f : cage_fixtures()) {
    if (f.girth == girth) return parse_graph6(f.graph6);
  }
  invalid("no (3," + std::to_string(girth) + ")-cage fixture");
}

std::vector<int> available_cubic_cages() {
  std::vector<int> out;
  for (const CageFixture& f : cage_fixtures()) out.push_back(f.girth);
  return out;
}

Graph generate(std::string_view spec) {
  auto fields = split(spec, ':');
  std::string_view family = fields[0];
  auto need = [&](std::size_t count) {
    if (fields.size() != count) {
      invalid("generator '" + std::string(spec) + "' expects " + std::to_string(count - 1) +
              " parameter field(s)");
    }
  };
  if (family == "complete") {
    need(2);
    return complete(parse_int(fields[1], spec));
  }
  if (family == "bipartite") {
    need(2);
    auto sides = parse_list(fields[1], spec);
    if (sides.size() != 2) invalid("bipartite expects two sizes, e.g. bipartite:3,3");
    return complete_bipartite(sides[0], sides[1]);
  }
  if (family == "multipartite") {
    need(2);
    auto parts = parse_list(fields[1], spec);
    return complete_multipartite(parts);
  }
  if (family == "circulant") {
    need(3);
    auto connections = parse_list(fields[2], spec);
    return circulant(parse_int(fields[1], spec), connections);
  }
  if (family == "cycle") {
    need(2);
    return cycle(parse_int(fields[1], spec));
  }
  if (family == "path") {
    need(2);
    return path(parse_int(fields[1], spec));
  }
  if (family == "cage") {
    need(2);
    return cubic_cage(parse_int(fields[1], spec));
  }
  if (family == "petersen") {
    need(1);
    return cubic_cage(5);
  }
  if (family == "heawood") {
    need(1);
    return cubic_cage(6);
  }
  invalid("unknown generator family '" + std::string(family) + "'");
}

}  // namespace genus
