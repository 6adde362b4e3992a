#include "genus/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace genus {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

[[noreturn]] void malformed_line(int line_no, std::string_view line, const char* why) {
  throw InputError(InputErrorKind::MalformedLine, "line " + std::to_string(line_no) + ": " +
                                                      why + ": '" + std::string(line) + "'");
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::unordered_map<long long, Vertex> relabel;
  std::vector<Edge> edges;
  auto label = [&](long long raw) {
    auto [it, inserted] = relabel.try_emplace(raw, static_cast<Vertex>(relabel.size()));
    return it->second;
  };

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    long long ends[2];
    int tokens = 0;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      if (i == line.size()) break;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      if (tokens == 2) malformed_line(line_no, line, "expected exactly two vertices");
      long long value = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
      if (ec != std::errc() || ptr != line.data() + j || value < 0) {
        malformed_line(line_no, line, "vertex is not a nonnegative integer");
      }
      ends[tokens++] = value;
      i = j;
    }
    if (tokens != 2) malformed_line(line_no, line, "expected exactly two vertices");
    if (ends[0] == ends[1]) {
      throw InputError(InputErrorKind::SelfLoop,
                       "line " + std::to_string(line_no) + ": self-loop at " + std::to_string(ends[0]));
    }
    Vertex a = label(ends[0]);
    Vertex b = label(ends[1]);
    edges.push_back({a, b});
  }
  if (relabel.empty()) {
    throw InputError(InputErrorKind::MalformedLine, "edge list contains no edges");
  }
  return Graph::from_edges(static_cast<int>(relabel.size()), std::move(edges));
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  auto bad = [](const std::string& why) -> InputError {
    return InputError(InputErrorKind::MalformedGraph6, "graph6: " + why);
  };
  for (char c : text) {
    if (c < 63 || c > 126) throw bad("byte outside printable range 63..126");
  }
  if (text.empty()) throw bad("empty string");

  std::size_t pos = 0;
  long long n = 0;
  auto take = [&](int count) {
    long long value = 0;
    for (int k = 0; k < count; ++k) {
      if (pos >= text.size()) throw bad("truncated size header");
      value = (value << 6) | (text[pos++] - 63);
    }
    return value;
  };
  if (text[0] != 126) {
    n = take(1);
  } else if (text.size() > 1 && text[1] != 126) {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }
  if (n < 1) throw bad("graph has no vertices");

  const long long bits = n * (n - 1) / 2;
  const long long chunks = (bits + 5) / 6;
  if (static_cast<long long>(text.size() - pos) != chunks) {
    throw bad("expected " + std::to_string(chunks) + " data bytes for n=" + std::to_string(n) +
              ", found " + std::to_string(text.size() - pos));
  }
  std::vector<Edge> edges;
  long long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = text[pos + k / 6] - 63;
      if (byte & (1 << (5 - k % 6))) edges.push_back({i, j});
    }
  }
  // Padding bits must be zero.
  if (bits % 6) {
    int byte = text.back() - 63;
    if (byte & ((1 << (6 - bits % 6)) - 1)) throw bad("nonzero padding bits");
  }
  return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

std::string encode_graph6(const Graph& g) {
  if (g.has_parallel_edges()) {
    throw InputError(InputErrorKind::InvalidParameters, "graph6 cannot encode parallel edges");
  }
  const long long n = g.vertex_count();
  std::string out;
  auto put = [&](long long value, int count) {
    for (int k = count - 1; k >= 0; --k) out.push_back(static_cast<char>(63 + ((value >> (6 * k)) & 63)));
  };
  if (n <= 62) {
    put(n, 1);
  } else if (n <= 258047) {
    out.push_back(126);
    put(n, 3);
  } else {
    out.append(2, static_cast<char>(126));
    put(n, 6);
  }
  std::vector<char> adjacent(n * n, 0);
  for (const Edge& e : g.edges()) {
    adjacent[e.u * n + e.v] = adjacent[e.v * n + e.u] = 1;
  }
  int byte = 0;
  int filled = 0;
  for (long long j = 1; j < n; ++j) {
    for (long long i = 0; i < j; ++i) {
      byte = (byte << 1) | adjacent[i * n + j];
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + byte));
        byte = filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>(63 + (byte << (6 - filled))));
  return out;
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::Graph6 ? parse_graph6(text) : parse_edge_list(text);
}

Graph load_graph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError(InputErrorKind::InvalidParameters, "cannot open input file: " + path);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str(), format);
}

}  // namespace genus
