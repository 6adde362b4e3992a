#include "genus/certificate.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>

namespace genus {

GraphFingerprint fingerprint(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> sorted;
  for (const Edge& e : g.edges()) sorted.push_back(std::minmax(e.u, e.v));
  std::sort(sorted.begin(), sorted.end());
  std::uint64_t hash = 14695981039346656037ull;
  auto mix = [&](std::string_view s) {
    for (unsigned char c : s) {
      hash ^= c;
      hash *= 1099511628211ull;
    }
  };
  for (const auto& [u, v] : sorted) mix(std::to_string(u) + " " + std::to_string(v) + "\n");
  return {g.vertex_count(), g.edge_count(), hash};
}

int genus_from_face_count(int n, int m, int f) {
  const int numerator = f - m + n;
  const int floored = numerator >= 0 ? numerator / 2 : -((-numerator + 1) / 2);
  return std::max(0, 1 - floored);
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NotAnEdge: return "not-an-edge";
    case ViolationKind::DirectedEdgeCount: return "directed-edge-count";
    case ViolationKind::RotationNotCyclic: return "rotation-not-cyclic";
    case ViolationKind::GenusMismatch: return "genus-mismatch";
  }
  return "?";
}

bool VerificationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

VerificationReport verify_certificate(const Graph& g, const EmbeddingCertificate& cert) {
  const GraphFingerprint expected = fingerprint(g);
  if (!(cert.graph == expected)) {
    throw FingerprintMismatch("certificate is for graph n=" + std::to_string(cert.graph.n) +
                              " m=" + std::to_string(cert.graph.m) + ", input has n=" +
                              std::to_string(expected.n) + " m=" + std::to_string(expected.m));
  }
  VerificationReport report;
  auto violate = [&](ViolationKind kind, std::string detail) {
    report.violations.push_back({kind, std::move(detail)});
  };
  const int n = g.vertex_count();
  const int m = g.edge_count();

  // Dart usage per ordered vertex pair, assigning parallel copies first-fit.
  // dart_of[f][i] is the dart from faces[f][i] to faces[f][i+1], or -1.
  std::vector<int> uses(g.dart_count(), 0);
  std::map<std::pair<Vertex, Vertex>, int> next_copy;
  std::vector<std::vector<DartId>> dart_of(cert.faces.size());
  for (std::size_t f = 0; f < cert.faces.size(); ++f) {
    const auto& face = cert.faces[f];
    const std::size_t k = face.size();
    if (k < 2) {
      violate(ViolationKind::NotAnEdge, "face " + std::to_string(f) + " has fewer than two vertices");
    }
    for (std::size_t i = 0; i < k; ++i) {
      const Vertex a = face[i];
      const Vertex b = face[(i + 1) % k];
      DartId dart = -1;
      if (a >= 0 && a < n && b >= 0 && b < n && k >= 2) {
        auto joins = g.edges_between(a, b);
        if (!joins.empty()) {
          int& copy = next_copy[{a, b}];
          const auto& pick = joins[std::min<std::size_t>(copy, joins.size() - 1)];
          ++copy;
          dart = g.dart(pick.edge, a);
        }
      }
      if (dart < 0) {
        violate(ViolationKind::NotAnEdge, "face " + std::to_string(f) + " step " +
                                              std::to_string(a) + "->" + std::to_string(b) +
                                              " is not an edge");
      } else {
        ++uses[dart];
      }
      dart_of[f].push_back(dart);
    }
  }
  for (DartId d = 0; d < g.dart_count(); ++d) {
    if (uses[d] != 1) {
      violate(ViolationKind::DirectedEdgeCount,
              "directed edge " + std::to_string(g.tail(d)) + "->" + std::to_string(g.head(d)) +
                  " used " + std::to_string(uses[d]) + " times");
    }
  }

  // Corner maps: successor of the arriving slot at each vertex.
  std::vector<int> succ(g.dart_count(), -1);
  bool corner_clash = false;
  for (std::size_t f = 0; f < cert.faces.size(); ++f) {
    const auto& darts = dart_of[f];
    const std::size_t k = darts.size();
    for (std::size_t i = 0; i < k; ++i) {
      const DartId in = darts[i];
      const DartId out = darts[(i + 1) % k];
      if (in < 0 || out < 0) continue;
      int& slot = succ[g.global_slot(Graph::reverse(in))];
      if (slot >= 0) corner_clash = true;
      slot = g.global_slot(out);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    const int base = g.slot_base(v);
    const int deg = g.degree(v);
    if (deg == 0) continue;
    std::vector<char> seen(deg, 0);
    seen[0] = 1;
    int j = 0;
    int steps = 0;
    bool ok = true;
    while (true) {
      const int nxt = succ[base + j];
      if (nxt < base || nxt >= base + deg) {
        ok = false;
        break;
      }
      j = nxt - base;
      ++steps;
      if (seen[j]) break;
      seen[j] = 1;
    }
    if (!ok || j != 0 || steps != deg) {
      violate(ViolationKind::RotationNotCyclic,
              "corners at vertex " + std::to_string(v) + " do not form one cyclic rotation");
    }
  }
  if (corner_clash && !report.has(ViolationKind::RotationNotCyclic)) {
    violate(ViolationKind::RotationNotCyclic, "a slot is entered by more than one corner");
  }

  const int faces = m == 0 ? 1 : static_cast<int>(cert.faces.size());
  if (m == 0 && !cert.faces.empty()) {
    violate(ViolationKind::NotAnEdge, "edgeless graph cannot have face walks");
  }
  const int derived = genus_from_face_count(n, m, faces);
  if (cert.claimed_genus != derived) {
    violate(ViolationKind::GenusMismatch, "claimed genus " + std::to_string(cert.claimed_genus) +
                                              " but " + std::to_string(faces) +
                                              " faces give " + std::to_string(derived));
  }
  if ((n - m + faces) % 2 != 0) {
    violate(ViolationKind::GenusMismatch, "n - m + F = " + std::to_string(n - m + faces) +
                                              " is odd; no orientable embedding has this face count");
  }
  return report;
}

std::string serialize(const EmbeddingCertificate& cert) {
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(cert.graph.hash));
  std::string out = "PAGE-CERT v1\n";
  out += "graph n=" + std::to_string(cert.graph.n) + " m=" + std::to_string(cert.graph.m) +
         " hash=" + hash + "\n";
  out += "genus " + std::to_string(cert.claimed_genus) + "\n";
  for (const auto& face : cert.faces) {
    out += "face ";
    for (std::size_t i = 0; i < face.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(face[i]);
    }
    out += '\n';
  }
  return out;
}

namespace {

template <typename T>
T parse_number(std::string_view token, int line, const char* field, int base = 10) {
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value, base);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw MalformedCertificate(line, std::string("bad ") + field + " '" + std::string(token) + "'");
  }
  return value;
}

std::string_view expect_prefix(std::string_view s, std::string_view prefix, int line) {
  if (!s.starts_with(prefix)) {
    throw MalformedCertificate(line, "expected '" + std::string(prefix) + "'");
  }
  return s.substr(prefix.size());
}

}  // namespace

EmbeddingCertificate deserialize(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.size() < 3) {
    throw MalformedCertificate(static_cast<int>(lines.size()) + 1, "truncated header");
  }
  if (lines[0] != "PAGE-CERT v1") throw MalformedCertificate(1, "expected 'PAGE-CERT v1'");

  EmbeddingCertificate cert;
  {
    std::string_view rest = expect_prefix(lines[1], "graph n=", 2);
    auto sp = rest.find(' ');
    if (sp == std::string_view::npos) throw MalformedCertificate(2, "missing m= field");
    cert.graph.n = parse_number<int>(rest.substr(0, sp), 2, "n");
    rest = expect_prefix(rest.substr(sp + 1), "m=", 2);
    sp = rest.find(' ');
    if (sp == std::string_view::npos) throw MalformedCertificate(2, "missing hash= field");
    cert.graph.m = parse_number<int>(rest.substr(0, sp), 2, "m");
    rest = expect_prefix(rest.substr(sp + 1), "hash=", 2);
    cert.graph.hash = parse_number<std::uint64_t>(rest, 2, "hash", 16);
  }
  cert.claimed_genus = parse_number<int>(expect_prefix(lines[2], "genus ", 3), 3, "genus");
  for (std::size_t i = 3; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    std::string_view rest = expect_prefix(lines[i], "face ", line_no);
    std::vector<Vertex> face;
    std::size_t p = 0;
    while (true) {
      std::size_t comma = rest.find(',', p);
      std::string_view token = rest.substr(p, comma == std::string_view::npos ? comma : comma - p);
      face.push_back(parse_number<Vertex>(token, line_no, "vertex"));
      if (comma == std::string_view::npos) break;
      p = comma + 1;
    }
    cert.faces.push_back(std::move(face));
  }
  return cert;
}

}  // namespace genus
