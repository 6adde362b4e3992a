#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "genus/graph.hpp"

namespace genus {

struct GraphFingerprint {
  int n = 0;
  int m = 0;
  std::uint64_t hash = 0;  // FNV-1a over the sorted "min max" edge lines

  friend bool operator==(const GraphFingerprint&, const GraphFingerprint&) = default;
};

GraphFingerprint fingerprint(const Graph& g);

// The faces of an embedding, as closed vertex walks.
struct EmbeddingCertificate {
  GraphFingerprint graph;
  std::vector<std::vector<Vertex>> faces;
  int claimed_genus = 0;

  friend bool operator==(const EmbeddingCertificate&, const EmbeddingCertificate&) = default;
};

// max(0, 1 - floor((f - m + n) / 2)), flooring toward negative infinity.
int genus_from_face_count(int n, int m, int f);

enum class ViolationKind {
  NotAnEdge,          // (1) consecutive face vertices not adjacent
  DirectedEdgeCount,  // (2) some dart used zero or several times
  RotationNotCyclic,  // (3) some vertex's corners are not one cyclic order
  GenusMismatch,      // (4) claimed genus disagrees with the face count
};
const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;
};

struct VerificationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

class FingerprintMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Independent check of a certificate against a graph. Parallel edges are
// matched first-fit in order of appearance since faces list vertices only.
// An edgeless graph has a single empty face, written as no face lines.
// Throws FingerprintMismatch.
VerificationReport verify_certificate(const Graph& g, const EmbeddingCertificate& cert);

class MalformedCertificate : public std::runtime_error {
 public:
  MalformedCertificate(int line, const std::string& what)
      : std::runtime_error("certificate line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// PAGE-CERT v1 text format:
//   PAGE-CERT v1
//   graph n=<n> m=<m> hash=<16 hex digits>
//   genus <g>
//   face <v0>,<v1>,...   (one line per face)
std::string serialize(const EmbeddingCertificate& cert);
EmbeddingCertificate deserialize(std::string_view text);

}  // namespace genus
