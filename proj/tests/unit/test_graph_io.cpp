#include <doctest.h>

#include "genus/cycles.hpp"
#include "genus/generators.hpp"
#include "genus/graph_io.hpp"
#include "support.hpp"

using namespace genus;

namespace {
InputErrorKind kind_of(std::string_view text, GraphFormat format) {
  try {
    parse_graph(text, format);
  } catch (const InputError& e) {
    return e.kind();
  }
  FAIL("no exception for: " << text);
  return InputErrorKind::InvalidParameters;
}
}  // namespace

TEST_CASE("edge list parsing") {
  const Graph g = parse_edge_list("# a triangle\n10 20\n\n20 30\n30 10\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.girth() == 3);
  // Labels are assigned in order of first appearance.
  CHECK(g.edge(0).u == 0);
  CHECK(g.edge(0).v == 1);

  const Graph multi = parse_edge_list("0 1\n1 0\n1 2\n2 0\n");
  CHECK(multi.edge_count() == 4);
  CHECK(multi.has_parallel_edges());

  CHECK(kind_of("0 1\n1\n", GraphFormat::EdgeList) == InputErrorKind::MalformedLine);
  CHECK(kind_of("0 x\n", GraphFormat::EdgeList) == InputErrorKind::MalformedLine);
  CHECK(kind_of("0 1 2\n", GraphFormat::EdgeList) == InputErrorKind::MalformedLine);
  CHECK(kind_of("0 1\n1 1\n", GraphFormat::EdgeList) == InputErrorKind::SelfLoop);
  CHECK(kind_of("0 1\n2 3\n", GraphFormat::EdgeList) == InputErrorKind::DisconnectedGraph);
}

TEST_CASE("graph6") {
  const Graph p = parse_graph6("IheA@GUAo");
  CHECK(p.vertex_count() == 10);
  CHECK(p.edge_count() == 15);
  CHECK(p.girth() == 5);
  CHECK(parse_graph6(">>graph6<<IheA@GUAo\n").edge_count() == 15);
  CHECK(encode_graph6(p) == "IheA@GUAo");

  CHECK(kind_of("IheA@GUA", GraphFormat::Graph6) == InputErrorKind::MalformedGraph6);
  CHECK(kind_of("IheA@GUAoo", GraphFormat::Graph6) == InputErrorKind::MalformedGraph6);
  CHECK(kind_of("C\x7f", GraphFormat::Graph6) == InputErrorKind::MalformedGraph6);

  try {
    encode_graph6(parse_edge_list("0 1\n0 1\n"));
    FAIL("multigraph encoded");
  } catch (const InputError& e) {
    CHECK(e.kind() == InputErrorKind::InvalidParameters);
  }
}

TEST_CASE("graph6 round trip over the census") {
  const auto graphs = testing::census();
  CHECK(graphs.size() == 143);
  for (const Graph& g : graphs) {
    const Graph back = parse_graph6(encode_graph6(g));
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edge_count() == g.edge_count());
    CHECK(encode_graph6(back) == encode_graph6(g));
  }
}

TEST_CASE("edge list round trip") {
  for (const char* spec : {"complete:6", "bipartite:3,4", "cage:7"}) {
    const Graph g = generate(spec);
    const Graph back = parse_edge_list(write_edge_list(g));
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edge_count() == g.edge_count());
    CHECK(count_cycles_by_length(back) == count_cycles_by_length(g));
    // Labels already in first-appearance order survive unchanged.
    const Graph again = parse_edge_list(write_edge_list(back));
    CHECK(write_edge_list(again) == write_edge_list(back));
  }
}
