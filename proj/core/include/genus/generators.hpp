#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "genus/graph.hpp"

namespace genus {

// Named families. Labelling conventions:
//   complete(n)                vertices 0..n-1
//   complete_bipartite(a, b)   side A is 0..a-1, side B is a..a+b-1
//   complete_multipartite(p)   parts are consecutive label ranges in order
//   circulant(n, S)            i ~ i+s (mod n) for s in S; s and n-s coincide
//   cycle(n)                   i ~ i+1 (mod n)
//   path(n)                    i ~ i+1
// Edges are emitted in lexicographic (u < v) order.
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph complete_multipartite(std::span<const int> part_sizes);
Graph circulant(int n, std::span<const int> connections);
Graph cycle(int n);
Graph path(int n);

// Smallest cubic graph of the given girth, shipped as a graph6 fixture.
// Available girths: 3, 4, 5, 6, 7, 8, 10, 12.
Graph cubic_cage(int girth);
std::vector<int> available_cubic_cages();

// Generator strings as used on the command line:
//   complete:7  bipartite:3,3  multipartite:2,2,2,2  circulant:14:1,2,3,6
//   cycle:6  path:5  cage:8  petersen  heawood
// Throws InputError(InvalidParameters) on unknown families or bad numbers.
Graph generate(std::string_view spec);

}  // namespace genus
