#pragma once

#include <span>

#include "simplicial/complex.hpp"

namespace simplicial {

// Synthetic complexes that attain the extremal values of the simplicial
// centralities. Each is the clique complex of a small graph whose nodes are
// labelled "1", "2", ...; the complexes are built to level k+1 so that the
// combined adjacency at level k is available.

/// l k-simplices sharing the single (k-1)-face {1..k}. With k = 1 this is the
/// star graph with l leaves.
Graph star_family_graph(int l, int k);
CliqueComplex star_family(int l, int k);

/// A central k-simplex with arms[i] k-simplices attached through its i-th face
/// (the face omitting the i-th central vertex). Requires arms.size() == k+1.
Graph branch_family_graph(int k, std::span<const int> arms);
CliqueComplex branch_family(int k, std::span<const int> arms);

/// l k-simplices chained so that consecutive ones share a (k-1)-face and no
/// others are lower adjacent: the windows {i, ..., i+k} of a vertex sequence.
Graph path_family_graph(int l, int k);
CliqueComplex path_family(int l, int k);

/// The nine-node, fourteen-edge reference network used throughout the tests:
/// one tetrahedron {1,2,3,4}, triangles {3,4,5}, {4,5,6}, {6,7,8}, pendant {6,9}.
Graph reference_graph();
CliqueComplex reference_complex(int max_level = 3);

}  // namespace simplicial
