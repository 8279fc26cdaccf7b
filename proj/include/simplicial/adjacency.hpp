#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "simplicial/complex.hpp"

namespace simplicial {

enum class AdjacencyKind { lower, upper, combined };

std::string_view to_string(AdjacencyKind kind);

/// Symmetric 0/1 adjacency among the k-simplices of a complex, stored as
/// sorted neighbour lists (compressed rows). The diagonal is always empty.
class LevelAdjacency {
public:
    LevelAdjacency(int level, AdjacencyKind kind, std::size_t n);
    /// Builds the structure from unordered pairs (i, j), i != j, each listed once.
    static LevelAdjacency from_pairs(int level, AdjacencyKind kind, std::size_t n,
                                     std::vector<std::pair<SimplexId, SimplexId>> pairs);

    int level() const { return level_; }
    AdjacencyKind kind() const { return kind_; }
    std::size_t size() const { return offsets_.size() - 1; }

    std::span<const SimplexId> neighbors(SimplexId i) const;
    std::size_t degree(SimplexId i) const { return neighbors(i).size(); }
    bool contains(SimplexId i, SimplexId j) const;
    /// Number of stored (directed) entries, i.e. twice the number of adjacent pairs.
    std::size_t nonzeros() const { return targets_.size(); }

private:
    int level_;
    AdjacencyKind kind_;
    std::vector<std::size_t> offsets_;
    std::vector<SimplexId> targets_;
};

/// Pairs of k-simplices sharing a (k-1)-face. Empty for k = 0.
LevelAdjacency lower_adjacency(const CliqueComplex& complex, int k);

/// Pairs of k-simplices that are faces of a common (k+1)-simplex.
/// Throws InsufficientDepthError unless the complex was built to level k+1.
LevelAdjacency upper_adjacency(const CliqueComplex& complex, int k);

/// Lower and not upper adjacent for k >= 1; upper adjacency for k = 0.
/// This is the matrix every centrality works on.
LevelAdjacency combined_adjacency(const CliqueComplex& complex, int k);

/// δ_k(i): the number of k-simplices combined-adjacent to i.
std::size_t simplex_degree(const LevelAdjacency& combined, SimplexId i);

/// Number of unordered adjacent pairs.
std::size_t interaction_count(const LevelAdjacency& adjacency);

/// Graph whose nodes are the k-simplices (labelled by their IDs) and whose
/// edges are the combined adjacencies.
Graph underlying_network(const LevelAdjacency& combined);

/// Coordinate export: one "i j" line (0-based IDs, i < j) per adjacent pair.
void write_coordinate(std::ostream& out, const LevelAdjacency& adjacency);
/// Sidecar for the coordinate export: "id<TAB>label label ..." per simplex.
void write_simplex_index(std::ostream& out, const CliqueComplex& complex, int k);

}  // namespace simplicial
