#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "simplicial/graph.hpp"

namespace simplicial {

using SimplexId = std::int32_t;

/// A k-simplex: k+1 distinct node indices stored in ascending order.
class Simplex {
public:
    /// Sorts the vertices; throws InputError on an empty set or repeated vertex.
    explicit Simplex(std::vector<NodeId> vertices);

    int dim() const { return static_cast<int>(vertices_.size()) - 1; }
    std::span<const NodeId> vertices() const { return vertices_; }
    bool contains(NodeId v) const;

    auto operator<=>(const Simplex&) const = default;

private:
    std::vector<NodeId> vertices_;
};

/// All k-simplices of one dimension, in lexicographic vertex order.
/// The position of a simplex in this registry is its SimplexId.
class SimplexLevel {
public:
    SimplexLevel() = default;
    SimplexLevel(int dim, std::vector<NodeId> flat_sorted);

    int dim() const { return dim_; }
    std::size_t size() const;
    bool empty() const { return size() == 0; }

    std::span<const NodeId> vertices(SimplexId id) const;
    Simplex simplex(SimplexId id) const;
    std::optional<SimplexId> find(std::span<const NodeId> sorted_vertices) const;

private:
    int dim_ = 0;
    std::vector<NodeId> flat_;
};

/// The clique complex of a graph, materialized for dimensions 0..max_level.
///
/// Immutable after construction. For every k >= 1 the complex also stores the
/// face incidence: the (k-1)-faces of each k-simplex and, inversely, the
/// k-simplices (cofaces) containing each (k-1)-simplex.
class CliqueComplex {
public:
    CliqueComplex(Graph graph, int max_level);

    const Graph& graph() const { return graph_; }
    int max_level() const { return static_cast<int>(levels_.size()) - 1; }

    /// Throws InsufficientDepthError when k is outside 0..max_level.
    const SimplexLevel& level(int k) const;
    std::size_t count(int k) const { return level(k).size(); }

    /// IDs of the (k-1)-faces of k-simplex `id`; face i omits vertex i.
    std::span<const SimplexId> faces(int k, SimplexId id) const;
    /// IDs of the k-simplices having (k-1)-simplex `face` as a face, ascending.
    std::span<const SimplexId> cofaces(int k, SimplexId face) const;

    /// Human readable vertex tuple using node labels, e.g. "{1,3,4}".
    std::string describe(int k, SimplexId id) const;
    /// Resolves a tuple of labels to a simplex ID at the matching level.
    std::optional<SimplexId> find(std::span<const std::string> labels) const;

private:
    void check_level(int k) const;

    Graph graph_;
    std::vector<SimplexLevel> levels_;
    // Indexed by k (entry 0 unused).
    std::vector<std::vector<SimplexId>> faces_;
    std::vector<std::vector<std::size_t>> coface_offsets_;
    std::vector<std::vector<SimplexId>> cofaces_;
};

/// Lifts a graph to its clique complex up to dimension max_level (>= 0).
CliqueComplex build_clique_complex(Graph graph, int max_level);

/// Every clique of the graph with at most max_size vertices, each as a sorted
/// vertex tuple, grouped by size (index = size - 1) and sorted lexicographically.
std::vector<std::vector<NodeId>> enumerate_cliques(const Graph& graph, int max_size);

}  // namespace simplicial
