#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace simplicial {

using NodeId = std::int32_t;

/// Simple undirected graph with string node labels.
///
/// Node indices are dense (0..n-1) and assigned in insertion order; each label
/// maps to exactly one index. Adjacency lists are sorted, so neighbor lookup
/// is a binary search.
class Graph {
public:
    Graph() = default;

    std::size_t node_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    const std::string& label(NodeId v) const { return labels_.at(static_cast<std::size_t>(v)); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<NodeId> find(std::string_view label) const;

    std::span<const NodeId> neighbors(NodeId v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    std::size_t degree(NodeId v) const { return neighbors(v).size(); }
    bool has_edge(NodeId u, NodeId v) const;

    /// All edges as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<NodeId, NodeId>> edges() const;

private:
    friend class GraphBuilder;

    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> index_;
    std::vector<std::vector<NodeId>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Accumulates nodes and edges, dropping self-loops and repeated edges.
class GraphBuilder {
public:
    NodeId add_node(std::string_view label);
    void add_edge(std::string_view a, std::string_view b);
    void add_edge(NodeId u, NodeId v);

    std::size_t self_loops_dropped() const { return self_loops_; }
    /// Valid only after build(); counts repeated copies of an edge.
    std::size_t duplicates_dropped() const { return duplicates_; }

    Graph build();

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> index_;
    std::vector<std::pair<NodeId, NodeId>> edges_;
    std::size_t self_loops_ = 0;
    std::size_t duplicates_ = 0;
};

/// Builds a graph on nodes labelled "1".."n" from 1-based integer edges.
Graph graph_from_numbered_edges(std::size_t n, std::span<const std::pair<int, int>> edges);

struct EdgeListReport {
    Graph graph;
    std::size_t lines = 0;
    std::size_t self_loops_dropped = 0;
    std::size_t duplicates_dropped = 0;
};

/// Reads a whitespace-separated edge list (two labels per line, '#' comments).
/// Throws InputError naming the source and line number on malformed lines.
EdgeListReport read_edge_list(std::istream& in, const std::string& source_name = "<stream>");
EdgeListReport read_edge_list_file(const std::string& path);

/// Writes one "label label" line per edge.
void write_edge_list(std::ostream& out, const Graph& graph);

}  // namespace simplicial
