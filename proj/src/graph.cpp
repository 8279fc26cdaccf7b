#include "simplicial/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "simplicial/error.hpp"

namespace simplicial {

std::optional<NodeId> Graph::find(std::string_view label) const
{
    auto it = index_.find(std::string(label));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

bool Graph::has_edge(NodeId u, NodeId v) const
{
    auto nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const
{
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < adjacency_.size(); ++u) {
        for (NodeId v : adjacency_[u]) {
            if (static_cast<NodeId>(u) < v) {
                out.emplace_back(static_cast<NodeId>(u), v);
            }
        }
    }
    return out;
}

NodeId GraphBuilder::add_node(std::string_view label)
{
    std::string key(label);
    auto it = index_.find(key);
    if (it != index_.end()) {
        return it->second;
    }
    auto id = static_cast<NodeId>(labels_.size());
    index_.emplace(key, id);
    labels_.push_back(std::move(key));
    return id;
}

void GraphBuilder::add_edge(std::string_view a, std::string_view b)
{
    NodeId u = add_node(a);
    NodeId v = add_node(b);
    add_edge(u, v);
}

void GraphBuilder::add_edge(NodeId u, NodeId v)
{
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= labels_.size()
        || static_cast<std::size_t>(v) >= labels_.size()) {
        throw InputError("edge refers to an unknown node index");
    }
    if (u == v) {
        ++self_loops_;
        return;
    }
    edges_.emplace_back(std::min(u, v), std::max(u, v));
}

Graph GraphBuilder::build()
{
    std::sort(edges_.begin(), edges_.end());
    auto last = std::unique(edges_.begin(), edges_.end());
    duplicates_ = static_cast<std::size_t>(edges_.end() - last);
    edges_.erase(last, edges_.end());

    Graph g;
    g.labels_ = labels_;
    g.index_ = index_;
    g.adjacency_.assign(labels_.size(), {});
    for (auto [u, v] : edges_) {
        g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
        g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& row : g.adjacency_) {
        std::sort(row.begin(), row.end());
    }
    g.edge_count_ = edges_.size();
    return g;
}

Graph graph_from_numbered_edges(std::size_t n, std::span<const std::pair<int, int>> edges)
{
    GraphBuilder builder;
    for (std::size_t i = 1; i <= n; ++i) {
        builder.add_node(std::to_string(i));
    }
    for (auto [a, b] : edges) {
        if (a < 1 || b < 1 || static_cast<std::size_t>(a) > n || static_cast<std::size_t>(b) > n) {
            throw InputError("numbered edge out of range");
        }
        builder.add_edge(static_cast<NodeId>(a - 1), static_cast<NodeId>(b - 1));
    }
    return builder.build();
}

EdgeListReport read_edge_list(std::istream& in, const std::string& source_name)
{
    GraphBuilder builder;
    EdgeListReport report;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string a;
        if (!(fields >> a) || a.front() == '#') {
            continue;
        }
        std::string b;
        std::string extra;
        if (!(fields >> b) || (fields >> extra)) {
            throw InputError(source_name + ":" + std::to_string(line_no)
                             + ": expected exactly two node labels");
        }
        builder.add_edge(a, b);
    }
    if (in.bad()) {
        throw InputError(source_name + ": read error");
    }
    report.lines = line_no;
    report.graph = builder.build();
    report.self_loops_dropped = builder.self_loops_dropped();
    report.duplicates_dropped = builder.duplicates_dropped();
    return report;
}

EdgeListReport read_edge_list_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open edge list '" + path + "'");
    }
    return read_edge_list(in, path);
}

void write_edge_list(std::ostream& out, const Graph& graph)
{
    for (auto [u, v] : graph.edges()) {
        out << graph.label(u) << ' ' << graph.label(v) << '\n';
    }
}

}  // namespace simplicial
