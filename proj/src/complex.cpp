#include "simplicial/complex.hpp"

#include <algorithm>
#include <numeric>

#include "simplicial/error.hpp"

namespace simplicial {

Simplex::Simplex(std::vector<NodeId> vertices)
    : vertices_(std::move(vertices))
{
    if (vertices_.empty()) {
        throw InputError("a simplex needs at least one vertex");
    }
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
        throw InputError("simplex vertices must be distinct");
    }
}

bool Simplex::contains(NodeId v) const
{
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

SimplexLevel::SimplexLevel(int dim, std::vector<NodeId> flat_sorted)
    : dim_(dim), flat_(std::move(flat_sorted))
{
}

std::size_t SimplexLevel::size() const
{
    return flat_.size() / static_cast<std::size_t>(dim_ + 1);
}

std::span<const NodeId> SimplexLevel::vertices(SimplexId id) const
{
    const auto width = static_cast<std::size_t>(dim_ + 1);
    return std::span<const NodeId>(flat_).subspan(static_cast<std::size_t>(id) * width, width);
}

Simplex SimplexLevel::simplex(SimplexId id) const
{
    auto v = vertices(id);
    return Simplex(std::vector<NodeId>(v.begin(), v.end()));
}

std::optional<SimplexId> SimplexLevel::find(std::span<const NodeId> sorted_vertices) const
{
    if (sorted_vertices.size() != static_cast<std::size_t>(dim_ + 1)) {
        return std::nullopt;
    }
    std::size_t lo = 0;
    std::size_t hi = size();
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        auto cand = vertices(static_cast<SimplexId>(mid));
        if (std::lexicographical_compare(cand.begin(), cand.end(), sorted_vertices.begin(),
                                         sorted_vertices.end())) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    if (lo < size()) {
        auto cand = vertices(static_cast<SimplexId>(lo));
        if (std::equal(cand.begin(), cand.end(), sorted_vertices.begin())) {
            return static_cast<SimplexId>(lo);
        }
    }
    return std::nullopt;
}

namespace {

// Smallest-last (degeneracy) order: repeatedly remove a vertex of minimum
// remaining degree. Returns the position of each vertex in that order.
std::vector<std::size_t> degeneracy_rank(const Graph& graph)
{
    const std::size_t n = graph.node_count();
    std::vector<std::size_t> degree(n);
    std::size_t max_degree = 0;
    for (std::size_t v = 0; v < n; ++v) {
        degree[v] = graph.degree(static_cast<NodeId>(v));
        max_degree = std::max(max_degree, degree[v]);
    }
    // Buckets of vertices by current degree; lazy deletion via the `removed` flag.
    std::vector<std::vector<NodeId>> buckets(max_degree + 1);
    for (std::size_t v = n; v-- > 0;) {
        buckets[degree[v]].push_back(static_cast<NodeId>(v));
    }
    std::vector<bool> removed(n, false);
    std::vector<std::size_t> rank(n);
    std::size_t next = 0;
    std::size_t d = 0;
    while (next < n) {
        d = std::min(d, max_degree);
        while (buckets[d].empty()) {
            ++d;
        }
        NodeId v = buckets[d].back();
        buckets[d].pop_back();
        auto vi = static_cast<std::size_t>(v);
        if (removed[vi] || degree[vi] != d) {
            continue;
        }
        removed[vi] = true;
        rank[vi] = next++;
        for (NodeId u : graph.neighbors(v)) {
            auto ui = static_cast<std::size_t>(u);
            if (!removed[ui]) {
                --degree[ui];
                buckets[degree[ui]].push_back(u);
                d = std::min(d, degree[ui]);
            }
        }
    }
    return rank;
}

struct CliqueCollector {
    const Graph& graph;
    const std::vector<std::size_t>& rank;
    int max_size;
    std::vector<std::vector<NodeId>>& out;
    std::vector<NodeId> clique;

    void emit()
    {
        std::vector<NodeId> sorted = clique;
        std::sort(sorted.begin(), sorted.end());
        auto& bucket = out[clique.size() - 1];
        bucket.insert(bucket.end(), sorted.begin(), sorted.end());
    }

    // `candidates` holds common neighbours of the clique that come later in
    // the degeneracy order, sorted by that order.
    void extend(const std::vector<NodeId>& candidates)
    {
        emit();
        if (static_cast<int>(clique.size()) == max_size) {
            return;
        }
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            NodeId u = candidates[i];
            std::vector<NodeId> next;
            for (std::size_t j = i + 1; j < candidates.size(); ++j) {
                if (graph.has_edge(u, candidates[j])) {
                    next.push_back(candidates[j]);
                }
            }
            clique.push_back(u);
            extend(next);
            clique.pop_back();
        }
    }
};

void sort_level(std::vector<NodeId>& flat, std::size_t width)
{
    const std::size_t n = flat.size() / width;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(flat.begin() + static_cast<std::ptrdiff_t>(a * width),
                                            flat.begin() + static_cast<std::ptrdiff_t>((a + 1) * width),
                                            flat.begin() + static_cast<std::ptrdiff_t>(b * width),
                                            flat.begin() + static_cast<std::ptrdiff_t>((b + 1) * width));
    });
    std::vector<NodeId> sorted;
    sorted.reserve(flat.size());
    for (std::size_t idx : order) {
        sorted.insert(sorted.end(), flat.begin() + static_cast<std::ptrdiff_t>(idx * width),
                      flat.begin() + static_cast<std::ptrdiff_t>((idx + 1) * width));
    }
    flat = std::move(sorted);
}

}  // namespace

std::vector<std::vector<NodeId>> enumerate_cliques(const Graph& graph, int max_size)
{
    std::vector<std::vector<NodeId>> out(static_cast<std::size_t>(std::max(max_size, 0)));
    if (max_size <= 0) {
        return out;
    }
    const auto rank = degeneracy_rank(graph);
    CliqueCollector collector{graph, rank, max_size, out, {}};
    for (std::size_t v = 0; v < graph.node_count(); ++v) {
        std::vector<NodeId> later;
        for (NodeId u : graph.neighbors(static_cast<NodeId>(v))) {
            if (rank[static_cast<std::size_t>(u)] > rank[v]) {
                later.push_back(u);
            }
        }
        std::sort(later.begin(), later.end(), [&](NodeId a, NodeId b) {
            return rank[static_cast<std::size_t>(a)] < rank[static_cast<std::size_t>(b)];
        });
        collector.clique.assign(1, static_cast<NodeId>(v));
        collector.extend(later);
    }
    for (std::size_t s = 0; s < out.size(); ++s) {
        sort_level(out[s], s + 1);
    }
    return out;
}

CliqueComplex::CliqueComplex(Graph graph, int max_level)
    : graph_(std::move(graph))
{
    if (max_level < 0) {
        throw InputError("maximum simplex level must be non-negative");
    }
    auto cliques = enumerate_cliques(graph_, max_level + 1);
    levels_.reserve(cliques.size());
    for (std::size_t k = 0; k < cliques.size(); ++k) {
        levels_.emplace_back(static_cast<int>(k), std::move(cliques[k]));
    }

    const std::size_t depth = levels_.size();
    faces_.resize(depth);
    coface_offsets_.resize(depth);
    cofaces_.resize(depth);
    std::vector<NodeId> face;
    for (std::size_t k = 1; k < depth; ++k) {
        const auto& upper = levels_[k];
        const auto& lower = levels_[k - 1];
        auto& faces = faces_[k];
        faces.resize(upper.size() * (k + 1));
        std::vector<std::size_t> counts(lower.size() + 1, 0);
        for (std::size_t s = 0; s < upper.size(); ++s) {
            auto verts = upper.vertices(static_cast<SimplexId>(s));
            for (std::size_t drop = 0; drop <= k; ++drop) {
                face.clear();
                for (std::size_t j = 0; j <= k; ++j) {
                    if (j != drop) {
                        face.push_back(verts[j]);
                    }
                }
                auto id = lower.find(face);
                if (!id) {
                    throw Error("clique complex closure violated");  // unreachable for clique input
                }
                faces[s * (k + 1) + drop] = *id;
                ++counts[static_cast<std::size_t>(*id) + 1];
            }
        }
        auto& offsets = coface_offsets_[k];
        offsets.assign(lower.size() + 1, 0);
        std::partial_sum(counts.begin(), counts.end(), offsets.begin());
        auto& co = cofaces_[k];
        co.resize(faces.size());
        std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
        // Simplices are visited in ascending ID, so every coface list ends up sorted.
        for (std::size_t s = 0; s < upper.size(); ++s) {
            for (std::size_t drop = 0; drop <= k; ++drop) {
                auto f = static_cast<std::size_t>(faces[s * (k + 1) + drop]);
                co[cursor[f]++] = static_cast<SimplexId>(s);
            }
        }
    }
}

void CliqueComplex::check_level(int k) const
{
    if (k < 0 || k > max_level()) {
        throw InsufficientDepthError("insufficient complex depth: level " + std::to_string(k)
                                     + " requested but the complex was built to level "
                                     + std::to_string(max_level()));
    }
}

const SimplexLevel& CliqueComplex::level(int k) const
{
    check_level(k);
    return levels_[static_cast<std::size_t>(k)];
}

std::span<const SimplexId> CliqueComplex::faces(int k, SimplexId id) const
{
    check_level(k);
    if (k == 0) {
        return {};
    }
    const auto width = static_cast<std::size_t>(k + 1);
    return std::span<const SimplexId>(faces_[static_cast<std::size_t>(k)])
        .subspan(static_cast<std::size_t>(id) * width, width);
}

std::span<const SimplexId> CliqueComplex::cofaces(int k, SimplexId face) const
{
    check_level(k);
    if (k == 0) {
        return {};
    }
    const auto& offsets = coface_offsets_[static_cast<std::size_t>(k)];
    const auto f = static_cast<std::size_t>(face);
    return std::span<const SimplexId>(cofaces_[static_cast<std::size_t>(k)])
        .subspan(offsets[f], offsets[f + 1] - offsets[f]);
}

std::string CliqueComplex::describe(int k, SimplexId id) const
{
    std::string out = "{";
    bool first = true;
    for (NodeId v : level(k).vertices(id)) {
        if (!first) {
            out += ',';
        }
        out += graph_.label(v);
        first = false;
    }
    out += '}';
    return out;
}

std::optional<SimplexId> CliqueComplex::find(std::span<const std::string> labels) const
{
    if (labels.empty() || static_cast<int>(labels.size()) - 1 > max_level()) {
        return std::nullopt;
    }
    std::vector<NodeId> verts;
    for (const auto& l : labels) {
        auto v = graph_.find(l);
        if (!v) {
            return std::nullopt;
        }
        verts.push_back(*v);
    }
    std::sort(verts.begin(), verts.end());
    return levels_[labels.size() - 1].find(verts);
}

CliqueComplex build_clique_complex(Graph graph, int max_level)
{
    return CliqueComplex(std::move(graph), max_level);
}

}  // namespace simplicial
