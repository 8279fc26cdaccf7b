#include "simplicial/adjacency.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "simplicial/error.hpp"

namespace simplicial {

std::string_view to_string(AdjacencyKind kind)
{
    switch (kind) {
    case AdjacencyKind::lower:
        return "lower";
    case AdjacencyKind::upper:
        return "upper";
    case AdjacencyKind::combined:
        return "combined";
    }
    return "unknown";
}

LevelAdjacency::LevelAdjacency(int level, AdjacencyKind kind, std::size_t n)
    : level_(level), kind_(kind), offsets_(n + 1, 0)
{
}

LevelAdjacency LevelAdjacency::from_pairs(int level, AdjacencyKind kind, std::size_t n,
                                          std::vector<std::pair<SimplexId, SimplexId>> pairs)
{
    LevelAdjacency adj(level, kind, n);
    for (auto [i, j] : pairs) {
        if (i == j) {
            throw InputError("adjacency pairs must not lie on the diagonal");
        }
        ++adj.offsets_[static_cast<std::size_t>(i) + 1];
        ++adj.offsets_[static_cast<std::size_t>(j) + 1];
    }
    for (std::size_t r = 0; r < n; ++r) {
        adj.offsets_[r + 1] += adj.offsets_[r];
    }
    adj.targets_.resize(adj.offsets_[n]);
    std::vector<std::size_t> cursor(adj.offsets_.begin(), adj.offsets_.end() - 1);
    for (auto [i, j] : pairs) {
        adj.targets_[cursor[static_cast<std::size_t>(i)]++] = j;
        adj.targets_[cursor[static_cast<std::size_t>(j)]++] = i;
    }
    for (std::size_t r = 0; r < n; ++r) {
        std::sort(adj.targets_.begin() + static_cast<std::ptrdiff_t>(adj.offsets_[r]),
                  adj.targets_.begin() + static_cast<std::ptrdiff_t>(adj.offsets_[r + 1]));
    }
    return adj;
}

std::span<const SimplexId> LevelAdjacency::neighbors(SimplexId i) const
{
    const auto r = static_cast<std::size_t>(i);
    return std::span<const SimplexId>(targets_).subspan(offsets_[r], offsets_[r + 1] - offsets_[r]);
}

bool LevelAdjacency::contains(SimplexId i, SimplexId j) const
{
    auto row = neighbors(i);
    return std::binary_search(row.begin(), row.end(), j);
}

namespace {

// Emits every pair within each bucket. Distinct k-simplices share at most one
// (k-1)-face and lie in at most one common (k+1)-simplex, so no pair repeats.
template <typename BucketFn>
std::vector<std::pair<SimplexId, SimplexId>> pairs_within_buckets(std::size_t bucket_count,
                                                                  BucketFn bucket)
{
    std::vector<std::pair<SimplexId, SimplexId>> pairs;
    for (std::size_t b = 0; b < bucket_count; ++b) {
        auto members = bucket(b);
        for (std::size_t x = 0; x < members.size(); ++x) {
            for (std::size_t y = x + 1; y < members.size(); ++y) {
                pairs.emplace_back(members[x], members[y]);
            }
        }
    }
    return pairs;
}

}  // namespace

LevelAdjacency lower_adjacency(const CliqueComplex& complex, int k)
{
    const std::size_t n = complex.count(k);
    if (k == 0) {
        return LevelAdjacency(0, AdjacencyKind::lower, n);
    }
    auto pairs = pairs_within_buckets(complex.count(k - 1), [&](std::size_t face) {
        return complex.cofaces(k, static_cast<SimplexId>(face));
    });
    return LevelAdjacency::from_pairs(k, AdjacencyKind::lower, n, std::move(pairs));
}

LevelAdjacency upper_adjacency(const CliqueComplex& complex, int k)
{
    const std::size_t n = complex.count(k);
    if (complex.max_level() < k + 1) {
        throw InsufficientDepthError("insufficient complex depth: upper adjacency at level "
                                     + std::to_string(k) + " needs the complex built to level "
                                     + std::to_string(k + 1) + " (currently "
                                     + std::to_string(complex.max_level()) + ")");
    }
    auto pairs = pairs_within_buckets(complex.count(k + 1), [&](std::size_t coface) {
        return complex.faces(k + 1, static_cast<SimplexId>(coface));
    });
    return LevelAdjacency::from_pairs(k, AdjacencyKind::upper, n, std::move(pairs));
}

LevelAdjacency combined_adjacency(const CliqueComplex& complex, int k)
{
    auto upper = upper_adjacency(complex, k);
    const std::size_t n = upper.size();
    std::vector<std::pair<SimplexId, SimplexId>> pairs;
    if (k == 0) {
        for (std::size_t i = 0; i < n; ++i) {
            for (SimplexId j : upper.neighbors(static_cast<SimplexId>(i))) {
                if (static_cast<SimplexId>(i) < j) {
                    pairs.emplace_back(static_cast<SimplexId>(i), j);
                }
            }
        }
        return LevelAdjacency::from_pairs(0, AdjacencyKind::combined, n, std::move(pairs));
    }
    auto lower = lower_adjacency(complex, k);
    for (std::size_t i = 0; i < n; ++i) {
        const auto id = static_cast<SimplexId>(i);
        auto up = upper.neighbors(id);
        for (SimplexId j : lower.neighbors(id)) {
            if (id < j && !std::binary_search(up.begin(), up.end(), j)) {
                pairs.emplace_back(id, j);
            }
        }
    }
    return LevelAdjacency::from_pairs(k, AdjacencyKind::combined, n, std::move(pairs));
}

std::size_t simplex_degree(const LevelAdjacency& combined, SimplexId i)
{
    if (combined.kind() != AdjacencyKind::combined) {
        throw InputError("simplex degree is defined on the combined adjacency");
    }
    return combined.degree(i);
}

std::size_t interaction_count(const LevelAdjacency& adjacency)
{
    return adjacency.nonzeros() / 2;
}

Graph underlying_network(const LevelAdjacency& combined)
{
    if (combined.kind() != AdjacencyKind::combined) {
        throw InputError("the underlying network is built from the combined adjacency");
    }
    GraphBuilder builder;
    for (std::size_t i = 0; i < combined.size(); ++i) {
        builder.add_node(std::to_string(i));
    }
    for (std::size_t i = 0; i < combined.size(); ++i) {
        for (SimplexId j : combined.neighbors(static_cast<SimplexId>(i))) {
            if (static_cast<SimplexId>(i) < j) {
                builder.add_edge(static_cast<NodeId>(i), static_cast<NodeId>(j));
            }
        }
    }
    return builder.build();
}

void write_coordinate(std::ostream& out, const LevelAdjacency& adjacency)
{
    for (std::size_t i = 0; i < adjacency.size(); ++i) {
        for (SimplexId j : adjacency.neighbors(static_cast<SimplexId>(i))) {
            if (static_cast<SimplexId>(i) < j) {
                out << i << ' ' << j << '\n';
            }
        }
    }
}

void write_simplex_index(std::ostream& out, const CliqueComplex& complex, int k)
{
    const auto& level = complex.level(k);
    for (std::size_t i = 0; i < level.size(); ++i) {
        out << i << '\t';
        bool first = true;
        for (NodeId v : level.vertices(static_cast<SimplexId>(i))) {
            if (!first) {
                out << ' ';
            }
            out << complex.graph().label(v);
            first = false;
        }
        out << '\n';
    }
}

}  // namespace simplicial
