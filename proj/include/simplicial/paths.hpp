#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "simplicial/adjacency.hpp"

namespace simplicial {

/// Shortest-path length in hops. Unreachable pairs carry kUnreachable, an
/// explicit sentinel that is never used as a distance in arithmetic.
using Hops = std::int32_t;
inline constexpr Hops kUnreachable = -1;

inline bool is_finite(Hops d) { return d != kUnreachable; }

/// Breadth-first hop counts from `source` over an adjacency structure.
std::vector<Hops> bfs_hops(const LevelAdjacency& adjacency, SimplexId source);

struct PathOptions {
    /// Largest level size for which a full distance matrix is materialized.
    std::size_t matrix_limit = 20000;
    unsigned threads = 1;
};

/// Dense all-pairs hop matrix of one level.
class DistanceMatrix {
public:
    DistanceMatrix(int level, std::size_t n);

    int level() const { return level_; }
    std::size_t size() const { return n_; }
    Hops at(SimplexId i, SimplexId j) const
    {
        return data_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)];
    }
    Hops& at(SimplexId i, SimplexId j)
    {
        return data_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)];
    }

private:
    int level_;
    std::size_t n_;
    std::vector<Hops> data_;
};

/// All-pairs s^k distances over the combined adjacency. Throws CapacityError
/// when the level exceeds options.matrix_limit; use profile_paths instead.
DistanceMatrix shortest_distances(const LevelAdjacency& combined, const PathOptions& options = {});
DistanceMatrix shortest_distances(const CliqueComplex& complex, int k, const PathOptions& options = {});

struct ComponentLabeling {
    int level = 0;
    /// Component index of each simplex; components are numbered by their
    /// smallest member, so labels are deterministic.
    std::vector<std::size_t> component;
    std::vector<std::size_t> sizes;

    std::size_t count() const { return sizes.size(); }
    bool connected() const { return sizes.size() == 1; }
};

ComponentLabeling connected_components(const LevelAdjacency& adjacency);
ComponentLabeling connected_components(const CliqueComplex& complex, int k);

/// Largest finite distance from i (0 for a singleton component).
Hops eccentricity(const DistanceMatrix& d, SimplexId i);
/// Largest eccentricity over all simplices; components never mix.
Hops diameter(const DistanceMatrix& d);

/// Average path length of one component, kept as an exact ratio
/// distance_sum / pair_count of integers.
struct ComponentPathLength {
    std::size_t component = 0;
    std::size_t size = 0;
    std::uint64_t distance_sum = 0;  // over unordered pairs
    std::uint64_t pair_count = 0;
    Hops diameter = 0;

    /// Undefined (nullopt) for components with fewer than two simplices.
    std::optional<double> average() const;
};

/// l_k of every s^k-connected component.
std::vector<ComponentPathLength> average_path_length(const DistanceMatrix& d);

/// Per-simplex shortest-path aggregates computed by one BFS per source,
/// without materializing the distance matrix.
struct PathProfile {
    int level = 0;
    ComponentLabeling components;
    std::vector<Hops> eccentricity;
    std::vector<std::uint64_t> farness;  // sum of finite distances
    std::vector<double> harmonic;        // sum of 1/d, with 1/inf = 0
    std::vector<ComponentPathLength> component_lengths;
};

PathProfile profile_paths(const LevelAdjacency& combined, unsigned threads = 1);

}  // namespace simplicial
