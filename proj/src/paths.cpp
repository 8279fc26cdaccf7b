#include "simplicial/paths.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "simplicial/error.hpp"
#include "simplicial/parallel.hpp"

namespace simplicial {

unsigned default_thread_count()
{
    if (const char* env = std::getenv("SIMPLICIAL_THREADS")) {
        char* end = nullptr;
        const long value = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) {
            return static_cast<unsigned>(value);
        }
    }
    return 1;
}

namespace {

void bfs_into(const LevelAdjacency& adjacency, SimplexId source, std::vector<Hops>& dist,
              std::vector<SimplexId>& queue)
{
    std::fill(dist.begin(), dist.end(), kUnreachable);
    queue.clear();
    dist[static_cast<std::size_t>(source)] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const SimplexId u = queue[head];
        const Hops next = dist[static_cast<std::size_t>(u)] + 1;
        for (SimplexId v : adjacency.neighbors(u)) {
            auto& dv = dist[static_cast<std::size_t>(v)];
            if (dv == kUnreachable) {
                dv = next;
                queue.push_back(v);
            }
        }
    }
}

constexpr std::size_t kSourceBlock = 64;

}  // namespace

std::vector<Hops> bfs_hops(const LevelAdjacency& adjacency, SimplexId source)
{
    std::vector<Hops> dist(adjacency.size());
    std::vector<SimplexId> queue;
    bfs_into(adjacency, source, dist, queue);
    return dist;
}

DistanceMatrix::DistanceMatrix(int level, std::size_t n)
    : level_(level), n_(n), data_(n * n, kUnreachable)
{
}

DistanceMatrix shortest_distances(const LevelAdjacency& combined, const PathOptions& options)
{
    const std::size_t n = combined.size();
    if (n > options.matrix_limit) {
        throw CapacityError("level " + std::to_string(combined.level()) + " has "
                            + std::to_string(n)
                            + " simplices, above the distance-matrix limit of "
                            + std::to_string(options.matrix_limit));
    }
    DistanceMatrix d(combined.level(), n);
    for_each_block(n, kSourceBlock, options.threads, [&](std::size_t, std::size_t begin, std::size_t end) {
        std::vector<Hops> dist(n);
        std::vector<SimplexId> queue;
        for (std::size_t s = begin; s < end; ++s) {
            bfs_into(combined, static_cast<SimplexId>(s), dist, queue);
            for (std::size_t t = 0; t < n; ++t) {
                d.at(static_cast<SimplexId>(s), static_cast<SimplexId>(t)) = dist[t];
            }
        }
    });
    return d;
}

DistanceMatrix shortest_distances(const CliqueComplex& complex, int k, const PathOptions& options)
{
    return shortest_distances(combined_adjacency(complex, k), options);
}

ComponentLabeling connected_components(const LevelAdjacency& adjacency)
{
    const std::size_t n = adjacency.size();
    ComponentLabeling out;
    out.level = adjacency.level();
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    out.component.assign(n, unset);
    std::vector<SimplexId> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (out.component[s] != unset) {
            continue;
        }
        const std::size_t label = out.sizes.size();
        out.sizes.push_back(0);
        out.component[s] = label;
        stack.assign(1, static_cast<SimplexId>(s));
        while (!stack.empty()) {
            SimplexId u = stack.back();
            stack.pop_back();
            ++out.sizes[label];
            for (SimplexId v : adjacency.neighbors(u)) {
                auto& c = out.component[static_cast<std::size_t>(v)];
                if (c == unset) {
                    c = label;
                    stack.push_back(v);
                }
            }
        }
    }
    return out;
}

ComponentLabeling connected_components(const CliqueComplex& complex, int k)
{
    return connected_components(combined_adjacency(complex, k));
}

Hops eccentricity(const DistanceMatrix& d, SimplexId i)
{
    Hops best = 0;
    for (std::size_t j = 0; j < d.size(); ++j) {
        best = std::max(best, d.at(i, static_cast<SimplexId>(j)));
    }
    return best;
}

Hops diameter(const DistanceMatrix& d)
{
    Hops best = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        best = std::max(best, eccentricity(d, static_cast<SimplexId>(i)));
    }
    return best;
}

std::optional<double> ComponentPathLength::average() const
{
    if (pair_count == 0) {
        return std::nullopt;
    }
    return static_cast<double>(distance_sum) / static_cast<double>(pair_count);
}

namespace {

std::vector<ComponentPathLength> empty_lengths(const ComponentLabeling& comps)
{
    std::vector<ComponentPathLength> out(comps.count());
    for (std::size_t c = 0; c < comps.count(); ++c) {
        out[c].component = c;
        out[c].size = comps.sizes[c];
        out[c].pair_count = static_cast<std::uint64_t>(comps.sizes[c])
                            * (static_cast<std::uint64_t>(comps.sizes[c]) - 1) / 2;
    }
    return out;
}

}  // namespace

std::vector<ComponentPathLength> average_path_length(const DistanceMatrix& d)
{
    // Components follow directly from finiteness of the distances.
    const std::size_t n = d.size();
    ComponentLabeling comps;
    comps.level = d.level();
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    comps.component.assign(n, unset);
    for (std::size_t i = 0; i < n; ++i) {
        if (comps.component[i] != unset) {
            continue;
        }
        const std::size_t label = comps.sizes.size();
        comps.sizes.push_back(0);
        for (std::size_t j = i; j < n; ++j) {
            if (is_finite(d.at(static_cast<SimplexId>(i), static_cast<SimplexId>(j)))) {
                comps.component[j] = label;
                ++comps.sizes[label];
            }
        }
    }
    auto out = empty_lengths(comps);
    for (std::size_t i = 0; i < n; ++i) {
        auto& entry = out[comps.component[i]];
        for (std::size_t j = i + 1; j < n; ++j) {
            const Hops h = d.at(static_cast<SimplexId>(i), static_cast<SimplexId>(j));
            if (is_finite(h)) {
                entry.distance_sum += static_cast<std::uint64_t>(h);
                entry.diameter = std::max(entry.diameter, h);
            }
        }
    }
    return out;
}

PathProfile profile_paths(const LevelAdjacency& combined, unsigned threads)
{
    const std::size_t n = combined.size();
    PathProfile profile;
    profile.level = combined.level();
    profile.components = connected_components(combined);
    profile.eccentricity.assign(n, 0);
    profile.farness.assign(n, 0);
    profile.harmonic.assign(n, 0.0);
    for_each_block(n, kSourceBlock, threads, [&](std::size_t, std::size_t begin, std::size_t end) {
        std::vector<Hops> dist(n);
        std::vector<SimplexId> queue;
        for (std::size_t s = begin; s < end; ++s) {
            bfs_into(combined, static_cast<SimplexId>(s), dist, queue);
            Hops ecc = 0;
            std::uint64_t far = 0;
            double harm = 0.0;
            for (std::size_t t = 0; t < n; ++t) {
                const Hops h = dist[t];
                if (t == s || !is_finite(h)) {
                    continue;
                }
                ecc = std::max(ecc, h);
                far += static_cast<std::uint64_t>(h);
                harm += 1.0 / static_cast<double>(h);
            }
            profile.eccentricity[s] = ecc;
            profile.farness[s] = far;
            profile.harmonic[s] = harm;
        }
    });
    profile.component_lengths = empty_lengths(profile.components);
    for (std::size_t s = 0; s < n; ++s) {
        auto& entry = profile.component_lengths[profile.components.component[s]];
        entry.distance_sum += profile.farness[s];
        entry.diameter = std::max(entry.diameter, profile.eccentricity[s]);
    }
    for (auto& entry : profile.component_lengths) {
        entry.distance_sum /= 2;  // each unordered pair was counted from both ends
    }
    return profile;
}

}  // namespace simplicial
