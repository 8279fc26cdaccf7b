#include "simplicial/families.hpp"

#include <numeric>
#include <string>

#include "simplicial/error.hpp"

namespace simplicial {

namespace {

void require(bool ok, const char* what)
{
    if (!ok) {
        throw InputError(what);
    }
}

// Nodes 1..n, with every pair inside `clique` joined.
void add_clique(std::vector<std::pair<int, int>>& edges, const std::vector<int>& clique)
{
    for (std::size_t i = 0; i < clique.size(); ++i) {
        for (std::size_t j = i + 1; j < clique.size(); ++j) {
            edges.emplace_back(clique[i], clique[j]);
        }
    }
}

}  // namespace

Graph star_family_graph(int l, int k)
{
    require(l >= 1 && k >= 1, "star family needs l >= 1 and k >= 1");
    std::vector<int> core(static_cast<std::size_t>(k));
    std::iota(core.begin(), core.end(), 1);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < l; ++i) {
        auto simplex = core;
        simplex.push_back(k + 1 + i);
        add_clique(edges, simplex);
    }
    return graph_from_numbered_edges(static_cast<std::size_t>(k + l), edges);
}

CliqueComplex star_family(int l, int k)
{
    return build_clique_complex(star_family_graph(l, k), k + 1);
}

Graph branch_family_graph(int k, std::span<const int> arms)
{
    require(k >= 1, "branch family needs k >= 1");
    require(arms.size() == static_cast<std::size_t>(k + 1),
            "branch family needs exactly k+1 arm counts");
    std::vector<int> central(static_cast<std::size_t>(k + 1));
    std::iota(central.begin(), central.end(), 1);
    std::vector<std::pair<int, int>> edges;
    add_clique(edges, central);
    int next = k + 2;
    for (std::size_t face = 0; face < arms.size(); ++face) {
        require(arms[face] >= 0, "arm counts must be non-negative");
        std::vector<int> shared;
        for (std::size_t j = 0; j < central.size(); ++j) {
            if (j != face) {
                shared.push_back(central[j]);
            }
        }
        for (int a = 0; a < arms[face]; ++a) {
            auto simplex = shared;
            simplex.push_back(next++);
            add_clique(edges, simplex);
        }
    }
    return graph_from_numbered_edges(static_cast<std::size_t>(next - 1), edges);
}

CliqueComplex branch_family(int k, std::span<const int> arms)
{
    return build_clique_complex(branch_family_graph(k, arms), k + 1);
}

Graph path_family_graph(int l, int k)
{
    require(l >= 1 && k >= 1, "path family needs l >= 1 and k >= 1");
    const int n = l + k;
    std::vector<std::pair<int, int>> edges;
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= std::min(n, a + k); ++b) {
            edges.emplace_back(a, b);
        }
    }
    return graph_from_numbered_edges(static_cast<std::size_t>(n), edges);
}

CliqueComplex path_family(int l, int k)
{
    return build_clique_complex(path_family_graph(l, k), k + 1);
}

Graph reference_graph()
{
    static const std::vector<std::pair<int, int>> edges = {
        {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {3, 5},
        {4, 5}, {4, 6}, {5, 6}, {6, 7}, {6, 8}, {7, 8}, {6, 9},
    };
    return graph_from_numbered_edges(9, edges);
}

CliqueComplex reference_complex(int max_level)
{
    return build_clique_complex(reference_graph(), max_level);
}

}  // namespace simplicial
