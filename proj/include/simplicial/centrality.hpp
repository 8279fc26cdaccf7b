#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simplicial/adjacency.hpp"

namespace simplicial {

enum class Measure { degree, closeness, harmonic, betweenness, katz, eigenvector, subgraph };

std::string_view to_string(Measure measure);
/// Accepts the names produced by to_string.
std::optional<Measure> parse_measure(std::string_view name);

/// One score per k-simplex of a level.
struct CentralityVector {
    int level = 0;
    std::string measure;
    std::vector<std::pair<std::string, double>> parameters;
    bool normalized = false;
    std::vector<double> scores;
    /// Simplices whose score is a placeholder because the measure is
    /// undefined for them (closeness of a singleton component). Empty when
    /// every score is defined.
    std::vector<bool> undefined;
    std::string note;

    std::size_t size() const { return scores.size(); }
    std::optional<double> parameter(std::string_view name) const;
};

struct CentralityOptions {
    unsigned threads = 1;
    /// Largest level handled with dense eigendecompositions.
    std::size_t dense_limit = 5000;
    /// Above dense_limit, compute exp(A) entries by truncated series instead of failing.
    bool series_fallback = false;
    /// Katz damping; defaults to 0.5 / λ1 when unset.
    std::optional<double> katz_alpha;
    /// Normalize closeness and betweenness.
    bool normalized = true;
};

CentralityVector degree_centrality(const LevelAdjacency& combined);

/// Reciprocal farness within each s^k-connected component. The normalized
/// form multiplies by (component size - 1), so it lies in (0, 1].
CentralityVector closeness(const LevelAdjacency& combined, bool normalized, unsigned threads = 1);

/// Sum of reciprocal distances over all other simplices (1/inf = 0).
CentralityVector harmonic_closeness(const LevelAdjacency& combined, unsigned threads = 1);

/// Brandes accumulation over unordered pairs of other simplices. Normalized by
/// (|R|-1)(|R|-2)/2 with |R| the level size; levels with fewer than three
/// simplices normalize to zero.
CentralityVector betweenness(const LevelAdjacency& combined, bool normalized, unsigned threads = 1);

/// Solves (I - αA)x = e. Throws InputError for α outside (0, 1/λ1).
CentralityVector katz(const LevelAdjacency& combined, const CentralityOptions& options = {});

/// Principal eigenvector of A_k. Throws NumericError when λ1 = 0.
CentralityVector eigenvector_centrality(const LevelAdjacency& combined, const CentralityOptions& options = {});

/// Diagonal of exp(A_k).
CentralityVector subgraph_centrality(const LevelAdjacency& combined, const CentralityOptions& options = {});

/// (exp A_k)_{ij}.
double communicability(const LevelAdjacency& combined, SimplexId i, SimplexId j,
                       const CentralityOptions& options = {});

/// Computes `measure` at level k of the complex over its combined adjacency.
CentralityVector compute_centrality(const CliqueComplex& complex, int k, Measure measure,
                                    const CentralityOptions& options = {});
CentralityVector compute_centrality(const LevelAdjacency& combined, Measure measure,
                                    const CentralityOptions& options = {});

}  // namespace simplicial
