#include "simplicial/centrality.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <string>

#include <Eigen/IterativeLinearSolvers>

#include "simplicial/error.hpp"
#include "simplicial/parallel.hpp"
#include "simplicial/paths.hpp"
#include "simplicial/spectral.hpp"

namespace simplicial {

namespace {

constexpr std::array<std::pair<Measure, std::string_view>, 7> kMeasureNames{{
    {Measure::degree, "degree"},
    {Measure::closeness, "closeness"},
    {Measure::harmonic, "harmonic"},
    {Measure::betweenness, "betweenness"},
    {Measure::katz, "katz"},
    {Measure::eigenvector, "eigenvector"},
    {Measure::subgraph, "subgraph"},
}};

CentralityVector make_vector(const LevelAdjacency& adjacency, std::string measure)
{
    CentralityVector out;
    out.level = adjacency.level();
    out.measure = std::move(measure);
    out.scores.assign(adjacency.size(), 0.0);
    return out;
}

void require_combined(const LevelAdjacency& adjacency)
{
    if (adjacency.kind() != AdjacencyKind::combined) {
        throw InputError("centralities are defined on the combined adjacency");
    }
}

constexpr std::size_t kSourceBlock = 32;

// Sums per-block partial vectors strictly in block order. Blocks are computed
// in waves of `threads`, so peak memory is threads * n doubles and the
// floating-point result does not depend on the thread count.
template <typename BlockFn>
std::vector<double> ordered_block_sum(std::size_t n_items, std::size_t width, unsigned threads, BlockFn compute)
{
    std::vector<double> total(width, 0.0);
    const std::size_t blocks = (n_items + kSourceBlock - 1) / kSourceBlock;
    const std::size_t wave = std::max(threads, 1u);
    std::vector<std::vector<double>> partial(wave, std::vector<double>(width));
    for (std::size_t first = 0; first < blocks; first += wave) {
        const std::size_t count = std::min(wave, blocks - first);
        for_each_block(count, 1, threads, [&](std::size_t slot, std::size_t, std::size_t) {
            auto& buf = partial[slot];
            std::fill(buf.begin(), buf.end(), 0.0);
            const std::size_t begin = (first + slot) * kSourceBlock;
            compute(begin, std::min(n_items, begin + kSourceBlock), buf);
        });
        for (std::size_t slot = 0; slot < count; ++slot) {
            for (std::size_t i = 0; i < width; ++i) {
                total[i] += partial[slot][i];
            }
        }
    }
    return total;
}

std::string format_number(double x)
{
    std::ostringstream s;
    s.precision(17);
    s << x;
    return s.str();
}

}  // namespace

std::string_view to_string(Measure measure)
{
    for (auto [m, name] : kMeasureNames) {
        if (m == measure) {
            return name;
        }
    }
    return "unknown";
}

std::optional<Measure> parse_measure(std::string_view name)
{
    for (auto [m, n] : kMeasureNames) {
        if (n == name) {
            return m;
        }
    }
    return std::nullopt;
}

std::optional<double> CentralityVector::parameter(std::string_view name) const
{
    for (const auto& [key, value] : parameters) {
        if (key == name) {
            return value;
        }
    }
    return std::nullopt;
}

CentralityVector degree_centrality(const LevelAdjacency& combined)
{
    require_combined(combined);
    auto out = make_vector(combined, "degree");
    for (std::size_t i = 0; i < combined.size(); ++i) {
        out.scores[i] = static_cast<double>(simplex_degree(combined, static_cast<SimplexId>(i)));
    }
    return out;
}

CentralityVector closeness(const LevelAdjacency& combined, bool normalized, unsigned threads)
{
    require_combined(combined);
    const auto profile = profile_paths(combined, threads);
    auto out = make_vector(combined, "closeness");
    out.normalized = normalized;
    out.undefined.assign(combined.size(), false);
    bool any_undefined = false;
    for (std::size_t i = 0; i < combined.size(); ++i) {
        const std::size_t size = profile.components.sizes[profile.components.component[i]];
        const auto far = static_cast<double>(profile.farness[i]);
        if (size < 2) {
            out.undefined[i] = true;
            any_undefined = true;
            continue;
        }
        out.scores[i] = normalized ? static_cast<double>(size - 1) / far : 1.0 / far;
    }
    if (!any_undefined) {
        out.undefined.clear();
    }
    if (profile.components.count() > 1) {
        out.note = "level is not s^k-connected; closeness is computed per component";
    }
    return out;
}

CentralityVector harmonic_closeness(const LevelAdjacency& combined, unsigned threads)
{
    require_combined(combined);
    auto out = make_vector(combined, "harmonic");
    out.scores = profile_paths(combined, threads).harmonic;
    return out;
}

CentralityVector betweenness(const LevelAdjacency& combined, bool normalized, unsigned threads)
{
    require_combined(combined);
    const std::size_t n = combined.size();
    auto out = make_vector(combined, "betweenness");
    out.normalized = normalized;

    auto accumulate = [&](std::size_t begin, std::size_t end, std::vector<double>& acc) {
        std::vector<Hops> dist(n);
        std::vector<double> sigma(n);
        std::vector<double> delta(n);
        std::vector<SimplexId> order;
        for (std::size_t s = begin; s < end; ++s) {
            std::fill(dist.begin(), dist.end(), kUnreachable);
            std::fill(sigma.begin(), sigma.end(), 0.0);
            std::fill(delta.begin(), delta.end(), 0.0);
            order.clear();
            dist[s] = 0;
            sigma[s] = 1.0;
            order.push_back(static_cast<SimplexId>(s));
            for (std::size_t head = 0; head < order.size(); ++head) {
                const SimplexId u = order[head];
                const auto ui = static_cast<std::size_t>(u);
                for (SimplexId v : combined.neighbors(u)) {
                    const auto vi = static_cast<std::size_t>(v);
                    if (dist[vi] == kUnreachable) {
                        dist[vi] = dist[ui] + 1;
                        order.push_back(v);
                    }
                    if (dist[vi] == dist[ui] + 1) {
                        sigma[vi] += sigma[ui];
                    }
                }
            }
            // Dependencies in reverse BFS order; predecessors are the
            // neighbours one hop closer to the source.
            for (std::size_t idx = order.size(); idx-- > 1;) {
                const SimplexId w = order[idx];
                const auto wi = static_cast<std::size_t>(w);
                const double coeff = (1.0 + delta[wi]) / sigma[wi];
                for (SimplexId v : combined.neighbors(w)) {
                    const auto vi = static_cast<std::size_t>(v);
                    if (dist[vi] == dist[wi] - 1) {
                        delta[vi] += sigma[vi] * coeff;
                    }
                }
                acc[wi] += delta[wi];
            }
        }
    };
    auto total = ordered_block_sum(n, n, threads, accumulate);
    // Every unordered pair was visited from both endpoints.
    for (std::size_t i = 0; i < n; ++i) {
        out.scores[i] = total[i] / 2.0;
    }
    if (normalized) {
        if (n < 3) {
            std::fill(out.scores.begin(), out.scores.end(), 0.0);
            out.note = "fewer than three simplices; normalized betweenness set to 0";
        } else {
            const double pairs = static_cast<double>(n - 1) * static_cast<double>(n - 2) / 2.0;
            for (auto& s : out.scores) {
                s /= pairs;
            }
        }
    }
    return out;
}

CentralityVector katz(const LevelAdjacency& combined, const CentralityOptions& options)
{
    require_combined(combined);
    const std::size_t n = combined.size();
    auto out = make_vector(combined, "katz");
    if (n == 0) {
        return out;
    }
    const double lambda1 = principal_eigenpair(combined, options.dense_limit).value;
    double alpha = 0.0;
    if (options.katz_alpha) {
        alpha = *options.katz_alpha;
        const bool too_large = lambda1 > 0.0 && alpha * lambda1 >= 1.0;
        if (!(alpha > 0.0) || too_large) {
            const std::string upper = lambda1 > 0.0 ? format_number(1.0 / lambda1) : "inf";
            throw InputError("Katz alpha " + format_number(alpha) + " is outside the admissible interval (0, "
                             + upper + ") at level " + std::to_string(combined.level()));
        }
    } else {
        alpha = lambda1 > 0.0 ? 0.5 / lambda1 : 0.5;
    }
    out.parameters = {{"alpha", alpha}, {"lambda1", lambda1}};

    const auto a = to_sparse(combined);
    Eigen::SparseMatrix<double> system(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    system.setIdentity();
    system -= alpha * a;
    Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper> solver;
    solver.setTolerance(1e-14);
    solver.setMaxIterations(static_cast<Eigen::Index>(std::max<std::size_t>(1000, 20 * n)));
    solver.compute(system);
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(n));
    Eigen::VectorXd x = solver.solve(ones);
    if (solver.info() != Eigen::Success) {
        // CG can stall just above 1e-14 in double precision; accept anything
        // that reached a tight residual.
        const double residual = (system * x - ones).norm() / ones.norm();
        if (!(residual < 1e-11)) {
            throw NumericError("Katz linear solve did not converge at level "
                               + std::to_string(combined.level()));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        out.scores[i] = x(static_cast<Eigen::Index>(i));
    }
    return out;
}

CentralityVector eigenvector_centrality(const LevelAdjacency& combined, const CentralityOptions& options)
{
    require_combined(combined);
    auto out = make_vector(combined, "eigenvector");
    const auto pair = principal_eigenpair(combined, options.dense_limit);
    if (!(pair.value > 0.0)) {
        throw NumericError("no principal eigenvector at this level (level "
                           + std::to_string(combined.level()) + " has no adjacent simplices)");
    }
    out.parameters = {{"lambda1", pair.value}};
    for (std::size_t i = 0; i < combined.size(); ++i) {
        out.scores[i] = pair.vector(static_cast<Eigen::Index>(i));
    }
    return out;
}

namespace {

// exp(A)_{ij} for all i of one column j, truncated series.
Eigen::VectorXd exp_column_series(const Eigen::SparseMatrix<double>& a, SimplexId j, int terms)
{
    Eigen::VectorXd w = Eigen::VectorXd::Zero(a.rows());
    w(j) = 1.0;
    Eigen::VectorXd sum = w;
    for (int l = 1; l <= terms; ++l) {
        w = (a * w) / static_cast<double>(l);
        sum += w;
    }
    return sum;
}

int series_terms_for(const LevelAdjacency& combined)
{
    // The power-iteration path is used regardless of dense_limit, which is
    // exceeded whenever this fallback runs.
    const double lambda1 = principal_eigenpair(combined, 0).value;
    return exp_series_terms(lambda1, 1e-8);
}

}  // namespace

CentralityVector subgraph_centrality(const LevelAdjacency& combined, const CentralityOptions& options)
{
    require_combined(combined);
    const std::size_t n = combined.size();
    auto out = make_vector(combined, "subgraph");
    if (n == 0) {
        return out;
    }
    if (n <= options.dense_limit || !options.series_fallback) {
        const auto spectral = spectral_decomposition(combined, options.dense_limit);
        const Eigen::VectorXd weights = spectral.eigenvalues.array().exp();
        for (std::size_t i = 0; i < n; ++i) {
            const auto row = spectral.eigenvectors.row(static_cast<Eigen::Index>(i));
            out.scores[i] = row.array().square().matrix().dot(weights);
        }
        return out;
    }
    const int terms = series_terms_for(combined);
    out.parameters = {{"series_terms", static_cast<double>(terms)}};
    out.note = "diagonal of exp(A) from a truncated power series";
    const auto a = to_sparse(combined);
    for_each_block(n, kSourceBlock, options.threads, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const auto id = static_cast<SimplexId>(i);
            out.scores[i] = exp_column_series(a, id, terms)(id);
        }
    });
    return out;
}

double communicability(const LevelAdjacency& combined, SimplexId i, SimplexId j, const CentralityOptions& options)
{
    require_combined(combined);
    const std::size_t n = combined.size();
    if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= n || static_cast<std::size_t>(j) >= n) {
        throw InputError("simplex ID out of range");
    }
    if (n <= options.dense_limit || !options.series_fallback) {
        const auto spectral = spectral_decomposition(combined, options.dense_limit);
        const Eigen::VectorXd weights = spectral.eigenvalues.array().exp();
        const auto& v = spectral.eigenvectors;
        return v.row(i).cwiseProduct(v.row(j)).dot(weights.transpose());
    }
    const int terms = series_terms_for(combined);
    return exp_column_series(to_sparse(combined), j, terms)(i);
}

CentralityVector compute_centrality(const LevelAdjacency& combined, Measure measure, const CentralityOptions& options)
{
    switch (measure) {
    case Measure::degree:
        return degree_centrality(combined);
    case Measure::closeness:
        return closeness(combined, options.normalized, options.threads);
    case Measure::harmonic:
        return harmonic_closeness(combined, options.threads);
    case Measure::betweenness:
        return betweenness(combined, options.normalized, options.threads);
    case Measure::katz:
        return katz(combined, options);
    case Measure::eigenvector:
        return eigenvector_centrality(combined, options);
    case Measure::subgraph:
        return subgraph_centrality(combined, options);
    }
    throw InputError("unknown centrality measure");
}

CentralityVector compute_centrality(const CliqueComplex& complex, int k, Measure measure,
                                    const CentralityOptions& options)
{
    return compute_centrality(combined_adjacency(complex, k), measure, options);
}

}  // namespace simplicial
