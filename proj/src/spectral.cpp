#include "simplicial/spectral.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "simplicial/error.hpp"

namespace simplicial {

Eigen::SparseMatrix<double> to_sparse(const LevelAdjacency& adjacency)
{
    const auto n = static_cast<Eigen::Index>(adjacency.size());
    std::vector<Eigen::Triplet<double>> entries;
    entries.reserve(adjacency.nonzeros());
    for (Eigen::Index i = 0; i < n; ++i) {
        for (SimplexId j : adjacency.neighbors(static_cast<SimplexId>(i))) {
            entries.emplace_back(i, j, 1.0);
        }
    }
    Eigen::SparseMatrix<double> a(n, n);
    a.setFromTriplets(entries.begin(), entries.end());
    return a;
}

Eigen::MatrixXd to_dense(const LevelAdjacency& adjacency)
{
    const auto n = static_cast<Eigen::Index>(adjacency.size());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (SimplexId j : adjacency.neighbors(static_cast<SimplexId>(i))) {
            a(i, j) = 1.0;
        }
    }
    return a;
}

namespace {

void check_dense(const LevelAdjacency& adjacency, std::size_t dense_limit)
{
    if (adjacency.size() > dense_limit) {
        throw CapacityError("level " + std::to_string(adjacency.level()) + " has "
                            + std::to_string(adjacency.size())
                            + " simplices, above the dense spectral limit of "
                            + std::to_string(dense_limit)
                            + "; raise the limit or enable the truncated-series fallback");
    }
}

// Non-negative Perron vector with the largest-magnitude entry positive.
// Within the λ1-eigenspace of a non-negative symmetric matrix the Perron
// vectors of the components attaining λ1 have disjoint supports, so taking
// absolute values stays inside the eigenspace.
Eigen::VectorXd perron_normalize(Eigen::VectorXd v)
{
    Eigen::Index at = 0;
    v.cwiseAbs().maxCoeff(&at);
    if (v(at) < 0) {
        v = -v;
    }
    v = v.cwiseAbs();
    const double norm = v.norm();
    if (norm > 0) {
        v /= norm;
    }
    return v;
}

template <typename Fn>
Eigen::MatrixXd apply_function(const LevelAdjacency& adjacency, std::size_t dense_limit, Fn f)
{
    const auto spectral = spectral_decomposition(adjacency, dense_limit);
    const auto& v = spectral.eigenvectors;
    Eigen::VectorXd fx = spectral.eigenvalues.unaryExpr(f);
    return v * fx.asDiagonal() * v.transpose();
}

}  // namespace

SpectralDecomposition spectral_decomposition(const LevelAdjacency& adjacency, std::size_t dense_limit)
{
    check_dense(adjacency, dense_limit);
    SpectralDecomposition out;
    out.level = adjacency.level();
    const auto n = static_cast<Eigen::Index>(adjacency.size());
    if (n == 0) {
        return out;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_dense(adjacency));
    if (solver.info() != Eigen::Success) {
        throw NumericError("symmetric eigensolver did not converge at level "
                           + std::to_string(adjacency.level()));
    }
    // Eigen returns ascending order.
    out.eigenvalues = solver.eigenvalues().reverse();
    out.eigenvectors = solver.eigenvectors().rowwise().reverse();
    return out;
}

PrincipalEigenpair principal_eigenpair(const LevelAdjacency& adjacency, std::size_t dense_limit)
{
    const auto n = static_cast<Eigen::Index>(adjacency.size());
    PrincipalEigenpair out;
    if (n == 0) {
        return out;
    }
    if (adjacency.size() <= dense_limit) {
        auto spectral = spectral_decomposition(adjacency, dense_limit);
        out.value = spectral.eigenvalues(0);
        out.vector = perron_normalize(spectral.eigenvectors.col(0));
        return out;
    }
    // Power iteration on A + I: the shift keeps -λ1 (bipartite levels) from
    // competing with λ1.
    const auto a = to_sparse(adjacency);
    Eigen::VectorXd x = Eigen::VectorXd::Ones(n) / std::sqrt(static_cast<double>(n));
    constexpr int max_iterations = 200000;
    constexpr double tolerance = 1e-10;
    for (int it = 0; it < max_iterations; ++it) {
        Eigen::VectorXd ax = a * x;
        const double lambda = x.dot(ax);
        const double residual = (ax - lambda * x).norm();
        if (residual <= tolerance * std::max(1.0, lambda)) {
            out.value = lambda;
            out.vector = perron_normalize(x);
            return out;
        }
        x = ax + x;
        x /= x.norm();
    }
    throw NumericError("power iteration for the principal eigenpair did not converge at level "
                       + std::to_string(adjacency.level()));
}

Eigen::MatrixXd walk_count(const LevelAdjacency& adjacency, int m)
{
    if (m < 0) {
        throw InputError("walk length must be non-negative");
    }
    const auto n = static_cast<Eigen::Index>(adjacency.size());
    const auto a = to_sparse(adjacency);
    Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n, n);
    for (int step = 0; step < m; ++step) {
        power = a * power;
    }
    return power;
}

Eigen::MatrixXd matrix_exp(const LevelAdjacency& adjacency, std::size_t dense_limit)
{
    return apply_function(adjacency, dense_limit, [](double x) { return std::exp(x); });
}

Eigen::MatrixXd matrix_cosh(const LevelAdjacency& adjacency, std::size_t dense_limit)
{
    return apply_function(adjacency, dense_limit, [](double x) { return std::cosh(x); });
}

Eigen::MatrixXd matrix_sinh(const LevelAdjacency& adjacency, std::size_t dense_limit)
{
    return apply_function(adjacency, dense_limit, [](double x) { return std::sinh(x); });
}

int exp_series_terms(double spectral_radius, double tolerance)
{
    const double lambda = std::max(spectral_radius, 0.0);
    if (lambda == 0.0) {
        return 0;
    }
    const double log_tol = std::log(tolerance);
    for (int terms = 0;; ++terms) {
        const double log_tail = lambda + (terms + 1) * std::log(lambda) - std::lgamma(terms + 2.0);
        if (log_tail < log_tol && terms + 1 > lambda) {
            return terms;
        }
    }
}

double exp_entry_series(const LevelAdjacency& adjacency, SimplexId i, SimplexId j, int terms)
{
    const auto n = static_cast<Eigen::Index>(adjacency.size());
    const auto a = to_sparse(adjacency);
    // w holds A^l e_j / l!; all terms are non-negative, so no cancellation.
    Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
    w(j) = 1.0;
    double sum = (i == j) ? 1.0 : 0.0;
    for (int l = 1; l <= terms; ++l) {
        w = (a * w) / static_cast<double>(l);
        sum += w(i);
    }
    return sum;
}

}  // namespace simplicial
