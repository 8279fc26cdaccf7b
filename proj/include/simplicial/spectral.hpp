#pragma once

#include <cstddef>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "simplicial/adjacency.hpp"

namespace simplicial {

Eigen::SparseMatrix<double> to_sparse(const LevelAdjacency& adjacency);
Eigen::MatrixXd to_dense(const LevelAdjacency& adjacency);

/// Full eigendecomposition of a combined adjacency matrix A_k.
struct SpectralDecomposition {
    int level = 0;
    Eigen::VectorXd eigenvalues;   // descending
    Eigen::MatrixXd eigenvectors;  // orthonormal columns, matching eigenvalues
};

/// Throws CapacityError when the level is larger than dense_limit.
SpectralDecomposition spectral_decomposition(const LevelAdjacency& adjacency, std::size_t dense_limit = 5000);

struct PrincipalEigenpair {
    double value = 0.0;
    /// Unit norm, non-negative entries, largest-magnitude entry positive.
    Eigen::VectorXd vector;
};

/// Largest eigenvalue and its eigenvector: dense solver up to dense_limit,
/// shifted power iteration above it.
PrincipalEigenpair principal_eigenpair(const LevelAdjacency& adjacency, std::size_t dense_limit = 5000);

/// (A_k)^m: entry (i, j) counts the s^k-walks of length m from i to j.
Eigen::MatrixXd walk_count(const LevelAdjacency& adjacency, int m);

/// Matrix functions of A_k evaluated through the eigendecomposition.
Eigen::MatrixXd matrix_exp(const LevelAdjacency& adjacency, std::size_t dense_limit = 5000);
Eigen::MatrixXd matrix_cosh(const LevelAdjacency& adjacency, std::size_t dense_limit = 5000);
Eigen::MatrixXd matrix_sinh(const LevelAdjacency& adjacency, std::size_t dense_limit = 5000);

/// Number of terms L such that the tail of the exponential series,
/// bounded by e^λ λ^(L+1) / (L+1)!, drops below `tolerance`.
int exp_series_terms(double spectral_radius, double tolerance = 1e-8);

/// (exp A)_{ij} by the truncated power series sum_{l<=L} (A^l)_{ij} / l!.
double exp_entry_series(const LevelAdjacency& adjacency, SimplexId i, SimplexId j, int terms);

}  // namespace simplicial
