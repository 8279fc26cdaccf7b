#pragma once
// Slow, direct reference implementations used only by the tests. They work
// from the raw edge set and never call the library's complex, adjacency, path
// or centrality code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "simplicial/graph.hpp"

namespace oracle {

using Tuple = std::vector<int>;

// Adjacency matrix of node IDs.
inline std::vector<std::vector<bool>> adjacency_matrix(const simplicial::Graph& g)
{
    const auto n = g.node_count();
    std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
    for (auto [u, v] : g.edges()) {
        a[u][v] = a[v][u] = true;
    }
    return a;
}

// Every clique with `size` vertices, by extending increasing vertex tuples.
inline std::vector<Tuple> cliques(const simplicial::Graph& g, int size)
{
    const auto a = adjacency_matrix(g);
    const int n = static_cast<int>(g.node_count());
    std::vector<Tuple> out;
    Tuple cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == size) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            bool ok = true;
            for (int u : cur) {
                ok = ok && a[u][v];
            }
            if (ok) {
                cur.push_back(v);
                self(self, v + 1);
                cur.pop_back();
            }
        }
    };
    rec(rec, 0);
    return out;  // already lexicographic
}

inline std::size_t common_count(const Tuple& x, const Tuple& y)
{
    std::size_t c = 0;
    for (int v : x) {
        c += static_cast<std::size_t>(std::count(y.begin(), y.end(), v));
    }
    return c;
}

inline bool is_clique(const std::vector<std::vector<bool>>& a, const Tuple& t)
{
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            if (!a[t[i]][t[j]]) {
                return false;
            }
        }
    }
    return true;
}

struct Adjacencies {
    std::vector<std::vector<bool>> lower, upper, combined;
};

// Pairwise definitions over the k-cliques `level` (each of size k+1).
inline Adjacencies level_adjacency(const simplicial::Graph& g, const std::vector<Tuple>& level, int k)
{
    const auto a = adjacency_matrix(g);
    const auto n = level.size();
    Adjacencies r;
    r.lower.assign(n, std::vector<bool>(n, false));
    r.upper = r.lower;
    r.combined = r.lower;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            // Distinct (k+1)-sets sharing k vertices share a (k-1)-face; their
            // union then has k+2 vertices and spans a (k+1)-simplex iff it is a clique.
            const bool share_face = k >= 1 && common_count(level[i], level[j]) == static_cast<std::size_t>(k);
            Tuple u = level[i];
            for (int v : level[j]) {
                if (std::find(u.begin(), u.end(), v) == u.end()) {
                    u.push_back(v);
                }
            }
            const bool coface = static_cast<int>(u.size()) == k + 2 && is_clique(a, u);
            r.lower[i][j] = share_face;
            r.upper[i][j] = coface;
            r.combined[i][j] = k == 0 ? coface : (share_face && !coface);
        }
    }
    return r;
}

constexpr int kInf = 1 << 29;

inline std::vector<std::vector<int>> floyd_warshall(const std::vector<std::vector<bool>>& adj)
{
    const auto n = adj.size();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
    for (std::size_t i = 0; i < n; ++i) {
        d[i][i] = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (adj[i][j]) {
                d[i][j] = 1;
            }
        }
    }
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
            }
        }
    }
    return d;
}

// Exact rational with 64-bit parts; enough for the tiny inputs of the oracles.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { reduce(); }
    void reduce()
    {
        const auto g = std::gcd(num, den);
        if (g != 0) {
            num /= g;
            den /= g;
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
    }
    Rational operator+(const Rational& o) const { return {num * o.den + o.num * den, den * o.den}; }
    Rational operator/(const Rational& o) const { return {num * o.den, den * o.num}; }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Every shortest path from s to t listed explicitly (vertex sequences).
inline void shortest_paths(const std::vector<std::vector<bool>>& adj, const std::vector<std::vector<int>>& d, int s,
                           int t, std::vector<std::vector<int>>& out)
{
    std::vector<int> cur{s};
    auto rec = [&](auto&& self, int v) -> void {
        if (v == t) {
            out.push_back(cur);
            return;
        }
        for (int w = 0; w < static_cast<int>(adj.size()); ++w) {
            if (adj[v][w] && d[s][w] == d[s][v] + 1 && d[w][t] == d[v][t] - 1) {
                cur.push_back(w);
                self(self, w);
                cur.pop_back();
            }
        }
    };
    if (d[s][t] < kInf) {
        rec(rec, s);
    }
}

struct PathCentralities {
    std::vector<Rational> betweenness;  // unordered pairs, unnormalized
    std::vector<std::int64_t> farness;
    std::vector<std::int64_t> component_size;
    std::vector<Rational> harmonic;
};

inline PathCentralities path_centralities(const std::vector<std::vector<bool>>& adj)
{
    const auto d = floyd_warshall(adj);
    const int n = static_cast<int>(adj.size());
    PathCentralities r;
    r.betweenness.assign(n, Rational(0));
    r.farness.assign(n, 0);
    r.component_size.assign(n, 0);
    r.harmonic.assign(n, Rational(0));
    for (int s = 0; s < n; ++s) {
        for (int t = 0; t < n; ++t) {
            if (d[s][t] < kInf) {
                r.farness[s] += d[s][t];
                ++r.component_size[s];
                if (s != t) {
                    r.harmonic[s] = r.harmonic[s] + Rational(1, d[s][t]);
                }
            }
        }
    }
    for (int s = 0; s < n; ++s) {
        for (int t = s + 1; t < n; ++t) {
            std::vector<std::vector<int>> paths;
            shortest_paths(adj, d, s, t, paths);
            if (paths.empty()) {
                continue;
            }
            std::vector<std::int64_t> through(n, 0);
            for (const auto& p : paths) {
                for (std::size_t i = 1; i + 1 < p.size(); ++i) {
                    ++through[p[i]];
                }
            }
            for (int v = 0; v < n; ++v) {
                if (through[v] > 0) {
                    r.betweenness[v] = r.betweenness[v] + Rational(through[v], static_cast<std::int64_t>(paths.size()));
                }
            }
        }
    }
    return r;
}

inline Eigen::MatrixXd dense(const std::vector<std::vector<bool>>& adj)
{
    const auto n = static_cast<Eigen::Index>(adj.size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            m(i, j) = adj[i][j] ? 1.0 : 0.0;
        }
    }
    return m;
}

// Katz scores by the damped walk series, stopped once the geometric tail bound
// (αλ1)^(m+1) / (1 - αλ1) times the largest partial term drops below tol.
inline Eigen::VectorXd katz_series(const Eigen::MatrixXd& a, double alpha, double lambda1, double tol = 1e-12)
{
    const double q = alpha * lambda1;
    Eigen::VectorXd term = Eigen::VectorXd::Ones(a.rows());
    Eigen::VectorXd sum = term;
    double bound = 1.0;
    for (int m = 1; m < 100000; ++m) {
        term = alpha * (a * term);
        sum += term;
        bound *= q;
        if (bound / (1.0 - q) * std::sqrt(static_cast<double>(a.rows())) < tol) {
            break;
        }
    }
    return sum;
}

// cosh and sinh of a symmetric matrix from their even and odd power series.
inline std::pair<Eigen::MatrixXd, Eigen::MatrixXd> cosh_sinh_series(const Eigen::MatrixXd& a, int terms)
{
    const auto n = a.rows();
    Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
    for (int m = 0; m <= terms; ++m) {
        if (m > 0) {
            power = power * a / static_cast<double>(m);
        }
        (m % 2 == 0 ? c : s) += power;
    }
    return {c, s};
}

inline simplicial::Graph erdos_renyi(int n, double p, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            if (coin(rng)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return simplicial::graph_from_numbered_edges(static_cast<std::size_t>(n), edges);
}

}  // namespace oracle
