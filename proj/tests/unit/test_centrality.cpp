#include <doctest.h>

#include <cmath>

#include "../fixtures.hpp"
#include "../oracles.hpp"
#include "simplicial/adjacency.hpp"
#include "simplicial/centrality.hpp"
#include "simplicial/error.hpp"
#include "simplicial/families.hpp"
#include "simplicial/spectral.hpp"

using namespace simplicial;
using fixture::id;

TEST_CASE("degree centrality")
{
    const auto c = reference_complex(3);
    const auto d = compute_centrality(c, 2, Measure::degree);
    CHECK(d.measure == "degree");
    CHECK(d.scores[id(c, {"1", "2", "3"})] == 0.0);
    CHECK(d.scores[id(c, {"3", "4", "5"})] == 3.0);
    for (double v : compute_centrality(star_family(7, 2), 2, Measure::degree).scores) {
        CHECK(v == 6.0);
    }
}

TEST_CASE("closeness")
{
    const std::vector<int> x{1, 2, 4};
    const auto t = branch_family(2, x);
    const auto cl = compute_centrality(t, 2, Measure::closeness);
    double least = 1.0;
    for (double v : cl.scores) {
        least = std::min(least, v);
    }
    CHECK(least == 7.0 / 13.0);

    for (int k = 1; k <= 3; ++k) {
        for (double v : compute_centrality(star_family(5, k), k, Measure::closeness).scores) {
            CHECK(v == 1.0);
        }
        for (int l = 2; l <= 9; ++l) {
            const auto p = compute_centrality(path_family(l, k), k, Measure::closeness);
            CHECK(p.scores.front() == doctest::Approx(2.0 / l).epsilon(1e-15));
            CHECK(p.scores.back() == doctest::Approx(2.0 / l).epsilon(1e-15));
        }
    }

    // Singleton components are flagged.
    const auto c = reference_complex(3);
    const auto c1 = compute_centrality(c, 1, Measure::closeness);
    REQUIRE_FALSE(c1.undefined.empty());
    CHECK(c1.undefined[id(c, {"1", "2"})]);
    CHECK_FALSE(c1.undefined[id(c, {"1", "4"})]);
    CHECK(c1.scores[id(c, {"1", "2"})] == 0.0);

    const auto raw = closeness(combined_adjacency(c, 2), false);
    CHECK(raw.scores[id(c, {"1", "3", "4"})] == 1.0 / (1 + 2 + 2));
}

TEST_CASE("harmonic closeness")
{
    const auto c = reference_complex(3);
    const auto h = compute_centrality(c, 2, Measure::harmonic);
    CHECK(h.scores[id(c, {"2", "3", "4"})] == 2.0);
    CHECK(h.scores[id(c, {"6", "7", "8"})] == 0.0);
    for (double v : compute_centrality(star_family(6, 2), 2, Measure::harmonic).scores) {
        CHECK(v == 5.0);
    }
}

TEST_CASE("betweenness")
{
    for (int k = 1; k <= 3; ++k) {
        for (double v : compute_centrality(star_family(6, k), k, Measure::betweenness).scores) {
            CHECK(v == 0.0);
        }
        const auto p = compute_centrality(path_family(3, k), k, Measure::betweenness);
        CHECK(p.scores[0] == 0.0);
        CHECK(p.scores[1] == 1.0);
        CHECK(p.scores[2] == 0.0);
    }
    const std::vector<int> x{1, 0, 1};
    const auto t = branch_family(2, x);
    CHECK(compute_centrality(t, 2, Measure::betweenness).scores[id(t, {"1", "2", "3"})] == 1.0);
    // Fewer than three simplices normalize to zero.
    const auto two = compute_centrality(path_family(2, 1), 1, Measure::betweenness);
    CHECK(two.scores == std::vector<double>{0.0, 0.0});
}

TEST_CASE("path-based measures match exhaustive enumeration")
{
    int checked = 0;
    for (std::uint64_t seed = 1; checked < 40 && seed < 400; ++seed) {
        const auto g = oracle::erdos_renyi(6 + static_cast<int>(seed % 4), 0.5, seed);
        const auto c = build_clique_complex(g, 3);
        bool small = true;
        for (int k = 0; k <= 2; ++k) {
            small = small && c.count(k) <= 12;
        }
        if (!small) {
            continue;
        }
        ++checked;
        for (int k = 0; k <= 2; ++k) {
            const auto o = oracle::level_adjacency(g, oracle::cliques(g, k + 1), k);
            const auto expected = oracle::path_centralities(o.combined);
            const auto a = combined_adjacency(c, k);
            const auto n = static_cast<std::int64_t>(a.size());
            const auto cn = closeness(a, true);
            const auto cr = closeness(a, false);
            const auto h = harmonic_closeness(a);
            const auto bn = betweenness(a, true);
            const auto br = betweenness(a, false);
            for (std::int64_t i = 0; i < n; ++i) {
                const auto far = expected.farness[i];
                const auto size = expected.component_size[i];
                if (far > 0) {
                    CHECK(cn.scores[i] == static_cast<double>(size - 1) / static_cast<double>(far));
                    CHECK(cr.scores[i] == 1.0 / static_cast<double>(far));
                }
                CHECK(h.scores[i] == doctest::Approx(expected.harmonic[i].value()).epsilon(1e-12));
                CHECK(br.scores[i] == doctest::Approx(expected.betweenness[i].value()).epsilon(1e-12));
                const double norm = n >= 3 ? expected.betweenness[i].value() / (static_cast<double>((n - 1) * (n - 2)) / 2.0)
                                           : 0.0;
                CHECK(bn.scores[i] == doctest::Approx(norm).epsilon(1e-12));
            }
        }
    }
    CHECK(checked == 40);
}

TEST_CASE("katz")
{
    for (int k = 1; k <= 3; ++k) {
        CentralityOptions o;
        o.katz_alpha = 0.25;
        for (double v : compute_centrality(star_family(3, k), k, Measure::katz, o).scores) {
            CHECK(v == doctest::Approx(2.0).epsilon(1e-12));
        }
    }
    const auto c = reference_complex(3);
    CentralityOptions tiny;
    tiny.katz_alpha = 1e-12;
    for (double v : compute_centrality(c, 1, Measure::katz, tiny).scores) {
        CHECK(v == doctest::Approx(1.0).epsilon(1e-10));
    }
    // Isolated simplices only: every score is 1 whatever the damping.
    CentralityOptions any;
    any.katz_alpha = 3.0;
    const auto isolated = LevelAdjacency::from_pairs(1, AdjacencyKind::combined, 4, {});
    for (double v : katz(isolated, any).scores) {
        CHECK(v == 1.0);
    }

    const auto a = combined_adjacency(c, 1);
    const double lambda1 = principal_eigenpair(a).value;
    CentralityOptions bad;
    bad.katz_alpha = 1.0 / lambda1;
    CHECK_THROWS_AS(katz(a, bad), InputError);
    bad.katz_alpha = -0.1;
    CHECK_THROWS_AS(katz(a, bad), InputError);

    const auto def = katz(a);
    CHECK(*def.parameter("alpha") == doctest::Approx(0.5 / lambda1));
}

TEST_CASE("katz agrees with its walk series")
{
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto g = oracle::erdos_renyi(25, 0.25, seed);
        const auto c = build_clique_complex(g, 3);
        for (int k = 0; k <= 2; ++k) {
            const auto a = combined_adjacency(c, k);
            if (a.nonzeros() == 0) {
                continue;
            }
            const Eigen::MatrixXd m = to_dense(a);
            const double lambda1 = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues().maxCoeff();

            // Fixed order 50 is ample at αλ1 = 0.5.
            CentralityOptions half;
            half.katz_alpha = 0.5 / lambda1;
            const auto solved = katz(a, half);
            Eigen::VectorXd term = Eigen::VectorXd::Ones(m.rows());
            Eigen::VectorXd series = term;
            for (int p = 1; p <= 50; ++p) {
                term = *half.katz_alpha * (m * term);
                series += term;
            }
            for (Eigen::Index i = 0; i < m.rows(); ++i) {
                CHECK(std::abs(solved.scores[i] - series[i]) <= 1e-8 * std::abs(series[i]));
            }

            // Near the edge of the admissible interval the series needs more terms.
            CentralityOptions near;
            near.katz_alpha = 0.9 / lambda1;
            const auto solved9 = katz(a, near);
            const auto series9 = oracle::katz_series(m, *near.katz_alpha, lambda1);
            for (Eigen::Index i = 0; i < m.rows(); ++i) {
                CHECK(std::abs(solved9.scores[i] - series9[i]) <= 1e-8 * std::abs(series9[i]));
            }
        }
    }
}

TEST_CASE("eigenvector centrality")
{
    for (int k = 1; k <= 3; ++k) {
        const auto s = compute_centrality(star_family(5, k), k, Measure::eigenvector);
        for (double v : s.scores) {
            CHECK(v == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-12));
        }
        const auto p = compute_centrality(path_family(3, k), k, Measure::eigenvector);
        CHECK(p.scores[1] == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));
        CHECK(p.scores[0] == doctest::Approx(0.5).epsilon(1e-12));
    }
    const auto c = reference_complex(3);
    const auto a = combined_adjacency(c, 1);
    const auto e = eigenvector_centrality(a);
    const Eigen::Map<const Eigen::VectorXd> psi(e.scores.data(), static_cast<Eigen::Index>(e.scores.size()));
    CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(psi.minCoeff() >= 0.0);
    const double lambda1 = *e.parameter("lambda1");
    CHECK((to_dense(a) * psi - lambda1 * psi).norm() <= 1e-9);

    const auto none = LevelAdjacency::from_pairs(1, AdjacencyKind::combined, 3, {});
    CHECK_THROWS_AS(eigenvector_centrality(none), NumericError);

    // Katz with α close to 1/λ1 lines up with the principal eigenvector.
    for (int k = 1; k <= 2; ++k) {
        for (const auto& fam : {path_family(3, k), star_family(6, k)}) {
            const auto adj = combined_adjacency(fam, k);
            const auto ev = eigenvector_centrality(adj);
            CentralityOptions o;
            o.katz_alpha = 0.999 / principal_eigenpair(adj).value;
            const auto kz = katz(adj, o);
            double dot = 0.0;
            double nk = 0.0;
            for (std::size_t i = 0; i < kz.size(); ++i) {
                dot += kz.scores[i] * ev.scores[i];
                nk += kz.scores[i] * kz.scores[i];
            }
            CHECK(dot / std::sqrt(nk) >= 1.0 - 1e-6);
        }
    }
}

TEST_CASE("subgraph centrality and communicability")
{
    const auto c = reference_complex(3);
    const auto a = combined_adjacency(c, 1);
    const auto sc = subgraph_centrality(a);
    CHECK(sc.scores[id(c, {"1", "4"})] == doctest::Approx(2.714).epsilon(0.001 / 2.714));
    CHECK(communicability(a, id(c, {"1", "4"}), id(c, {"6", "9"})) == doctest::Approx(2.0363).epsilon(0.001 / 2.0363));
    CHECK(sc.scores[id(c, {"1", "2"})] == doctest::Approx(1.0).epsilon(1e-14));
    for (double v : sc.scores) {
        CHECK(v >= 1.0 - 1e-12);
    }

    // Lemma-5 extremes: complete underlying network maximal, path ends minimal.
    for (int k = 1; k <= 3; ++k) {
        const auto star = compute_centrality(star_family(6, k), k, Measure::subgraph);
        const auto path = compute_centrality(path_family(6, k), k, Measure::subgraph);
        for (std::size_t i = 0; i < 6; ++i) {
            CHECK(star.scores[i] >= path.scores[i]);
            CHECK(path.scores[i] >= path.scores[0] - 1e-12);
        }
    }
}

TEST_CASE("series fallback above the dense limit")
{
    const auto c = reference_complex(3);
    const auto a = combined_adjacency(c, 1);
    CentralityOptions small;
    small.dense_limit = 4;
    CHECK_THROWS_AS(subgraph_centrality(a, small), CapacityError);
    small.series_fallback = true;
    const auto series = subgraph_centrality(a, small);
    const auto dense = subgraph_centrality(a);
    for (std::size_t i = 0; i < dense.size(); ++i) {
        CHECK(series.scores[i] == doctest::Approx(dense.scores[i]).epsilon(1e-8));
    }
    CHECK(communicability(a, 2, 12, small) == doctest::Approx(communicability(a, 2, 12)).epsilon(1e-8));
    // The large-level eigenvector path agrees with the dense one.
    const auto big = eigenvector_centrality(a, small);
    const auto ref = eigenvector_centrality(a);
    for (std::size_t i = 0; i < ref.size(); ++i) {
        CHECK(big.scores[i] == doctest::Approx(ref.scores[i]).epsilon(1e-6));
    }
}

TEST_CASE("matrix functions")
{
    const auto c = reference_complex(3);
    for (int k = 0; k <= 2; ++k) {
        const auto a = combined_adjacency(c, k);
        const auto e = matrix_exp(a);
        const auto ch = matrix_cosh(a);
        const auto sh = matrix_sinh(a);
        CHECK((e - ch - sh).norm() <= 1e-10 * e.norm());
        const auto [cs, ss] = oracle::cosh_sinh_series(to_dense(a), 60);
        CHECK((ch - cs).norm() <= 1e-10 * cs.norm());
        CHECK((sh - ss).norm() <= 1e-10 * std::max(1.0, ss.norm()));

        const auto dense = to_dense(a);
        CHECK(walk_count(a, 0).isIdentity());
        CHECK(walk_count(a, 1) == dense);
        const auto spec = spectral_decomposition(a);
        for (int m = 2; m <= 6; ++m) {
            Eigen::MatrixXd power = Eigen::MatrixXd::Identity(dense.rows(), dense.cols());
            for (int p = 0; p < m; ++p) {
                power = power * dense;
            }
            CHECK(walk_count(a, m) == power);
            const Eigen::MatrixXd rebuilt = spec.eigenvectors *
                                            spec.eigenvalues.array().pow(m).matrix().asDiagonal() *
                                            spec.eigenvectors.transpose();
            CHECK((rebuilt - power).norm() <= 1e-9 * std::max(1.0, power.norm()));
        }
        for (Eigen::Index i = 1; i < spec.eigenvalues.size(); ++i) {
            CHECK(spec.eigenvalues[i - 1] >= spec.eigenvalues[i]);
        }
    }
    const auto a = combined_adjacency(c, 1);
    const auto w2 = walk_count(a, 2);
    const auto e14 = id(c, {"1", "4"});
    CHECK(w2(e14, e14) == static_cast<double>(simplex_degree(a, e14)));
    CHECK(exp_entry_series(a, e14, e14, exp_series_terms(4.0)) == doctest::Approx(2.7144722).epsilon(1e-6));
}

TEST_CASE("symmetric families give symmetric scores")
{
    for (int k = 1; k <= 3; ++k) {
        for (Measure m : {Measure::degree, Measure::closeness, Measure::harmonic, Measure::betweenness, Measure::katz,
                          Measure::eigenvector, Measure::subgraph}) {
            const auto s = compute_centrality(star_family(5, k), k, m);
            for (double v : s.scores) {
                CHECK(v == doctest::Approx(s.scores[0]).epsilon(1e-12));
            }
            const auto p = compute_centrality(path_family(7, k), k, m);
            for (std::size_t i = 0; i < p.size(); ++i) {
                CHECK(p.scores[i] == doctest::Approx(p.scores[p.size() - 1 - i]).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("results do not depend on the thread count")
{
    const auto g = oracle::erdos_renyi(45, 0.2, 5);
    const auto c = build_clique_complex(g, 3);
    for (int k = 0; k <= 2; ++k) {
        const auto a = combined_adjacency(c, k);
        for (Measure m : {Measure::closeness, Measure::harmonic, Measure::betweenness}) {
            CentralityOptions one;
            CentralityOptions four;
            four.threads = 4;
            CHECK(compute_centrality(a, m, one).scores == compute_centrality(a, m, four).scores);
        }
    }
}

TEST_CASE("measure names round trip")
{
    for (Measure m : {Measure::degree, Measure::closeness, Measure::harmonic, Measure::betweenness, Measure::katz,
                      Measure::eigenvector, Measure::subgraph}) {
        CHECK(parse_measure(to_string(m)) == m);
    }
    CHECK_FALSE(parse_measure("pagerank"));
}
