#include <doctest.h>

#include <algorithm>
#include <set>

#include "../fixtures.hpp"
#include "../oracles.hpp"
#include "simplicial/complex.hpp"
#include "simplicial/error.hpp"
#include "simplicial/families.hpp"

using namespace simplicial;

namespace {

std::vector<std::vector<int>> level_tuples(const CliqueComplex& c, int k)
{
    std::vector<std::vector<int>> out;
    const auto& level = c.level(k);
    for (std::size_t i = 0; i < level.size(); ++i) {
        const auto v = level.vertices(static_cast<SimplexId>(i));
        out.emplace_back(v.begin(), v.end());
    }
    return out;
}

}  // namespace

TEST_CASE("reference network level counts")
{
    const auto c = reference_complex(3);
    CHECK(c.count(0) == 9);
    CHECK(c.count(1) == 14);
    CHECK(c.count(2) == 7);
    CHECK(c.count(3) == 1);
    CHECK(c.describe(3, 0) == "{1,2,3,4}");
}

TEST_CASE("small graphs")
{
    const std::vector<std::pair<int, int>> path{{1, 2}, {2, 3}};
    const auto p = build_clique_complex(graph_from_numbered_edges(3, path), 2);
    CHECK(p.count(0) == 3);
    CHECK(p.count(1) == 2);
    CHECK(p.count(2) == 0);

    const std::vector<std::pair<int, int>> k4{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    const auto c = build_clique_complex(graph_from_numbered_edges(4, k4), 3);
    CHECK(c.count(0) == 4);
    CHECK(c.count(1) == 6);
    CHECK(c.count(2) == 4);
    CHECK(c.count(3) == 1);

    const auto empty = build_clique_complex(Graph{}, 3);
    CHECK(empty.count(0) == 0);
    CHECK(empty.count(3) == 0);

    // Levels beyond the largest clique exist but are empty.
    const auto deep = build_clique_complex(graph_from_numbered_edges(3, path), 6);
    CHECK(deep.max_level() == 6);
    CHECK(deep.count(6) == 0);
}

TEST_CASE("levels outside the built range are rejected")
{
    const auto c = reference_complex(2);
    CHECK_THROWS_AS(c.level(3), InsufficientDepthError);
    CHECK_THROWS_AS(c.level(-1), InsufficientDepthError);
    CHECK_THROWS_AS(build_clique_complex(reference_graph(), -1), InputError);
}

TEST_CASE("simplex validation")
{
    const Simplex s({4, 1, 3});
    CHECK(s.dim() == 2);
    CHECK(s.vertices()[0] == 1);
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(2));
    CHECK_THROWS_AS(Simplex({}), InputError);
    CHECK_THROWS_AS(Simplex({1, 1}), InputError);
}

TEST_CASE("faces and cofaces are consistent")
{
    const auto c = reference_complex(3);
    for (int k = 1; k <= 3; ++k) {
        const auto& level = c.level(k);
        for (std::size_t id = 0; id < level.size(); ++id) {
            const auto sid = static_cast<SimplexId>(id);
            const auto faces = c.faces(k, sid);
            REQUIRE(faces.size() == static_cast<std::size_t>(k + 1));
            const auto verts = level.vertices(sid);
            for (int i = 0; i <= k; ++i) {
                // Face i omits vertex i.
                const auto fv = c.level(k - 1).vertices(faces[i]);
                CHECK(std::find(fv.begin(), fv.end(), verts[i]) == fv.end());
                const auto co = c.cofaces(k, faces[i]);
                CHECK(std::is_sorted(co.begin(), co.end()));
                CHECK(std::find(co.begin(), co.end(), sid) != co.end());
            }
        }
    }
    const auto edge = fixture::id(c, {"3", "4"});
    // {1,3,4}, {2,3,4}, {3,4,5}
    CHECK(c.cofaces(2, edge).size() == 3);
}

TEST_CASE("clique enumeration matches brute force on random graphs")
{
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const int n = 8 + static_cast<int>(seed % 13);
        const double p = 0.15 + 0.05 * static_cast<double>(seed % 6);
        const auto g = oracle::erdos_renyi(n, p, seed);
        const auto c = build_clique_complex(g, 4);
        CHECK(c.count(0) == g.node_count());
        CHECK(c.count(1) == g.edge_count());
        for (int k = 0; k <= 4; ++k) {
            CHECK(level_tuples(c, k) == oracle::cliques(g, k + 1));
        }
        // Closure: every face of every simplex is registered.
        for (int k = 1; k <= 4; ++k) {
            for (const auto& t : level_tuples(c, k)) {
                for (std::size_t drop = 0; drop < t.size(); ++drop) {
                    std::vector<NodeId> f;
                    for (std::size_t i = 0; i < t.size(); ++i) {
                        if (i != drop) {
                            f.push_back(t[i]);
                        }
                    }
                    CHECK(c.level(k - 1).find(f).has_value());
                }
            }
        }
    }
}

TEST_CASE("construction is deterministic")
{
    const auto g = oracle::erdos_renyi(30, 0.3, 7);
    const auto a = build_clique_complex(g, 3);
    const auto b = build_clique_complex(g, 3);
    for (int k = 0; k <= 3; ++k) {
        CHECK(level_tuples(a, k) == level_tuples(b, k));
    }
}

TEST_CASE("star family")
{
    const auto s = star_family(5, 2);
    CHECK(s.count(2) == 5);
    CHECK(s.count(3) == 0);
    const auto core = fixture::id(s, {"1", "2"});
    CHECK(s.cofaces(2, core).size() == 5);

    const auto star = star_family(6, 1);
    CHECK(star.count(0) == 7);
    CHECK(star.count(1) == 6);
    CHECK(star.count(2) == 0);
    CHECK(star.graph().degree(*star.graph().find("1")) == 6);

    for (int k = 1; k <= 3; ++k) {
        for (int l : {1, 2, 7}) {
            CHECK(star_family(l, k).count(k) == static_cast<std::size_t>(l));
            CHECK(star_family(l, k).count(k + 1) == 0);
        }
    }
}

TEST_CASE("branch family")
{
    const std::vector<int> x{1, 2, 4};
    const auto t = branch_family(2, x);
    CHECK(t.count(2) == 8);
    CHECK(t.count(3) == 0);

    const std::vector<int> none{0, 0, 0};
    CHECK(branch_family(2, none).count(2) == 1);
    CHECK(branch_family(2, none).count(0) == 3);

    const std::vector<int> two{1, 1};
    const auto t1 = branch_family(1, two);
    const auto p3 = path_family(3, 1);
    CHECK(t1.count(1) == 3);
    CHECK(t1.count(0) == p3.count(0));
    CHECK(t1.graph().edge_count() == p3.graph().edge_count());

    const std::vector<int> wrong{1, 2};
    CHECK_THROWS_AS(branch_family(2, wrong), InputError);
    const std::vector<int> negative{1, -1, 0};
    CHECK_THROWS_AS(branch_family(2, negative), InputError);
}

TEST_CASE("path family")
{
    const auto p = path_family(5, 2);
    CHECK(p.count(2) == 5);
    CHECK(p.count(3) == 0);
    const auto line = path_family(4, 1);
    CHECK(line.count(0) == 5);
    CHECK(line.count(1) == 4);
    for (int k = 1; k <= 3; ++k) {
        for (int l : {1, 2, 9}) {
            CHECK(path_family(l, k).count(k) == static_cast<std::size_t>(l));
        }
    }
    CHECK_THROWS_AS(path_family(0, 2), InputError);
    CHECK_THROWS_AS(star_family(3, 0), InputError);
}
