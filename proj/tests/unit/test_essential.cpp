#include <doctest.h>

#include <numeric>
#include <sstream>

#include "../fixtures.hpp"
#include "simplicial/error.hpp"
#include "simplicial/essential.hpp"
#include "simplicial/families.hpp"

using namespace simplicial;

namespace {

EssentialityAnnotation flags(std::vector<bool> essential)
{
    EssentialityAnnotation a;
    a.annotated = essential.size();
    a.essential = std::move(essential);
    return a;
}

}  // namespace

TEST_CASE("projection onto nodes")
{
    const auto c = reference_complex(3);
    const auto tri = compute_centrality(c, 2, Measure::degree);
    const auto nodes = project_to_nodes(c, tri);
    CHECK(nodes.level == 0);
    REQUIRE(nodes.size() == 9);
    const auto node = [&](const char* label) { return nodes.scores[*c.graph().find(label)]; };
    CHECK(node("5") == 2.0);
    CHECK(node("9") == 0.0);  // in no triangle
    // Node 6: {4,5,6} degree 1, {6,7,8} degree 0.
    CHECK(node("6") == 0.5);

    CentralityVector edges;
    edges.level = 1;
    edges.scores.assign(c.count(1), 0.0);
    edges.scores[fixture::id(c, {"6", "9"})] = 4.0;
    edges.scores[fixture::id(c, {"6", "7"})] = 2.0;
    const auto p = project_to_nodes(c, edges);
    CHECK(p.scores[*c.graph().find("9")] == 4.0);

    // Positive scaling commutes with projection and keeps the ranking.
    auto scaled = tri;
    for (auto& v : scaled.scores) {
        v *= 3.5;
    }
    const auto ps = project_to_nodes(c, scaled);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        CHECK(ps.scores[i] == doctest::Approx(3.5 * nodes.scores[i]));
    }
    CHECK(rank_nodes(ps) == rank_nodes(nodes));

    CentralityVector wrong;
    wrong.level = 2;
    wrong.scores = {1.0};
    CHECK_THROWS_AS(project_to_nodes(c, wrong), InputError);
}

TEST_CASE("ranking breaks ties by node ID")
{
    const std::vector<double> s{3, 1, 3};
    CHECK(rank_nodes(s) == std::vector<NodeId>{0, 2, 1});
    const std::vector<double> flat(5, 2.0);
    CHECK(rank_nodes(flat) == std::vector<NodeId>{0, 1, 2, 3, 4});
    const std::vector<double> distinct{0.1, 0.9, 0.5};
    CHECK(rank_nodes(distinct) == std::vector<NodeId>{1, 2, 0});
}

TEST_CASE("detection curves")
{
    std::vector<bool> e(10, false);
    for (int i = 0; i < 5; ++i) {
        e[i] = true;
    }
    const auto ann = flags(e);
    std::vector<NodeId> perfect(10);
    std::iota(perfect.begin(), perfect.end(), 0);
    const std::vector<double> grid{10, 50, 70, 100};
    const auto curve = detection_curve(perfect, ann, grid);
    CHECK(curve.points[1].percentage == 100.0);
    CHECK(curve.points[2].top == 7);
    CHECK(curve.points[2].count == 5.0);
    CHECK(curve.points[3].percentage == 50.0);
    for (std::size_t i = 1; i < curve.points.size(); ++i) {
        CHECK(curve.points[i].count >= curve.points[i - 1].count);
    }
    CHECK(top_size(1, 10) == 1);
    CHECK(top_size(15, 10) == 2);
    CHECK(top_size(7, 100) == 7);
    const std::vector<double> bad{0.0};
    CHECK_THROWS_AS(detection_curve(perfect, ann, bad), InputError);
    const std::vector<double> over{101.0};
    CHECK_THROWS_AS(detection_curve(perfect, ann, over), InputError);

    // Permuted rankings average to the essential fraction.
    double mean = 0.0;
    const std::vector<double> half{50};
    for (std::uint64_t s = 0; s < 100; ++s) {
        mean += detection_curve(random_ranking(10, s), ann, half).points[0].percentage;
    }
    CHECK(std::abs(mean / 100.0 - 50.0) <= 5.0);

    const auto nobody = flags(std::vector<bool>(10, false));
    for (const auto& p : detection_curve(perfect, nobody, grid).points) {
        CHECK(p.count == 0.0);
    }
}

TEST_CASE("random baseline")
{
    std::vector<bool> e(200, false);
    for (int i = 0; i < 200; i += 4) {
        e[i] = true;
    }
    const auto ann = flags(e);
    const std::vector<double> grid{1, 3, 5, 10, 15, 20, 25};
    const auto a = random_baseline(200, ann, grid, 42, 2000);
    const auto b = random_baseline(200, ann, grid, 42, 2000);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(a.points[i].percentage == b.points[i].percentage);
        CHECK(std::abs(a.points[i].percentage - 25.0) <= 3.0);
    }
    const auto once = random_baseline(200, ann, grid, 9, 1);
    const auto direct = detection_curve(random_ranking(200, 9), ann, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(once.points[i].percentage == direct.points[i].percentage);
    }
    CHECK_THROWS_AS(random_baseline(200, ann, grid, 1, 0), InputError);
}

TEST_CASE("top overlap")
{
    const std::vector<NodeId> r{0, 1, 2, 3, 4, 5};
    const std::vector<NodeId> s{3, 4, 5, 0, 1, 2};
    CHECK(top_overlap(r, r, 4) == 4);
    CHECK(top_overlap(r, s, 3) == 0);
    CHECK(top_overlap(r, s, 4) == 2);
    CHECK_THROWS_AS(top_overlap(r, s, 7), InputError);
}

TEST_CASE("annotation files")
{
    const auto c = reference_complex(3);
    std::istringstream in("# essential genes\n1 1\n5 1\n6 0\nYFG1 1\n");
    const auto ann = read_annotation(in, c.graph());
    CHECK(ann.essential_count() == 2);
    CHECK(ann.annotated == 3);
    CHECK(ann.unknown_labels == 1);
    CHECK(ann.essential[*c.graph().find("5")]);
    CHECK_FALSE(ann.essential[*c.graph().find("9")]);
    CHECK(ann.essential_fraction() == doctest::Approx(2.0 / 9.0));

    std::istringstream bad("1 yes\n");
    CHECK_THROWS_AS(read_annotation(bad, c.graph()), InputError);
    CHECK_THROWS_AS(read_annotation_file("/nonexistent/annotation.txt", c.graph()), InputError);
}
