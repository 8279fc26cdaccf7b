#include "simplicial/essential.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "simplicial/error.hpp"

namespace simplicial {

std::size_t EssentialityAnnotation::essential_count() const
{
    return static_cast<std::size_t>(std::count(essential.begin(), essential.end(), true));
}

double EssentialityAnnotation::essential_fraction() const
{
    if (essential.empty()) {
        return 0.0;
    }
    return static_cast<double>(essential_count()) / static_cast<double>(essential.size());
}

EssentialityAnnotation read_annotation(std::istream& in, const Graph& graph, const std::string& source_name)
{
    EssentialityAnnotation ann;
    ann.essential.assign(graph.node_count(), false);
    std::vector<bool> seen(graph.node_count(), false);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string label;
        std::string flag;
        std::string extra;
        if (!(tokens >> label) || label.front() == '#') {
            continue;
        }
        if (!(tokens >> flag) || (tokens >> extra) || (flag != "0" && flag != "1")) {
            throw InputError(source_name + ":" + std::to_string(line_no) + ": expected `label 0|1`");
        }
        const auto id = graph.find(label);
        if (!id) {
            ++ann.unknown_labels;
            continue;
        }
        if (!seen[*id]) {
            seen[*id] = true;
            ++ann.annotated;
        }
        ann.essential[*id] = flag == "1";
    }
    return ann;
}

EssentialityAnnotation read_annotation_file(const std::filesystem::path& path, const Graph& graph)
{
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open annotation file " + path.string());
    }
    return read_annotation(in, graph, path.string());
}

CentralityVector project_to_nodes(const CliqueComplex& complex, const CentralityVector& scores)
{
    if (scores.level == 0) {
        return scores;
    }
    const auto& level = complex.level(scores.level);
    if (scores.size() != level.size()) {
        throw InputError("score vector does not match the level size");
    }
    const std::size_t n = complex.graph().node_count();
    std::vector<double> sum(n, 0.0);
    std::vector<std::size_t> count(n, 0);
    for (std::size_t id = 0; id < level.size(); ++id) {
        for (NodeId v : level.vertices(static_cast<SimplexId>(id))) {
            sum[v] += scores.scores[id];
            ++count[v];
        }
    }
    CentralityVector out;
    out.level = 0;
    out.measure = scores.measure;
    out.parameters = scores.parameters;
    out.parameters.emplace_back("projected_from", scores.level);
    out.normalized = scores.normalized;
    out.scores.resize(n, 0.0);
    for (std::size_t v = 0; v < n; ++v) {
        if (count[v] > 0) {
            out.scores[v] = sum[v] / static_cast<double>(count[v]);
        }
    }
    out.note = scores.note;
    return out;
}

std::vector<NodeId> rank_nodes(std::span<const double> scores)
{
    std::vector<NodeId> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return scores[a] > scores[b]; });
    return order;
}

std::vector<NodeId> rank_nodes(const CentralityVector& scores)
{
    return rank_nodes(std::span<const double>(scores.scores));
}

std::size_t top_size(double percent, std::size_t n)
{
    // Round away representation noise such as 0.07 * 100 = 7.000000000000001.
    const double raw = percent * static_cast<double>(n) / 100.0;
    const double nearest = std::round(raw);
    const double value = std::abs(raw - nearest) < 1e-9 ? nearest : std::ceil(raw);
    return std::min(n, static_cast<std::size_t>(value));
}

namespace {

void check_grid(std::span<const double> grid)
{
    for (double x : grid) {
        if (!(x > 0.0 && x <= 100.0)) {
            throw InputError("detection grid values must lie in (0, 100]");
        }
    }
}

}  // namespace

DetectionCurve detection_curve(std::span<const NodeId> ranking, const EssentialityAnnotation& annotation,
                               std::span<const double> grid)
{
    check_grid(grid);
    if (ranking.size() != annotation.essential.size()) {
        throw InputError("ranking and annotation cover different node counts");
    }
    // prefix[i] = essential nodes among the first i ranked.
    std::vector<std::size_t> prefix(ranking.size() + 1, 0);
    for (std::size_t i = 0; i < ranking.size(); ++i) {
        prefix[i + 1] = prefix[i] + (annotation.essential[ranking[i]] ? 1 : 0);
    }
    DetectionCurve curve;
    for (double x : grid) {
        DetectionPoint p;
        p.percent = x;
        p.top = top_size(x, ranking.size());
        p.count = static_cast<double>(prefix[p.top]);
        p.percentage = p.top == 0 ? 0.0 : 100.0 * p.count / static_cast<double>(p.top);
        curve.points.push_back(p);
    }
    return curve;
}

std::vector<NodeId> random_ranking(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    return order;
}

DetectionCurve random_baseline(std::size_t n, const EssentialityAnnotation& annotation, std::span<const double> grid,
                               std::uint64_t seed, std::size_t repetitions)
{
    if (repetitions == 0) {
        throw InputError("random baseline needs at least one repetition");
    }
    check_grid(grid);
    std::mt19937_64 rng(seed);
    std::vector<NodeId> order(n);
    DetectionCurve mean;
    mean.measure = "random";
    for (std::size_t r = 0; r < repetitions; ++r) {
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        const auto curve = detection_curve(order, annotation, grid);
        if (mean.points.empty()) {
            mean.points = curve.points;
            continue;
        }
        for (std::size_t i = 0; i < curve.points.size(); ++i) {
            mean.points[i].count += curve.points[i].count;
            mean.points[i].percentage += curve.points[i].percentage;
        }
    }
    for (auto& p : mean.points) {
        p.count /= static_cast<double>(repetitions);
        p.percentage /= static_cast<double>(repetitions);
    }
    return mean;
}

std::size_t top_overlap(std::span<const NodeId> a, std::span<const NodeId> b, std::size_t m)
{
    if (m > a.size() || m > b.size()) {
        throw InputError("overlap cutoff exceeds ranking length");
    }
    std::vector<NodeId> x(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(m));
    std::vector<NodeId> y(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(m));
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    std::vector<NodeId> common;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
    return common.size();
}

}  // namespace simplicial
