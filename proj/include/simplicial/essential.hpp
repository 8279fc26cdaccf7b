#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <vector>

#include "simplicial/centrality.hpp"
#include "simplicial/complex.hpp"

namespace simplicial {

/// Essential flags per graph node.
struct EssentialityAnnotation {
    std::vector<bool> essential;  // indexed by NodeId
    std::size_t annotated = 0;    // nodes that appeared in the annotation
    std::size_t unknown_labels = 0;  // annotation labels absent from the graph

    std::size_t essential_count() const;
    double essential_fraction() const;
};

/// Reads `label 0|1` lines; '#' starts a comment line. Labels not in the graph
/// are counted and ignored; nodes missing from the file are non-essential.
EssentialityAnnotation read_annotation(std::istream& in, const Graph& graph, const std::string& source_name = "<stream>");
EssentialityAnnotation read_annotation_file(const std::filesystem::path& path, const Graph& graph);

/// Mean of the scores of the k-simplices containing each node; 0 for nodes in
/// none. A level-0 vector is returned unchanged.
CentralityVector project_to_nodes(const CliqueComplex& complex, const CentralityVector& scores);

/// Node IDs by descending score, ties by ascending ID.
std::vector<NodeId> rank_nodes(std::span<const double> scores);
std::vector<NodeId> rank_nodes(const CentralityVector& scores);

/// Number of nodes in the top x%: ceil(x n / 100).
std::size_t top_size(double percent, std::size_t n);

struct DetectionPoint {
    double percent = 0.0;
    std::size_t top = 0;
    double count = 0.0;       // essential nodes among the top (a mean for baselines)
    double percentage = 0.0;  // 100 count / top
};

struct DetectionCurve {
    std::string measure;
    int level = 0;
    std::vector<DetectionPoint> points;
};

/// Throws InputError for grid values outside (0, 100] or a ranking whose
/// length differs from the annotation.
DetectionCurve detection_curve(std::span<const NodeId> ranking, const EssentialityAnnotation& annotation,
                               std::span<const double> grid);

/// Uniformly random ranking of n nodes.
std::vector<NodeId> random_ranking(std::size_t n, std::uint64_t seed);

/// Mean detection curve over `repetitions` random rankings drawn from one
/// generator seeded with `seed`.
DetectionCurve random_baseline(std::size_t n, const EssentialityAnnotation& annotation, std::span<const double> grid,
                               std::uint64_t seed, std::size_t repetitions = 100);

/// |top-m(a) ∩ top-m(b)|. Throws InputError if m exceeds either length.
std::size_t top_overlap(std::span<const NodeId> a, std::span<const NodeId> b, std::size_t m);

}  // namespace simplicial
