#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "simplicial/centrality.hpp"
#include "simplicial/distributions.hpp"

namespace simplicial {

/// Empirical distribution of combined simplex degrees at one level.
struct DegreeDistribution {
    int level = 0;
    std::vector<std::size_t> sample;  // δ_k per simplex, in ID order
    std::vector<std::size_t> values;  // distinct degrees, ascending
    std::vector<double> pdf;          // p(δ_k) for each value
    std::vector<double> ccdf;         // P(degree >= value)
};

/// Throws InputError on an empty level.
DegreeDistribution degree_distribution(const LevelAdjacency& combined);
DegreeDistribution degree_distribution(const CliqueComplex& complex, int k);

enum class BicStrength { not_significant, positive, strong, very_strong };
std::string_view to_string(BicStrength strength);
/// Kass-Raftery band of a BIC difference.
BicStrength kass_raftery(double delta_bic);

struct ModelSelection {
    std::vector<FitResult> ranked;   // successful fits, ascending AIC
    std::vector<double> delta_aic;   // exp((AIC_min - AIC_i)/2) per ranked fit
    std::vector<FitResult> excluded; // fits that did not succeed
    std::optional<Family> winner;
    /// Set when the AIC rule was indecisive and the BIC difference between
    /// the two best AIC models was consulted.
    std::optional<double> delta_bic;
    std::optional<BicStrength> bic_strength;
    /// "gen-Pareto", "GEV*", "gamma**" or "NA" (one star: strong BIC
    /// differentiation, two stars: positive).
    std::string verdict = "NA";
    std::string reason;
};

/// Ranks fits by AIC; the top model wins outright when ΔAIC of the runner-up
/// is below 0.01, otherwise the Kass-Raftery BIC bands decide.
ModelSelection select_model(std::vector<FitResult> fits);

/// Fits every family in `families` and selects a model.
ModelSelection fit_and_select(std::span<const double> sample, std::span<const Family> families,
                              const FitOptions& options = {});

/// Spearman rank correlation (Pearson correlation of average-tie ranks).
/// nullopt when either ranking has zero variance. Throws InputError on
/// mismatched lengths or fewer than two values.
std::optional<double> spearman(std::span<const double> x, std::span<const double> y);
std::optional<double> spearman(const CentralityVector& x, const CentralityVector& y);

/// Fractional ranks (1-based, ties share their average rank).
std::vector<double> average_ranks(std::span<const double> values);

/// One row/column of a correlation table: a measure at a level.
struct CorrelationEntry {
    int level = 0;
    Measure measure = Measure::degree;
    std::string name() const;
};

struct CorrelationTable {
    std::vector<CorrelationEntry> entries;
    /// Symmetric; coefficients[i][j] between entries i and j, nullopt = NA.
    std::vector<std::vector<std::optional<double>>> coefficients;
    /// Averages keyed "r_{a,b}" with a <= b level indices, e.g. "0,0", "0,1".
    /// Intra-level averages run over distinct measure pairs; inter-level
    /// averages over every measure pair across the two levels. Any NA in the
    /// block makes the average NA.
    std::map<std::pair<int, int>, std::optional<double>> averages;
};

/// Computes every (level, measure) vector and correlates them. Same-level
/// pairs are correlated over the simplices of that level; pairs from
/// different levels are correlated over nodes after projecting level >= 1
/// scores onto nodes (mean over incident simplices).
CorrelationTable correlation_table(const CliqueComplex& complex, std::span<const Measure> measures,
                                   std::span<const int> levels, const CentralityOptions& options = {});

}  // namespace simplicial
