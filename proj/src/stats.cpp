#include "simplicial/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "simplicial/error.hpp"
#include "simplicial/essential.hpp"

namespace simplicial {

DegreeDistribution degree_distribution(const LevelAdjacency& combined)
{
    if (combined.size() == 0) {
        throw InputError("degree distribution of an empty level");
    }
    DegreeDistribution dist;
    dist.level = combined.level();
    dist.sample.resize(combined.size());
    for (std::size_t i = 0; i < combined.size(); ++i) {
        dist.sample[i] = combined.degree(static_cast<SimplexId>(i));
    }
    std::vector<std::size_t> sorted = dist.sample;
    std::sort(sorted.begin(), sorted.end());
    const auto n = static_cast<double>(sorted.size());
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) {
            ++j;
        }
        dist.values.push_back(sorted[i]);
        dist.pdf.push_back(static_cast<double>(j - i) / n);
        dist.ccdf.push_back(static_cast<double>(sorted.size() - i) / n);
        i = j;
    }
    return dist;
}

DegreeDistribution degree_distribution(const CliqueComplex& complex, int k)
{
    return degree_distribution(combined_adjacency(complex, k));
}

std::string_view to_string(BicStrength strength)
{
    switch (strength) {
    case BicStrength::not_significant:
        return "not significant";
    case BicStrength::positive:
        return "positive";
    case BicStrength::strong:
        return "strong";
    case BicStrength::very_strong:
        return "very strong";
    }
    return "unknown";
}

BicStrength kass_raftery(double delta_bic)
{
    const double d = std::abs(delta_bic);
    if (d < 2.0) {
        return BicStrength::not_significant;
    }
    if (d < 6.0) {
        return BicStrength::positive;
    }
    if (d <= 10.0) {
        return BicStrength::strong;
    }
    return BicStrength::very_strong;
}

ModelSelection select_model(std::vector<FitResult> fits)
{
    ModelSelection sel;
    for (auto& fit : fits) {
        if (fit.ok() && std::isfinite(fit.aic)) {
            sel.ranked.push_back(std::move(fit));
        } else {
            sel.excluded.push_back(std::move(fit));
        }
    }
    std::stable_sort(sel.ranked.begin(), sel.ranked.end(),
                     [](const FitResult& a, const FitResult& b) { return a.aic < b.aic; });
    if (sel.ranked.empty()) {
        sel.reason = "no successful fit";
        return sel;
    }
    const double aic_min = sel.ranked.front().aic;
    for (const auto& fit : sel.ranked) {
        sel.delta_aic.push_back(std::exp((aic_min - fit.aic) / 2.0));
    }
    const std::string top{to_string(sel.ranked.front().family)};
    if (sel.ranked.size() == 1) {
        sel.reason = "only one successful fit";
        return sel;
    }
    if (sel.delta_aic[1] < 0.01) {
        sel.winner = sel.ranked.front().family;
        sel.verdict = top;
        sel.reason = "AIC decisive";
        return sel;
    }
    const auto& first = sel.ranked[0];
    const auto& second = sel.ranked[1];
    sel.delta_bic = std::abs(first.bic - second.bic);
    sel.bic_strength = kass_raftery(*sel.delta_bic);
    if (*sel.bic_strength == BicStrength::not_significant) {
        sel.reason = "AIC and BIC indecisive";
        return sel;
    }
    const auto& best = first.bic <= second.bic ? first : second;
    sel.winner = best.family;
    sel.verdict = std::string(to_string(best.family)) + (*sel.bic_strength == BicStrength::positive ? "**" : "*");
    sel.reason = "BIC " + std::string(to_string(*sel.bic_strength));
    return sel;
}

ModelSelection fit_and_select(std::span<const double> sample, std::span<const Family> families,
                              const FitOptions& options)
{
    std::vector<FitResult> fits;
    fits.reserve(families.size());
    for (Family f : families) {
        fits.push_back(fit_mle(sample, f, options));
    }
    return select_model(std::move(fits));
}

std::vector<double> average_ranks(std::span<const double> values)
{
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(values.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j < order.size() && values[order[j]] == values[order[i]]) {
            ++j;
        }
        // Positions i..j-1 hold ranks i+1..j.
        const double rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t t = i; t < j; ++t) {
            ranks[order[t]] = rank;
        }
        i = j;
    }
    return ranks;
}

std::optional<double> spearman(std::span<const double> x, std::span<const double> y)
{
    if (x.size() != y.size()) {
        throw InputError("spearman: vectors differ in length");
    }
    if (x.size() < 2) {
        throw InputError("spearman: need at least two values");
    }
    const auto rx = average_ranks(x);
    const auto ry = average_ranks(y);
    const double mean = (static_cast<double>(x.size()) + 1.0) / 2.0;
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        const double dx = rx[i] - mean;
        const double dy = ry[i] - mean;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        return std::nullopt;
    }
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::optional<double> spearman(const CentralityVector& x, const CentralityVector& y)
{
    return spearman(std::span<const double>(x.scores), std::span<const double>(y.scores));
}

std::string CorrelationEntry::name() const
{
    return std::string(to_string(measure)) + "@" + std::to_string(level);
}

CorrelationTable correlation_table(const CliqueComplex& complex, std::span<const Measure> measures,
                                   std::span<const int> levels, const CentralityOptions& options)
{
    CorrelationTable table;
    std::vector<std::optional<CentralityVector>> raw;
    std::vector<std::optional<CentralityVector>> projected;
    for (int k : levels) {
        for (Measure m : measures) {
            table.entries.push_back({k, m});
            std::optional<CentralityVector> v;
            try {
                v = compute_centrality(complex, k, m, options);
            } catch (const NumericError&) {
                // Undefined at this level (e.g. no principal eigenvector); reported as NA.
            }
            if (v && v->size() >= 2) {
                projected.push_back(project_to_nodes(complex, *v));
                raw.push_back(std::move(v));
            } else {
                raw.emplace_back();
                projected.emplace_back();
            }
        }
    }
    const std::size_t n = table.entries.size();
    table.coefficients.assign(n, std::vector<std::optional<double>>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            std::optional<double> r;
            if (table.entries[i].level == table.entries[j].level) {
                if (raw[i] && raw[j]) {
                    r = spearman(*raw[i], *raw[j]);
                }
            } else if (projected[i] && projected[j]) {
                r = spearman(*projected[i], *projected[j]);
            }
            table.coefficients[i][j] = r;
            table.coefficients[j][i] = r;
        }
    }
    for (std::size_t a = 0; a < levels.size(); ++a) {
        for (std::size_t b = a; b < levels.size(); ++b) {
            const int la = std::min(levels[a], levels[b]);
            const int lb = std::max(levels[a], levels[b]);
            double sum = 0.0;
            std::size_t pairs = 0;
            bool missing = false;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    const bool in_block = a == b ? (table.entries[i].level == levels[a] &&
                                                    table.entries[j].level == levels[a] && i < j)
                                                 : (table.entries[i].level == levels[a] &&
                                                    table.entries[j].level == levels[b]);
                    if (!in_block) {
                        continue;
                    }
                    if (!table.coefficients[i][j]) {
                        missing = true;
                    } else {
                        sum += *table.coefficients[i][j];
                    }
                    ++pairs;
                }
            }
            std::optional<double> avg;
            if (!missing && pairs > 0) {
                avg = sum / static_cast<double>(pairs);
            }
            table.averages[{la, lb}] = avg;
        }
    }
    return table;
}

}  // namespace simplicial
