#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace simplicial {

enum class Family { generalized_pareto, gev, gamma, exponential, lognormal, normal };

std::string_view to_string(Family family);
std::optional<Family> parse_family(std::string_view name);
std::span<const Family> all_families();

enum class FitStatus {
    ok,
    insufficient_data,  // fewer than kMinimumFitSample values
    degenerate,         // zero variance or data outside the family's support
    failed,             // optimizer did not converge
};

std::string_view to_string(FitStatus status);

inline constexpr std::size_t kMinimumFitSample = 8;

struct FitResult {
    Family family = Family::normal;
    FitStatus status = FitStatus::failed;
    /// Estimated parameters by name, in the family's conventional order.
    std::vector<std::pair<std::string, double>> parameters;
    /// Parameters held fixed (not counted in parameter_count), e.g. a threshold.
    std::vector<std::pair<std::string, double>> fixed;
    int parameter_count = 0;
    /// Amount added to every value before fitting (positive-support families
    /// fitted to samples containing zeros).
    double shift = 0.0;
    double log_likelihood = 0.0;
    double aic = 0.0;
    double bic = 0.0;
    std::size_t sample_size = 0;
    std::string message;

    bool ok() const { return status == FitStatus::ok; }
    std::optional<double> parameter(std::string_view name) const;
};

struct FitOptions {
    /// Generalized Pareto threshold fixed at min(sample) - threshold_offset
    /// (two estimated parameters). Unset: 0.5 for integer-valued samples such
    /// as degrees; other samples use the threshold's MLE, the sample minimum,
    /// counted as a third parameter.
    std::optional<double> threshold_offset;
    /// Added to samples containing zeros before gamma and lognormal fits.
    double zero_shift = 0.5;
    /// Convergence tolerance on the log-likelihood.
    double tolerance = 1e-8;
};

/// Maximum-likelihood fit of one family.
FitResult fit_mle(std::span<const double> sample, Family family, const FitOptions& options = {});

/// Log-density of a fitted family at x (x already shifted as the fit was).
double fitted_log_density(const FitResult& fit, double x);

/// Draws from the families' natural parameterizations.
/// Generalized Pareto: shape k, scale sigma, threshold theta.
std::vector<double> sample_generalized_pareto(double k, double sigma, double theta, std::size_t n, std::uint64_t seed);
/// GEV: shape k, scale sigma, location mu.
std::vector<double> sample_gev(double k, double sigma, double mu, std::size_t n, std::uint64_t seed);
/// Gamma: shape a, scale b.
std::vector<double> sample_gamma(double a, double b, std::size_t n, std::uint64_t seed);
std::vector<double> sample_exponential(double mean, std::size_t n, std::uint64_t seed);
std::vector<double> sample_lognormal(double mu, double sigma, std::size_t n, std::uint64_t seed);
std::vector<double> sample_normal(double mean, double sd, std::size_t n, std::uint64_t seed);

// Log-densities in the parameterizations above.
double generalized_pareto_log_pdf(double x, double k, double sigma, double theta);
double gev_log_pdf(double x, double k, double sigma, double mu);
double gamma_log_pdf(double x, double a, double b);

}  // namespace simplicial
