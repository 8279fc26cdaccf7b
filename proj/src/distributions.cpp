#include "simplicial/distributions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include "simplicial/error.hpp"

namespace simplicial {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 6> kFamilyNames{{
    {Family::generalized_pareto, "gen-Pareto"},
    {Family::gev, "GEV"},
    {Family::gamma, "gamma"},
    {Family::exponential, "exponential"},
    {Family::lognormal, "lognormal"},
    {Family::normal, "normal"},
}};

constexpr std::array<Family, 6> kAllFamilies{Family::generalized_pareto, Family::gev, Family::gamma,
                                             Family::exponential, Family::lognormal, Family::normal};

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
// Objective value for parameters outside the support; finite so the simplex
// method can keep comparing vertices.
constexpr double kPenalty = 1e100;
constexpr double kShapeEpsilon = 1e-12;
constexpr double kLn2Pi = 1.8378770664093454836;

double mean_of(std::span<const double> x)
{
    return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

// Population (MLE) variance.
double variance_of(std::span<const double> x, double mean)
{
    double s = 0.0;
    for (double v : x) {
        s += (v - mean) * (v - mean);
    }
    return s / static_cast<double>(x.size());
}

bool all_integers(std::span<const double> x)
{
    return std::all_of(x.begin(), x.end(), [](double v) { return v == std::floor(v); });
}

struct Objective {
    std::span<const double> data;
    // Maps the unconstrained optimizer vector to a log-likelihood.
    double (*log_likelihood)(std::span<const double> data, const double* p, const void* extra);
    const void* extra;
};

double negative_log_likelihood(const gsl_vector* v, void* params)
{
    const auto* obj = static_cast<const Objective*>(params);
    const double ll = obj->log_likelihood(obj->data, v->data, obj->extra);
    if (!std::isfinite(ll)) {
        return kPenalty;
    }
    return -ll;
}

struct MinimizeResult {
    bool converged = false;
    std::vector<double> x;
    double value = kPenalty;
};

MinimizeResult nelder_mead(const Objective& objective, std::vector<double> start, const std::vector<double>& steps,
                           double tolerance)
{
    const std::size_t dim = start.size();
    gsl_multimin_function fn{&negative_log_likelihood, dim, const_cast<Objective*>(&objective)};
    gsl_vector* x = gsl_vector_alloc(dim);
    gsl_vector* step = gsl_vector_alloc(dim);
    gsl_multimin_fminimizer* solver = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, dim);

    MinimizeResult result;
    result.x = start;
    double previous = kPenalty;
    double scale = 1.0;
    // Repeated simplex runs from the incumbent guard against premature
    // collapse; convergence means two runs agree on the log-likelihood.
    for (int round = 0; round < 12; ++round) {
        for (std::size_t i = 0; i < dim; ++i) {
            gsl_vector_set(x, i, result.x[i]);
            gsl_vector_set(step, i, steps[i] * scale);
        }
        if (gsl_multimin_fminimizer_set(solver, &fn, x, step) != GSL_SUCCESS) {
            break;
        }
        double stalled_at = gsl_multimin_fminimizer_minimum(solver);
        int stalled_for = 0;
        for (int it = 0; it < 20000; ++it) {
            if (gsl_multimin_fminimizer_iterate(solver) != GSL_SUCCESS) {
                break;
            }
            if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(solver), 1e-10) == GSL_SUCCESS) {
                break;
            }
            // Stop once the best value has not moved for a while.
            const double best = gsl_multimin_fminimizer_minimum(solver);
            if (stalled_at - best > 0.01 * tolerance) {
                stalled_at = best;
                stalled_for = 0;
            } else if (++stalled_for >= 200) {
                break;
            }
        }
        const double value = gsl_multimin_fminimizer_minimum(solver);
        const gsl_vector* best = gsl_multimin_fminimizer_x(solver);
        if (value <= result.value) {
            result.value = value;
            for (std::size_t i = 0; i < dim; ++i) {
                result.x[i] = gsl_vector_get(best, i);
            }
        }
        if (result.value < kPenalty && std::abs(previous - result.value) < tolerance) {
            result.converged = true;
            break;
        }
        previous = result.value;
        scale = 0.1;
    }
    gsl_multimin_fminimizer_free(solver);
    gsl_vector_free(step);
    gsl_vector_free(x);
    return result;
}

// ---- per-family likelihoods over unconstrained parameter vectors ----

// p = (k, log sigma); extra = &theta
double gpd_ll(std::span<const double> data, const double* p, const void* extra)
{
    const double theta = *static_cast<const double*>(extra);
    const double k = p[0];
    const double sigma = std::exp(p[1]);
    double s = 0.0;
    for (double x : data) {
        s += generalized_pareto_log_pdf(x, k, sigma, theta);
    }
    return s;
}

// p = (k, log sigma, mu)
double gev_ll(std::span<const double> data, const double* p, const void*)
{
    const double k = p[0];
    const double sigma = std::exp(p[1]);
    double s = 0.0;
    for (double x : data) {
        s += gev_log_pdf(x, k, sigma, p[2]);
    }
    return s;
}

// p = (log a, log b)
double gamma_ll(std::span<const double> data, const double* p, const void*)
{
    const double a = std::exp(p[0]);
    const double b = std::exp(p[1]);
    double s = 0.0;
    for (double x : data) {
        s += gamma_log_pdf(x, a, b);
    }
    return s;
}

FitResult finish(FitResult fit, double ll)
{
    fit.log_likelihood = ll;
    const auto k = static_cast<double>(fit.parameter_count);
    fit.aic = 2.0 * k - 2.0 * ll;
    fit.bic = k * std::log(static_cast<double>(fit.sample_size)) - 2.0 * ll;
    fit.status = FitStatus::ok;
    return fit;
}

FitResult reject(FitResult fit, FitStatus status, std::string message)
{
    fit.status = status;
    fit.message = std::move(message);
    return fit;
}

// Runs the simplex search from each start and keeps the best converged run.
MinimizeResult best_of(const Objective& objective, const std::vector<std::vector<double>>& starts,
                       const std::vector<double>& steps, double tolerance)
{
    MinimizeResult best;
    for (const auto& start : starts) {
        auto run = nelder_mead(objective, start, steps, tolerance);
        if (run.converged && run.value < best.value) {
            best = run;
        }
    }
    return best;
}

// Grows the scale (log-scale index `scale_index`) until the start is feasible.
std::vector<double> feasible_start(const Objective& objective, std::vector<double> start, std::size_t scale_index)
{
    for (int i = 0; i < 60; ++i) {
        if (std::isfinite(objective.log_likelihood(objective.data, start.data(), objective.extra))) {
            break;
        }
        start[scale_index] += std::log(2.0);
    }
    return start;
}

FitResult fit_generalized_pareto(std::span<const double> data, FitResult fit, const FitOptions& options)
{
    // An explicit offset, or integer data, fixes the threshold below the
    // minimum. Otherwise the threshold takes its MLE, the sample minimum, and
    // counts as an estimated parameter.
    const bool fixed = options.threshold_offset.has_value() || all_integers(data);
    const double offset = options.threshold_offset.value_or(fixed ? 0.5 : 0.0);
    const double theta = *std::min_element(data.begin(), data.end()) - offset;
    if (fixed) {
        fit.fixed = {{"theta", theta}};
    }
    fit.parameter_count = fixed ? 2 : 3;
    std::vector<double> excess(data.begin(), data.end());
    for (auto& v : excess) {
        v -= theta;
    }
    const double m = mean_of(excess);
    const double var = variance_of(excess, m);
    if (!(var > 0.0)) {
        return reject(fit, FitStatus::degenerate, "zero variance");
    }
    const double k0 = std::clamp(0.5 * (1.0 - m * m / var), -0.45, 0.9);
    const Objective objective{data, &gpd_ll, &theta};
    std::vector<std::vector<double>> starts;
    for (double k : {k0, 0.25, 0.6}) {
        const double sigma = std::max(m * (1.0 - k), 1e-6);
        starts.push_back(feasible_start(objective, {k, std::log(sigma)}, 1));
    }
    auto run = best_of(objective, starts, {0.1, 0.2}, options.tolerance);
    if (!run.converged) {
        return reject(fit, FitStatus::failed, "likelihood maximization did not converge");
    }
    fit.parameters = {{"k", run.x[0]}, {"sigma", std::exp(run.x[1])}};
    if (!fixed) {
        fit.parameters.emplace_back("theta", theta);
    }
    return finish(fit, -run.value);
}

FitResult fit_gev(std::span<const double> data, FitResult fit, const FitOptions& options)
{
    fit.parameter_count = 3;
    const double m = mean_of(data);
    const double var = variance_of(data, m);
    if (!(var > 0.0)) {
        return reject(fit, FitStatus::degenerate, "zero variance");
    }
    const double sd = std::sqrt(var);
    const double sigma0 = sd * std::sqrt(6.0) / M_PI;
    const double mu0 = m - 0.5772156649015329 * sigma0;
    const Objective objective{data, &gev_ll, nullptr};
    std::vector<std::vector<double>> starts;
    for (double k : {0.1, 0.4, -0.1}) {
        starts.push_back(feasible_start(objective, {k, std::log(sigma0), mu0}, 1));
    }
    auto run = best_of(objective, starts, {0.1, 0.2, 0.2 * sd}, options.tolerance);
    if (!run.converged) {
        return reject(fit, FitStatus::failed, "likelihood maximization did not converge");
    }
    fit.parameters = {{"k", run.x[0]}, {"sigma", std::exp(run.x[1])}, {"mu", run.x[2]}};
    return finish(fit, -run.value);
}

std::vector<double> shifted_positive(std::span<const double> data, FitResult& fit, const FitOptions& options)
{
    std::vector<double> out(data.begin(), data.end());
    if (std::any_of(out.begin(), out.end(), [](double v) { return v == 0.0; })) {
        fit.shift = options.zero_shift;
        for (auto& v : out) {
            v += fit.shift;
        }
    }
    return out;
}

FitResult fit_gamma(std::span<const double> raw, FitResult fit, const FitOptions& options)
{
    fit.parameter_count = 2;
    if (std::any_of(raw.begin(), raw.end(), [](double v) { return v < 0.0; })) {
        return reject(fit, FitStatus::degenerate, "negative values outside the gamma support");
    }
    const auto data = shifted_positive(raw, fit, options);
    const double m = mean_of(data);
    const double var = variance_of(data, m);
    if (!(var > 0.0)) {
        return reject(fit, FitStatus::degenerate, "zero variance");
    }
    const double a0 = m * m / var;
    const double b0 = var / m;
    const Objective objective{data, &gamma_ll, nullptr};
    std::vector<std::vector<double>> starts = {
        {std::log(a0), std::log(b0)},
        {std::log(a0 / 2.0), std::log(b0 * 2.0)},
        {std::log(a0 * 2.0), std::log(b0 / 2.0)},
    };
    auto run = best_of(objective, starts, {0.2, 0.2}, options.tolerance);
    if (!run.converged) {
        return reject(fit, FitStatus::failed, "likelihood maximization did not converge");
    }
    fit.parameters = {{"a", std::exp(run.x[0])}, {"b", std::exp(run.x[1])}};
    return finish(fit, -run.value);
}

FitResult fit_exponential(std::span<const double> data, FitResult fit)
{
    fit.parameter_count = 1;
    if (std::any_of(data.begin(), data.end(), [](double v) { return v < 0.0; })) {
        return reject(fit, FitStatus::degenerate, "negative values outside the exponential support");
    }
    const double m = mean_of(data);
    if (!(m > 0.0)) {
        return reject(fit, FitStatus::degenerate, "all values are zero");
    }
    fit.parameters = {{"mean", m}};
    const double n = static_cast<double>(data.size());
    return finish(fit, -n * std::log(m) - n);
}

FitResult fit_lognormal(std::span<const double> raw, FitResult fit, const FitOptions& options)
{
    fit.parameter_count = 2;
    if (std::any_of(raw.begin(), raw.end(), [](double v) { return v < 0.0; })) {
        return reject(fit, FitStatus::degenerate, "negative values outside the lognormal support");
    }
    const auto data = shifted_positive(raw, fit, options);
    std::vector<double> logs(data.size());
    std::transform(data.begin(), data.end(), logs.begin(), [](double v) { return std::log(v); });
    const double mu = mean_of(logs);
    const double var = variance_of(logs, mu);
    if (!(var > 0.0)) {
        return reject(fit, FitStatus::degenerate, "zero variance");
    }
    fit.parameters = {{"mu", mu}, {"sigma", std::sqrt(var)}};
    const double n = static_cast<double>(data.size());
    const double sum_logs = std::accumulate(logs.begin(), logs.end(), 0.0);
    return finish(fit, -sum_logs - 0.5 * n * (kLn2Pi + std::log(var)) - 0.5 * n);
}

FitResult fit_normal(std::span<const double> data, FitResult fit)
{
    fit.parameter_count = 2;
    const double m = mean_of(data);
    const double var = variance_of(data, m);
    if (!(var > 0.0)) {
        return reject(fit, FitStatus::degenerate, "zero variance");
    }
    fit.parameters = {{"mean", m}, {"sd", std::sqrt(var)}};
    const double n = static_cast<double>(data.size());
    return finish(fit, -0.5 * n * (kLn2Pi + std::log(var)) - 0.5 * n);
}

double uniform_open(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double v = 0.0;
    while (v == 0.0) {
        v = u(rng);
    }
    return v;
}

}  // namespace

std::string_view to_string(Family family)
{
    for (auto [f, name] : kFamilyNames) {
        if (f == family) {
            return name;
        }
    }
    return "unknown";
}

std::optional<Family> parse_family(std::string_view name)
{
    for (auto [f, n] : kFamilyNames) {
        if (n == name) {
            return f;
        }
    }
    if (name == "gpd" || name == "generalized-pareto") {
        return Family::generalized_pareto;
    }
    if (name == "gev") {
        return Family::gev;
    }
    return std::nullopt;
}

std::span<const Family> all_families()
{
    return kAllFamilies;
}

std::string_view to_string(FitStatus status)
{
    switch (status) {
    case FitStatus::ok:
        return "ok";
    case FitStatus::insufficient_data:
        return "insufficient-data";
    case FitStatus::degenerate:
        return "degenerate";
    case FitStatus::failed:
        return "failed";
    }
    return "unknown";
}

std::optional<double> FitResult::parameter(std::string_view name) const
{
    for (const auto& [key, value] : parameters) {
        if (key == name) {
            return value;
        }
    }
    for (const auto& [key, value] : fixed) {
        if (key == name) {
            return value;
        }
    }
    return std::nullopt;
}

double generalized_pareto_log_pdf(double x, double k, double sigma, double theta)
{
    const double y = x - theta;
    if (!(sigma > 0.0) || y < 0.0) {
        return kNegInf;
    }
    if (std::abs(k) < kShapeEpsilon) {
        return -std::log(sigma) - y / sigma;
    }
    const double t = 1.0 + k * y / sigma;
    if (!(t > 0.0)) {
        return kNegInf;
    }
    return -std::log(sigma) - (1.0 + 1.0 / k) * std::log(t);
}

double gev_log_pdf(double x, double k, double sigma, double mu)
{
    if (!(sigma > 0.0)) {
        return kNegInf;
    }
    const double z = (x - mu) / sigma;
    if (std::abs(k) < kShapeEpsilon) {
        return -std::log(sigma) - z - std::exp(-z);
    }
    const double t = 1.0 + k * z;
    if (!(t > 0.0)) {
        return kNegInf;
    }
    const double log_t = std::log(t);
    return -std::log(sigma) - (1.0 + 1.0 / k) * log_t - std::exp(-log_t / k);
}

double gamma_log_pdf(double x, double a, double b)
{
    if (!(a > 0.0) || !(b > 0.0) || !(x > 0.0)) {
        return kNegInf;
    }
    return (a - 1.0) * std::log(x) - x / b - a * std::log(b) - std::lgamma(a);
}

double fitted_log_density(const FitResult& fit, double x)
{
    auto p = [&](std::string_view name) { return fit.parameter(name).value_or(0.0); };
    switch (fit.family) {
    case Family::generalized_pareto:
        return generalized_pareto_log_pdf(x, p("k"), p("sigma"), p("theta"));
    case Family::gev:
        return gev_log_pdf(x, p("k"), p("sigma"), p("mu"));
    case Family::gamma:
        return gamma_log_pdf(x, p("a"), p("b"));
    case Family::exponential:
        return x < 0.0 ? kNegInf : -std::log(p("mean")) - x / p("mean");
    case Family::lognormal: {
        if (!(x > 0.0)) {
            return kNegInf;
        }
        const double z = (std::log(x) - p("mu")) / p("sigma");
        return -std::log(x) - std::log(p("sigma")) - 0.5 * kLn2Pi - 0.5 * z * z;
    }
    case Family::normal: {
        const double z = (x - p("mean")) / p("sd");
        return -std::log(p("sd")) - 0.5 * kLn2Pi - 0.5 * z * z;
    }
    }
    return kNegInf;
}

FitResult fit_mle(std::span<const double> sample, Family family, const FitOptions& options)
{
    gsl_set_error_handler_off();
    FitResult fit;
    fit.family = family;
    fit.sample_size = sample.size();
    if (sample.size() < kMinimumFitSample) {
        return reject(fit, FitStatus::insufficient_data,
                      "sample smaller than " + std::to_string(kMinimumFitSample));
    }
    if (std::any_of(sample.begin(), sample.end(), [](double v) { return !std::isfinite(v); })) {
        throw InputError("sample contains non-finite values");
    }
    switch (family) {
    case Family::generalized_pareto:
        return fit_generalized_pareto(sample, fit, options);
    case Family::gev:
        return fit_gev(sample, fit, options);
    case Family::gamma:
        return fit_gamma(sample, fit, options);
    case Family::exponential:
        return fit_exponential(sample, fit);
    case Family::lognormal:
        return fit_lognormal(sample, fit, options);
    case Family::normal:
        return fit_normal(sample, fit);
    }
    return reject(fit, FitStatus::failed, "unknown family");
}

std::vector<double> sample_generalized_pareto(double k, double sigma, double theta, std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<double> out(n);
    for (auto& x : out) {
        const double u = uniform_open(rng);
        x = std::abs(k) < kShapeEpsilon ? theta - sigma * std::log(u)
                                        : theta + sigma / k * (std::pow(u, -k) - 1.0);
    }
    return out;
}

std::vector<double> sample_gev(double k, double sigma, double mu, std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<double> out(n);
    for (auto& x : out) {
        const double e = -std::log(uniform_open(rng));
        x = std::abs(k) < kShapeEpsilon ? mu - sigma * std::log(e) : mu + sigma / k * (std::pow(e, -k) - 1.0);
    }
    return out;
}

std::vector<double> sample_gamma(double a, double b, std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::gamma_distribution<double> dist(a, b);
    std::vector<double> out(n);
    for (auto& x : out) {
        x = dist(rng);
    }
    return out;
}

std::vector<double> sample_exponential(double mean, std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> dist(1.0 / mean);
    std::vector<double> out(n);
    for (auto& x : out) {
        x = dist(rng);
    }
    return out;
}

std::vector<double> sample_lognormal(double mu, double sigma, std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::lognormal_distribution<double> dist(mu, sigma);
    std::vector<double> out(n);
    for (auto& x : out) {
        x = dist(rng);
    }
    return out;
}

std::vector<double> sample_normal(double mean, double sd, std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(mean, sd);
    std::vector<double> out(n);
    for (auto& x : out) {
        x = dist(rng);
    }
    return out;
}

}  // namespace simplicial
