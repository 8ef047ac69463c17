#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wnet/rng.hpp"

namespace wnet {

// Distribution families used across the toolkit.
//
// ged is the exponential-power (Subbotin) family: shape 1 is Laplace,
// shape 2 is Gaussian. growth_rate is the heavy-tailed law of aggregate
// growth rates under proportionate link-weight growth: a Laplace-like
// center with cubic power-law tails, parameterized by a single variance
// scale. powerlaw_cutoff is the discrete degree law with a power-law body
// and exponential cutoff.
enum class Family {
    gaussian,
    laplace,
    ged,
    lognormal,
    exponential,
    powerlaw_cutoff,
    growth_rate,
};

std::string_view family_name(Family family);
std::optional<Family> family_from_name(std::string_view name);

class DistributionModel {
  public:
    static DistributionModel gaussian(double mean, double sd);
    static DistributionModel laplace(double location, double scale);
    static DistributionModel ged(double location, double scale, double shape);
    static DistributionModel lognormal(double mu, double sigma);
    static DistributionModel exponential(double mean);
    // Discrete on k >= 1: pmf(k) proportional to k^-exponent * exp(-k/cutoff).
    static DistributionModel powerlaw_cutoff(double exponent, double cutoff);
    static DistributionModel growth_rate(double variance_scale);

    Family family() const { return family_; }
    std::size_t param_count() const { return param_count_; }
    double param(std::size_t i) const { return params_.at(i); }
    std::vector<std::string> param_names() const;

    // Probability density (probability mass for powerlaw_cutoff).
    double pdf(double x) const;
    // For powerlaw_cutoff this is the step CDF P(K <= floor(x)).
    double cdf(double x) const;
    // Smallest x with cdf(x) >= p for the discrete family; exact or
    // root-refined inverse elsewhere.
    double quantile(double p) const;

    double mean() const;
    // +infinity where the model variance diverges (growth_rate).
    double variance() const;

    // Inverse-CDF sampling; n draws from the stream.
    std::vector<double> sample(std::size_t n, RandomStream& rng) const;

    double log_likelihood(std::span<const double> samples) const;

  private:
    DistributionModel(Family family, std::array<double, 3> params,
                      std::size_t count);

    Family family_;
    std::array<double, 3> params_{};
    std::size_t param_count_ = 0;

    // Lazily built inverse table for the discrete family.
    mutable std::vector<double> discrete_cdf_;
    void ensure_discrete_cdf() const;
};

struct FitResult {
    DistributionModel model;
    double loglik = 0.0;
    std::size_t n = 0;
    bool converged = false;
    int iterations = 0;
};

// Maximum-likelihood fit of the given family.
// gaussian/laplace/exponential/lognormal are closed-form; ged profiles the
// likelihood over shape (location by line search, scale in closed form);
// growth_rate is a one-dimensional bracketed search over the variance
// scale; powerlaw_cutoff maximizes the discrete likelihood over
// (exponent, cutoff).
// Requires n >= 10; throws std::invalid_argument on degenerate input.
FitResult fit_mle(Family family, std::span<const double> samples);

struct PowerLawFit {
    double exponent = 0.0;
    double xmin = 1.0;
    // +infinity when fitted without a cutoff.
    double cutoff = 0.0;
    double ks_distance = 0.0;
    std::size_t tail_n = 0;
};

struct PowerLawOptions {
    // Scan candidate xmin values, choosing the KS-minimizing one;
    // otherwise fit at fixed_xmin.
    bool scan_xmin = true;
    double fixed_xmin = 1.0;
    // Also fit the exponential cutoff scale (otherwise pure power law).
    bool with_cutoff = false;
    // Cap on distinct xmin candidates examined.
    std::size_t max_candidates = 64;
};

// Discrete power-law tail fit for positive integer-valued samples
// (values are rounded). Requires n >= 50 and at least 10 points beyond
// the chosen xmin.
PowerLawFit fit_powerlaw_tail(std::span<const double> samples,
                              const PowerLawOptions& options = {});

}  // namespace wnet
