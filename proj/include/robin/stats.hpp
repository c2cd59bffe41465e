#ifndef ROBIN_STATS_HPP_
#define ROBIN_STATS_HPP_

#include <optional>
#include <span>
#include <vector>

#include "robin/rng.hpp"

namespace robin {

// ---------------------------------------------------------------------------
// Gaussian-process Bayes-factor test
// ---------------------------------------------------------------------------

/// Squared-exponential kernel hyperparameters:
/// k(x,x') = signal_variance * exp(-(x-x')^2 / (2 lengthscale^2)),
/// plus noise_variance on the diagonal.
struct GPHyper {
    double signal_variance = 0.0;
    double lengthscale = 1.0;
    double noise_variance = 1.0;
};

struct GPFit {
    GPHyper hyper;
    double log_marginal = 0.0;
};

/// signal: latent function present (grid-searched hyperparameters).
/// noise:  signal_variance pinned to 0, closed-form noise fit.
enum class GPModel { signal, noise };

/// Zero-mean GP log marginal likelihood
///   -1/2 y'K^-1 y - 1/2 log|K| - n/2 log(2 pi)
/// via Cholesky factorization. Throws NumericalError if K is not positive
/// definite within jitter tolerance.
double gp_log_marginal(std::span<const double> x, std::span<const double> y,
                       const GPHyper& hyper);

/// noise model: signal_variance = 0, noise_variance = mean(y^2) floored at
/// 1e-8. signal model: exhaustive grid over lengthscale {0.05,0.1,0.2,0.4,0.8}
/// and signal share {0.1,0.5,0.9,0.99} of mean(y^2), remainder as noise; ties
/// resolved toward smaller signal variance. A constant-zero profile falls
/// back to the noise fit.
GPFit fit_gp(std::span<const double> x, std::span<const double> y, GPModel model);

struct BayesFactorResult {
    double bf = 0.0;  // log marginal ratio, signal minus noise
    GPFit fit_signal;
    GPFit fit_noise;
    std::vector<double> profile;  // the tested difference curve
};

/// Tests whether two mean curves differ: the profile log2((m1+e)/(m2+e)) with
/// e = 1e-4 is fitted under the signal and noise GP models; bf is the log
/// marginal-likelihood ratio. Positive and large favors a real difference.
BayesFactorResult robin_gp_test(std::span<const double> mean1, std::span<const double> mean2,
                                std::span<const double> levels);

// ---------------------------------------------------------------------------
// Interval-wise functional permutation test (ITP)
// ---------------------------------------------------------------------------

struct ITPResult {
    std::vector<double> component_pvalues;  // single-component intervals
    std::vector<double> adjusted_pvalues;   // max over covering intervals
    int basis_size = 0;
    int permutations = 0;
};

/// Projects every replicate curve onto an order-4 B-spline basis with as many
/// components as levels, then runs a two-sample permutation test on every
/// contiguous coefficient interval (statistic: squared difference of group
/// mean coefficients summed over the interval; p = (1 + #{perm >= obs}) /
/// (B+1)). adjusted_pvalues[k] is the max over all intervals containing k.
ITPResult robin_fda_test(const std::vector<std::vector<double>>& group1,
                         const std::vector<std::vector<double>>& group2,
                         std::span<const double> levels, int permutations, RngSeed seed);

/// Order-4 B-spline collocation matrix: rows = evaluation points, columns =
/// basis_size basis functions on uniform knots over [lo, hi].
std::vector<std::vector<double>> bspline_basis_matrix(std::span<const double> x, double lo,
                                                      double hi, int basis_size);

/// Least-squares coefficients of y against the basis above (interpolating
/// when basis_size equals the number of samples).
std::vector<double> bspline_project(std::span<const double> x, std::span<const double> y,
                                    int basis_size);

// ---------------------------------------------------------------------------
// Spline AUC
// ---------------------------------------------------------------------------

struct AUCResult {
    double area1 = 0.0;
    double area2 = 0.0;
    std::optional<double> ratio;  // area2/area1, absent when area1 == 0
};

/// Integral over [x.front(), x.back()] of the cubic-spline interpolant
/// (not-a-knot boundary conditions, which reproduce cubic data exactly).
double spline_auc(std::span<const double> x, std::span<const double> y);

/// Areas under both mean curves and their ratio area2/area1.
AUCResult robin_auc(std::span<const double> mean1, std::span<const double> mean2,
                    std::span<const double> levels);

}  // namespace robin

#endif  // ROBIN_STATS_HPP_
