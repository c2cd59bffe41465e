#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "robin/errors.hpp"
#include "robin/stats.hpp"

namespace robin {

namespace {

// Cox-de Boor evaluation of all order-4 (cubic) B-spline basis functions at t.
// Knots: lo and hi repeated 4 times, basis_size-4 uniform interior knots.
std::vector<double> knot_vector(double lo, double hi, int basis_size) {
    const int order = 4;
    const int interior = basis_size - order;
    std::vector<double> knots;
    knots.reserve(static_cast<std::size_t>(basis_size + order));
    for (int i = 0; i < order; ++i) knots.push_back(lo);
    for (int i = 1; i <= interior; ++i) {
        knots.push_back(lo + (hi - lo) * i / (interior + 1));
    }
    for (int i = 0; i < order; ++i) knots.push_back(hi);
    return knots;
}

std::vector<double> basis_row(const std::vector<double>& knots, int basis_size, double t) {
    const int order = 4;
    const double lo = knots.front();
    const double hi = knots.back();
    if (t < lo || t > hi) throw std::invalid_argument("evaluation point outside knot range");

    // Degree-0 seed: indicator of the knot span containing t (right-closed at
    // the last span so the basis sums to 1 at t = hi).
    const int n_spans = basis_size + order - 1;
    std::vector<double> b(static_cast<std::size_t>(n_spans), 0.0);
    int span = -1;
    for (int i = 0; i < n_spans; ++i) {
        if (t >= knots[static_cast<std::size_t>(i)] &&
            t < knots[static_cast<std::size_t>(i + 1)]) {
            span = i;
            break;
        }
    }
    if (span < 0) {  // t == hi
        for (int i = n_spans - 1; i >= 0; --i) {
            if (knots[static_cast<std::size_t>(i)] < knots[static_cast<std::size_t>(i + 1)]) {
                span = i;
                break;
            }
        }
    }
    b[static_cast<std::size_t>(span)] = 1.0;

    for (int degree = 1; degree < order; ++degree) {
        for (int i = 0; i < basis_size + order - 1 - degree; ++i) {
            const double left_den = knots[static_cast<std::size_t>(i + degree)] -
                                    knots[static_cast<std::size_t>(i)];
            const double right_den = knots[static_cast<std::size_t>(i + degree + 1)] -
                                     knots[static_cast<std::size_t>(i + 1)];
            double value = 0.0;
            if (left_den > 0.0) {
                value += (t - knots[static_cast<std::size_t>(i)]) / left_den *
                         b[static_cast<std::size_t>(i)];
            }
            if (right_den > 0.0) {
                value += (knots[static_cast<std::size_t>(i + degree + 1)] - t) / right_den *
                         b[static_cast<std::size_t>(i + 1)];
            }
            b[static_cast<std::size_t>(i)] = value;
        }
    }
    b.resize(static_cast<std::size_t>(basis_size));
    return b;
}

Eigen::MatrixXd design_matrix(std::span<const double> x, double lo, double hi,
                              int basis_size) {
    const std::vector<double> knots = knot_vector(lo, hi, basis_size);
    Eigen::MatrixXd design(static_cast<Eigen::Index>(x.size()),
                           static_cast<Eigen::Index>(basis_size));
    for (std::size_t r = 0; r < x.size(); ++r) {
        const std::vector<double> row = basis_row(knots, basis_size, x[r]);
        for (int c = 0; c < basis_size; ++c) {
            design(static_cast<Eigen::Index>(r), c) = row[static_cast<std::size_t>(c)];
        }
    }
    return design;
}

}  // namespace

std::vector<std::vector<double>> bspline_basis_matrix(std::span<const double> x, double lo,
                                                      double hi, int basis_size) {
    if (basis_size < 4) throw std::invalid_argument("basis_size must be >= 4");
    if (!(hi > lo)) throw std::invalid_argument("empty knot range");
    const Eigen::MatrixXd design = design_matrix(x, lo, hi, basis_size);
    std::vector<std::vector<double>> out(x.size(),
                                         std::vector<double>(static_cast<std::size_t>(basis_size)));
    for (std::size_t r = 0; r < x.size(); ++r) {
        for (int c = 0; c < basis_size; ++c) {
            out[r][static_cast<std::size_t>(c)] = design(static_cast<Eigen::Index>(r), c);
        }
    }
    return out;
}

std::vector<double> bspline_project(std::span<const double> x, std::span<const double> y,
                                    int basis_size) {
    if (x.size() != y.size()) throw std::invalid_argument("x and y lengths differ");
    if (basis_size < 4) throw std::invalid_argument("basis_size must be >= 4");
    if (x.size() < static_cast<std::size_t>(basis_size)) {
        throw std::invalid_argument("fewer samples than basis functions");
    }
    const Eigen::MatrixXd design = design_matrix(x, x.front(), x.back(), basis_size);
    Eigen::VectorXd yv(static_cast<Eigen::Index>(y.size()));
    for (std::size_t i = 0; i < y.size(); ++i) yv(static_cast<Eigen::Index>(i)) = y[i];
    const Eigen::VectorXd coef = design.colPivHouseholderQr().solve(yv);
    return std::vector<double>(coef.data(), coef.data() + coef.size());
}

ITPResult robin_fda_test(const std::vector<std::vector<double>>& group1,
                         const std::vector<std::vector<double>>& group2,
                         std::span<const double> levels, int permutations, RngSeed seed) {
    const std::size_t n_levels = levels.size();
    if (n_levels < 4) throw std::invalid_argument("need at least 4 levels");
    if (group1.size() < 2 || group2.size() < 2) {
        throw std::invalid_argument("need at least 2 curves per group");
    }
    for (const auto& curve : group1) {
        if (curve.size() != n_levels) throw std::invalid_argument("curve length mismatch");
    }
    for (const auto& curve : group2) {
        if (curve.size() != n_levels) throw std::invalid_argument("curve length mismatch");
    }
    if (permutations < 1) throw std::invalid_argument("need at least 1 permutation");

    const int k = static_cast<int>(n_levels);  // basis components = level count
    const std::size_t n1 = group1.size();
    const std::size_t n2 = group2.size();
    const std::size_t n_curves = n1 + n2;

    // Step 1: basis expansion of every replicate curve.
    std::vector<std::vector<double>> coef(n_curves);
    for (std::size_t i = 0; i < n1; ++i) coef[i] = bspline_project(levels, group1[i], k);
    for (std::size_t i = 0; i < n2; ++i) coef[n1 + i] = bspline_project(levels, group2[i], k);

    // Interval stats from per-component squared mean differences via prefix
    // sums. Group sums are accumulated separately so two groups holding the
    // same curves cancel exactly, not just within rounding.
    auto interval_stats = [&](const std::vector<std::size_t>& assignment) {
        std::vector<double> sum1(static_cast<std::size_t>(k), 0.0);
        std::vector<double> sum2(static_cast<std::size_t>(k), 0.0);
        for (std::size_t i = 0; i < n_curves; ++i) {
            auto& target = i < n1 ? sum1 : sum2;
            const auto& c = coef[assignment[i]];
            for (int comp = 0; comp < k; ++comp) {
                target[static_cast<std::size_t>(comp)] += c[static_cast<std::size_t>(comp)];
            }
        }
        std::vector<double> prefix(static_cast<std::size_t>(k) + 1, 0.0);
        for (int comp = 0; comp < k; ++comp) {
            const double diff = sum1[static_cast<std::size_t>(comp)] / static_cast<double>(n1) -
                                sum2[static_cast<std::size_t>(comp)] / static_cast<double>(n2);
            prefix[static_cast<std::size_t>(comp) + 1] =
                prefix[static_cast<std::size_t>(comp)] + diff * diff;
        }
        return prefix;  // stat over [i..j] = prefix[j+1] - prefix[i]
    };

    std::vector<std::size_t> identity(n_curves);
    for (std::size_t i = 0; i < n_curves; ++i) identity[i] = i;
    const std::vector<double> observed = interval_stats(identity);

    // Step 2: permutation null distribution, one derived stream per draw.
    const std::size_t n_intervals = static_cast<std::size_t>(k) * (k + 1) / 2;
    std::vector<long long> exceed(n_intervals, 0);
    std::vector<std::size_t> shuffled = identity;
    for (int b = 0; b < permutations; ++b) {
        Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(b)}));
        shuffled = identity;
        rng.shuffle(shuffled);
        const std::vector<double> perm = interval_stats(shuffled);
        std::size_t idx = 0;
        for (int i = 0; i < k; ++i) {
            for (int j = i; j < k; ++j, ++idx) {
                const double obs = observed[static_cast<std::size_t>(j) + 1] -
                                   observed[static_cast<std::size_t>(i)];
                const double stat = perm[static_cast<std::size_t>(j) + 1] -
                                    perm[static_cast<std::size_t>(i)];
                if (stat >= obs) ++exceed[idx];
            }
        }
    }

    // Step 3: interval p-values and interval-wise adjustment.
    ITPResult result;
    result.basis_size = k;
    result.permutations = permutations;
    result.component_pvalues.assign(static_cast<std::size_t>(k), 0.0);
    result.adjusted_pvalues.assign(static_cast<std::size_t>(k), 0.0);
    std::size_t idx = 0;
    for (int i = 0; i < k; ++i) {
        for (int j = i; j < k; ++j, ++idx) {
            const double p = (1.0 + static_cast<double>(exceed[idx])) /
                             (static_cast<double>(permutations) + 1.0);
            if (i == j) result.component_pvalues[static_cast<std::size_t>(i)] = p;
            for (int comp = i; comp <= j; ++comp) {
                double& adjusted = result.adjusted_pvalues[static_cast<std::size_t>(comp)];
                adjusted = std::max(adjusted, p);
            }
        }
    }
    return result;
}

}  // namespace robin
