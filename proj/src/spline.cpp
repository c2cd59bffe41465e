#include <Eigen/Dense>

#include <stdexcept>

#include "robin/stats.hpp"

namespace robin {

namespace {

// Quadratic through three points, integrated over [x0, x2].
double integrate_parabola(std::span<const double> x, std::span<const double> y) {
    Eigen::Matrix3d a;
    Eigen::Vector3d rhs;
    for (int i = 0; i < 3; ++i) {
        const double xi = x[static_cast<std::size_t>(i)];
        a(i, 0) = xi * xi;
        a(i, 1) = xi;
        a(i, 2) = 1.0;
        rhs(i) = y[static_cast<std::size_t>(i)];
    }
    const Eigen::Vector3d c = a.partialPivLu().solve(rhs);
    auto antiderivative = [&](double t) {
        return c(0) * t * t * t / 3.0 + c(1) * t * t / 2.0 + c(2) * t;
    };
    return antiderivative(x[2]) - antiderivative(x[0]);
}

}  // namespace

double spline_auc(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (n != y.size() || n < 2) {
        throw std::invalid_argument("need at least 2 sample points");
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (!(x[i] > x[i - 1])) {
            throw std::invalid_argument("x must be strictly increasing");
        }
    }
    if (n == 2) return 0.5 * (y[0] + y[1]) * (x[1] - x[0]);
    if (n == 3) return integrate_parabola(x, y);

    // Second derivatives (moments) of the interpolating cubic spline with
    // not-a-knot boundary conditions: third derivative continuous across the
    // first and last interior points, so cubic data reproduce exactly.
    std::vector<double> h(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) h[i] = x[i + 1] - x[i];

    const auto ni = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(ni, ni);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(ni);

    a(0, 0) = h[1];
    a(0, 1) = -(h[0] + h[1]);
    a(0, 2) = h[0];
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const auto r = static_cast<Eigen::Index>(i);
        a(r, r - 1) = h[i - 1] / 6.0;
        a(r, r) = (h[i - 1] + h[i]) / 3.0;
        a(r, r + 1) = h[i] / 6.0;
        rhs(r) = (y[i + 1] - y[i]) / h[i] - (y[i] - y[i - 1]) / h[i - 1];
    }
    a(ni - 1, ni - 3) = h[n - 2];
    a(ni - 1, ni - 2) = -(h[n - 3] + h[n - 2]);
    a(ni - 1, ni - 1) = h[n - 3];

    const Eigen::VectorXd m = a.partialPivLu().solve(rhs);

    double area = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const auto r = static_cast<Eigen::Index>(i);
        area += h[i] * (y[i] + y[i + 1]) / 2.0 -
                h[i] * h[i] * h[i] * (m(r) + m(r + 1)) / 24.0;
    }
    return area;
}

AUCResult robin_auc(std::span<const double> mean1, std::span<const double> mean2,
                    std::span<const double> levels) {
    if (mean1.size() != levels.size() || mean2.size() != levels.size()) {
        throw std::invalid_argument("curves and levels must have equal length");
    }
    AUCResult result;
    result.area1 = spline_auc(levels, mean1);
    result.area2 = spline_auc(levels, mean2);
    if (result.area1 > 0.0) {
        result.ratio = result.area2 / result.area1;
    }
    return result;
}

}  // namespace robin
