#include "spectral.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>

namespace mincut::spectral {

namespace {

constexpr double kResidualTarget = 1e-8;
constexpr double kGapFloor = 1e-3;

std::size_t iteration_cap(std::size_t n) {
    double log_term = std::ceil(std::log2(static_cast<double>(n) + 2.0));
    return static_cast<std::size_t>(10.0 * log_term * std::ceil(1.0 / kGapFloor));
}

// y = (2I - L) x with L the normalized Laplacian of h. With
// B = D^{-1/2} A' D^{-1/2} (A' includes loop weights on the diagonal),
// 2I - L = I + B.
void apply_shifted(const LoopedGraph& h, const std::vector<double>& inv_sqrt_deg,
                   const std::vector<double>& x, std::vector<double>& y) {
    const std::size_t n = h.size();
    for (std::size_t i = 0; i < n; ++i) {
        double acc = static_cast<double>(h.loop_weight(i)) * inv_sqrt_deg[i] *
                     inv_sqrt_deg[i] * x[i];
        for (std::size_t j : h.local_neighbors(i))
            acc += inv_sqrt_deg[i] * inv_sqrt_deg[j] * x[j];
        y[i] = x[i] + acc;
    }
}

}  // namespace

std::optional<Lambda2Estimate> power_iteration_lambda2(const LoopedGraph& h) {
    const std::size_t n = h.size();

    std::vector<double> inv_sqrt_deg(n);
    std::vector<double> stationary(n);  // D^{1/2} 1, normalized
    double stationary_norm_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double d = static_cast<double>(h.degree(i));
        inv_sqrt_deg[i] = 1.0 / std::sqrt(d);
        stationary[i] = std::sqrt(d);
        stationary_norm_sq += d;
    }
    const double stationary_norm = std::sqrt(stationary_norm_sq);
    for (double& s : stationary) s /= stationary_norm;

    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = 2.0 * unit_double(mix64(h.global_id(i))) - 1.0;

    auto orthonormalize = [&](std::vector<double>& v) -> bool {
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += v[i] * stationary[i];
        double norm_sq = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            v[i] -= dot * stationary[i];
            norm_sq += v[i] * v[i];
        }
        if (norm_sq <= 0.0 || !std::isfinite(norm_sq)) return false;
        double inv = 1.0 / std::sqrt(norm_sq);
        for (double& c : v) c *= inv;
        return true;
    };

    if (!orthonormalize(x)) return std::nullopt;

    std::vector<double> y(n);
    const std::size_t cap = iteration_cap(n);
    double mu = 0.0;
    double residual = std::numeric_limits<double>::infinity();
    for (std::size_t iter = 0; iter < cap; ++iter) {
        apply_shifted(h, inv_sqrt_deg, x, y);
        // Rayleigh quotient and residual of the current unit iterate.
        mu = 0.0;
        for (std::size_t i = 0; i < n; ++i) mu += x[i] * y[i];
        residual = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double r = y[i] - mu * x[i];
            residual += r * r;
        }
        residual = std::sqrt(residual);
        if (residual < kResidualTarget) break;
        x.swap(y);
        if (!orthonormalize(x)) return std::nullopt;
    }
    if (residual >= kResidualTarget) return std::nullopt;

    Lambda2Estimate est;
    est.lambda2 = 2.0 - mu;
    est.residual = residual;
    est.embedding.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        est.embedding[i] = x[i] * inv_sqrt_deg[i];
    return est;
}

Lambda2Estimate dense_lambda2(const LoopedGraph& h) {
    const std::size_t n = h.size();
    std::vector<double> inv_sqrt_deg(n);
    for (std::size_t i = 0; i < n; ++i)
        inv_sqrt_deg[i] = 1.0 / std::sqrt(static_cast<double>(h.degree(i)));

    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        lap(i, i) = 1.0 - static_cast<double>(h.loop_weight(i)) *
                              inv_sqrt_deg[i] * inv_sqrt_deg[i];
        for (std::size_t j : h.local_neighbors(i))
            lap(i, j) -= inv_sqrt_deg[i] * inv_sqrt_deg[j];
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
    Lambda2Estimate est;
    if (n < 2) {
        est.lambda2 = 0.0;
        est.embedding.assign(n, 0.0);
        return est;
    }
    est.lambda2 = solver.eigenvalues()(1);
    Eigen::VectorXd v2 = solver.eigenvectors().col(1);

    // Residual of the eigenpair, plus leakage onto the exact stationary
    // vector scaled by the spectral range.
    Eigen::VectorXd stationary(n);
    for (std::size_t i = 0; i < n; ++i)
        stationary(i) = 1.0 / inv_sqrt_deg[i];
    stationary.normalize();
    double leak = std::abs(stationary.dot(v2));
    est.residual = (lap * v2 - est.lambda2 * v2).norm() + 2.0 * leak;

    est.embedding.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        est.embedding[i] = v2(i) * inv_sqrt_deg[i];
    return est;
}

}  // namespace mincut::spectral
