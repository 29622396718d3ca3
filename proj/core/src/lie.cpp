#include "tkge/lie.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tkge/errors.hpp"

namespace tkge::lie {

namespace {

void require_finite(double e) {
    if (!std::isfinite(e)) {
        throw std::invalid_argument("lie: non-finite input coordinate");
    }
}

double floor_magnitude(double s, double eps) {
    if (s >= 0.0) return std::max(s, eps);
    return std::min(s, -eps);
}

}  // namespace

Eigen::MatrixXd SkewImage::to_matrix() const {
    const Eigen::Index n = angles.size();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (Eigen::Index k = 0; k < n; ++k) {
        a(2 * k + 1, 2 * k) = angles[k];
        a(2 * k, 2 * k + 1) = -angles[k];
    }
    return a;
}

RotationBlock rotation_block(double e) {
    require_finite(e);
    RotationBlock block;
    block.angle_input = e;
    const double c = std::cos(e);
    const double s = std::sin(e);
    block.entries << c, -s, s, c;
    return block;
}

GivensMatrix givens(int dim, int i, int j, double e) {
    require_finite(e);
    if (dim < 2) {
        throw std::invalid_argument("givens: dim must be at least 2, got " + std::to_string(dim));
    }
    if (i < 0 || j < 0 || i >= dim || j >= dim || i >= j) {
        throw std::invalid_argument("givens: indices must satisfy 0 <= i < j < dim, got i=" +
                                    std::to_string(i) + " j=" + std::to_string(j) + " dim=" +
                                    std::to_string(dim));
    }
    GivensMatrix g;
    g.dim = dim;
    g.i = i;
    g.j = j;
    g.angle = e;
    g.entries = Eigen::MatrixXd::Identity(dim, dim);
    const double c = std::cos(e);
    const double s = std::sin(e);
    g.entries(i, i) = c;
    g.entries(i, j) = -s;
    g.entries(j, i) = s;
    g.entries(j, j) = c;
    return g;
}

double log_map(double e, LieVariant variant) {
    require_finite(e);
    if (variant == LieVariant::kCanonicalSo2) {
        return std::atan2(std::sin(e), std::cos(e));
    }
    // trace(R) = 2 cos e, so the angle formula reads arccos(cos e - 1/2).
    // The argument ranges over [-3/2, 1/2]; the low end must be clamped into
    // arccos's domain, and sin(theta) floored against the theta = pi pole.
    const double u = std::clamp(std::cos(e) - 0.5, -1.0 + kAcosClamp, 1.0);
    const double theta = std::acos(u);
    if (theta == 0.0) {
        return 0.0;
    }
    const double s = floor_magnitude(std::sin(theta), kSinFloor);
    return theta * std::sin(e) / s;
}

double log_map_derivative(double e, LieVariant variant) {
    require_finite(e);
    if (variant == LieVariant::kCanonicalSo2) {
        return 1.0;
    }
    const double raw = std::cos(e) - 0.5;
    const bool clamped = raw < -1.0 + kAcosClamp || raw > 1.0;
    const double u = std::clamp(raw, -1.0 + kAcosClamp, 1.0);
    const double theta = std::acos(u);
    if (theta == 0.0) {
        return 0.0;
    }
    const double sin_theta = std::sin(theta);
    const bool floored = std::abs(sin_theta) < kSinFloor;
    const double s = floor_magnitude(sin_theta, kSinFloor);

    // theta(e) = arccos(u(e)) with du/de = -sin e, so away from the clamp
    // d theta / d e = sin e / sqrt(1 - u^2) = sin e / sin theta.
    const double dtheta = clamped ? 0.0 : std::sin(e) / sin_theta;
    const double ds = floored ? 0.0 : std::cos(theta) * dtheta;
    return (dtheta * std::sin(e) + theta * std::cos(e)) / s -
           theta * std::sin(e) * ds / (s * s);
}

SkewImage skew_image(const Eigen::Ref<const Eigen::VectorXd>& row, LieVariant variant) {
    SkewImage image;
    image.angles.resize(row.size());
    for (Eigen::Index k = 0; k < row.size(); ++k) {
        image.angles[k] = log_map(row[k], variant);
    }
    return image;
}

Eigen::VectorXd correct(const Eigen::Ref<const Eigen::VectorXd>& row, LieVariant variant,
                        bool strict) {
    const auto n = row.size();
    if (n % 2 != 0) {
        throw ConfigError("correct: factor row length must be even, got " + std::to_string(n));
    }
    if (strict) {
        const auto root = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(n))));
        if (root * root != n) {
            throw ConfigError("correct: strict mode requires sqrt(2*rank) integral, got length " +
                              std::to_string(n));
        }
    }
    Eigen::VectorXd out(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        out[k] = row[k] - log_map(row[k], variant);
    }
    return out;
}

}  // namespace tkge::lie
