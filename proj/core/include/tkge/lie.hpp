#pragma once

#include <Eigen/Core>

namespace tkge::lie {

/// Which scalar logarithm is used when pulling a coordinate back from its
/// SO(2) rotation block to the Lie algebra.
///
/// `kPaper` evaluates the rotation angle through the trace formula
///   theta(R) = arccos((trace(R) - 1) / 2)
/// and then takes the (2,1) entry of (theta / (2 sin theta)) * (R - R^T).
/// For a 2x2 block with trace 2 cos e this gives theta = arccos(cos e - 1/2),
/// which is deliberately NOT the plain rotation angle e; the residual
/// e - log_map(e) is what the correction feeds into the regularizer.
///
/// `kCanonicalSo2` is the textbook SO(2) logarithm atan2(sin e, cos e),
/// provided for experimentation; its correction vanishes for |e| <= pi.
enum class LieVariant { kPaper, kCanonicalSo2 };

/// arccos argument is clamped to [-1 + kAcosClamp, 1].
inline constexpr double kAcosClamp = 1e-7;
/// sin(theta) is floored at this magnitude (sign-preserving) in the division.
inline constexpr double kSinFloor = 1e-6;

/// 2x2 rotation block R(e) = [[cos e, -sin e], [sin e, cos e]].
struct RotationBlock {
    double angle_input = 0.0;
    Eigen::Matrix2d entries = Eigen::Matrix2d::Identity();
};

/// n x n Givens rotation: identity except rows/columns i and j, which hold
/// the 2x2 rotation block for `angle`.
struct GivensMatrix {
    int dim = 2;
    int i = 0;
    int j = 1;
    double angle = 0.0;
    Eigen::MatrixXd entries;
};

/// Per-coordinate angles of the block-diagonal skew-symmetric image of a
/// factor row: angles[k] is the (2,1) entry of log(R(e_k)).
struct SkewImage {
    Eigen::VectorXd angles;

    /// Assembles the dense 2n x 2n block-diagonal skew-symmetric matrix.
    Eigen::MatrixXd to_matrix() const;
};

/// Maps one embedding coordinate onto its SO(2) rotation block.
/// Throws std::invalid_argument for non-finite input.
RotationBlock rotation_block(double e);

/// Givens rotation acting in the (i, j) plane of a dim-dimensional space.
/// Requires dim >= 2 and 0 <= i < j < dim; throws std::invalid_argument otherwise.
GivensMatrix givens(int dim, int i, int j, double e);

/// Scalar logarithm map: the (2,1) entry of log(R(e)) under the chosen variant.
/// Throws std::invalid_argument for non-finite input.
double log_map(double e, LieVariant variant = LieVariant::kPaper);

/// d log_map / d e. Zero at clamp boundaries where the map is flat.
double log_map_derivative(double e, LieVariant variant = LieVariant::kPaper);

/// Per-coordinate skew image of a factor row.
SkewImage skew_image(const Eigen::Ref<const Eigen::VectorXd>& row,
                     LieVariant variant = LieVariant::kPaper);

/// Corrected coordinate e' = e - log_map(e).
inline double correct_scalar(double e, LieVariant variant = LieVariant::kPaper) {
    return e - log_map(e, variant);
}

/// d e' / d e = 1 - d log_map / d e.
inline double correct_derivative(double e, LieVariant variant = LieVariant::kPaper) {
    return 1.0 - log_map_derivative(e, variant);
}

/// Elementwise correction of a whole factor row.
///
/// The row length must be even (coordinates pair into 2x2 blocks); with
/// `strict` set, sqrt(length) must additionally be an integer so the full
/// Givens formalism in SO(sqrt(2r)) is well-typed. Violations throw
/// tkge::ConfigError.
Eigen::VectorXd correct(const Eigen::Ref<const Eigen::VectorXd>& row,
                        LieVariant variant = LieVariant::kPaper,
                        bool strict = false);

}  // namespace tkge::lie
