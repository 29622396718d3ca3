#pragma once

#include <Eigen/Core>

#include "tkge/lie.hpp"

namespace tkge::losses {

/// Regularization weights and the correction switch shared by loss and
/// gradient evaluation. `lambda_time` < 0 means "same as lambda".
struct LossOptions {
    double lambda = 0.01;
    double lambda_time = -1.0;
    bool lie_enabled = false;
    lie::LieVariant lie_variant = lie::LieVariant::kPaper;

    double effective_lambda_time() const { return lambda_time < 0.0 ? lambda : lambda_time; }
};

/// Batch-mean loss decomposition. `ce_object` and `ce_subject` are the
/// cross-entropy contributions of forward and reciprocal examples, each
/// normalized by the full batch size, so with the default time weight
/// total = ce_object + ce_subject + lambda * n3_penalty.
struct LossTerms {
    double ce_object = 0.0;
    double ce_subject = 0.0;
    double n3_penalty = 0.0;
    double total = 0.0;
};

/// -log softmax(scores)[true_index], computed with max subtraction.
/// Throws std::invalid_argument on an empty score vector or bad index.
double log_softmax_ce(const Eigen::Ref<const Eigen::RowVectorXd>& scores,
                      Eigen::Index true_index);

/// Sum of |x|^3 over one factor row.
double n3(const Eigen::Ref<const Eigen::RowVectorXd>& row);

}  // namespace tkge::losses
