#include "tkge/loss.hpp"

#include <cmath>
#include <stdexcept>

namespace tkge::losses {

double log_softmax_ce(const Eigen::Ref<const Eigen::RowVectorXd>& scores,
                      Eigen::Index true_index) {
    if (scores.size() == 0) {
        throw std::invalid_argument("log_softmax_ce: empty score vector");
    }
    if (true_index < 0 || true_index >= scores.size()) {
        throw std::invalid_argument("log_softmax_ce: true index out of range");
    }
    const double max_score = scores.maxCoeff();
    const double log_sum = std::log((scores.array() - max_score).exp().sum());
    return -(scores[true_index] - max_score - log_sum);
}

double n3(const Eigen::Ref<const Eigen::RowVectorXd>& row) {
    return row.array().abs().cube().sum();
}

}  // namespace tkge::losses
