#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "tkge/data.hpp"
#include "tkge/lie.hpp"
#include "tkge/loss.hpp"

namespace tkge::models {

enum class ModelVariant { kTComplEx, kTNTComplEx };

/// Lie-correction switch for the scoring/gradient paths.
struct LieOptions {
    bool enabled = false;
    lie::LieVariant variant = lie::LieVariant::kPaper;
};

/// Embedding tables. Rows are split complex vectors: the first `rank`
/// columns are real parts, the last `rank` imaginary parts.
///
/// One entity table serves both the subject and object roles. The relation
/// table holds 2 * n_relations rows: row r is the forward relation, row
/// r + n_relations its reciprocal. TNTComplEx adds a static (non-temporal)
/// relation table of the same shape.
struct ModelParams {
    ModelVariant variant = ModelVariant::kTComplEx;
    int rank = 0;
    Eigen::MatrixXd entity;           // n_entities x 2r
    Eigen::MatrixXd relation;         // 2*n_relations x 2r
    Eigen::MatrixXd relation_static;  // 2*n_relations x 2r (TNTComplEx), else 0 x 0
    Eigen::MatrixXd time;             // n_timestamps x 2r

    Eigen::Index n_entities() const { return entity.rows(); }
    Eigen::Index n_relation_rows() const { return relation.rows(); }
    Eigen::Index n_timestamps() const { return time.rows(); }
    bool all_finite() const;
};

/// Seeded i.i.d. Gaussian initialization (default stddev 1e-2 keeps
/// coordinates far from the arccos clamp region).
ModelParams init_params(ModelVariant variant, std::int32_t n_entities,
                        std::int32_t n_relations, std::int32_t n_timestamps, int rank,
                        std::uint64_t seed, double stddev = 1e-2);

/// Materialized corrected tables e' = e - log(f(e)).
struct CorrectedTables {
    Eigen::MatrixXd entity;
    Eigen::MatrixXd relation;
    Eigen::MatrixXd relation_static;
    Eigen::MatrixXd time;
};

CorrectedTables apply_correction(const ModelParams& params,
                                 lie::LieVariant variant = lie::LieVariant::kPaper);

/// Elementwise d e'/d e = 1 - d log_map/d e for every table entry; used to
/// chain gradients back to the raw tables.
CorrectedTables correction_slopes(const ModelParams& params,
                                  lie::LieVariant variant = lie::LieVariant::kPaper);

/// Scores every entity as the object of each (s, r, t) query. Queries use the
/// quadruple layout; the object field is ignored. Relation ids may address
/// reciprocal rows. Throws std::invalid_argument for out-of-range indices.
Eigen::MatrixXd score_all_objects(const ModelParams& params,
                                  std::span<const data::Quadruple> queries,
                                  const LieOptions& lie_opts);

/// Dense gradients, one matrix per table (zero rows for untouched ids).
struct BatchGradients {
    Eigen::MatrixXd entity;
    Eigen::MatrixXd relation;
    Eigen::MatrixXd relation_static;
    Eigen::MatrixXd time;

    void resize_like(const ModelParams& params);
    void set_zero();
};

/// Mean loss over `examples` (cross-entropy against all objects plus the
/// cubed-norm penalty on the four corrected factor rows of each example) and,
/// when `out` is non-null, its analytic gradients with respect to the raw
/// tables, chained through the correction derivative.
losses::LossTerms gradients(const ModelParams& params,
                            std::span<const data::Quadruple> examples,
                            const losses::LossOptions& opts, BatchGradients* out);

}  // namespace tkge::models
