#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <vector>

#include "windlasso/data/panel.hpp"
#include "windlasso/design/column_label.hpp"
#include "windlasso/design/model_spec.hpp"
#include "windlasso/spline/periodic_bspline.hpp"

namespace windlasso {

/// Labeled regression design. Row r corresponds to panel time first_row + r;
/// mean and variance designs built from the same spec share this alignment.
struct DesignBlock {
    Eigen::MatrixXd matrix;
    std::vector<ColumnLabel> labels;
    std::int64_t first_row = 0;

    std::int64_t rows() const { return matrix.rows(); }
    int cols() const { return static_cast<int>(matrix.cols()); }

    /// Columns that never fired (an indicator that stayed zero). Permitted;
    /// the solver leaves their coefficients at zero.
    std::vector<int> zero_columns() const;
};

struct SplinePair {
    PeriodicSplineBasis diurnal;
    PeriodicSplineBasis annual;
};

SplinePair make_spline_pair(const ModelSpec& spec);

// --- shared builders (one matrix serves every target equation) -------------

/// Mean-part design: intercept, seasonal levels, and for every active lag and
/// panel variable the plain lag plus all seasonal products.
DesignBlock build_mean_design_matrix(const Panel& panel, const ModelSpec& spec);

/// Response for one equation: the target column over the design rows.
Eigen::VectorXd mean_response(const Panel& panel, const ModelSpec& spec, VariableRef target);

/// Variance-part design built from mean residuals (full panel length, rows
/// before the usable range zero-padded by the caller). Columns are the
/// intercept, diurnal levels, and indicator-split lagged residuals of every
/// variable with their diurnal products.
DesignBlock build_variance_design_matrix(const Eigen::MatrixXd& residuals, const ModelSpec& spec);

/// |residual| of the target over the design rows. Throws DegenerateDataError
/// when the column is identically zero.
Eigen::VectorXd variance_response(const Eigen::MatrixXd& residuals, const ModelSpec& spec,
                                  VariableRef target, int station_count);

// --- per-target views matching the operation contracts ---------------------

std::pair<DesignBlock, Eigen::VectorXd> build_mean_design(const Panel& panel,
                                                          const ModelSpec& spec,
                                                          VariableRef target);

std::pair<DesignBlock, Eigen::VectorXd> build_variance_design(const Eigen::MatrixXd& residuals,
                                                              const ModelSpec& spec,
                                                              VariableRef target,
                                                              int station_count);

// --- structural counts ------------------------------------------------------

/// Nominal per-station-pair parameter count of the full model,
/// 2*(J + 2*((k1-1)+(k2-1)+(k1*k2-1)+1) + (k1-1) + P + Q + 1 + 2*k1).
/// This is the headline complexity figure; the actual per-equation column
/// counts below scale with the station count as well.
long parameter_count(const ModelSpec& spec);

long mean_design_column_count(const ModelSpec& spec, int station_count);
long variance_design_column_count(const ModelSpec& spec, int station_count);

/// Audit export: structured labels as header, one design row per line,
/// response appended as the last column when given.
void write_design_csv(const DesignBlock& block, const Eigen::VectorXd* response,
                      std::ostream& out);

}  // namespace windlasso
