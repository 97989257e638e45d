#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <string>
#include <vector>

#include "windlasso/design/column_label.hpp"
#include "windlasso/design/model_spec.hpp"

namespace windlasso {

/// Nonzero coefficients of one equation, keyed by structured column labels.
struct SparseCoefficients {
    std::vector<ColumnLabel> labels;
    std::vector<double> values;

    std::size_t size() const { return labels.size(); }

    void add(const ColumnLabel& label, double value) {
        if (value == 0.0) return;
        labels.push_back(label);
        values.push_back(value);
    }

    double value_of(const ColumnLabel& label) const {
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (labels[i] == label) return values[i];
        }
        return 0.0;
    }
};

/// Mean and variance fits for one target variable, with the in-sample paths.
struct FittedEquation {
    VariableRef target;
    SparseCoefficients mean_coefficients;
    SparseCoefficients variance_coefficients;
    Eigen::VectorXd residual_path;  // usable rows, aligned with the design
    Eigen::VectorXd sigma_path;     // floored conditional scale
    double sigma_floor = 0.0;
    double lambda_mean = std::numeric_limits<double>::quiet_NaN();
    double lambda_variance = std::numeric_limits<double>::quiet_NaN();
};

/// Full multivariate model: one equation per panel column.
struct FittedModel {
    ModelSpec spec;
    int station_count = 0;
    std::string method = "lasso";  // estimation tag carried into reports
    std::vector<FittedEquation> equations;
    int iterations_used = 0;
    double final_delta = std::numeric_limits<double>::quiet_NaN();
    bool converged = false;
    std::vector<double> delta_history;  // max-over-equations RMS change per pass

    int equation_count() const { return static_cast<int>(equations.size()); }

    const FittedEquation& equation(VariableRef target) const;
    FittedEquation& equation(VariableRef target);
};

}  // namespace windlasso
