#pragma once

#include <iosfwd>
#include <vector>

#include "windlasso/core/stats.hpp"
#include "windlasso/estimator/irw.hpp"

namespace windlasso {

struct DiagnosticsOptions {
    int acf_lags = 100;
    std::vector<int> ljung_box_lags = {24, 96};
};

/// Whiteness summary for one equation's standardized residuals.
struct EquationDiagnostics {
    VariableRef target;
    std::vector<double> acf_standardized;
    std::vector<double> acf_absolute;
    std::vector<LjungBoxResult> ljung_box_standardized;
    std::vector<LjungBoxResult> ljung_box_absolute;
    double spike_fraction_standardized = 0.0;
    double spike_fraction_absolute = 0.0;
};

struct DiagnosticsReport {
    DiagnosticsOptions options;
    std::vector<EquationDiagnostics> equations;
};

/// Uses the in-sample residual/sigma paths stored on the model (available
/// right after fitting). Standardized residuals are residual / sigma.
DiagnosticsReport residual_diagnostics(const FittedModel& model,
                                       const DiagnosticsOptions& options = {});

/// Recomputes the paths on the given panel first (for deserialized models).
DiagnosticsReport residual_diagnostics(const FittedModel& model, const Panel& panel,
                                       const DiagnosticsOptions& options = {});

void write_acf_csv(const DiagnosticsReport& report, std::ostream& out);
void write_ljung_box_csv(const DiagnosticsReport& report, std::ostream& out);

}  // namespace windlasso
