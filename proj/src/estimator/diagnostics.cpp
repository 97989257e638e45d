#include "windlasso/estimator/diagnostics.hpp"

#include <ostream>

#include "windlasso/core/errors.hpp"
#include "windlasso/core/text.hpp"

namespace windlasso {

namespace {

EquationDiagnostics diagnose_one(VariableRef target, const Eigen::VectorXd& residual,
                                 const Eigen::VectorXd& sigma,
                                 const DiagnosticsOptions& options) {
    if (residual.size() == 0 || residual.size() != sigma.size()) {
        throw InvalidValueError("equation has no stored residual/sigma paths; "
                                "apply the model to a panel first");
    }
    std::vector<double> standardized(static_cast<std::size_t>(residual.size()));
    std::vector<double> absolute(standardized.size());
    for (Eigen::Index t = 0; t < residual.size(); ++t) {
        standardized[static_cast<std::size_t>(t)] = residual(t) / sigma(t);
        absolute[static_cast<std::size_t>(t)] = std::abs(standardized[static_cast<std::size_t>(t)]);
    }

    EquationDiagnostics diag;
    diag.target = target;
    diag.acf_standardized = acf(standardized, options.acf_lags);
    diag.acf_absolute = acf(absolute, options.acf_lags);
    for (int lags : options.ljung_box_lags) {
        diag.ljung_box_standardized.push_back(ljung_box(standardized, lags));
        diag.ljung_box_absolute.push_back(ljung_box(absolute, lags));
    }
    diag.spike_fraction_standardized = acf_spike_fraction(standardized, options.acf_lags);
    diag.spike_fraction_absolute = acf_spike_fraction(absolute, options.acf_lags);
    return diag;
}

}  // namespace

DiagnosticsReport residual_diagnostics(const FittedModel& model,
                                       const DiagnosticsOptions& options) {
    DiagnosticsReport report;
    report.options = options;
    for (const auto& eq : model.equations) {
        report.equations.push_back(
            diagnose_one(eq.target, eq.residual_path, eq.sigma_path, options));
    }
    return report;
}

DiagnosticsReport residual_diagnostics(const FittedModel& model, const Panel& panel,
                                       const DiagnosticsOptions& options) {
    const ModelApplication app = apply_model(model, panel);
    DiagnosticsReport report;
    report.options = options;
    for (int e = 0; e < model.equation_count(); ++e) {
        report.equations.push_back(
            diagnose_one(model.equations[static_cast<std::size_t>(e)].target,
                         app.residuals.col(e), app.sigma.col(e), options));
    }
    return report;
}

void write_acf_csv(const DiagnosticsReport& report, std::ostream& out) {
    out << "target,lag,acf_standardized,acf_absolute\n";
    for (const auto& eq : report.equations) {
        for (std::size_t k = 0; k < eq.acf_standardized.size(); ++k) {
            out << to_string(eq.target) << "," << k + 1 << ","
                << format_double(eq.acf_standardized[k]) << ","
                << format_double(eq.acf_absolute[k]) << "\n";
        }
    }
}

void write_ljung_box_csv(const DiagnosticsReport& report, std::ostream& out) {
    out << "target,lags,series,statistic,p_value\n";
    for (const auto& eq : report.equations) {
        for (std::size_t i = 0; i < eq.ljung_box_standardized.size(); ++i) {
            const auto& std_result = eq.ljung_box_standardized[i];
            const auto& abs_result = eq.ljung_box_absolute[i];
            out << to_string(eq.target) << "," << std_result.lags << ",standardized,"
                << format_double(std_result.statistic) << ","
                << format_double(std_result.p_value) << "\n";
            out << to_string(eq.target) << "," << abs_result.lags << ",absolute,"
                << format_double(abs_result.statistic) << ","
                << format_double(abs_result.p_value) << "\n";
        }
    }
}

}  // namespace windlasso
