#pragma once

#include <Eigen/Dense>
#include <string>

#include "windlasso/data/panel.hpp"
#include "windlasso/design/model_spec.hpp"
#include "windlasso/model/fitted_model.hpp"

namespace windlasso {

struct FitOptions {
    int workers = 1;
    bool check_objective = false;  // forwarded to the solver
};

/**
 * Iteratively re-weighted two-stage estimation.
 *
 * Pass 1 fits every mean equation with unit weights, then fits the
 * conditional-scale equations on the absolute residuals. Each further pass
 * re-fits the means with weights 1 / sigma^2 from the previous scale fit and
 * refreshes the scale fit on the new residuals. The loop stops once the RMS
 * change of every equation's sigma path drops below spec.irw_tol, or at
 * spec.irw_max_iter (the result is then flagged, not an error). Lambda is
 * selected per equation by AIC on a grid frozen at the first pass, so later
 * passes re-solve the same path.
 *
 * `method` is "lasso" (alpha forced to 1) or "elastic_net" (spec.alpha).
 * With irw_max_iter = 1 the result is the plain unweighted fit.
 *
 * Per-pass equation fits share the design matrices read-only and may run on
 * several workers; results are identical for any worker count.
 */
FittedModel fit_irw(const Panel& panel, const ModelSpec& spec, const std::string& method,
                    const FitOptions& options = {});

/// Residual and (floored) sigma paths of an existing model on a panel,
/// aligned at first_row = spec.min_history(). Used to restore the in-sample
/// paths of a deserialized model and to seed forecast origins.
struct ModelApplication {
    std::int64_t first_row = 0;
    Eigen::MatrixXd residuals;  // usable rows x equations
    Eigen::MatrixXd sigma;
};

ModelApplication apply_model(const FittedModel& model, const Panel& panel);

}  // namespace windlasso
