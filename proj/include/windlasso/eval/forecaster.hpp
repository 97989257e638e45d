#pragma once

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <vector>

#include "windlasso/benchmarks/benchmarks.hpp"
#include "windlasso/estimator/irw.hpp"
#include "windlasso/model/compiled.hpp"

namespace windlasso {

struct ForecastOptions {
    /// Future shock terms are replaced by their expected magnitude under the
    /// Gaussian working assumption. `freeze_sigma` instead holds the scale at
    /// its one-step-ahead value across the whole horizon.
    bool freeze_sigma = false;
    /// Post-processing clamp on wind-speed point forecasts (off: raw linear
    /// model output is scored as-is).
    bool floor_wind_at_zero = false;
};

struct ForecastResult {
    std::int64_t origin = 0;
    Eigen::MatrixXd point;  // horizon x variables
    Eigen::MatrixXd sd;     // conditional scale path; 0 for models without one
    std::string model_tag;
};

/// A model bound to a panel, ready to forecast from any admissible origin.
class Forecaster {
  public:
    virtual ~Forecaster() = default;
    virtual ForecastResult forecast(std::int64_t origin, int horizon) const = 0;
    virtual std::string tag() const = 0;
    virtual std::int64_t min_origin() const = 0;
};

/**
 * Recursive forecaster for the fitted periodic VARX / threshold-ARCH model.
 *
 * Binding precomputes the in-sample residual and sigma paths over the panel;
 * each forecast then recurses: predicted values feed later lags, and shock
 * terms whose lag falls beyond the origin are replaced by +-sigma/sqrt(2*pi)
 * (the expected value of the one-sided residual when innovations are
 * standard Gaussian, i.e. half of E|eps| = sigma*sqrt(2/pi)).
 */
class SvarxTarchxForecaster : public Forecaster {
  public:
    SvarxTarchxForecaster(const FittedModel& model, const Panel& panel,
                          ForecastOptions options = {});

    ForecastResult forecast(std::int64_t origin, int horizon) const override;
    std::string tag() const override;
    std::int64_t min_origin() const override { return application_.first_row; }

    const ModelApplication& application() const { return application_; }

  private:
    const FittedModel& model_;
    const Panel& panel_;
    ForecastOptions options_;
    std::vector<CompiledEquation> mean_;
    std::vector<CompiledEquation> variance_;
    SplinePair splines_;
    ModelApplication application_;
};

class BenchmarkForecaster : public Forecaster {
  public:
    BenchmarkForecaster(const BenchmarkModel& model, const Panel& panel)
        : model_(model), panel_(panel) {}

    ForecastResult forecast(std::int64_t origin, int horizon) const override;
    std::string tag() const override { return model_.tag(); }
    std::int64_t min_origin() const override {
        return model_.kind == BenchmarkModel::Kind::Persistence ? 0 : model_.order - 1;
    }

  private:
    const BenchmarkModel& model_;
    const Panel& panel_;
};

/// One-shot convenience matching the operation signature.
ForecastResult forecast(const FittedModel& model, const Panel& panel, std::int64_t origin,
                        int horizon, const ForecastOptions& options = {});

void write_forecast_csv(const std::vector<ForecastResult>& forecasts, const Panel& panel,
                        std::ostream& out);

}  // namespace windlasso
