#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace windlasso {

/**
 * Cyclic cubic B-spline basis on equidistant knots.
 *
 * The basis has `count` functions on a circle of `period` observation steps,
 * knots at i * period / count. Every function is a shifted copy of the
 * cardinal cubic B-spline wrapped modulo the period, so the family is
 * nonnegative, twice continuously differentiable, exactly periodic, and sums
 * to one everywhere. Each function is supported on four inter-knot intervals.
 *
 * Values at integer steps are precomputed once; the object is immutable and
 * safe to share across threads.
 */
class PeriodicSplineBasis {
  public:
    /// Throws BasisError when count < 4 (cubic pieces need four knots) or
    /// period < count (sub-step knot spacing).
    PeriodicSplineBasis(std::int64_t period, int count);

    std::int64_t period() const { return period_; }
    int count() const { return count_; }
    double knot_spacing() const { return spacing_; }

    /// Value of function i (0-based) at real-valued position t.
    double value(int i, double t) const;

    /// All `count` values at integer step t, from the precomputed table.
    const double* row(std::int64_t t) const {
        std::int64_t phase = t % period_;
        if (phase < 0) phase += period_;
        return table_.data() + static_cast<std::size_t>(phase) * static_cast<std::size_t>(count_);
    }

    /// Basis values at step t; drop_first skips function 0 so the remaining
    /// columns are not collinear with an all-ones intercept.
    std::vector<double> eval_row(std::int64_t t, bool drop_first) const;

    /// Same, at an arbitrary real position (used by smoothness checks).
    std::vector<double> eval_row_at(double t, bool drop_first) const;

  private:
    std::int64_t period_;
    int count_;
    double spacing_;
    std::vector<double> table_;  // period x count, phase-major
};

PeriodicSplineBasis make_basis(std::int64_t period, int count);

/// Flattened outer product of the two dropped-first rows, (i1, i2) row-major;
/// length (k1 - 1) * (k2 - 1).
std::vector<double> eval_interaction_row(const PeriodicSplineBasis& diurnal,
                                         const PeriodicSplineBasis& annual, std::int64_t t);

/// Dump `t, f_1..f_k` rows for one full period (plotting support).
void write_basis_csv(const PeriodicSplineBasis& basis, std::ostream& out);

}  // namespace windlasso
