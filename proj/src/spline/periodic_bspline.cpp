#include "windlasso/spline/periodic_bspline.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "windlasso/core/errors.hpp"
#include "windlasso/core/text.hpp"

namespace windlasso {

namespace {

// Cardinal cubic B-spline on [0, 4), zero elsewhere. Integer translates sum
// to one, which the wrapped basis inherits.
double cardinal_cubic(double u) {
    if (u < 0.0 || u >= 4.0) return 0.0;
    if (u < 1.0) return u * u * u / 6.0;
    if (u < 2.0) return (((-3.0 * u + 12.0) * u - 12.0) * u + 4.0) / 6.0;
    if (u < 3.0) return (((3.0 * u - 24.0) * u + 60.0) * u - 44.0) / 6.0;
    const double w = 4.0 - u;
    return w * w * w / 6.0;
}

}  // namespace

PeriodicSplineBasis::PeriodicSplineBasis(std::int64_t period, int count)
    : period_(period), count_(count), spacing_(static_cast<double>(period) / count) {
    if (count < 4) {
        throw BasisError("cubic basis needs at least 4 functions, got " + std::to_string(count));
    }
    if (period < count) {
        throw BasisError("period " + std::to_string(period) + " shorter than knot count " +
                         std::to_string(count));
    }
    table_.resize(static_cast<std::size_t>(period) * static_cast<std::size_t>(count));
    for (std::int64_t t = 0; t < period; ++t) {
        for (int i = 0; i < count; ++i) {
            table_[static_cast<std::size_t>(t) * static_cast<std::size_t>(count) +
                   static_cast<std::size_t>(i)] = value(i, static_cast<double>(t));
        }
    }
}

double PeriodicSplineBasis::value(int i, double t) const {
    // Reduce t into [0, period) first; fmod is exact, so f(t + period) is
    // bitwise equal to f(t).
    double phase = std::fmod(t, static_cast<double>(period_));
    if (phase < 0.0) phase += static_cast<double>(period_);
    double u = (phase - static_cast<double>(i) * spacing_) / spacing_;
    if (u < 0.0) u += static_cast<double>(count_);
    return cardinal_cubic(u);
}

std::vector<double> PeriodicSplineBasis::eval_row(std::int64_t t, bool drop_first) const {
    const double* r = row(t);
    const int from = drop_first ? 1 : 0;
    return std::vector<double>(r + from, r + count_);
}

std::vector<double> PeriodicSplineBasis::eval_row_at(double t, bool drop_first) const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count_ - (drop_first ? 1 : 0)));
    for (int i = drop_first ? 1 : 0; i < count_; ++i) out.push_back(value(i, t));
    return out;
}

PeriodicSplineBasis make_basis(std::int64_t period, int count) {
    return PeriodicSplineBasis(period, count);
}

std::vector<double> eval_interaction_row(const PeriodicSplineBasis& diurnal,
                                         const PeriodicSplineBasis& annual, std::int64_t t) {
    const double* d = diurnal.row(t);
    const double* a = annual.row(t);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(diurnal.count() - 1) *
                static_cast<std::size_t>(annual.count() - 1));
    for (int i1 = 1; i1 < diurnal.count(); ++i1) {
        for (int i2 = 1; i2 < annual.count(); ++i2) {
            out.push_back(d[i1] * a[i2]);
        }
    }
    return out;
}

void write_basis_csv(const PeriodicSplineBasis& basis, std::ostream& out) {
    out << "t";
    for (int i = 1; i <= basis.count(); ++i) out << ",f_" << i;
    out << "\n";
    for (std::int64_t t = 0; t < basis.period(); ++t) {
        out << t;
        const double* r = basis.row(t);
        for (int i = 0; i < basis.count(); ++i) out << "," << format_double(r[i]);
        out << "\n";
    }
}

}  // namespace windlasso
