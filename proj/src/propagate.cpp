#include "mensura/propagate.hpp"

#include <cmath>
#include <ostream>

#include "mensura/format.hpp"

namespace mensura {

VarianceBudget transmit(double gamma0, double d_ft, double h_ft, const ErrorModel& em,
                        bool standard_delta) {
    if (!(d_ft > 0.0) || !(h_ft > 0.0))
        throw NumericError("transmit requires positive diameter and height");
    if (em.cv_d < 0.0 || em.cv_h < 0.0)
        throw NumericError("coefficients of variation must be nonnegative");
    if (std::fabs(em.rho_dh) > 1.0) throw NumericError("|rho_dh| must not exceed 1");

    VarianceBudget b;
    b.dv_dd = 2.0 * gamma0 * h_ft * d_ft;
    b.dv_dh = gamma0 * d_ft * d_ft;
    const double sigma_d = em.cv_d * d_ft;
    const double sigma_h = em.cv_h * h_ft;
    b.term_d = b.dv_dd * b.dv_dd * sigma_d * sigma_d;
    b.term_h = b.dv_dh * b.dv_dh * sigma_h * sigma_h;
    b.term_cross = std::fabs(b.dv_dd) * std::fabs(b.dv_dh) * em.rho_dh * sigma_d * sigma_h;
    if (standard_delta) b.term_cross *= 2.0;
    b.total = b.term_d + b.term_h + b.term_cross;
    b.sigma_v = b.total >= 0.0 ? std::sqrt(b.total) : std::nan("");
    return b;
}

VarianceGrid variance_grid(double gamma0, double d_lo, double d_hi, int d_steps,
                           double h_lo, double h_hi, int h_steps, const ErrorModel& em,
                           bool standard_delta) {
    if (!(d_lo > 0.0) || !(h_lo > 0.0) || !(d_hi >= d_lo) || !(h_hi >= h_lo))
        throw NumericError("grid ranges must be positive with hi >= lo");
    if (d_steps < 2 || h_steps < 2) throw NumericError("grid needs at least 2 steps per axis");

    VarianceGrid grid;
    grid.d_steps = d_steps;
    grid.h_steps = h_steps;
    grid.cells.reserve(static_cast<std::size_t>(d_steps) * h_steps);
    for (int hi = 0; hi < h_steps; ++hi) {
        const double h = h_lo + (h_hi - h_lo) * hi / (h_steps - 1);
        for (int di = 0; di < d_steps; ++di) {
            const double d = d_lo + (d_hi - d_lo) * di / (d_steps - 1);
            const VarianceBudget b = transmit(gamma0, d, h, em, standard_delta);
            grid.cells.push_back({d, h, gamma0 * h * d * d, b.total});
        }
    }
    return grid;
}

void write_grid_csv(const VarianceGrid& grid, std::ostream& out) {
    out << "d_ft,h_ft,V_ft3,varV_ft6\n";
    for (const GridCell& c : grid.cells)
        out << fmt_double(c.d_ft) << ',' << fmt_double(c.h_ft) << ','
            << fmt_double(c.volume_ft3) << ',' << fmt_double(c.variance_ft6) << '\n';
}

}  // namespace mensura
