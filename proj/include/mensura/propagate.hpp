#pragma once

#include <iosfwd>
#include <vector>

#include "mensura/errors.hpp"

namespace mensura {

// Relative measurement errors: sigma = cv * value. Defaults are the
// +/-1% diameter and +/-5% height reading accuracies and the cherry-data
// diameter/height correlation.
struct ErrorModel {
    double cv_d = 0.0082;
    double cv_h = 0.0408;
    double rho_dh = 0.52;
};

// Transmitted-variance decomposition for V = gamma0 h d^2. Units: terms
// and total in ft^6, sigma_v in ft^3, sensitivities in ft^2.
struct VarianceBudget {
    double dv_dd;  // 2 gamma0 h d
    double dv_dh;  // gamma0 d^2
    double term_d;
    double term_h;
    double term_cross;
    double total;    // sigma_V^2
    double sigma_v;  // sqrt(total)
};

// The cross term is |dV/dd| |dV/dh| rho sigma_d sigma_h with NO factor of
// two, matching the published transmission formula; standard_delta = true
// switches to the conventional first-order delta-method form (factor 2).
VarianceBudget transmit(double gamma0, double d_ft, double h_ft, const ErrorModel& em,
                        bool standard_delta = false);

struct GridCell {
    double d_ft;
    double h_ft;
    double volume_ft3;
    double variance_ft6;
};

// Row-major: h varies across rows, d across columns within a row.
struct VarianceGrid {
    int d_steps;
    int h_steps;
    std::vector<GridCell> cells;

    const GridCell& at(int hi, int di) const { return cells[hi * d_steps + di]; }
};

VarianceGrid variance_grid(double gamma0, double d_lo, double d_hi, int d_steps,
                           double h_lo, double h_hi, int h_steps, const ErrorModel& em,
                           bool standard_delta = false);

// header: d_ft,h_ft,V_ft3,varV_ft6
void write_grid_csv(const VarianceGrid& grid, std::ostream& out);

}  // namespace mensura
