#pragma once

#include <string>

#include <json.hpp>

#include "mensura/data.hpp"
#include "mensura/pi.hpp"
#include "mensura/propagate.hpp"
#include "mensura/regress.hpp"

namespace mensura {

struct AnalysisOptions {
    ErrorModel error_model;
    bool rho_from_data = true;  // override error_model.rho_dh with the dataset correlation
    bool standard_delta = false;
    double ellipsoid_level = 0.999;
    double grid_d_lo = 0.6, grid_d_hi = 1.8;
    int grid_d_steps = 25;
    double grid_h_lo = 60.0, grid_h_hi = 90.0;
    int grid_h_steps = 25;
};

// {coefficients, standard_errors, covariance (row-major), df, rss}
nlohmann::ordered_json ols_fit_to_json(const OlsFit& fit);

nlohmann::ordered_json group_to_json(const DimensionlessGroup& g);

// Full analysis pipeline: summary, log-regression, coefficient
// correlations, ellipsoid verdicts, the four dimensionless formulations
// with monomial screening, through-origin fits, frustum/taper recovery,
// per-tree variance budgets, and prediction-RSS comparisons. Values with a
// published counterpart (cherry data only) carry paper_value and
// abs_deviation fields; known disagreements with the published figures are
// collected under "discrepancies".
nlohmann::ordered_json analyze(const Dataset& ds, const AnalysisOptions& opt);

// two-column "key,value" flattening of a report; same numbers as the JSON
std::string report_to_csv(const nlohmann::ordered_json& report);

}  // namespace mensura
