#pragma once

#include <string>

#include "mensura/data.hpp"
#include "mensura/report.hpp"

namespace mensura {

// A rendered figure plus the CSV of the points it draws. File names are
// base_name + ".svg" / ".csv".
struct PlotOutput {
    std::string base_name;
    std::string svg;
    std::string csv;
};

// scatter matrix of d, h, V with pairwise correlations
PlotOutput plot_pairs(const Dataset& ds);

// pi1 vs pi0 for one formulation; (a) and (c) carry cone (solid) and
// cylinder (dotted) reference lines
PlotOutput plot_pi_scatter(const Dataset& ds, char formulation);

// (b0, b2) slice of the joint confidence ellipsoid with the b1 coordinate
// held at its estimate, plus cylinder/cone/DA markers
PlotOutput plot_ellipse(const Dataset& ds, double level);

// model volume and transmitted variance over a (d, h) grid, tree positions
// superimposed
PlotOutput plot_contours(const Dataset& ds, const AnalysisOptions& opt);

// two species in formulation-(a) coordinates with their DA lines
PlotOutput plot_species_compare(const Dataset& primary, const Dataset& other);

}  // namespace mensura
