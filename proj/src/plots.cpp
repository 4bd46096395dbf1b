#include "mensura/plots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "mensura/format.hpp"
#include "mensura/svg.hpp"

namespace mensura {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMarginL = 70.0, kMarginR = 20.0, kMarginT = 30.0, kMarginB = 50.0;

struct AxisMap {
    double d0, d1;  // data range
    double p0, p1;  // pixel range
    double operator()(double x) const { return p0 + (x - d0) / (d1 - d0) * (p1 - p0); }
};

void draw_frame(SvgCanvas& svg, const AxisMap& xm, const AxisMap& ym,
                const std::string& xlabel, const std::string& ylabel,
                const std::string& title) {
    svg.rect(xm.p0, ym.p1, xm.p1 - xm.p0, ym.p0 - ym.p1, "none", "#000000");
    for (int i = 0; i <= 4; ++i) {
        const double xv = xm.d0 + (xm.d1 - xm.d0) * i / 4.0;
        const double yv = ym.d0 + (ym.d1 - ym.d0) * i / 4.0;
        svg.line(xm(xv), ym.p0, xm(xv), ym.p0 + 4, "#000000");
        svg.text(xm(xv), ym.p0 + 18, fmt_sig(xv, 3), 10, "middle");
        svg.line(xm.p0 - 4, ym(yv), xm.p0, ym(yv), "#000000");
        svg.text(xm.p0 - 7, ym(yv) + 3, fmt_sig(yv, 3), 10, "end");
    }
    svg.text((xm.p0 + xm.p1) / 2, ym.p0 + 36, xlabel, 12, "middle");
    svg.text(16, (ym.p0 + ym.p1) / 2, ylabel, 12, "middle");
    svg.text((xm.p0 + xm.p1) / 2, ym.p1 - 10, title, 13, "middle");
}

struct Coords {
    std::vector<double> pi1, pi0;
};

Coords formulation_coords(const Dataset& ds, char which) {
    const PiBasis& basis = tree_formulation(which);
    Coords c;
    for (const TreeRecord& r : ds.records()) {
        const std::map<std::string, Quantity> values = {
            {"V", Quantity(r.volume_ft3, Dimension::length(3))},
            {"d", Quantity(r.dbh_ft, Dimension::length())},
            {"h", Quantity(r.height_ft, Dimension::length())}};
        c.pi0.push_back(evaluate_group(basis.groups[0], values));
        c.pi1.push_back(evaluate_group(basis.groups[1], values));
    }
    return c;
}

// blue ramp for heat cells
std::string ramp_color(double t) {
    t = std::clamp(t, 0.0, 1.0);
    const int r = static_cast<int>(std::lround(247 + t * (8 - 247)));
    const int g = static_cast<int>(std::lround(251 + t * (48 - 251)));
    const int b = static_cast<int>(std::lround(255 + t * (107 - 255)));
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
    return buf;
}

}  // namespace

PlotOutput plot_pairs(const Dataset& ds) {
    const std::vector<std::vector<double>> cols = {ds.dbh_ft(), ds.height_ft(),
                                                   ds.volume_ft3()};
    const std::vector<std::string> labels = {"d (ft)", "h (ft)", "V (ft3)"};

    const double size = 720.0;
    const double pad = 54.0;
    const double cell = (size - 2 * pad) / 3.0;
    SvgCanvas svg(size, size);
    svg.text(size / 2, 24, ds.name() + ": pairwise scatter", 14, "middle");

    for (int row = 0; row < 3; ++row) {
        for (int col = 0; col < 3; ++col) {
            const double x0 = pad + col * cell, y0 = pad + row * cell;
            svg.rect(x0, y0, cell, cell, "none", "#888888");
            if (row == col) {
                svg.text(x0 + cell / 2, y0 + cell / 2, labels[row], 14, "middle");
                continue;
            }
            if (row < col) {
                const double r = pearson(cols[col], cols[row]);
                svg.text(x0 + cell / 2, y0 + cell / 2, fmt_sig(r, 4), 14, "middle");
                continue;
            }
            const auto& xs = cols[col];
            const auto& ys = cols[row];
            const double xmin = *std::min_element(xs.begin(), xs.end());
            const double xmax = *std::max_element(xs.begin(), xs.end());
            const double ymin = *std::min_element(ys.begin(), ys.end());
            const double ymax = *std::max_element(ys.begin(), ys.end());
            const AxisMap xm{xmin, xmax, x0 + 8, x0 + cell - 8};
            const AxisMap ym{ymin, ymax, y0 + cell - 8, y0 + 8};
            for (std::size_t i = 0; i < xs.size(); ++i)
                svg.circle(xm(xs[i]), ym(ys[i]), 2.4, "#1f77b4");
        }
    }

    std::string csv = "d_ft,h_ft,V_ft3\n";
    for (const TreeRecord& r : ds.records())
        csv += fmt_double(r.dbh_ft) + "," + fmt_double(r.height_ft) + "," +
               fmt_double(r.volume_ft3) + "\n";
    return {"plot_pairs", svg.finish(), csv};
}

PlotOutput plot_pi_scatter(const Dataset& ds, char formulation) {
    const PiBasis& basis = tree_formulation(formulation);
    const Coords c = formulation_coords(ds, formulation);

    const double xmax = *std::max_element(c.pi1.begin(), c.pi1.end());
    const double ymax = *std::max_element(c.pi0.begin(), c.pi0.end());
    const AxisMap xm{0.0, xmax * 1.06, kMarginL, kWidth - kMarginR};
    const AxisMap ym{0.0, ymax * 1.06, kHeight - kMarginB, kMarginT};

    SvgCanvas svg(kWidth, kHeight);
    draw_frame(svg, xm, ym, basis.groups[1].str(), basis.groups[0].str(),
               ds.name() + ": formulation (" + basis.label + ")");

    // cone (solid) and cylinder (dotted) lines only where they are straight
    // lines through the origin in these coordinates
    if (formulation == 'a' || formulation == 'c') {
        for (const auto& [slope, dash] :
             {std::pair<double, const char*>{std::numbers::pi / 12.0, ""},
              std::pair<double, const char*>{std::numbers::pi / 4.0, "5,4"}}) {
            double x_end = xm.d1;
            double y_end = slope * x_end;
            if (y_end > ym.d1) {
                y_end = ym.d1;
                x_end = y_end / slope;
            }
            svg.line(xm(0.0), ym(0.0), xm(x_end), ym(y_end), "#000000", 1.0, dash);
        }
    }
    for (std::size_t i = 0; i < c.pi1.size(); ++i)
        svg.circle(xm(c.pi1[i]), ym(c.pi0[i]), 3.0, "#1f77b4");

    std::string csv = "pi1,pi0\n";
    for (std::size_t i = 0; i < c.pi1.size(); ++i)
        csv += fmt_double(c.pi1[i]) + "," + fmt_double(c.pi0[i]) + "\n";
    return {std::string("plot_pi_") + formulation, svg.finish(), csv};
}

PlotOutput plot_ellipse(const Dataset& ds, double level) {
    const std::vector<double> d = ds.dbh_ft();
    const std::vector<double> h = ds.height_ft();
    const std::vector<double> v = ds.volume_ft3();
    const auto n = static_cast<Eigen::Index>(ds.size());
    Eigen::MatrixXd design(n, 3);
    Eigen::VectorXd response(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        design(i, 0) = 1.0;
        design(i, 1) = std::log(d[i]);
        design(i, 2) = std::log(h[i]);
        response(i) = std::log(v[i]);
    }
    const OlsFit fit = ols(design, response);
    const Coords ca = formulation_coords(ds, 'a');
    const double gamma0 = fit_through_origin(ca.pi1, ca.pi0).gamma0;

    // slice of the 3-parameter ellipsoid at b1 = b1_hat:
    // (delta0, delta2) A (delta0, delta2)' = p * s^2 * F  with A the
    // corresponding X'X submatrix
    Eigen::Matrix2d a;
    a << fit.xtx(0, 0), fit.xtx(0, 2), fit.xtx(2, 0), fit.xtx(2, 2);
    const double critical = f_quantile(level, 3, fit.df);
    const double c2 = 3.0 * fit.residual_variance * critical;

    constexpr int kSteps = 256;
    std::vector<std::pair<double, double>> boundary;
    boundary.reserve(kSteps + 1);
    for (int i = 0; i <= kSteps; ++i) {
        const double theta = 2.0 * std::numbers::pi * i / kSteps;
        const Eigen::Vector2d u(std::cos(theta), std::sin(theta));
        const double r = std::sqrt(c2 / u.dot(a * u));
        boundary.emplace_back(fit.coefficients(0) + r * u(0),
                              fit.coefficients(2) + r * u(1));
    }

    struct Marker {
        const char* label;
        double b0, b2;
    };
    const std::vector<Marker> markers = {
        {"cylinder", std::log(std::numbers::pi / 4.0), 1.0},
        {"cone", std::log(std::numbers::pi / 12.0), 1.0},
        {"da", std::log(gamma0), 1.0},
        {"center", fit.coefficients(0), fit.coefficients(2)},
    };

    double xmin = markers[0].b0, xmax = xmin, ymin = markers[0].b2, ymax = ymin;
    const auto extend = [&](double x, double y) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    };
    for (const auto& [x, y] : boundary) extend(x, y);
    for (const Marker& m : markers) extend(m.b0, m.b2);
    const double xpad = (xmax - xmin) * 0.08, ypad = (ymax - ymin) * 0.08;

    const AxisMap xm{xmin - xpad, xmax + xpad, kMarginL, kWidth - kMarginR};
    const AxisMap ym{ymin - ypad, ymax + ypad, kHeight - kMarginB, kMarginT};
    SvgCanvas svg(kWidth, kHeight);
    std::ostringstream title;
    title << ds.name() << ": " << fmt_sig(level * 100.0, 4)
          << "% coefficient region, (b0, b2) slice";
    draw_frame(svg, xm, ym, "b0", "b2", title.str());

    std::vector<std::pair<double, double>> px;
    px.reserve(boundary.size());
    for (const auto& [x, y] : boundary) px.emplace_back(xm(x), ym(y));
    svg.polyline(px, "#1f77b4", 1.5);
    for (const Marker& m : markers) {
        const bool is_center = std::string(m.label) == "center";
        svg.circle(xm(m.b0), ym(m.b2), is_center ? 3.0 : 3.5,
                   is_center ? "#1f77b4" : "#d62728");
        svg.text(xm(m.b0) + 6, ym(m.b2) - 6, m.label, 11);
    }

    std::string csv = "kind,label,b0,b2\n";
    for (const auto& [x, y] : boundary)
        csv += "boundary,," + fmt_double(x) + "," + fmt_double(y) + "\n";
    for (const Marker& m : markers)
        csv += std::string("marker,") + m.label + "," + fmt_double(m.b0) + "," +
               fmt_double(m.b2) + "\n";
    return {"plot_ellipse", svg.finish(), csv};
}

PlotOutput plot_contours(const Dataset& ds, const AnalysisOptions& opt) {
    const Coords ca = formulation_coords(ds, 'a');
    const double gamma0 = fit_through_origin(ca.pi1, ca.pi0).gamma0;
    ErrorModel em = opt.error_model;
    if (opt.rho_from_data) em.rho_dh = summary(ds).corr_dh;
    const VarianceGrid grid =
        variance_grid(gamma0, opt.grid_d_lo, opt.grid_d_hi, opt.grid_d_steps,
                      opt.grid_h_lo, opt.grid_h_hi, opt.grid_h_steps, em,
                      opt.standard_delta);

    const double panel_w = 280.0, panel_h = 330.0, gap = 40.0;
    const double x_left = 60.0, y_top = 60.0;
    SvgCanvas svg(2 * panel_w + gap + x_left + 20.0, panel_h + y_top + 60.0);
    svg.text(x_left + panel_w / 2, 30, "model volume V (ft3)", 13, "middle");
    svg.text(x_left + panel_w + gap + panel_w / 2, 30, "transmitted variance (ft6)", 13,
             "middle");

    const auto panel = [&](double origin_x, bool variance) {
        double lo = 1e300, hi = -1e300;
        for (const GridCell& c : grid.cells) {
            const double val = variance ? c.variance_ft6 : c.volume_ft3;
            lo = std::min(lo, val);
            hi = std::max(hi, val);
        }
        const double cw = panel_w / grid.d_steps;
        const double ch = panel_h / grid.h_steps;
        for (int hi_i = 0; hi_i < grid.h_steps; ++hi_i) {
            for (int di = 0; di < grid.d_steps; ++di) {
                const GridCell& c = grid.at(hi_i, di);
                const double val = variance ? c.variance_ft6 : c.volume_ft3;
                const double t = hi > lo ? (val - lo) / (hi - lo) : 0.0;
                // y grows downward; high h at the top
                svg.rect(origin_x + di * cw, y_top + (grid.h_steps - 1 - hi_i) * ch, cw + 0.5,
                         ch + 0.5, ramp_color(t));
            }
        }
        svg.rect(origin_x, y_top, panel_w, panel_h, "none", "#000000");
        const AxisMap xm{grid.cells.front().d_ft, grid.cells.back().d_ft, origin_x,
                         origin_x + panel_w};
        const AxisMap ym{grid.cells.front().h_ft, grid.cells.back().h_ft, y_top + panel_h,
                         y_top};
        for (const TreeRecord& r : ds.records()) {
            if (r.dbh_ft < xm.d0 || r.dbh_ft > xm.d1 || r.height_ft < ym.d0 ||
                r.height_ft > ym.d1)
                continue;
            svg.circle(xm(r.dbh_ft), ym(r.height_ft), 2.2, "#d62728", "#ffffff");
        }
        for (int i = 0; i <= 3; ++i) {
            const double dv = xm.d0 + (xm.d1 - xm.d0) * i / 3.0;
            const double hv = ym.d0 + (ym.d1 - ym.d0) * i / 3.0;
            svg.text(xm(dv), y_top + panel_h + 16, fmt_sig(dv, 3), 10, "middle");
            svg.text(origin_x - 5, ym(hv) + 3, fmt_sig(hv, 3), 10, "end");
        }
        svg.text(origin_x + panel_w / 2, y_top + panel_h + 34, "d (ft)", 11, "middle");
        svg.text(origin_x - 40, y_top + panel_h / 2, "h (ft)", 11, "middle");
        svg.text(origin_x, y_top + panel_h + 50,
                 std::string(variance ? "varV" : "V") + " range: " + fmt_sig(lo, 4) +
                     " to " + fmt_sig(hi, 4),
                 10);
    };
    panel(x_left, false);
    panel(x_left + panel_w + gap, true);

    std::ostringstream csv;
    write_grid_csv(grid, csv);
    return {"plot_contours", svg.finish(), csv.str()};
}

PlotOutput plot_species_compare(const Dataset& primary, const Dataset& other) {
    const Coords cp = formulation_coords(primary, 'a');
    const Coords co = formulation_coords(other, 'a');
    const double gp = fit_through_origin(cp.pi1, cp.pi0).gamma0;
    const double go = fit_through_origin(co.pi1, co.pi0).gamma0;

    double xmax = 0.0, ymax = 0.0;
    for (double x : cp.pi1) xmax = std::max(xmax, x);
    for (double x : co.pi1) xmax = std::max(xmax, x);
    for (double y : cp.pi0) ymax = std::max(ymax, y);
    for (double y : co.pi0) ymax = std::max(ymax, y);

    const AxisMap xm{0.0, xmax * 1.06, kMarginL, kWidth - kMarginR};
    const AxisMap ym{0.0, ymax * 1.06, kHeight - kMarginB, kMarginT};
    SvgCanvas svg(kWidth, kHeight);
    draw_frame(svg, xm, ym, "d^2/h^2", "V/h^3",
               primary.name() + " vs " + other.name() + ", formulation (a)");

    const auto draw_species = [&](const Coords& c, double gamma, const std::string& color,
                                  double label_y) {
        double x_end = xm.d1, y_end = gamma * x_end;
        if (y_end > ym.d1) {
            y_end = ym.d1;
            x_end = y_end / gamma;
        }
        svg.line(xm(0.0), ym(0.0), xm(x_end), ym(y_end), color, 1.2);
        for (std::size_t i = 0; i < c.pi1.size(); ++i)
            svg.circle(xm(c.pi1[i]), ym(c.pi0[i]), 3.0, color);
        svg.text(kMarginL + 10, label_y, "slope " + fmt_sig(gamma), 11, "start", color);
    };
    draw_species(cp, gp, "#1f77b4", kMarginT + 16);
    draw_species(co, go, "#d62728", kMarginT + 32);
    svg.text(kMarginL + 10, kMarginT + 16, primary.name() + ": ", 11, "end", "#1f77b4");
    svg.text(kMarginL + 10, kMarginT + 32, other.name() + ": ", 11, "end", "#d62728");

    std::string csv = "species,pi1,pi0\n";
    for (std::size_t i = 0; i < cp.pi1.size(); ++i)
        csv += primary.name() + "," + fmt_double(cp.pi1[i]) + "," + fmt_double(cp.pi0[i]) +
               "\n";
    for (std::size_t i = 0; i < co.pi1.size(); ++i)
        csv += other.name() + "," + fmt_double(co.pi1[i]) + "," + fmt_double(co.pi0[i]) +
               "\n";
    return {"plot_species_compare", svg.finish(), csv};
}

}  // namespace mensura
