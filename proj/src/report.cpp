#include "mensura/report.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mensura/format.hpp"
#include "mensura/geometry.hpp"

namespace mensura {

namespace {

using nlohmann::ordered_json;

ordered_json qty(double value, const char* unit) {
    return ordered_json{{"value", value}, {"unit", unit}};
}

ordered_json qty(double value, const char* unit, double paper_value) {
    return ordered_json{{"value", value},
                        {"unit", unit},
                        {"paper_value", paper_value},
                        {"abs_deviation", std::fabs(value - paper_value)}};
}

// round to two significant figures, used by the monomial screen
double round_2sf(double x) {
    if (x == 0.0) return 0.0;
    const double scale = std::pow(10.0, std::floor(std::log10(std::fabs(x))) - 1.0);
    return std::round(x / scale) * scale;
}

ordered_json verdict_to_json(const EllipsoidVerdict& v, const Eigen::VectorXd& hypothesis) {
    ordered_json j;
    j["hypothesis"] = std::vector<double>(hypothesis.data(),
                                          hypothesis.data() + hypothesis.size());
    j["statistic"] = v.statistic;
    j["critical"] = v.critical;
    j["inside"] = v.inside;
    return j;
}

std::vector<double> log_vector(const std::vector<double>& v) {
    std::vector<double> out;
    out.reserve(v.size());
    for (double x : v) out.push_back(std::log(x));
    return out;
}

}  // namespace

ordered_json ols_fit_to_json(const OlsFit& fit) {
    ordered_json j;
    j["coefficients"] =
        std::vector<double>(fit.coefficients.data(),
                            fit.coefficients.data() + fit.coefficients.size());
    j["standard_errors"] =
        std::vector<double>(fit.standard_errors.data(),
                            fit.standard_errors.data() + fit.standard_errors.size());
    std::vector<double> cov;
    for (Eigen::Index i = 0; i < fit.covariance.rows(); ++i)
        for (Eigen::Index k = 0; k < fit.covariance.cols(); ++k)
            cov.push_back(fit.covariance(i, k));
    j["covariance"] = cov;
    j["df"] = fit.df;
    j["rss"] = fit.rss;
    return j;
}

ordered_json group_to_json(const DimensionlessGroup& g) {
    ordered_json j;
    for (const auto& term : g.terms()) j[term.variable] = term.exponent.str();
    return j;
}

ordered_json analyze(const Dataset& ds, const AnalysisOptions& opt) {
    const bool cherry = ds.name() == "cherry";
    const std::vector<double> d = ds.dbh_ft();
    const std::vector<double> h = ds.height_ft();
    const std::vector<double> v = ds.volume_ft3();
    const auto n = static_cast<Eigen::Index>(ds.size());

    ordered_json report;
    ordered_json discrepancies = ordered_json::array();

    // ---- dataset summary -------------------------------------------------
    const DatasetSummary s = summary(ds);
    {
        ordered_json j;
        j["name"] = ds.name();
        j["count"] = s.count;
        j["mean_dbh"] = cherry ? qty(s.mean_dbh_ft, "ft", 1.1) : qty(s.mean_dbh_ft, "ft");
        j["mean_height"] =
            cherry ? qty(s.mean_height_ft, "ft", 76.0) : qty(s.mean_height_ft, "ft");
        j["mean_volume"] = qty(s.mean_volume_ft3, "ft3");
        ordered_json corr;
        corr["dh"] = cherry ? qty(s.corr_dh, "1", 0.52) : qty(s.corr_dh, "1");
        corr["dv"] = cherry ? qty(s.corr_dv, "1", 0.97) : qty(s.corr_dv, "1");
        corr["hv"] = qty(s.corr_hv, "1");
        j["correlations"] = corr;
        report["dataset"] = j;
    }

    // ---- log-regression --------------------------------------------------
    Eigen::MatrixXd design(n, 3);
    Eigen::VectorXd response(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        design(i, 0) = 1.0;
        design(i, 1) = std::log(d[i]);
        design(i, 2) = std::log(h[i]);
        response(i) = std::log(v[i]);
    }
    const OlsFit logfit = ols(design, response);
    const Eigen::MatrixXd corr = coeff_correlation(logfit);
    {
        ordered_json j;
        j["model"] = "log(V) = b0 + b1*log(d) + b2*log(h), natural logs, d in ft";
        j["fit"] = ols_fit_to_json(logfit);
        j["b0"] = cherry ? qty(logfit.coefficients(0), "1", -1.705)
                         : qty(logfit.coefficients(0), "1");
        j["b1"] = cherry ? qty(logfit.coefficients(1), "1", 1.98)
                         : qty(logfit.coefficients(1), "1");
        j["b2"] = cherry ? qty(logfit.coefficients(2), "1", 1.117)
                         : qty(logfit.coefficients(2), "1");
        j["se_b0"] = cherry ? qty(logfit.standard_errors(0), "1", 0.8819)
                            : qty(logfit.standard_errors(0), "1");
        j["se_b1"] = cherry ? qty(logfit.standard_errors(1), "1", 0.0750)
                            : qty(logfit.standard_errors(1), "1");
        j["se_b2"] = cherry ? qty(logfit.standard_errors(2), "1", 0.2044)
                            : qty(logfit.standard_errors(2), "1");
        ordered_json c;
        c["b0_b1"] = qty(corr(0, 1), "1");
        c["b0_b2"] = cherry ? qty(corr(0, 2), "1", -0.9998) : qty(corr(0, 2), "1");
        c["b1_b2"] = qty(corr(1, 2), "1");
        j["coefficient_correlations"] = c;
        report["log_regression"] = j;
    }

    // ---- Pi reduction and the four formulations --------------------------
    const std::vector<VariableSpec> tree_vars = {
        {"V", Dimension::length(3)}, {"d", Dimension::length()}, {"h", Dimension::length()}};
    {
        const PiBasis reduction = pi_basis("tree", tree_vars);
        ordered_json j;
        j["variables"] = ordered_json::array({"V", "d", "h"});
        j["group_count"] = reduction.groups.size();
        j["rank"] = tree_vars.size() - reduction.groups.size();
        report["pi_reduction"] = j;
    }

    struct FormulationResult {
        char label;
        std::vector<double> pi0, pi1;
        double slope;
        bool accepted;
    };
    std::vector<FormulationResult> accepted;
    ordered_json formulations;
    for (const PiBasis& basis : groups_for_trees()) {
        const DimensionlessGroup& g0 = basis.groups[0];
        const DimensionlessGroup& g1 = basis.groups[1];
        FormulationResult fr;
        fr.label = basis.label[0];
        for (const TreeRecord& r : ds.records()) {
            const std::map<std::string, Quantity> values = {
                {"V", Quantity(r.volume_ft3, Dimension::length(3))},
                {"d", Quantity(r.dbh_ft, Dimension::length())},
                {"h", Quantity(r.height_ft, Dimension::length())}};
            fr.pi0.push_back(evaluate_group(g0, values));
            fr.pi1.push_back(evaluate_group(g1, values));
        }
        const OlsFit screen = loglog_slope_check(fr.pi1, fr.pi0);
        fr.slope = screen.coefficients(1);
        fr.accepted = round_2sf(fr.slope) == 1.0;

        ordered_json j;
        j["pi0"] = g0.str();
        j["pi1"] = g1.str();
        j["groups"] = ordered_json{{"pi0", group_to_json(g0)}, {"pi1", group_to_json(g1)}};
        ordered_json screen_j;
        screen_j["slope"] = fr.slope;
        screen_j["slope_se"] = screen.standard_errors(1);
        screen_j["slope_2sf"] = round_2sf(fr.slope);
        screen_j["monomial_linear"] = fr.accepted;
        j["loglog_screen"] = screen_j;
        if (fr.accepted) {
            const OriginFit of = fit_through_origin(fr.pi1, fr.pi0);
            ordered_json fj;
            if (cherry && fr.label == 'a') {
                fj["gamma0"] = qty(of.gamma0, "1", 0.302355);
                fj["standard_error"] = qty(of.standard_error, "1", 0.003893);
            } else if (cherry && fr.label == 'c') {
                fj["gamma0"] = qty(of.gamma0, "1", 0.30270);
                fj["standard_error"] = qty(of.standard_error, "1", 0.00423);
            } else {
                fj["gamma0"] = qty(of.gamma0, "1");
                fj["standard_error"] = qty(of.standard_error, "1");
            }
            fj["rss"] = of.rss;
            fj["df"] = of.df;
            j["origin_fit"] = fj;
            j["status"] = "accepted";
            accepted.push_back(fr);
        } else {
            j["status"] = "rejected";
            j["reason"] = "log-log slope is not 1 to two significant figures; the induced "
                          "volume model is a two-term sum, not a monomial";
        }
        formulations[std::string(1, fr.label)] = j;
    }
    report["formulations"] = formulations;

    if (accepted.empty())
        throw NumericError("no formulation passed the monomial screen for dataset '" +
                           ds.name() + "'");

    // pick the accepted formulation with the smallest through-origin SE
    char selected = accepted[0].label;
    double best_se = 1e300, selected_gamma0 = 0.0;
    for (const FormulationResult& fr : accepted) {
        const OriginFit of = fit_through_origin(fr.pi1, fr.pi0);
        if (of.standard_error < best_se) {
            best_se = of.standard_error;
            selected = fr.label;
            selected_gamma0 = of.gamma0;
        }
    }
    report["da_model"] = ordered_json{
        {"selected_formulation", std::string(1, selected)},
        {"gamma0", selected_gamma0},
        {"equation", "V = " + fmt_sig(selected_gamma0) + " * h * d^2"},
    };

    // ---- ellipsoid verdicts ----------------------------------------------
    {
        const double level = opt.ellipsoid_level;
        Eigen::VectorXd cylinder(3), cone(3), da(3);
        cylinder << std::log(std::numbers::pi / 4.0), 2.0, 1.0;
        cone << std::log(std::numbers::pi / 12.0), 2.0, 1.0;
        da << std::log(selected_gamma0), 2.0, 1.0;
        ordered_json j;
        j["level"] = level;
        j["cylinder"] = verdict_to_json(ellipsoid_test(logfit, cylinder, level), cylinder);
        j["cone"] = verdict_to_json(ellipsoid_test(logfit, cone, level), cone);
        j["da"] = verdict_to_json(ellipsoid_test(logfit, da, level), da);
        report["ellipsoid"] = j;
    }

    // ---- frustum interpretation -------------------------------------------
    {
        ordered_json j;
        const double lambda_fitted = lambda_from_gamma(selected_gamma0);
        j["lambda_hat"] = cherry ? qty(lambda_fitted, "1", 0.13526) : qty(lambda_fitted, "1");
        if (cherry)
            j["lambda_from_printed_gamma"] = qty(lambda_from_gamma(0.302), "1", 0.13526);
        j["taper_mean_tree"] = qty(taper(lambda_fitted, s.mean_dbh_ft, s.mean_height_ft), "1");
        if (cherry) {
            ordered_json ref;
            ref["d"] = qty(1.1, "ft");
            ref["h"] = qty(76.0, "ft");
            ref["taper"] = qty(taper(lambda_fitted, 1.1, 76.0), "1", -0.0126);
            ref["taper_from_printed_gamma"] =
                qty(taper(lambda_from_gamma(0.302), 1.1, 76.0), "1", -0.0126);
            j["reference_tree"] = ref;
        }
        j["literature_taper"] = qty(kLiteratureTaper, "1");
        report["interpretation"] = j;
    }

    // ---- transmitted variation --------------------------------------------
    ErrorModel em = opt.error_model;
    if (opt.rho_from_data) em.rho_dh = s.corr_dh;
    {
        ordered_json j;
        j["error_model"] = ordered_json{{"cv_d", em.cv_d},
                                        {"cv_h", em.cv_h},
                                        {"rho_dh", em.rho_dh}};
        j["cross_term_factor"] = opt.standard_delta ? 2.0 : 1.0;
        ordered_json budgets = ordered_json::array();
        std::size_t largest = 0;
        for (std::size_t i = 0; i < ds.size(); ++i) {
            if (v[i] > v[largest]) largest = i;
            const VarianceBudget b =
                transmit(selected_gamma0, d[i], h[i], em, opt.standard_delta);
            ordered_json bj;
            bj["id"] = ds.records()[i].id;
            bj["d"] = qty(d[i], "ft");
            bj["h"] = qty(h[i], "ft");
            bj["model_volume"] = qty(selected_gamma0 * h[i] * d[i] * d[i], "ft3");
            bj["dv_dd"] = qty(b.dv_dd, "ft2");
            bj["dv_dh"] = qty(b.dv_dh, "ft2");
            bj["term_d"] = qty(b.term_d, "ft6");
            bj["term_h"] = qty(b.term_h, "ft6");
            bj["term_cross"] = qty(b.term_cross, "ft6");
            bj["sigma_v2"] = qty(b.total, "ft6");
            bj["sigma_v"] = qty(b.sigma_v, "ft3");
            budgets.push_back(bj);
        }
        j["budgets"] = budgets;
        const VarianceBudget bl =
            transmit(selected_gamma0, d[largest], h[largest], em, opt.standard_delta);
        ordered_json lj;
        lj["id"] = ds.records()[largest].id;
        lj["sigma_v2"] = cherry ? qty(bl.total, "ft6", 3.5) : qty(bl.total, "ft6");
        j["largest_tree"] = lj;
        report["variance_transmission"] = j;

        discrepancies.push_back(ordered_json{
            {"id", "variance-cross-term"},
            {"note", "the transmission formula is applied with the correlation term as "
                     "printed, without the factor 2 of the first-order delta method; "
                     "rerun with --standard-delta for the conventional form"},
            {"cross_term_factor", opt.standard_delta ? 2.0 : 1.0}});
        if (cherry)
            discrepancies.push_back(ordered_json{
                {"id", "largest-tree-variance"},
                {"computed", bl.total},
                {"paper_value", 3.5},
                {"unit", "ft6"},
                {"note", "direct evaluation of the transmission formula with cv_d = " +
                             fmt_sig(em.cv_d) + ", cv_h = " + fmt_sig(em.cv_h) +
                             " gives a much larger largest-tree variance than the "
                             "published contour figure of about 3.5 ft^6"}});
    }

    // ---- prediction RSS comparisons ----------------------------------------
    {
        ordered_json j;
        const double rss_fitted = prediction_rss(
            [&](double dd, double hh) { return selected_gamma0 * hh * dd * dd; }, d, h, v);
        const double printed_gamma = 0.302;
        const double rss_printed = prediction_rss(
            [&](double dd, double hh) { return printed_gamma * hh * dd * dd; }, d, h, v);
        j["da_fitted"] = cherry ? qty(rss_fitted, "ft6", 181.4) : qty(rss_fitted, "ft6");
        if (cherry) {
            j["da_rounded_coefficient"] = qty(rss_printed, "ft6");
            discrepancies.push_back(ordered_json{
                {"id", "da-rss-rounded-coefficient"},
                {"computed", rss_printed},
                {"paper_value", 181.4},
                {"unit", "ft6"},
                {"note", "the published residual sum of squares 181.4 is reproduced by the "
                         "full-precision coefficient " +
                             fmt_sig(selected_gamma0) +
                             "; evaluating with the rounded coefficient 0.302 gives " +
                             fmt_sig(rss_printed)}});
        }

        const double rss_honer = prediction_rss(
            [&](double dd, double hh) {
                return honer_volume(dd * 12.0, hh, kHonerBlackCherry);
            },
            d, h, v);
        j["honer"] = qty(rss_honer, "ft6");

        std::vector<double> d_cubed;
        d_cubed.reserve(d.size());
        for (double dd : d) d_cubed.push_back(dd * dd * dd);
        const OriginFit donly = fit_through_origin(d_cubed, v);
        const double rss_donly = prediction_rss(
            [&](double dd, double hh) {
                (void)hh;
                return meyer_cubic_volume(dd, donly.gamma0, 3.0);
            },
            d, h, v);
        j["d_only"] = ordered_json{{"k", qty(donly.gamma0, "1")},
                                   {"rss", qty(rss_donly, "ft6")},
                                   {"exceeds_da", rss_donly > rss_fitted}};
        report["prediction_rss"] = j;
    }

    // ---- Honer comparison ---------------------------------------------------
    {
        ordered_json j;
        j["params"] = ordered_json{{"c1", kHonerBlackCherry.c1},
                                   {"c2", kHonerBlackCherry.c2},
                                   {"units", "d in inches, h in ft, V in ft3"}};
        ordered_json rows = ordered_json::array();
        double ratio_sum = 0.0;
        for (const TreeRecord& r : ds.records()) {
            const double computed =
                honer_volume(r.dbh_ft * 12.0, r.height_ft, kHonerBlackCherry);
            ratio_sum += computed / r.volume_ft3;
            rows.push_back(ordered_json{{"id", r.id},
                                        {"computed", computed},
                                        {"measured", r.volume_ft3}});
        }
        const double mean_ratio = ratio_sum / static_cast<double>(ds.size());
        j["volumes"] = rows;
        j["mean_ratio"] = qty(mean_ratio, "1");
        report["honer"] = j;
        if (cherry)
            discrepancies.push_back(ordered_json{
                {"id", "honer-fit"},
                {"computed_mean_ratio", mean_ratio},
                {"note", "the published black-cherry constants c1 = 0.033, c2 = 393.336 are "
                         "described as fitting this data remarkably well, but direct "
                         "evaluation overshoots the measured volumes by about " +
                             fmt_sig((mean_ratio - 1.0) * 100.0, 3) + "% on average"}});
    }

    report["discrepancies"] = discrepancies;
    return report;
}

namespace {

void flatten(const ordered_json& node, const std::string& path,
             std::vector<std::pair<std::string, std::string>>& rows) {
    if (node.is_object()) {
        for (const auto& [key, value] : node.items())
            flatten(value, path.empty() ? key : path + "." + key, rows);
    } else if (node.is_array()) {
        for (std::size_t i = 0; i < node.size(); ++i)
            flatten(node[i], path + "[" + std::to_string(i) + "]", rows);
    } else if (node.is_number_float()) {
        rows.emplace_back(path, fmt_double(node.get<double>()));
    } else if (node.is_number_integer()) {
        rows.emplace_back(path, std::to_string(node.get<long long>()));
    } else if (node.is_number_unsigned()) {
        rows.emplace_back(path, std::to_string(node.get<unsigned long long>()));
    } else if (node.is_boolean()) {
        rows.emplace_back(path, node.get<bool>() ? "true" : "false");
    } else if (node.is_string()) {
        std::string s = node.get<std::string>();
        if (s.find_first_of(",\"\n") != std::string::npos) {
            std::string quoted = "\"";
            for (char c : s) {
                if (c == '"') quoted += "\"\"";
                else quoted += c;
            }
            quoted += "\"";
            s = quoted;
        }
        rows.emplace_back(path, s);
    }
}

}  // namespace

std::string report_to_csv(const ordered_json& report) {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(report, "", rows);
    std::string out = "key,value\n";
    for (const auto& [key, value] : rows) out += key + "," + value + "\n";
    return out;
}

}  // namespace mensura
