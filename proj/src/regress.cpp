#include "mensura/regress.hpp"

#include <cmath>

namespace mensura {

OlsFit ols(const Eigen::MatrixXd& design, const Eigen::VectorXd& response) {
    const Eigen::Index n = design.rows();
    const Eigen::Index p = design.cols();
    if (response.size() != n)
        throw NumericError("design has " + std::to_string(n) + " rows but response has " +
                           std::to_string(response.size()));
    if (n <= p)
        throw NumericError("need more observations than parameters (n = " +
                           std::to_string(n) + ", p = " + std::to_string(p) + ")");

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    if (qr.rank() < p)
        throw NumericError("design matrix is rank deficient (rank " +
                           std::to_string(qr.rank()) + " < " + std::to_string(p) + ")");

    OlsFit fit;
    fit.coefficients = qr.solve(response);

    const Eigen::VectorXd residuals = response - design * fit.coefficients;
    fit.rss = residuals.squaredNorm();
    fit.df = static_cast<int>(n - p);
    fit.residual_variance = fit.rss / fit.df;

    // (X'X)^-1 from the triangular factor: X P = Q R  =>  X'X = P R'R P'
    const Eigen::MatrixXd r_top =
        qr.matrixQR().topLeftCorner(p, p).triangularView<Eigen::Upper>();
    const Eigen::MatrixXd r_inv =
        r_top.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(p, p));
    const Eigen::MatrixXd perm = qr.colsPermutation();
    const Eigen::MatrixXd xtx_inv = perm * (r_inv * r_inv.transpose()) * perm.transpose();

    fit.covariance = fit.residual_variance * xtx_inv;
    fit.standard_errors = fit.covariance.diagonal().cwiseSqrt();
    fit.xtx = design.transpose() * design;
    return fit;
}

Eigen::MatrixXd coeff_correlation(const OlsFit& fit) {
    const Eigen::Index p = fit.coefficients.size();
    for (Eigen::Index i = 0; i < p; ++i)
        if (!(fit.standard_errors(i) > 0.0))
            throw NumericError("zero standard error for coefficient " + std::to_string(i));
    Eigen::MatrixXd corr(p, p);
    for (Eigen::Index i = 0; i < p; ++i)
        for (Eigen::Index j = 0; j < p; ++j)
            corr(i, j) =
                fit.covariance(i, j) / (fit.standard_errors(i) * fit.standard_errors(j));
    return corr;
}

OriginFit fit_through_origin(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw NumericError("x and y lengths differ");
    const std::size_t n = x.size();
    if (n < 2) throw NumericError("through-origin fit needs at least 2 points");
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    if (sxx == 0.0) throw NumericError("through-origin fit with all-zero x");

    OriginFit fit;
    fit.gamma0 = sxy / sxx;
    fit.rss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - fit.gamma0 * x[i];
        fit.rss += r * r;
    }
    fit.df = static_cast<int>(n) - 1;
    fit.standard_error = std::sqrt(fit.rss / fit.df / sxx);
    return fit;
}

OlsFit loglog_slope_check(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw NumericError("x and y lengths differ");
    const Eigen::Index n = static_cast<Eigen::Index>(x.size());
    Eigen::MatrixXd design(n, 2);
    Eigen::VectorXd response(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0))
            throw NumericError("log-log fit requires positive data (row " +
                               std::to_string(i + 1) + ")");
        design(i, 0) = 1.0;
        design(i, 1) = std::log(x[i]);
        response(i) = std::log(y[i]);
    }
    return ols(design, response);
}

EllipsoidVerdict ellipsoid_test(const OlsFit& fit, const Eigen::VectorXd& hypothesis,
                                double level) {
    const Eigen::Index p = fit.coefficients.size();
    if (hypothesis.size() != p)
        throw NumericError("hypothesis has " + std::to_string(hypothesis.size()) +
                           " entries, fit has " + std::to_string(p) + " coefficients");
    if (!(level > 0.0 && level < 1.0)) throw NumericError("level must be in (0, 1)");

    const Eigen::VectorXd delta = hypothesis - fit.coefficients;
    EllipsoidVerdict v;
    v.statistic = delta.dot(fit.xtx * delta) /
                  (static_cast<double>(p) * fit.residual_variance);
    v.critical = f_quantile(level, static_cast<int>(p), fit.df);
    v.inside = v.statistic <= v.critical;
    v.level = level;
    return v;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw NumericError("x and y lengths differ");
    const std::size_t n = x.size();
    if (n < 2) throw NumericError("correlation needs at least 2 points");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0) throw NumericError("correlation of a constant vector");
    return sxy / std::sqrt(sxx * syy);
}

double prediction_rss(const std::function<double(double, double)>& predict,
                      const std::vector<double>& d_ft, const std::vector<double>& h_ft,
                      const std::vector<double>& volume_ft3) {
    double rss = 0.0;
    for (std::size_t i = 0; i < volume_ft3.size(); ++i) {
        const double r = volume_ft3[i] - predict(d_ft[i], h_ft[i]);
        rss += r * r;
    }
    return rss;
}

}  // namespace mensura
