#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "mensura/errors.hpp"

namespace mensura {

// Least-squares fit with the pieces the ellipsoid test needs. Estimation
// runs through a column-pivoted Householder QR; the raw normal-equation
// crossproduct X'X is kept only for the quadratic form.
struct OlsFit {
    Eigen::VectorXd coefficients;
    Eigen::MatrixXd covariance;  // s^2 (X'X)^-1
    Eigen::VectorXd standard_errors;
    double residual_variance;  // s^2 = rss / (n - p)
    int df;                    // n - p
    Eigen::MatrixXd xtx;
    double rss;
};

struct OriginFit {
    double gamma0;
    double standard_error;
    double rss;
    int df;  // n - 1
};

struct EllipsoidVerdict {
    double statistic;  // (b - beta)' X'X (b - beta) / (p s^2)
    double critical;   // F quantile at the requested level
    bool inside;       // statistic <= critical
    double level;
};

// design includes the intercept column when one is wanted
OlsFit ols(const Eigen::MatrixXd& design, const Eigen::VectorXd& response);

Eigen::MatrixXd coeff_correlation(const OlsFit& fit);

// y = gamma0 * x through the origin: gamma0 = sum(xy)/sum(x^2),
// SE = sqrt(s^2 / sum(x^2)) with s^2 = rss/(n-1)
OriginFit fit_through_origin(const std::vector<double>& x, const std::vector<double>& y);

// fits log(y) = g0 + g1 log(x); slope near 1 certifies the monomial is
// already linear in the group
OlsFit loglog_slope_check(const std::vector<double>& x, const std::vector<double>& y);

// exact finite-sample joint F form
EllipsoidVerdict ellipsoid_test(const OlsFit& fit, const Eigen::VectorXd& hypothesis,
                                double level);

// regularized incomplete beta I_x(a, b), continued-fraction evaluation
double regularized_incomplete_beta(double a, double b, double x);

double f_cdf(double x, int d1, int d2);

// inverse F CDF by bracketing bisection to 1e-10
double f_quantile(double p, int d1, int d2);

double pearson(const std::vector<double>& x, const std::vector<double>& y);

// sum of squared prediction errors of predict(d_ft, h_ft) against observed
// volumes, row by row
double prediction_rss(const std::function<double(double, double)>& predict,
                      const std::vector<double>& d_ft, const std::vector<double>& h_ft,
                      const std::vector<double>& volume_ft3);

}  // namespace mensura
