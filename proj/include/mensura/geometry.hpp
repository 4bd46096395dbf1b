#pragma once

#include <string>
#include <vector>

#include "mensura/errors.hpp"

namespace mensura {

// Stem solids. lambda is the top/bottom diameter ratio of a frustum;
// lambda = 1 is a cylinder, lambda = 0 a cone.
enum class SolidKind { Cylinder, Cone, Frustum };

struct SolidModel {
    SolidKind kind;
    double lambda;

    static SolidModel cylinder() { return {SolidKind::Cylinder, 1.0}; }
    static SolidModel cone() { return {SolidKind::Cone, 0.0}; }
    static SolidModel frustum(double lambda);
};

const char* solid_kind_name(SolidKind kind);
SolidKind solid_kind_from_name(const std::string& name);

// V = (pi/12)(1 + lambda + lambda^2) d^2 h
double solid_volume(const SolidModel& m, double d_ft, double h_ft);

// positive root of lambda^2 + lambda + (1 - 12 gamma0 / pi) = 0;
// gamma0 must lie between the cone (pi/12) and cylinder (pi/4) coefficients
double lambda_from_gamma(double gamma0);

// t = (lambda - 1) d / h, negative for a narrowing stem
double taper(double lambda, double d_ft, double h_ft);

struct TaperEstimate {
    double lambda_hat;
    double taper_value;
    double reference_d_ft;
    double reference_h_ft;
};

TaperEstimate estimate_taper(double gamma0, double d_ft, double h_ft);

// field-measured taper reported by Larsen's field-forester tables
inline constexpr double kLiteratureTaper = -0.0098;

// V = d^2 / (c1 + c2/h) with d in inches, h in feet, V in cubic feet
struct HonerParams {
    double c1;
    double c2;
};
inline constexpr HonerParams kHonerBlackCherry{0.033, 393.336};

double honer_volume(double d_in, double h_ft, const HonerParams& p);

struct LogSegment {
    double d_small_ft;  // small-end diameter
    double d_large_ft;  // large-end diameter, >= small end
    double length_ft;
};

// Smalian: V = (pi/8)(d_se^2 + d_le^2) L
double smalian_volume(const LogSegment& seg);

// sum of per-log Smalian volumes over a bucked stem
double stem_volume(const std::vector<LogSegment>& segments);

// remaining paper length from roll geometry: L = (pi/4)(D^2 - d^2)/t
double toilet_roll_length(double outer_d, double core_d, double thickness);

// V = k d^b, the diameter-only model
double meyer_cubic_volume(double d_ft, double k, double b);

}  // namespace mensura
