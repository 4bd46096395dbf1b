#include "mensura/geometry.hpp"

#include <cmath>
#include <numbers>

namespace mensura {

namespace {
constexpr double kPi = std::numbers::pi;
}

SolidModel SolidModel::frustum(double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw NumericError("frustum lambda must lie in [0, 1], got " + std::to_string(lambda));
    return {SolidKind::Frustum, lambda};
}

const char* solid_kind_name(SolidKind kind) {
    switch (kind) {
        case SolidKind::Cylinder: return "cylinder";
        case SolidKind::Cone: return "cone";
        case SolidKind::Frustum: return "frustum";
    }
    return "?";
}

SolidKind solid_kind_from_name(const std::string& name) {
    if (name == "cylinder") return SolidKind::Cylinder;
    if (name == "cone") return SolidKind::Cone;
    if (name == "frustum") return SolidKind::Frustum;
    throw NumericError("unknown solid kind '" + name + "'");
}

double solid_volume(const SolidModel& m, double d_ft, double h_ft) {
    if (!(d_ft > 0.0) || !(h_ft > 0.0))
        throw NumericError("solid_volume requires positive diameter and height");
    const double l = m.lambda;
    return kPi / 12.0 * (1.0 + l + l * l) * d_ft * d_ft * h_ft;
}

double lambda_from_gamma(double gamma0) {
    const double cone = kPi / 12.0;
    const double cylinder = kPi / 4.0;
    if (!(gamma0 >= cone && gamma0 <= cylinder))
        throw NumericError("gamma0 = " + std::to_string(gamma0) +
                           " outside the cone/cylinder range [pi/12 = " +
                           std::to_string(cone) + ", pi/4 = " + std::to_string(cylinder) +
                           "]");
    const double c = 1.0 - 12.0 * gamma0 / kPi;
    return 0.5 * (-1.0 + std::sqrt(1.0 - 4.0 * c));
}

double taper(double lambda, double d_ft, double h_ft) {
    if (!(h_ft > 0.0)) throw NumericError("taper requires positive height");
    return (lambda - 1.0) * d_ft / h_ft;
}

TaperEstimate estimate_taper(double gamma0, double d_ft, double h_ft) {
    TaperEstimate t;
    t.lambda_hat = lambda_from_gamma(gamma0);
    t.reference_d_ft = d_ft;
    t.reference_h_ft = h_ft;
    t.taper_value = taper(t.lambda_hat, d_ft, h_ft);
    return t;
}

double honer_volume(double d_in, double h_ft, const HonerParams& p) {
    if (!(h_ft > 0.0)) throw NumericError("Honer volume requires positive height");
    const double denom = p.c1 + p.c2 / h_ft;
    if (!(denom > 0.0))
        throw NumericError("Honer denominator c1 + c2/h must be positive, got " +
                           std::to_string(denom));
    return d_in * d_in / denom;
}

double smalian_volume(const LogSegment& seg) {
    if (!(seg.d_small_ft > 0.0) || !(seg.d_large_ft >= seg.d_small_ft))
        throw NumericError("log segment needs 0 < small-end diameter <= large-end diameter");
    if (!(seg.length_ft > 0.0)) throw NumericError("log segment needs positive length");
    return kPi / 8.0 *
           (seg.d_small_ft * seg.d_small_ft + seg.d_large_ft * seg.d_large_ft) *
           seg.length_ft;
}

double stem_volume(const std::vector<LogSegment>& segments) {
    if (segments.empty()) throw NumericError("stem_volume requires at least one log");
    double total = 0.0;
    for (const LogSegment& seg : segments) total += smalian_volume(seg);
    return total;
}

double toilet_roll_length(double outer_d, double core_d, double thickness) {
    if (!(core_d > 0.0) || outer_d < core_d)
        throw NumericError("roll requires outer diameter >= core diameter > 0");
    if (!(thickness > 0.0)) throw NumericError("roll requires positive paper thickness");
    return kPi / 4.0 * (outer_d * outer_d - core_d * core_d) / thickness;
}

double meyer_cubic_volume(double d_ft, double k, double b) {
    if (!(d_ft > 0.0)) throw NumericError("diameter-only model requires positive diameter");
    return k * std::pow(d_ft, b);
}

}  // namespace mensura
