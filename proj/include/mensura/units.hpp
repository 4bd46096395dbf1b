#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "mensura/errors.hpp"
#include "mensura/rational.hpp"

namespace mensura {

// Base dimensions, in exponent-vector order.
enum BaseDim : int { Length = 0, Mass = 1, Time = 2, Current = 3 };
inline constexpr int kBaseDimCount = 4;

// Exponent vector over the base dimensions, exact rational entries.
// The zero vector is the unique dimensionless value.
class Dimension {
public:
    Dimension() = default;

    static Dimension base(BaseDim which, Rational exponent = 1) {
        Dimension d;
        d.exp_[which] = exponent;
        return d;
    }
    static Dimension length(Rational e = 1) { return base(BaseDim::Length, e); }

    const Rational& exponent(int i) const { return exp_[static_cast<std::size_t>(i)]; }

    bool dimensionless() const {
        for (const auto& e : exp_)
            if (!e.is_zero()) return false;
        return true;
    }

    // product of quantities adds exponents
    friend Dimension operator+(const Dimension& a, const Dimension& b) {
        Dimension r;
        for (int i = 0; i < kBaseDimCount; ++i) r.exp_[i] = a.exp_[i] + b.exp_[i];
        return r;
    }
    friend Dimension operator-(const Dimension& a, const Dimension& b) {
        Dimension r;
        for (int i = 0; i < kBaseDimCount; ++i) r.exp_[i] = a.exp_[i] - b.exp_[i];
        return r;
    }
    // power by rational scales every exponent
    friend Dimension operator*(const Dimension& a, const Rational& r) {
        Dimension out;
        for (int i = 0; i < kBaseDimCount; ++i) out.exp_[i] = a.exp_[i] * r;
        return out;
    }

    friend bool operator==(const Dimension& a, const Dimension& b) { return a.exp_ == b.exp_; }
    friend bool operator!=(const Dimension& a, const Dimension& b) { return !(a == b); }

    // e.g. "L^3", "L*T^-2", "1" when dimensionless
    std::string str() const;

private:
    std::array<Rational, kBaseDimCount> exp_{};
};

// A named unit with an exact rational scale to the canonical unit of its
// dimension. Canonical length unit is the foot; mass kg, time s, current A.
struct Unit {
    std::string name;  // canonical grammar text; reparses to the same unit
    Dimension dimension;
    Rational scale_to_canonical;  // > 0
};

// A real value carrying a dimension, always in canonical units.
class Quantity {
public:
    Quantity() : value_(0.0) {}
    Quantity(double value, Dimension dim) : value_(value), dim_(std::move(dim)) {}

    double value() const { return value_; }
    const Dimension& dimension() const { return dim_; }

    friend Quantity operator*(const Quantity& a, const Quantity& b) {
        return Quantity(a.value_ * b.value_, a.dim_ + b.dim_);
    }
    friend Quantity operator/(const Quantity& a, const Quantity& b) {
        return Quantity(a.value_ / b.value_, a.dim_ - b.dim_);
    }
    friend Quantity operator+(const Quantity& a, const Quantity& b) {
        if (a.dim_ != b.dim_) throw DimensionError("cannot add quantities of unequal dimension");
        return Quantity(a.value_ + b.value_, a.dim_);
    }
    friend Quantity operator-(const Quantity& a, const Quantity& b) {
        if (a.dim_ != b.dim_)
            throw DimensionError("cannot subtract quantities of unequal dimension");
        return Quantity(a.value_ - b.value_, a.dim_);
    }

    // power by exact rational; non-positive base requires an integer exponent
    Quantity pow(const Rational& r) const;

private:
    double value_;
    Dimension dim_;
};

// A value expressed in a declared unit (not yet canonical).
struct Measurement {
    double value;
    Unit unit;
};

// Fixed vocabulary: ft, in, m, cm, ft3, m3, kg, s, A.
const std::vector<Unit>& unit_table();
const Unit& lookup_unit(std::string_view name);  // throws ParseError(UnknownToken)

// Grammar:  expr := term (('*'|'/') term)* ;  term := ident ('^' int)?
// Errors carry the byte offset of the offending token.
Unit parse_unit_expr(std::string_view text);

// Same grammar over base-dimension tokens {L, M, T, A}; '1' is the
// dimensionless term. Used by variable specs such as "V:L^3".
Dimension parse_dimension_expr(std::string_view text);

// value scaled by the exact ratio of rational scale factors
double convert(double value, const Unit& from, const Unit& to);
Measurement convert(const Measurement& m, const Unit& to);

Quantity to_quantity(const Measurement& m);

}  // namespace mensura
