#include "mensura/units.hpp"

#include <cctype>
#include <cmath>
#include <utility>

namespace mensura {

std::string Dimension::str() const {
    static constexpr const char* kNames[kBaseDimCount] = {"L", "M", "T", "A"};
    std::string out;
    for (int i = 0; i < kBaseDimCount; ++i) {
        const Rational& e = exp_[static_cast<std::size_t>(i)];
        if (e.is_zero()) continue;
        if (!out.empty()) out += "*";
        out += kNames[i];
        if (e != Rational(1)) out += "^" + e.str();
    }
    return out.empty() ? "1" : out;
}

Quantity Quantity::pow(const Rational& r) const {
    double v;
    if (r.is_integer()) {
        v = std::pow(value_, static_cast<double>(r.num()));
    } else {
        if (value_ <= 0.0)
            throw NumericError("non-positive base raised to non-integer exponent " + r.str());
        v = std::pow(value_, r.to_double());
    }
    return Quantity(v, dim_ * r);
}

const std::vector<Unit>& unit_table() {
    // 1 in = 1/12 ft; 1 m = 1/0.3048 ft = 1250/381 ft exactly.
    static const std::vector<Unit> table = [] {
        const Dimension L = Dimension::length();
        const Dimension L3 = Dimension::length(3);
        const Rational m_to_ft(1250, 381);
        std::vector<Unit> t;
        t.push_back({"ft", L, Rational(1)});
        t.push_back({"in", L, Rational(1, 12)});
        t.push_back({"m", L, m_to_ft});
        t.push_back({"cm", L, m_to_ft / Rational(100)});
        t.push_back({"ft3", L3, Rational(1)});
        t.push_back({"m3", L3, m_to_ft.pow(3)});
        t.push_back({"kg", Dimension::base(BaseDim::Mass), Rational(1)});
        t.push_back({"s", Dimension::base(BaseDim::Time), Rational(1)});
        t.push_back({"A", Dimension::base(BaseDim::Current), Rational(1)});
        return t;
    }();
    return table;
}

const Unit& lookup_unit(std::string_view name) {
    for (const Unit& u : unit_table())
        if (u.name == name) return u;
    throw ParseError(ParseError::Kind::UnknownToken, 0,
                     "unknown unit '" + std::string(name) + "'");
}

namespace {

struct Factor {
    const Unit* unit;
    std::int64_t exponent;
};

// Canonical text for a token factorization: positive powers joined by '*',
// negatives appended as '/tok^|e|'; empty product prints as "ft^0".
std::string render_factors(const std::vector<Factor>& factors) {
    std::string pos, neg;
    for (const Factor& f : factors) {
        if (f.exponent == 0) continue;
        std::string part = f.unit->name;
        const std::int64_t mag = f.exponent < 0 ? -f.exponent : f.exponent;
        if (mag != 1) part += "^" + std::to_string(mag);
        if (f.exponent > 0) {
            if (!pos.empty()) pos += "*";
            pos += part;
        } else {
            neg += "/" + part;
        }
    }
    if (pos.empty() && neg.empty()) return "ft^0";
    if (pos.empty()) pos = "ft^0";
    return pos + neg;
}

}  // namespace

Unit parse_unit_expr(std::string_view text) {
    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };

    skip_ws();
    if (i == text.size())
        throw ParseError(ParseError::Kind::EmptyInput, 0, "empty unit expression");

    std::vector<Factor> factors;
    const auto add_factor = [&](const Unit* u, std::int64_t e) {
        for (Factor& f : factors) {
            if (f.unit == u) {
                f.exponent += e;
                return;
            }
        }
        factors.push_back({u, e});
    };

    std::int64_t sign = 1;  // flips after each '/'
    for (;;) {
        skip_ws();
        const std::size_t tok_start = i;
        while (i < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[i])))) ++i;
        if (i == tok_start)
            throw ParseError(ParseError::Kind::UnexpectedCharacter, tok_start,
                             i < text.size()
                                 ? std::string("expected unit name at '") + text[i] + "'"
                                 : "expected unit name at end of input");
        const std::string ident(text.substr(tok_start, i - tok_start));

        const Unit* unit = nullptr;
        for (const Unit& u : unit_table())
            if (u.name == ident) { unit = &u; break; }
        if (!unit)
            throw ParseError(ParseError::Kind::UnknownToken, tok_start,
                             "unknown unit '" + ident + "'");

        std::int64_t exponent = 1;
        skip_ws();
        if (i < text.size() && text[i] == '^') {
            ++i;
            skip_ws();
            const std::size_t exp_start = i;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
            const std::size_t digits_start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == digits_start)
                throw ParseError(ParseError::Kind::MalformedExponent, exp_start,
                                 "malformed exponent after '^'");
            exponent = std::stoll(std::string(text.substr(exp_start, i - exp_start)));
        }
        add_factor(unit, sign * exponent);

        skip_ws();
        if (i == text.size()) break;
        if (text[i] == '*') {
            sign = 1;
            ++i;
        } else if (text[i] == '/') {
            sign = -1;
            ++i;
        } else {
            throw ParseError(ParseError::Kind::UnexpectedCharacter, i,
                             std::string("expected '*' or '/' at '") + text[i] + "'");
        }
    }

    Dimension dim;
    Rational scale(1);
    for (const Factor& f : factors) {
        dim = dim + f.unit->dimension * Rational(f.exponent);
        scale *= f.unit->scale_to_canonical.pow(f.exponent);
    }
    return Unit{render_factors(factors), dim, scale};
}

Dimension parse_dimension_expr(std::string_view text) {
    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };

    skip_ws();
    if (i == text.size())
        throw ParseError(ParseError::Kind::EmptyInput, 0, "empty dimension expression");

    Dimension dim;
    std::int64_t sign = 1;
    for (;;) {
        skip_ws();
        const std::size_t tok_start = i;
        while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
        if (i == tok_start)
            throw ParseError(ParseError::Kind::UnexpectedCharacter, tok_start,
                             i < text.size()
                                 ? std::string("expected dimension name at '") + text[i] + "'"
                                 : "expected dimension name at end of input");
        const std::string ident(text.substr(tok_start, i - tok_start));

        bool dimensionless_token = false;
        BaseDim which = BaseDim::Length;
        if (ident == "L") which = BaseDim::Length;
        else if (ident == "M") which = BaseDim::Mass;
        else if (ident == "T") which = BaseDim::Time;
        else if (ident == "A") which = BaseDim::Current;
        else if (ident == "1") dimensionless_token = true;
        else
            throw ParseError(ParseError::Kind::UnknownToken, tok_start,
                             "unknown base dimension '" + ident + "'");

        std::int64_t exponent = 1;
        skip_ws();
        if (i < text.size() && text[i] == '^') {
            ++i;
            skip_ws();
            const std::size_t exp_start = i;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
            const std::size_t digits_start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == digits_start)
                throw ParseError(ParseError::Kind::MalformedExponent, exp_start,
                                 "malformed exponent after '^'");
            exponent = std::stoll(std::string(text.substr(exp_start, i - exp_start)));
        }
        if (!dimensionless_token)
            dim = dim + Dimension::base(which, Rational(sign * exponent));

        skip_ws();
        if (i == text.size()) break;
        if (text[i] == '*') {
            sign = 1;
            ++i;
        } else if (text[i] == '/') {
            sign = -1;
            ++i;
        } else {
            throw ParseError(ParseError::Kind::UnexpectedCharacter, i,
                             std::string("expected '*' or '/' at '") + text[i] + "'");
        }
    }
    return dim;
}

double convert(double value, const Unit& from, const Unit& to) {
    if (from.dimension != to.dimension)
        throw DimensionError("cannot convert " + from.name + " (" + from.dimension.str() +
                             ") to " + to.name + " (" + to.dimension.str() + ")");
    return value * (from.scale_to_canonical / to.scale_to_canonical).to_double();
}

Measurement convert(const Measurement& m, const Unit& to) {
    return Measurement{convert(m.value, m.unit, to), to};
}

Quantity to_quantity(const Measurement& m) {
    return Quantity(m.value * m.unit.scale_to_canonical.to_double(), m.unit.dimension);
}

}  // namespace mensura
