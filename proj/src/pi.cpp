#include "mensura/pi.hpp"

#include <numeric>
#include <set>

namespace mensura {

DimensionlessGroup DimensionlessGroup::make(std::string label,
                                            const std::vector<VariableSpec>& vars,
                                            const std::vector<Rational>& exponents) {
    if (vars.size() != exponents.size())
        throw NumericError("group exponent count does not match variable count");
    bool all_zero = true;
    Dimension net;
    DimensionlessGroup g;
    g.label_ = std::move(label);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (!exponents[i].is_zero()) all_zero = false;
        net = net + vars[i].dimension * exponents[i];
        g.terms_.push_back({vars[i].name, vars[i].dimension, exponents[i]});
    }
    if (all_zero) throw NumericError("group '" + g.label_ + "' has all-zero exponents");
    if (!net.dimensionless())
        throw DimensionError("group '" + g.label_ + "' is not dimensionless: net " + net.str());
    return g;
}

const Rational& DimensionlessGroup::exponent_of(const std::string& variable) const {
    for (const Term& t : terms_)
        if (t.variable == variable) return t.exponent;
    throw DataError("group '" + label_ + "' has no variable '" + variable + "'");
}

std::string DimensionlessGroup::str() const {
    std::string out;
    for (const Term& t : terms_) {
        if (t.exponent.is_zero()) continue;
        if (!out.empty()) out += "*";
        out += t.variable;
        if (t.exponent != Rational(1)) out += "^" + t.exponent.str();
    }
    return out.empty() ? "1" : out;
}

RationalMatrix dimension_matrix(const std::vector<VariableSpec>& vars) {
    if (vars.empty()) throw NumericError("dimension_matrix requires at least one variable");
    std::set<std::string> names;
    for (const VariableSpec& v : vars)
        if (!names.insert(v.name).second)
            throw DataError("duplicate variable name '" + v.name + "'");

    std::vector<int> used;
    for (int i = 0; i < kBaseDimCount; ++i) {
        for (const VariableSpec& v : vars) {
            if (!v.dimension.exponent(i).is_zero()) {
                used.push_back(i);
                break;
            }
        }
    }

    RationalMatrix m;
    if (used.empty()) {
        m.emplace_back(vars.size(), Rational(0));
        return m;
    }
    for (int i : used) {
        std::vector<Rational> row;
        row.reserve(vars.size());
        for (const VariableSpec& v : vars) row.push_back(v.dimension.exponent(i));
        m.push_back(std::move(row));
    }
    return m;
}

std::vector<std::vector<Rational>> nullspace_basis(const RationalMatrix& m) {
    if (m.empty()) return {};
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    RationalMatrix a = m;

    // exact reduced row echelon form
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[r], a[pivot]);
        const Rational inv = Rational(1) / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            const Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[f] = Rational(1);
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][f];

        // canonical scaling: integer entries, gcd 1, leading entry positive
        std::int64_t lcm = 1;
        for (const Rational& x : v) lcm = std::lcm(lcm, x.den());
        std::int64_t gcd = 0;
        for (Rational& x : v) {
            x *= Rational(lcm);
            gcd = std::gcd(gcd, x.num() < 0 ? -x.num() : x.num());
        }
        if (gcd > 1)
            for (Rational& x : v) x /= Rational(gcd);
        for (const Rational& x : v) {
            if (x.is_zero()) continue;
            if (x.num() < 0)
                for (Rational& y : v) y = -y;
            break;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

PiBasis pi_basis(std::string label, const std::vector<VariableSpec>& vars) {
    const RationalMatrix m = dimension_matrix(vars);
    const auto kernel = nullspace_basis(m);
    PiBasis b;
    b.label = std::move(label);
    b.variables = vars;
    for (std::size_t i = 0; i < kernel.size(); ++i)
        b.groups.push_back(
            DimensionlessGroup::make("pi" + std::to_string(i + 1), vars, kernel[i]));
    return b;
}

std::array<PiBasis, 4> groups_for_trees() {
    const std::vector<VariableSpec> vars = {
        {"V", Dimension::length(3)},
        {"d", Dimension::length()},
        {"h", Dimension::length()},
    };
    const auto make = [&](std::string label, std::vector<Rational> pi0,
                          std::vector<Rational> pi1) {
        PiBasis b;
        b.label = std::move(label);
        b.variables = vars;
        b.groups.push_back(DimensionlessGroup::make("pi0", vars, pi0));
        b.groups.push_back(DimensionlessGroup::make("pi1", vars, pi1));
        return b;
    };
    return {
        make("a", {1, 0, -3}, {0, 2, -2}),  // V/h^3 vs d^2/h^2
        make("b", {1, 0, -3}, {0, 1, -1}),  // V/h^3 vs d/h
        make("c", {1, -3, 0}, {0, -1, 1}),  // V/d^3 vs h/d
        make("d", {1, -3, 0}, {0, 1, -1}),  // V/d^3 vs d/h
    };
}

const PiBasis& tree_formulation(char which) {
    static const std::array<PiBasis, 4> bases = groups_for_trees();
    if (which < 'a' || which > 'd')
        throw NumericError(std::string("unknown tree formulation '") + which + "'");
    return bases[static_cast<std::size_t>(which - 'a')];
}

double evaluate_group(const DimensionlessGroup& g,
                      const std::map<std::string, Quantity>& values) {
    Quantity product(1.0, Dimension{});
    for (const DimensionlessGroup::Term& t : g.terms()) {
        const auto it = values.find(t.variable);
        if (it == values.end())
            throw DataError("missing value for variable '" + t.variable + "'");
        if (it->second.dimension() != t.dimension)
            throw DimensionError("variable '" + t.variable + "' has dimension " +
                                 it->second.dimension().str() + ", declared " +
                                 t.dimension.str());
        if (t.exponent.is_zero()) continue;
        product = product * it->second.pow(t.exponent);
    }
    return product.value();
}

}  // namespace mensura
