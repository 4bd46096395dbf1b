#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "mensura/units.hpp"

namespace mensura {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct VariableSpec {
    std::string name;
    Dimension dimension;
};

// Monomial exponent vector over the problem variables whose net dimension
// is exactly zero. Terms keep the declared variable dimensions so that
// evaluation can type-check its inputs.
class DimensionlessGroup {
public:
    struct Term {
        std::string variable;
        Dimension dimension;
        Rational exponent;
    };

    // validates: not all exponents zero, net dimension exactly zero
    static DimensionlessGroup make(std::string label, const std::vector<VariableSpec>& vars,
                                   const std::vector<Rational>& exponents);

    const std::string& label() const { return label_; }
    const std::vector<Term>& terms() const { return terms_; }
    const Rational& exponent_of(const std::string& variable) const;

    // "V*h^-3" style, variables in problem order
    std::string str() const;

private:
    std::string label_;
    std::vector<Term> terms_;
};

struct PiBasis {
    std::string label;
    std::vector<VariableSpec> variables;
    std::vector<DimensionlessGroup> groups;  // size = n - rank(dimension matrix)
};

// Rows cover the base dimensions that occur in at least one variable (a
// single zero row when none do); entry (i, j) is the exponent of base
// dimension i in variable j.
RationalMatrix dimension_matrix(const std::vector<VariableSpec>& vars);

// Basis of the kernel of M by exact rational elimination. Each vector is
// scaled to integer entries with gcd 1 and a positive leading entry;
// vectors are ordered by their free column.
std::vector<std::vector<Rational>> nullspace_basis(const RationalMatrix& m);

// dimension_matrix + nullspace_basis packaged as labelled groups pi1..piK
PiBasis pi_basis(std::string label, const std::vector<VariableSpec>& vars);

// The four tree formulations:
//   (a) pi0 = V/h^3, pi1 = d^2/h^2     (b) pi0 = V/h^3, pi1 = d/h
//   (c) pi0 = V/d^3, pi1 = h/d         (d) pi0 = V/d^3, pi1 = d/h
std::array<PiBasis, 4> groups_for_trees();
const PiBasis& tree_formulation(char which);  // 'a'..'d'

// Product of value(v)^exponent(v) in canonical units.
double evaluate_group(const DimensionlessGroup& g, const std::map<std::string, Quantity>& values);

}  // namespace mensura
