#pragma once

#include "adjlab/ints.hpp"

#include <map>
#include <string>
#include <string_view>

namespace adjlab {

/// Symmetric Laurent polynomial in one variable t with integer coefficients,
/// normalized so that evaluation at t = 1 gives +-1. Knot polynomials are
/// inputs here; nothing is computed from diagrams.
class AlexanderPolynomial {
public:
    /// Validates symmetry coeff(j) == coeff(-j) and evaluation +-1 at t = 1.
    static AlexanderPolynomial from_coeffs(std::map<int, Int> coeffs);

    /// Parse terms like "t^2 - t + 1 - t^-1 + t^-2" or "3t^-2". Whitespace
    /// is ignored; repeated exponents accumulate.
    static AlexanderPolynomial parse(std::string_view text);

    /// The constant polynomial 1.
    static AlexanderPolynomial unknot();

    /// The (2, 2g+1) torus knot polynomial, symmetric form of
    /// (t^(2g+1) + 1) / (t + 1): alternating +-1 on exponents -g..g.
    static AlexanderPolynomial torus_knot_2_odd(int g);

    Int coeff(int exponent) const;
    const std::map<int, Int>& coeffs() const { return coeffs_; }

    /// Largest exponent carrying a nonzero coefficient (0 for constants).
    int degree() const;

    bool is_constant_one() const;

    /// Canonical form: descending exponents, e.g. "t^2 - t + 1 - t^-1 + t^-2".
    std::string to_string() const;

    bool operator==(const AlexanderPolynomial& o) const = default;

private:
    AlexanderPolynomial() = default;
    std::map<int, Int> coeffs_; // exponent -> nonzero coefficient
};

/// Degree of the polynomial, exposed as the family-distinguishing quantity.
int alexander_degree(const AlexanderPolynomial& p);

} // namespace adjlab
