#pragma once

#include "adjlab/ints.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace adjlab {

/// Dense integer matrix, row-major. Just enough linear algebra for
/// intersection forms, Smith reduction and exact rank computations.
class IntMat {
public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMat operator*(const IntMat& rhs) const;
    bool operator==(const IntMat& rhs) const = default;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    /// row[i] += factor * row[j]
    void add_row(std::size_t i, std::size_t j, const Int& factor);
    /// col[i] += factor * col[j]
    void add_col(std::size_t i, std::size_t j, const Int& factor);
    void negate_row(std::size_t i);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

/// An element of a finitely generated abelian group: integer coordinates on
/// the free part plus a torsion part reduced modulo the invariant factors.
struct HClass {
    std::vector<Int> coords;
    std::vector<Int> torsion;

    bool is_zero() const;
    bool operator==(const HClass& o) const = default;
    bool operator<(const HClass& o) const
    {
        if (coords != o.coords) return coords < o.coords;
        return torsion < o.torsion;
    }
};

/// Finitely generated abelian group with a symmetric integer pairing on the
/// free part. The free rank models b2; torsion coefficients are stored in
/// invariant-factor normal form (each > 1, each dividing the next).
class Lattice {
public:
    Lattice(int rank, std::vector<Int> torsion_coefficients, IntMat form);

    /// Free lattice of the given rank with the zero form.
    explicit Lattice(int rank);

    int rank() const { return rank_; }
    const std::vector<Int>& torsion_coefficients() const { return torsion_; }
    const IntMat& form() const { return form_; }

    bool operator==(const Lattice& o) const = default;

    /// Build a class in this lattice. Torsion entries are reduced into
    /// [0, tau_i); an empty torsion vector means zero torsion part.
    HClass make_class(std::vector<Int> coords, std::vector<Int> torsion = {}) const;
    HClass zero_class() const;

    /// Shape check: does the class have this lattice's dimensions?
    bool contains(const HClass& v) const;

    HClass negate(const HClass& v) const;
    /// Deterministic representative of {v, -v} (the lex-smaller one).
    HClass canonical_rep(const HClass& v) const;
    HClass add(const HClass& a, const HClass& b) const;
    HClass scale(const Int& n, const HClass& v) const;

    /// Symmetric pairing coords(a)^T * form * coords(b). Torsion contributes 0.
    Int pair(const HClass& a, const HClass& b) const;

    /// True iff the set has exactly `rank` elements of full rational rank.
    /// The empty set is the rational basis of a rank-0 lattice.
    bool is_rational_basis(std::span<const HClass> classes) const;

    /// Block sum: ranks add, forms go block-diagonal, torsion lists are
    /// merged and renormalized into invariant-factor form.
    Lattice direct_sum(const Lattice& other) const;

private:
    void require_contains(const HClass& v, const char* who) const;

    int rank_ = 0;
    std::vector<Int> torsion_;
    IntMat form_;
};

/// Largest n with alpha = n * alpha' over the free part: gcd of the
/// coordinates, and 0 for the zero or torsion classes.
Int divisibility(const HClass& a);

bool is_primitive(const HClass& a);

/// Rank over Q of the coordinate vectors, by fraction-free (Bareiss)
/// elimination. Throws if the classes do not share one coordinate length.
int rank_of(std::span<const HClass> classes);

/// Exact determinant of a square integer matrix (Bareiss).
Int determinant(const IntMat& m);

struct SmithNormalForm {
    IntMat d;     ///< diagonal, d_i >= 0, d_i | d_{i+1}
    IntMat left;  ///< unimodular
    IntMat right; ///< unimodular, left * m * right == d
    std::vector<Int> diagonal() const;
};

/// Smith decomposition d = left * m * right. The transforms are re-multiplied
/// against the input before returning; a mismatch throws std::logic_error.
SmithNormalForm smith_normal_form(const IntMat& m);

/// Renormalize a list of torsion coefficients into invariant-factor form
/// (each > 1, dividing the next), preserving the group they present.
std::vector<Int> normalize_invariant_factors(std::vector<Int> factors);

} // namespace adjlab
