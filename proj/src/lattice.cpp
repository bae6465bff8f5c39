#include "adjlab/lattice.hpp"

#include <algorithm>
#include <cctype>

namespace adjlab {

Int int_from_string(const std::string& text)
{
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) throw std::invalid_argument("bare sign is not an integer");
    for (std::size_t i = start; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("bad integer literal: " + text);
    return Int(text);
}

IntMat IntMat::identity(std::size_t n)
{
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::operator*(const IntMat& rhs) const
{
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntMat out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

void IntMat::swap_rows(std::size_t i, std::size_t j)
{
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMat::swap_cols(std::size_t i, std::size_t j)
{
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMat::add_row(std::size_t i, std::size_t j, const Int& factor)
{
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) += factor * at(j, k);
}

void IntMat::add_col(std::size_t i, std::size_t j, const Int& factor)
{
    for (std::size_t k = 0; k < rows_; ++k) at(k, i) += factor * at(k, j);
}

void IntMat::negate_row(std::size_t i)
{
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

bool HClass::is_zero() const
{
    auto zero = [](const Int& x) { return x == 0; };
    return std::all_of(coords.begin(), coords.end(), zero) &&
           std::all_of(torsion.begin(), torsion.end(), zero);
}

Lattice::Lattice(int rank, std::vector<Int> torsion_coefficients, IntMat form)
    : rank_(rank), torsion_(std::move(torsion_coefficients)), form_(std::move(form))
{
    if (rank < 0) throw std::invalid_argument("lattice rank must be non-negative");
    if (form_.rows() != static_cast<std::size_t>(rank) ||
        form_.cols() != static_cast<std::size_t>(rank))
        throw std::invalid_argument("form dimensions must equal the lattice rank");
    for (std::size_t i = 0; i < form_.rows(); ++i)
        for (std::size_t j = i + 1; j < form_.cols(); ++j)
            if (form_.at(i, j) != form_.at(j, i))
                throw std::invalid_argument("intersection form must be symmetric");
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        if (torsion_[i] <= 1)
            throw std::invalid_argument("torsion coefficients must be > 1");
        if (i + 1 < torsion_.size() && torsion_[i + 1] % torsion_[i] != 0)
            throw std::invalid_argument("torsion coefficients must divide in order");
    }
}

Lattice::Lattice(int rank) : Lattice(rank, {}, IntMat(rank, rank)) {}

HClass Lattice::make_class(std::vector<Int> coords, std::vector<Int> torsion) const
{
    if (coords.size() != static_cast<std::size_t>(rank_))
        throw std::invalid_argument("class coordinate length must equal the lattice rank");
    if (torsion.empty()) torsion.assign(torsion_.size(), Int(0));
    if (torsion.size() != torsion_.size())
        throw std::invalid_argument("torsion part length must match the torsion coefficients");
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        torsion[i] %= torsion_[i];
        if (torsion[i] < 0) torsion[i] += torsion_[i];
    }
    return HClass{std::move(coords), std::move(torsion)};
}

HClass Lattice::zero_class() const
{
    return HClass{std::vector<Int>(rank_), std::vector<Int>(torsion_.size())};
}

bool Lattice::contains(const HClass& v) const
{
    return v.coords.size() == static_cast<std::size_t>(rank_) &&
           v.torsion.size() == torsion_.size();
}

void Lattice::require_contains(const HClass& v, const char* who) const
{
    if (!contains(v))
        throw std::invalid_argument(std::string(who) + ": class does not belong to this lattice");
}

HClass Lattice::negate(const HClass& v) const
{
    require_contains(v, "negate");
    HClass out = v;
    for (auto& c : out.coords) c = -c;
    for (std::size_t i = 0; i < out.torsion.size(); ++i)
        if (out.torsion[i] != 0) out.torsion[i] = torsion_[i] - out.torsion[i];
    return out;
}

HClass Lattice::canonical_rep(const HClass& v) const
{
    HClass neg = negate(v);
    return neg < v ? neg : v;
}

HClass Lattice::add(const HClass& a, const HClass& b) const
{
    require_contains(a, "add");
    require_contains(b, "add");
    HClass out = a;
    for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
    for (std::size_t i = 0; i < out.torsion.size(); ++i) {
        out.torsion[i] = (out.torsion[i] + b.torsion[i]) % torsion_[i];
    }
    return out;
}

HClass Lattice::scale(const Int& n, const HClass& v) const
{
    require_contains(v, "scale");
    HClass out = v;
    for (auto& c : out.coords) c *= n;
    for (std::size_t i = 0; i < out.torsion.size(); ++i) {
        out.torsion[i] = (out.torsion[i] * n) % torsion_[i];
        if (out.torsion[i] < 0) out.torsion[i] += torsion_[i];
    }
    return out;
}

Int Lattice::pair(const HClass& a, const HClass& b) const
{
    require_contains(a, "pair");
    require_contains(b, "pair");
    Int total = 0;
    for (int i = 0; i < rank_; ++i) {
        if (a.coords[i] == 0) continue;
        Int row = 0;
        for (int j = 0; j < rank_; ++j)
            if (b.coords[j] != 0) row += form_.at(i, j) * b.coords[j];
        total += a.coords[i] * row;
    }
    return total;
}

bool Lattice::is_rational_basis(std::span<const HClass> classes) const
{
    for (const auto& v : classes) require_contains(v, "is_rational_basis");
    if (rank_ == 0) return classes.empty();
    if (classes.size() != static_cast<std::size_t>(rank_)) return false;
    return rank_of(classes) == rank_;
}

Lattice Lattice::direct_sum(const Lattice& other) const
{
    IntMat form(rank_ + other.rank_, rank_ + other.rank_);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) form.at(i, j) = form_.at(i, j);
    for (int i = 0; i < other.rank_; ++i)
        for (int j = 0; j < other.rank_; ++j)
            form.at(rank_ + i, rank_ + j) = other.form_.at(i, j);
    std::vector<Int> torsion = torsion_;
    torsion.insert(torsion.end(), other.torsion_.begin(), other.torsion_.end());
    return Lattice(rank_ + other.rank_, normalize_invariant_factors(std::move(torsion)),
                   std::move(form));
}

Int divisibility(const HClass& a)
{
    Int g = 0;
    for (const auto& c : a.coords) g = gcd_int(g, c);
    return g;
}

bool is_primitive(const HClass& a) { return divisibility(a) == 1; }

namespace {

// Fraction-free Gaussian elimination. Returns the rank; if det_out is given
// the matrix must be square and the signed determinant is written there.
int bareiss(std::vector<std::vector<Int>>& m, Int* det_out)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    Int prev_pivot = 1;
    int sign = 1;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t p = pivot_row;
        while (p < rows && m[p][col] == 0) ++p;
        if (p == rows) continue;
        if (p != pivot_row) {
            std::swap(m[p], m[pivot_row]);
            sign = -sign;
        }
        const Int pivot = m[pivot_row][col];
        for (std::size_t i = pivot_row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = (m[i][j] * pivot - m[i][col] * m[pivot_row][j]) / prev_pivot;
            m[i][col] = 0;
        }
        prev_pivot = pivot;
        ++pivot_row;
    }
    if (det_out) {
        if (rows != cols) throw std::invalid_argument("determinant needs a square matrix");
        if (pivot_row < rows)
            *det_out = 0;
        else
            *det_out = sign > 0 ? prev_pivot : Int(-prev_pivot);
    }
    return static_cast<int>(pivot_row);
}

} // namespace

int rank_of(std::span<const HClass> classes)
{
    if (classes.empty()) return 0;
    const std::size_t len = classes[0].coords.size();
    std::vector<std::vector<Int>> m;
    m.reserve(classes.size());
    for (const auto& v : classes) {
        if (v.coords.size() != len)
            throw std::invalid_argument("rank_of: classes from different lattices");
        m.push_back(v.coords);
    }
    return bareiss(m, nullptr);
}

Int determinant(const IntMat& mat)
{
    std::vector<std::vector<Int>> m(mat.rows(), std::vector<Int>(mat.cols()));
    for (std::size_t i = 0; i < mat.rows(); ++i)
        for (std::size_t j = 0; j < mat.cols(); ++j) m[i][j] = mat.at(i, j);
    Int det;
    bareiss(m, &det);
    return det;
}

std::vector<Int> SmithNormalForm::diagonal() const
{
    std::vector<Int> out;
    const std::size_t n = std::min(d.rows(), d.cols());
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(d.at(i, i));
    return out;
}

namespace {

bool is_isolated(const IntMat& d, std::size_t t)
{
    for (std::size_t i = t + 1; i < d.rows(); ++i)
        if (d.at(i, t) != 0) return false;
    for (std::size_t j = t + 1; j < d.cols(); ++j)
        if (d.at(t, j) != 0) return false;
    return true;
}

bool find_min_nonzero(const IntMat& d, std::size_t t, std::size_t& ri, std::size_t& rj)
{
    bool found = false;
    Int best;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d.at(i, j) == 0) continue;
            Int a = abs_int(d.at(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                ri = i;
                rj = j;
            }
        }
    return found;
}

} // namespace

SmithNormalForm smith_normal_form(const IntMat& m)
{
    SmithNormalForm out;
    out.d = m;
    out.left = IntMat::identity(m.rows());
    out.right = IntMat::identity(m.cols());
    IntMat& d = out.d;

    const std::size_t steps = std::min(m.rows(), m.cols());
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            if (!is_isolated(d, t) || d.at(t, t) == 0) {
                std::size_t ri, rj;
                if (!find_min_nonzero(d, t, ri, rj)) break; // remaining block is zero
                d.swap_rows(t, ri);
                out.left.swap_rows(t, ri);
                d.swap_cols(t, rj);
                out.right.swap_cols(t, rj);

                for (std::size_t i = t + 1; i < d.rows(); ++i)
                    if (d.at(i, t) != 0) {
                        Int q = d.at(i, t) / d.at(t, t);
                        d.add_row(i, t, -q);
                        out.left.add_row(i, t, -q);
                    }
                for (std::size_t j = t + 1; j < d.cols(); ++j)
                    if (d.at(t, j) != 0) {
                        Int q = d.at(t, j) / d.at(t, t);
                        d.add_col(j, t, -q);
                        out.right.add_col(j, t, -q);
                    }
                continue;
            }
            // Pivot isolated and nonzero: enforce the divisibility chain by
            // dragging any non-divisible entry into row t and reducing again.
            bool dragged = false;
            for (std::size_t i = t + 1; i < d.rows() && !dragged; ++i)
                for (std::size_t j = t + 1; j < d.cols(); ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        d.add_row(t, i, 1);
                        out.left.add_row(t, i, 1);
                        dragged = true;
                        break;
                    }
            if (!dragged) break;
        }
        if (d.at(t, t) < 0) {
            d.negate_row(t);
            out.left.negate_row(t);
        }
    }

    if (!(out.left * m * out.right == d))
        throw std::logic_error("smith_normal_form: transform verification failed");
    return out;
}

std::vector<Int> normalize_invariant_factors(std::vector<Int> factors)
{
    if (factors.empty()) return factors;
    IntMat diag(factors.size(), factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) diag.at(i, i) = factors[i];
    auto snf = smith_normal_form(diag);
    std::vector<Int> out;
    for (const auto& d : snf.diagonal())
        if (d > 1) out.push_back(d);
    return out;
}

} // namespace adjlab
