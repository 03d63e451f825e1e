#ifndef COBCALC_LINALG_HPP
#define COBCALC_LINALG_HPP

#include <optional>
#include <vector>

#include "cobcalc/rational.hpp"

namespace cobcalc {

/// Dense matrix over the rationals, row-major. Everything here is exact:
/// no pivoting heuristics, no tolerances.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols);

    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    std::vector<Rational> row(int r) const;
    void set_row(int r, const std::vector<Rational>& v);

    RationalMatrix transposed() const;
    RationalMatrix operator*(const RationalMatrix& o) const;
    bool operator==(const RationalMatrix& o) const = default;

    /// Matrix-vector product M v.
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

/// Reduced row echelon form (unique). Pivot column indices are appended
/// to *pivot_cols when given.
RationalMatrix rref(const RationalMatrix& m, std::vector<int>* pivot_cols = nullptr);

int rank(const RationalMatrix& m);
bool invertible(const RationalMatrix& m);

/// Inverse of a square matrix; throws std::domain_error if singular.
RationalMatrix inverse(const RationalMatrix& m);

/// Basis of the right kernel {v : Mv = 0}, one basis vector per row.
/// Rows are returned in RREF canonical form.
RationalMatrix kernel_basis(const RationalMatrix& m);

/// Linear subspace of Q^ambient held as a canonical (RREF) basis, so
/// equality of subspaces is decidable by exact comparison.
class Subspace {
public:
    explicit Subspace(int ambient_dim = 0);

    static Subspace span(int ambient_dim, const std::vector<std::vector<Rational>>& vectors);
    static Subspace from_rows(const RationalMatrix& rows);

    int dim() const { return basis_.rows(); }
    int ambient_dim() const { return ambient_; }
    const RationalMatrix& basis() const { return basis_; }

    bool contains(const std::vector<Rational>& v) const;
    bool operator==(const Subspace& o) const = default;

private:
    int ambient_ = 0;
    RationalMatrix basis_;  // RREF, no zero rows
};

/// Coefficients x with sum_i x_i * span_vecs[i] == target, if target lies
/// in the span (free coordinates set to zero).
std::optional<std::vector<Rational>> express_in_span(
    const std::vector<std::vector<Rational>>& span_vecs, const std::vector<Rational>& target);

}  // namespace cobcalc

#endif
