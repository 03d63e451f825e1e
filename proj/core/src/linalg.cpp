#include "cobcalc/linalg.hpp"

#include <stdexcept>

namespace cobcalc {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rational(0)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<Rational> RationalMatrix::row(int r) const {
    return std::vector<Rational>(a_.begin() + static_cast<size_t>(r) * cols_,
                                 a_.begin() + static_cast<size_t>(r + 1) * cols_);
}

void RationalMatrix::set_row(int r, const std::vector<Rational>& v) {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("row length mismatch");
    for (int c = 0; c < cols_; ++c) at(r, c) = v[c];
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    RationalMatrix p(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const Rational& x = at(r, k);
            if (x == 0) continue;
            for (int c = 0; c < o.cols_; ++c) p.at(r, c) += x * o.at(k, c);
        }
    return p;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<Rational> out(rows_, Rational(0));
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (at(r, c) != 0) out[r] += at(r, c) * v[c];
    return out;
}

RationalMatrix rref(const RationalMatrix& m, std::vector<int>* pivot_cols) {
    RationalMatrix a = m;
    int lead = 0;
    for (int c = 0; c < a.cols() && lead < a.rows(); ++c) {
        int pivot = -1;
        for (int r = lead; r < a.rows(); ++r)
            if (a.at(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != lead)
            for (int k = 0; k < a.cols(); ++k) swap(a.at(pivot, k), a.at(lead, k));
        Rational inv = 1 / a.at(lead, c);
        for (int k = c; k < a.cols(); ++k) a.at(lead, k) *= inv;
        for (int r = 0; r < a.rows(); ++r) {
            if (r == lead || a.at(r, c) == 0) continue;
            Rational f = a.at(r, c);
            for (int k = c; k < a.cols(); ++k) a.at(r, k) -= f * a.at(lead, k);
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++lead;
    }
    return a;
}

int rank(const RationalMatrix& m) {
    std::vector<int> pivots;
    rref(m, &pivots);
    return static_cast<int>(pivots.size());
}

bool invertible(const RationalMatrix& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

RationalMatrix inverse(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::domain_error("inverse of non-square matrix");
    int n = m.rows();
    RationalMatrix aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = 1;
    }
    std::vector<int> pivots;
    RationalMatrix red = rref(aug, &pivots);
    if (static_cast<int>(pivots.size()) != n || pivots.back() >= n)
        throw std::domain_error("matrix is singular");
    RationalMatrix inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv.at(r, c) = red.at(r, n + c);
    return inv;
}

RationalMatrix kernel_basis(const RationalMatrix& m) {
    std::vector<int> pivots;
    RationalMatrix red = rref(m, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    RationalMatrix basis(static_cast<int>(free_cols.size()), m.cols());
    for (size_t i = 0; i < free_cols.size(); ++i) {
        int fc = free_cols[i];
        basis.at(static_cast<int>(i), fc) = 1;
        for (size_t p = 0; p < pivots.size(); ++p)
            basis.at(static_cast<int>(i), pivots[p]) = -red.at(static_cast<int>(p), fc);
    }
    // canonicalize so subspace comparisons are immediate
    return rref(basis);
}

Subspace::Subspace(int ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span(int ambient_dim, const std::vector<std::vector<Rational>>& vectors) {
    RationalMatrix m(static_cast<int>(vectors.size()), ambient_dim);
    for (size_t i = 0; i < vectors.size(); ++i) m.set_row(static_cast<int>(i), vectors[i]);
    return from_rows(m);
}

Subspace Subspace::from_rows(const RationalMatrix& rows) {
    RationalMatrix red = rref(rows);
    int nonzero = 0;
    for (int r = 0; r < red.rows(); ++r) {
        bool all_zero = true;
        for (int c = 0; c < red.cols(); ++c)
            if (red.at(r, c) != 0) {
                all_zero = false;
                break;
            }
        if (!all_zero) ++nonzero;
    }
    Subspace s(rows.cols());
    RationalMatrix basis(nonzero, rows.cols());
    for (int r = 0; r < nonzero; ++r)
        for (int c = 0; c < rows.cols(); ++c) basis.at(r, c) = red.at(r, c);
    s.basis_ = std::move(basis);
    return s;
}

bool Subspace::contains(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("ambient mismatch");
    // reduce v against the RREF basis
    std::vector<Rational> w = v;
    for (int r = 0; r < basis_.rows(); ++r) {
        int lead = -1;
        for (int c = 0; c < ambient_; ++c)
            if (basis_.at(r, c) != 0) {
                lead = c;
                break;
            }
        if (lead < 0) continue;
        if (w[lead] == 0) continue;
        Rational f = w[lead];
        for (int c = 0; c < ambient_; ++c) w[c] -= f * basis_.at(r, c);
    }
    for (const Rational& x : w)
        if (x != 0) return false;
    return true;
}

std::optional<std::vector<Rational>> express_in_span(
    const std::vector<std::vector<Rational>>& span_vecs, const std::vector<Rational>& target) {
    int k = static_cast<int>(span_vecs.size());
    int n = static_cast<int>(target.size());
    // columns are the spanning vectors, last column is the target
    RationalMatrix aug(n, k + 1);
    for (int j = 0; j < k; ++j) {
        if (static_cast<int>(span_vecs[j].size()) != n)
            throw std::invalid_argument("span vector length mismatch");
        for (int i = 0; i < n; ++i) aug.at(i, j) = span_vecs[j][i];
    }
    for (int i = 0; i < n; ++i) aug.at(i, k) = target[i];

    std::vector<int> pivots;
    RationalMatrix red = rref(aug, &pivots);
    for (int c : pivots)
        if (c == k) return std::nullopt;  // inconsistent system

    std::vector<Rational> x(k, Rational(0));
    for (size_t p = 0; p < pivots.size(); ++p) x[pivots[p]] = red.at(static_cast<int>(p), k);
    return x;
}

}  // namespace cobcalc
