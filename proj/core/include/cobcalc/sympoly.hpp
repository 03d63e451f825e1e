#ifndef COBCALC_SYMPOLY_HPP
#define COBCALC_SYMPOLY_HPP

#include <map>

#include "cobcalc/linalg.hpp"
#include "cobcalc/partition.hpp"
#include "cobcalc/rational.hpp"

namespace cobcalc {

enum class SymBasis { elementary, monomial };

/// Homogeneous symmetric function of fixed degree, held as coefficients
/// over partitions of that degree in either the elementary basis
/// (key lambda means e_{lambda_1} * e_{lambda_2} * ...) or the monomial
/// basis (key lambda means m_lambda). Zero coefficients are not stored.
struct SymPoly {
    int degree = 0;
    SymBasis basis = SymBasis::elementary;
    std::map<Partition, Rational, PartitionOrder> coeffs;

    void add_term(const Partition& p, const Rational& c);
    Rational coeff(const Partition& p) const;
    bool operator==(const SymPoly&) const = default;
};

/// Transition matrix from the elementary to the monomial basis in degree n:
/// entry (lambda, mu) is the coefficient of m_mu in e_lambda, rows and
/// columns indexed by enumerate_partitions(n). Computed by expanding the
/// products of elementary symmetric polynomials in exactly n variables.
/// Memoized; safe for concurrent use.
const RationalMatrix& e_to_m_matrix(int n);

/// Exact inverse of e_to_m_matrix(n), memoized.
const RationalMatrix& m_to_e_matrix(int n);

/// Power sum p_k = sum_i x_i^k written in the elementary basis via
/// Newton's identities: p_k = e_1 p_{k-1} - e_2 p_{k-2} + ... -(-1)^k k e_k.
SymPoly power_sum_in_e(int k);

SymPoly to_monomial_basis(const SymPoly& f);
SymPoly to_elementary_basis(const SymPoly& f);

/// Product in the elementary basis (free on the e_k, so keys just merge).
SymPoly multiply_elementary(const SymPoly& a, const SymPoly& b);

}  // namespace cobcalc

#endif
