#ifndef COBCALC_YPOLY_HPP
#define COBCALC_YPOLY_HPP

#include <string>
#include <vector>

#include "cobcalc/rational.hpp"

namespace cobcalc {

/// Polynomial in the formal parameter y with exact rational coefficients,
/// dense and trimmed (no trailing zeros; the zero polynomial is empty).
class YPoly {
public:
    YPoly() = default;
    YPoly(Rational constant);  // NOLINT: implicit by design, scalars embed
    explicit YPoly(std::vector<Rational> coeffs);

    static YPoly y();  // the monomial y

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    YPoly operator+(const YPoly& o) const;
    YPoly operator-(const YPoly& o) const;
    YPoly operator*(const YPoly& o) const;
    YPoly& operator+=(const YPoly& o);
    YPoly& operator-=(const YPoly& o);
    YPoly& operator*=(const YPoly& o);
    YPoly operator-() const;
    bool operator==(const YPoly&) const = default;

    /// Exact evaluation at a rational value of y.
    Rational at(const Rational& y) const;

    /// Human form: "1 - y + y^2", "0", "1/2 + 3/2 y".
    std::string str() const;

private:
    void trim();
    std::vector<Rational> c_;
};

YPoly operator*(const Rational& s, const YPoly& p);

/// (1+y)^k expanded; helper for substituting x(1+y) into power series.
YPoly one_plus_y_power(int k);

}  // namespace cobcalc

#endif
