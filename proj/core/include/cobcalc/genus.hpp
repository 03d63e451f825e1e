#ifndef COBCALC_GENUS_HPP
#define COBCALC_GENUS_HPP

#include <map>
#include <string>
#include <vector>

#include "cobcalc/cobordism.hpp"
#include "cobcalc/partition.hpp"
#include "cobcalc/rational.hpp"
#include "cobcalc/ypoly.hpp"

namespace cobcalc {

/// Multiplicative genus given by a characteristic power series
/// Q(x) = sum_k coeffs[k] x^k with coeffs[0] == 1; the coefficients may
/// involve the formal parameter y (the chi_y family does, Todd and the
/// L-genus do not). truncation bounds the dimensions the genus can serve.
struct GenusSpec {
    std::string name;
    std::vector<YPoly> coeffs;  // coeffs[k] is the degree-k series coefficient
    int truncation = 0;
};

constexpr int kDefaultGenusTruncation = 16;

/// Hirzebruch's generalized Todd genus chi_y, with characteristic series
/// Q(x; y) = x(1+y)/(1 - e^{-x(1+y)}) - x y. Specializes to the Todd
/// genus at y=0, the L-genus/signature at y=1 and the Euler number at y=-1.
GenusSpec chi_y_spec(int truncation = kDefaultGenusTruncation);

/// Todd genus, series x/(1 - e^{-x}).
GenusSpec todd_spec(int truncation = kDefaultGenusTruncation);

/// L-genus (signature), series x/tanh(x).
GenusSpec l_genus_spec(int truncation = kDefaultGenusTruncation);

/// Degree-n part of prod_i Q(x_i) as a linear combination of Chern
/// numbers with y-polynomial coefficients. Requires n <= spec.truncation.
class ParametricFunctional {
public:
    ParametricFunctional() = default;
    ParametricFunctional(int dim, std::map<Partition, YPoly, PartitionOrder> coeffs,
                         std::string label = "");

    int dim() const { return dim_; }
    const std::map<Partition, YPoly, PartitionOrder>& coeffs() const { return coeffs_; }
    YPoly coeff(const Partition& p) const;
    const std::string& label() const { return label_; }

    /// Value on a class: a polynomial in y.
    YPoly evaluate(const CobordismClass& a) const;

    /// Specialize y to a rational value.
    Functional at_y(const Rational& y) const;

    /// Coefficient of y^p as a Functional.
    Functional y_coefficient(int p) const;

private:
    int dim_ = 0;
    std::map<Partition, YPoly, PartitionOrder> coeffs_;
    std::string label_;
};

ParametricFunctional genus_functional(const GenusSpec& spec, int n);

/// chi_y as a ParametricFunctional in dimension n (memoized internally).
const ParametricFunctional& chi_y_functional(int n);

/// chi_0 ... chi_n: the y-coefficients of the chi_y functional.
std::vector<Functional> chi_p_functionals(int n);

/// Coefficient 1 on the partition (n), 0 elsewhere (the top Chern number).
Functional euler_functional(int n);

/// Todd functional in dimension n (y=0 series, computed from its own
/// characteristic series rather than by specializing chi_y).
Functional todd_functional(int n);

/// Signature functional from the series x/tanh(x).
Functional l_genus_functional(int n);

/// Pontryagin numbers p_I of the underlying real manifold, expanded in
/// Chern numbers via p(T_R) = c(T) c(T-bar), i.e.
/// p_k = c_k^2 + 2 sum_{l=1..k} (-1)^l c_{k-l} c_{k+l}.
/// Indexed by partitions I of n/2; requires n even and positive
/// (std::invalid_argument otherwise: odd complex dimensions carry no
/// Pontryagin numbers in top degree).
std::map<Partition, Functional, PartitionOrder> pontryagin_functionals(int n);

}  // namespace cobcalc

#endif
