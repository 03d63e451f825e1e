#ifndef COBCALC_COBORDISM_HPP
#define COBCALC_COBORDISM_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cobcalc/partition.hpp"
#include "cobcalc/rational.hpp"

namespace cobcalc {

/// Element of the rational complex cobordism ring in complex dimension n,
/// held as its vector of Chern numbers c_lambda over the partitions of n.
/// Two classes are equal exactly when all pi(n) coordinates agree.
class CobordismClass {
public:
    CobordismClass() = default;

    /// Zero class of the given dimension.
    explicit CobordismClass(int dim);

    /// Chern numbers keyed by partitions of weight dim (zero entries are
    /// dropped). Throws std::invalid_argument on a weight mismatch.
    CobordismClass(int dim, std::map<Partition, Rational, PartitionOrder> chern,
                   std::string label = "");

    int dim() const { return dim_; }
    const std::map<Partition, Rational, PartitionOrder>& chern_numbers() const { return chern_; }

    /// c_lambda, zero when the key is absent.
    Rational chern(const Partition& lambda) const;

    const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    bool is_zero() const { return chern_.empty(); }

    /// Coordinates over enumerate_partitions(dim) in canonical order.
    std::vector<Rational> coordinates() const;

    /// Equality ignores the label: classes agree iff all Chern numbers do.
    friend bool operator==(const CobordismClass& a, const CobordismClass& b) {
        return a.dim_ == b.dim_ && a.chern_ == b.chern_;
    }

private:
    int dim_ = 0;
    std::map<Partition, Rational, PartitionOrder> chern_;
    std::string label_;
};

/// Rational linear combination of Chern numbers in a fixed dimension;
/// the dual vector evaluated by exact dot product.
class Functional {
public:
    Functional() = default;
    explicit Functional(int dim);
    Functional(int dim, std::map<Partition, Rational, PartitionOrder> coeffs,
               std::string label = "");

    int dim() const { return dim_; }
    const std::map<Partition, Rational, PartitionOrder>& coeffs() const { return coeffs_; }
    Rational coeff(const Partition& lambda) const;
    const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    std::vector<Rational> coordinates() const;
    bool is_zero() const { return coeffs_.empty(); }

    /// Throws std::invalid_argument when dimensions disagree.
    Rational evaluate(const CobordismClass& a) const;
    Rational operator()(const CobordismClass& a) const { return evaluate(a); }

    friend bool operator==(const Functional& a, const Functional& b) {
        return a.dim_ == b.dim_ && a.coeffs_ == b.coeffs_;
    }

private:
    int dim_ = 0;
    std::map<Partition, Rational, PartitionOrder> coeffs_;
    std::string label_;
};

/// Builds a Functional from coordinates in canonical partition order.
Functional functional_from_coordinates(int dim, const std::vector<Rational>& v,
                                       std::string label = "");
CobordismClass class_from_coordinates(int dim, const std::vector<Rational>& v,
                                      std::string label = "");

/// [CP^n]: c_lambda = prod_i binomial(n+1, lambda_i). cp_class(0) is the
/// unit of the ring (value 1 on the empty partition).
CobordismClass cp_class(int n);

/// Coordinate-wise linear combination; all terms must share one dimension
/// (std::invalid_argument otherwise, also on an empty term list).
CobordismClass linear_combine(const std::vector<std::pair<Rational, CobordismClass>>& terms);

/// Ring product: represents the cartesian product of manifolds. Computed
/// through the monomial basis, where characteristic numbers of a product
/// split as m_lambda[M x N] = sum over m_splittings of m_mu[M] m_nu[N].
CobordismClass product(const CobordismClass& a, const CobordismClass& b);

/// All Chern numbers scaled by d (pullback under a degree-d covering).
/// Requires d >= 1.
CobordismClass cover_scale(const CobordismClass& a, long d);

/// Thom--Milnor number s_n: the power sum of Chern roots evaluated on the
/// class. Requires dim >= 1. Nonzero s_n is Milnor's criterion for a
/// polynomial generator in degree n.
Rational s_number(const CobordismClass& a);

/// The s_n functional itself (power_sum_in_e(n) read as Chern coefficients).
Functional s_functional(int n);

}  // namespace cobcalc

#endif
