#include "cobcalc/cobordism.hpp"

#include <stdexcept>

#include "cobcalc/linalg.hpp"
#include "cobcalc/sympoly.hpp"

namespace cobcalc {

CobordismClass::CobordismClass(int dim) : dim_(dim) {
    if (dim < 0) throw std::invalid_argument("negative dimension");
}

CobordismClass::CobordismClass(int dim, std::map<Partition, Rational, PartitionOrder> chern,
                               std::string label)
    : dim_(dim), label_(std::move(label)) {
    if (dim < 0) throw std::invalid_argument("negative dimension");
    for (auto& [p, c] : chern) {
        if (p.weight() != dim)
            throw std::invalid_argument("Chern number indexed by partition of wrong weight");
        if (c != 0) chern_.emplace(p, c);
    }
}

Rational CobordismClass::chern(const Partition& lambda) const {
    auto it = chern_.find(lambda);
    return it == chern_.end() ? Rational(0) : it->second;
}

std::vector<Rational> CobordismClass::coordinates() const {
    std::vector<Rational> v;
    for (const Partition& p : enumerate_partitions(dim_)) v.push_back(chern(p));
    return v;
}

Functional::Functional(int dim) : dim_(dim) {
    if (dim < 0) throw std::invalid_argument("negative dimension");
}

Functional::Functional(int dim, std::map<Partition, Rational, PartitionOrder> coeffs,
                       std::string label)
    : dim_(dim), label_(std::move(label)) {
    if (dim < 0) throw std::invalid_argument("negative dimension");
    for (auto& [p, c] : coeffs) {
        if (p.weight() != dim)
            throw std::invalid_argument("functional coefficient of wrong weight");
        if (c != 0) coeffs_.emplace(p, c);
    }
}

Rational Functional::coeff(const Partition& lambda) const {
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

std::vector<Rational> Functional::coordinates() const {
    std::vector<Rational> v;
    for (const Partition& p : enumerate_partitions(dim_)) v.push_back(coeff(p));
    return v;
}

Rational Functional::evaluate(const CobordismClass& a) const {
    if (a.dim() != dim_)
        throw std::invalid_argument("functional/class dimension mismatch");
    Rational sum(0);
    for (const auto& [p, c] : coeffs_) sum += c * a.chern(p);
    return sum;
}

Functional functional_from_coordinates(int dim, const std::vector<Rational>& v,
                                       std::string label) {
    const std::vector<Partition> parts = enumerate_partitions(dim);
    if (v.size() != parts.size()) throw std::invalid_argument("coordinate length mismatch");
    std::map<Partition, Rational, PartitionOrder> coeffs;
    for (size_t i = 0; i < parts.size(); ++i)
        if (v[i] != 0) coeffs.emplace(parts[i], v[i]);
    return Functional(dim, std::move(coeffs), std::move(label));
}

CobordismClass class_from_coordinates(int dim, const std::vector<Rational>& v,
                                      std::string label) {
    const std::vector<Partition> parts = enumerate_partitions(dim);
    if (v.size() != parts.size()) throw std::invalid_argument("coordinate length mismatch");
    std::map<Partition, Rational, PartitionOrder> chern;
    for (size_t i = 0; i < parts.size(); ++i)
        if (v[i] != 0) chern.emplace(parts[i], v[i]);
    return CobordismClass(dim, std::move(chern), std::move(label));
}

CobordismClass cp_class(int n) {
    if (n < 0) throw std::invalid_argument("cp_class: n must be >= 0");
    std::map<Partition, Rational, PartitionOrder> chern;
    for (const Partition& lambda : enumerate_partitions(n)) {
        Rational c(1);
        for (int part : lambda.parts()) c *= binomial(n + 1, part);
        chern.emplace(lambda, c);
    }
    return CobordismClass(n, std::move(chern), "CP^" + std::to_string(n));
}

CobordismClass linear_combine(const std::vector<std::pair<Rational, CobordismClass>>& terms) {
    if (terms.empty()) throw std::invalid_argument("linear_combine: no terms");
    int dim = terms.front().second.dim();
    std::map<Partition, Rational, PartitionOrder> chern;
    for (const auto& [scalar, cls] : terms) {
        if (cls.dim() != dim) throw std::invalid_argument("linear_combine: dimension mismatch");
        for (const auto& [p, c] : cls.chern_numbers()) chern[p] += scalar * c;
    }
    return CobordismClass(dim, std::move(chern));
}

CobordismClass product(const CobordismClass& a, const CobordismClass& b) {
    const int da = a.dim(), db = b.dim(), dim = da + db;

    // characteristic-number vectors in the monomial basis: v_m = A^{-1} v_e
    const std::vector<Rational> am = m_to_e_matrix(da).apply(a.coordinates());
    const std::vector<Rational> bm = m_to_e_matrix(db).apply(b.coordinates());

    const std::vector<Partition> pa = enumerate_partitions(da);
    const std::vector<Partition> pb = enumerate_partitions(db);
    std::map<Partition, size_t, PartitionOrder> ia, ib;
    for (size_t i = 0; i < pa.size(); ++i) ia.emplace(pa[i], i);
    for (size_t i = 0; i < pb.size(); ++i) ib.emplace(pb[i], i);

    const std::vector<Partition> parts = enumerate_partitions(dim);
    std::vector<Rational> pm(parts.size(), Rational(0));
    for (size_t i = 0; i < parts.size(); ++i)
        for (const auto& [mu, nu] : m_splittings(parts[i])) {
            if (mu.weight() != da) continue;
            const Rational& x = am[ia.at(mu)];
            const Rational& y = bm[ib.at(nu)];
            if (x != 0 && y != 0) pm[i] += x * y;
        }

    // back to honest Chern numbers: v_e = A v_m
    const std::vector<Rational> pe = e_to_m_matrix(dim).apply(pm);
    return class_from_coordinates(dim, pe);
}

CobordismClass cover_scale(const CobordismClass& a, long d) {
    if (d < 1) throw std::invalid_argument("cover_scale: degree must be >= 1");
    return linear_combine({{Rational(d), a}});
}

Rational s_number(const CobordismClass& a) {
    if (a.dim() < 1) throw std::invalid_argument("s_number: dimension must be >= 1");
    return s_functional(a.dim()).evaluate(a);
}

Functional s_functional(int n) {
    if (n < 1) throw std::invalid_argument("s_functional: n must be >= 1");
    const SymPoly p = power_sum_in_e(n);
    std::map<Partition, Rational, PartitionOrder> coeffs(p.coeffs.begin(), p.coeffs.end());
    return Functional(n, std::move(coeffs), "s_" + std::to_string(n));
}

}  // namespace cobcalc
