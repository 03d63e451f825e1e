#include "cobcalc/genus.hpp"

#include <mutex>
#include <stdexcept>

#include "cobcalc/linalg.hpp"
#include "cobcalc/sympoly.hpp"

namespace cobcalc {

namespace {

// --- univariate power series with rational coefficients, truncated ---

std::vector<Rational> series_multiply(const std::vector<Rational>& a,
                                      const std::vector<Rational>& b, int n) {
    std::vector<Rational> out(static_cast<size_t>(n) + 1, Rational(0));
    for (int i = 0; i <= n; ++i) {
        if (i >= static_cast<int>(a.size()) || a[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j)
            if (j < static_cast<int>(b.size()) && b[j] != 0) out[i + j] += a[i] * b[j];
    }
    return out;
}

std::vector<Rational> series_reciprocal(const std::vector<Rational>& a, int n) {
    if (a.empty() || a[0] == 0) throw std::invalid_argument("series reciprocal needs unit term");
    std::vector<Rational> b(static_cast<size_t>(n) + 1, Rational(0));
    b[0] = 1 / a[0];
    for (int k = 1; k <= n; ++k) {
        Rational s(0);
        for (int i = 1; i <= k; ++i)
            if (i < static_cast<int>(a.size())) s += a[i] * b[k - i];
        b[k] = -s / a[0];
    }
    return b;
}

Rational factorial(int n) {
    Rational f(1);
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// t/(1 - e^{-t}) = 1 / sum_{j>=0} (-1)^j t^j/(j+1)!
std::vector<Rational> todd_series(int n) {
    std::vector<Rational> denom(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        denom[j] = 1 / factorial(j + 1);
        if (j % 2) denom[j] = -denom[j];
    }
    return series_reciprocal(denom, n);
}

// x/tanh(x) = cosh(x) / (sinh(x)/x)
std::vector<Rational> l_series(int n) {
    std::vector<Rational> cosh_s(static_cast<size_t>(n) + 1, Rational(0));
    std::vector<Rational> sinh_over_x(static_cast<size_t>(n) + 1, Rational(0));
    for (int j = 0; 2 * j <= n; ++j) {
        cosh_s[2 * j] = 1 / factorial(2 * j);
        sinh_over_x[2 * j] = 1 / factorial(2 * j + 1);
    }
    return series_multiply(cosh_s, series_reciprocal(sinh_over_x, n), n);
}

GenusSpec spec_from_rational_series(std::string name, std::vector<Rational> series,
                                    int truncation) {
    GenusSpec s;
    s.name = std::move(name);
    s.truncation = truncation;
    s.coeffs.reserve(series.size());
    for (Rational& c : series) s.coeffs.emplace_back(std::move(c));
    return s;
}

void validate_spec(const GenusSpec& spec) {
    if (spec.truncation < 0 || static_cast<int>(spec.coeffs.size()) != spec.truncation + 1)
        throw std::invalid_argument("genus spec truncation/coefficient length mismatch");
    if (spec.coeffs[0] != YPoly(Rational(1)))
        throw std::invalid_argument("genus spec constant term must be 1");
}

}  // namespace

GenusSpec chi_y_spec(int truncation) {
    if (truncation < 0) throw std::invalid_argument("negative truncation");
    const std::vector<Rational> base = todd_series(truncation);
    GenusSpec s;
    s.name = "chi_y";
    s.truncation = truncation;
    s.coeffs.reserve(static_cast<size_t>(truncation) + 1);
    // Q(x; y) = T(x(1+y)) - x y  with T the Todd series
    for (int k = 0; k <= truncation; ++k) s.coeffs.push_back(base[k] * one_plus_y_power(k));
    if (truncation >= 1) s.coeffs[1] -= YPoly::y();
    return s;
}

GenusSpec todd_spec(int truncation) {
    if (truncation < 0) throw std::invalid_argument("negative truncation");
    return spec_from_rational_series("todd", todd_series(truncation), truncation);
}

GenusSpec l_genus_spec(int truncation) {
    if (truncation < 0) throw std::invalid_argument("negative truncation");
    return spec_from_rational_series("l", l_series(truncation), truncation);
}

ParametricFunctional::ParametricFunctional(int dim,
                                           std::map<Partition, YPoly, PartitionOrder> coeffs,
                                           std::string label)
    : dim_(dim), label_(std::move(label)) {
    if (dim < 0) throw std::invalid_argument("negative dimension");
    for (auto& [p, c] : coeffs) {
        if (p.weight() != dim)
            throw std::invalid_argument("parametric coefficient of wrong weight");
        if (!c.is_zero()) coeffs_.emplace(p, std::move(c));
    }
}

YPoly ParametricFunctional::coeff(const Partition& p) const {
    auto it = coeffs_.find(p);
    return it == coeffs_.end() ? YPoly() : it->second;
}

YPoly ParametricFunctional::evaluate(const CobordismClass& a) const {
    if (a.dim() != dim_) throw std::invalid_argument("functional/class dimension mismatch");
    YPoly sum;
    for (const auto& [p, poly] : coeffs_) {
        const Rational v = a.chern(p);
        if (v != 0) sum += v * poly;
    }
    return sum;
}

Functional ParametricFunctional::at_y(const Rational& y) const {
    std::map<Partition, Rational, PartitionOrder> out;
    for (const auto& [p, poly] : coeffs_) {
        Rational v = poly.at(y);
        if (v != 0) out.emplace(p, v);
    }
    return Functional(dim_, std::move(out), label_.empty() ? "" : label_ + "@" + pretty_str(y));
}

Functional ParametricFunctional::y_coefficient(int k) const {
    std::map<Partition, Rational, PartitionOrder> out;
    for (const auto& [p, poly] : coeffs_) {
        Rational v = poly.coeff(k);
        if (v != 0) out.emplace(p, v);
    }
    return Functional(dim_, std::move(out));
}

ParametricFunctional genus_functional(const GenusSpec& spec, int n) {
    validate_spec(spec);
    if (n < 0) throw std::invalid_argument("genus_functional: n must be >= 0");
    if (n > spec.truncation)
        throw std::invalid_argument("genus_functional: dimension exceeds spec truncation");

    // Expanding prod_{i=1..n} Q(x_i) in n variables and collecting the
    // degree-n part in the monomial basis: the coefficient of x^mu, and
    // hence of m_mu, is the product of the series coefficients along mu.
    const std::vector<Partition> parts = enumerate_partitions(n);
    std::vector<YPoly> monomial_coeffs;
    monomial_coeffs.reserve(parts.size());
    for (const Partition& mu : parts) {
        YPoly g(Rational(1));
        for (int part : mu.parts()) g *= spec.coeffs[static_cast<size_t>(part)];
        monomial_coeffs.push_back(std::move(g));
    }

    // convert to Chern-number coordinates: f_lambda = sum_mu g_mu (A^{-1})_{mu,lambda}
    const RationalMatrix& b = m_to_e_matrix(n);
    std::map<Partition, YPoly, PartitionOrder> chern_coeffs;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (monomial_coeffs[i].is_zero()) continue;
        for (size_t j = 0; j < parts.size(); ++j) {
            const Rational& w = b.at(static_cast<int>(i), static_cast<int>(j));
            if (w != 0) chern_coeffs[parts[j]] += w * monomial_coeffs[i];
        }
    }
    return ParametricFunctional(n, std::move(chern_coeffs),
                                spec.name + "_" + std::to_string(n));
}

const ParametricFunctional& chi_y_functional(int n) {
    static std::mutex mutex;
    static std::map<int, ParametricFunctional> memo;
    std::scoped_lock lock(mutex);
    auto it = memo.find(n);
    if (it == memo.end()) {
        int trunc = std::max(n, kDefaultGenusTruncation);
        it = memo.emplace(n, genus_functional(chi_y_spec(trunc), n)).first;
    }
    return it->second;
}

std::vector<Functional> chi_p_functionals(int n) {
    if (n < 0) throw std::invalid_argument("chi_p_functionals: n must be >= 0");
    const ParametricFunctional& chi = chi_y_functional(n);
    std::vector<Functional> out;
    out.reserve(static_cast<size_t>(n) + 1);
    for (int p = 0; p <= n; ++p) {
        Functional f = chi.y_coefficient(p);
        f.set_label("chi_" + std::to_string(p));
        out.push_back(std::move(f));
    }
    return out;
}

Functional euler_functional(int n) {
    if (n < 1) throw std::invalid_argument("euler_functional: n must be >= 1");
    std::map<Partition, Rational, PartitionOrder> coeffs;
    coeffs.emplace(Partition({n}), Rational(1));
    return Functional(n, std::move(coeffs), "euler");
}

Functional todd_functional(int n) {
    Functional f = genus_functional(todd_spec(std::max(n, kDefaultGenusTruncation)), n)
                       .at_y(Rational(0));
    f.set_label("todd");
    return f;
}

Functional l_genus_functional(int n) {
    Functional f = genus_functional(l_genus_spec(std::max(n, kDefaultGenusTruncation)), n)
                       .at_y(Rational(0));
    f.set_label("l_genus");
    return f;
}

std::map<Partition, Functional, PartitionOrder> pontryagin_functionals(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument(
            "pontryagin_functionals: complex dimension must be even and positive");

    // p_k in Chern classes, an e-basis symmetric function of degree 2k
    auto pontryagin_class = [](int k) {
        SymPoly p;
        p.degree = 2 * k;
        p.basis = SymBasis::elementary;
        p.add_term(Partition({k, k}), Rational(1));
        for (int l = 1; l <= k; ++l) {
            Rational c((l % 2) ? -2 : 2);
            Partition key = (l == k) ? Partition({2 * k}) : Partition({k + l, k - l});
            p.add_term(key, c);
        }
        return p;
    };

    std::map<Partition, Functional, PartitionOrder> out;
    for (const Partition& index : enumerate_partitions(n / 2)) {
        SymPoly prod;
        prod.degree = 0;
        prod.basis = SymBasis::elementary;
        prod.add_term(Partition(), Rational(1));
        for (int part : index.parts()) prod = multiply_elementary(prod, pontryagin_class(part));
        std::map<Partition, Rational, PartitionOrder> coeffs(prod.coeffs.begin(),
                                                             prod.coeffs.end());
        out.emplace(index, Functional(n, std::move(coeffs), "p_" + index.str()));
    }
    return out;
}

}  // namespace cobcalc
