#include "cobcalc/sympoly.hpp"

#include <cassert>
#include <cstdint>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <algorithm>
#include <vector>

namespace cobcalc {

void SymPoly::add_term(const Partition& p, const Rational& c) {
    if (p.weight() != degree) throw std::invalid_argument("SymPoly term of wrong degree");
    auto it = coeffs.find(p);
    if (it == coeffs.end()) {
        if (c != 0) coeffs.emplace(p, c);
        return;
    }
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
}

Rational SymPoly::coeff(const Partition& p) const {
    auto it = coeffs.find(p);
    return it == coeffs.end() ? Rational(0) : it->second;
}

namespace {

// Expansion engine. Every partial product of elementary symmetric
// polynomials is symmetric, so the expansion in exactly n variables is
// held by its canonical monomials only: the coefficient stored at a
// partition mu is the coefficient of the sorted monomial
// x_1^{mu_1} x_2^{mu_2} ... in the full n-variable expansion (equally,
// of the monomial symmetric function m_mu).
//
// Multiplying by e_k = sum over k-subsets S of x_S increments k distinct
// coordinates by one. Grouping the coordinates of mu by value w (the
// n - len(mu) zero coordinates included), a choice of increments (i_w)
// with sum k produces nu with mult_nu(w) = mult_mu(w) - i_w + i_{w-1},
// and the specific monomial x^nu arises from exactly
//     prod_{w >= 1} binomial(mult_nu(w), i_{w-1})
// subsets S. Coefficients are multinomial-bounded (at most n!), so int64
// cannot overflow for the degrees handled here.
using MExpansion = std::map<Partition, long long, PartitionOrder>;

long long binom_ll(int m, int k) {
    if (k < 0 || k > m) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (m - k + i) / i;
    return r;
}

MExpansion multiply_by_elementary(const MExpansion& f, int k, int nvars) {
    MExpansion out;
    for (const auto& [mu, mu_coeff] : f) {
        const long long c = mu_coeff;
        // coordinate groups (value, multiplicity), descending values, zeros last
        std::vector<std::pair<int, int>> groups;
        for (int p : mu.parts()) {
            if (!groups.empty() && groups.back().first == p)
                ++groups.back().second;
            else
                groups.emplace_back(p, 1);
        }
        if (nvars - mu.length() > 0) groups.emplace_back(0, nvars - mu.length());

        std::vector<int> inc(groups.size(), 0);
        std::function<void(size_t, int)> choose = [&](size_t g, int remaining) {
            if (g == groups.size()) {
                if (remaining != 0) return;
                std::map<int, int> mult;
                for (size_t j = 0; j < groups.size(); ++j) {
                    mult[groups[j].first] += groups[j].second - inc[j];
                    if (inc[j]) mult[groups[j].first + 1] += inc[j];
                }
                long long weight = 1;
                for (size_t j = 0; j < groups.size(); ++j)
                    if (inc[j]) weight *= binom_ll(mult[groups[j].first + 1], inc[j]);
                std::vector<int> parts;
                for (auto it = mult.rbegin(); it != mult.rend(); ++it)
                    if (it->first > 0)
                        parts.insert(parts.end(), static_cast<size_t>(it->second), it->first);
                out[Partition(std::move(parts))] += c * weight;
                return;
            }
            int cap = std::min(groups[g].second, remaining);
            for (int take = 0; take <= cap; ++take) {
                inc[g] = take;
                choose(g + 1, remaining - take);
            }
            inc[g] = 0;
        };
        choose(0, k);
    }
    return out;
}

RationalMatrix compute_e_to_m(int n) {
    if (n < 0) throw std::invalid_argument("e_to_m_matrix: n must be >= 0");
    // expansion coefficients are bounded by n!, and 21! overflows int64
    if (n > 20)
        throw std::invalid_argument("transition matrices are supported through degree 20");
    const std::vector<Partition> parts = enumerate_partitions(n);
    const int count = static_cast<int>(parts.size());
    RationalMatrix m(count, count);
    if (n == 0) {
        m.at(0, 0) = 1;
        return m;
    }

    // depth-first over partitions in canonical order, sharing prefix products
    int row = 0;
    std::vector<int> stack;
    std::function<void(const MExpansion&, int, int)> rec = [&](const MExpansion& prod,
                                                               int remaining, int max_part) {
        if (remaining == 0) {
            assert(parts[row] == Partition(stack));
            for (size_t j = 0; j < parts.size(); ++j) {
                auto it = prod.find(parts[j]);
                if (it != prod.end())
                    m.at(row, static_cast<int>(j)) = Rational(static_cast<long>(it->second));
            }
            ++row;
            return;
        }
        for (int k = std::min(remaining, max_part); k >= 1; --k) {
            stack.push_back(k);
            rec(multiply_by_elementary(prod, k, n), remaining - k, k);
            stack.pop_back();
        }
    };
    MExpansion one;
    one.emplace(Partition(), 1);
    rec(one, n, n);
    return m;
}

struct TransitionCache {
    std::mutex mutex;
    std::map<int, RationalMatrix> forward;
    std::map<int, RationalMatrix> backward;
};

TransitionCache& cache() {
    static TransitionCache c;
    return c;
}

}  // namespace

const RationalMatrix& e_to_m_matrix(int n) {
    TransitionCache& c = cache();
    std::scoped_lock lock(c.mutex);
    auto it = c.forward.find(n);
    if (it == c.forward.end()) it = c.forward.emplace(n, compute_e_to_m(n)).first;
    return it->second;
}

const RationalMatrix& m_to_e_matrix(int n) {
    TransitionCache& c = cache();
    std::scoped_lock lock(c.mutex);
    auto fit = c.forward.find(n);
    if (fit == c.forward.end()) fit = c.forward.emplace(n, compute_e_to_m(n)).first;
    auto bit = c.backward.find(n);
    if (bit == c.backward.end()) bit = c.backward.emplace(n, inverse(fit->second)).first;
    return bit->second;
}

SymPoly power_sum_in_e(int k) {
    if (k < 1) throw std::invalid_argument("power_sum_in_e: k must be >= 1");
    std::vector<SymPoly> p(static_cast<size_t>(k) + 1);
    for (int j = 1; j <= k; ++j) {
        SymPoly pj;
        pj.degree = j;
        pj.basis = SymBasis::elementary;
        // (-1)^{j-1} j e_j
        pj.add_term(Partition({j}), Rational((j % 2) ? j : -j));
        for (int i = 1; i < j; ++i) {
            // (-1)^{i-1} e_i p_{j-i}
            Rational sign((i % 2) ? 1 : -1);
            for (const auto& [lam, c] : p[j - i].coeffs)
                pj.add_term(partition_union(lam, Partition({i})), sign * c);
        }
        p[j] = std::move(pj);
    }
    return p[k];
}

SymPoly to_monomial_basis(const SymPoly& f) {
    if (f.basis == SymBasis::monomial) return f;
    const RationalMatrix& a = e_to_m_matrix(f.degree);
    const std::vector<Partition> parts = enumerate_partitions(f.degree);
    SymPoly out;
    out.degree = f.degree;
    out.basis = SymBasis::monomial;
    for (size_t i = 0; i < parts.size(); ++i) {
        Rational ci = f.coeff(parts[i]);
        if (ci == 0) continue;
        for (size_t j = 0; j < parts.size(); ++j)
            if (a.at(static_cast<int>(i), static_cast<int>(j)) != 0)
                out.add_term(parts[j], ci * a.at(static_cast<int>(i), static_cast<int>(j)));
    }
    return out;
}

SymPoly to_elementary_basis(const SymPoly& f) {
    if (f.basis == SymBasis::elementary) return f;
    const RationalMatrix& b = m_to_e_matrix(f.degree);
    const std::vector<Partition> parts = enumerate_partitions(f.degree);
    SymPoly out;
    out.degree = f.degree;
    out.basis = SymBasis::elementary;
    for (size_t i = 0; i < parts.size(); ++i) {
        Rational ci = f.coeff(parts[i]);
        if (ci == 0) continue;
        for (size_t j = 0; j < parts.size(); ++j)
            if (b.at(static_cast<int>(i), static_cast<int>(j)) != 0)
                out.add_term(parts[j], ci * b.at(static_cast<int>(i), static_cast<int>(j)));
    }
    return out;
}

SymPoly multiply_elementary(const SymPoly& a, const SymPoly& b) {
    if (a.basis != SymBasis::elementary || b.basis != SymBasis::elementary)
        throw std::invalid_argument("multiply_elementary: operands must be in the e-basis");
    SymPoly out;
    out.degree = a.degree + b.degree;
    out.basis = SymBasis::elementary;
    for (const auto& [la, ca] : a.coeffs)
        for (const auto& [lb, cb] : b.coeffs) out.add_term(partition_union(la, lb), ca * cb);
    return out;
}

}  // namespace cobcalc
