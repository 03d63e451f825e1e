#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "cobcalc/sympoly.hpp"
#include "testutil.hpp"

using namespace cobcalc;
using testutil::part;
using testutil::q;

namespace {

// independent oracle: literal expansion of e_lambda over all monomials of
// n variables, no symmetry shortcuts
using RawPoly = std::map<std::vector<int>, long long>;

RawPoly raw_elementary(int n, int k) {
    RawPoly e;
    std::vector<int> exps(static_cast<size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            e[exps] = 1;
            return;
        }
        for (int i = start; i <= n - (k - depth); ++i) {
            exps[static_cast<size_t>(i)] = 1;
            rec(i + 1, depth + 1);
            exps[static_cast<size_t>(i)] = 0;
        }
    };
    rec(0, 0);
    return e;
}

RawPoly raw_multiply(const RawPoly& a, const RawPoly& b, int n) {
    RawPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> sum(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i)
                sum[static_cast<size_t>(i)] = ea[static_cast<size_t>(i)] + eb[static_cast<size_t>(i)];
            out[sum] += ca * cb;
        }
    return out;
}

RationalMatrix raw_e_to_m(int n) {
    const std::vector<Partition> parts = enumerate_partitions(n);
    RationalMatrix m(static_cast<int>(parts.size()), static_cast<int>(parts.size()));
    if (n == 0) {
        m.at(0, 0) = 1;
        return m;
    }
    for (size_t i = 0; i < parts.size(); ++i) {
        RawPoly prod;
        prod[std::vector<int>(static_cast<size_t>(n), 0)] = 1;
        for (int p : parts[i].parts()) prod = raw_multiply(prod, raw_elementary(n, p), n);
        for (size_t j = 0; j < parts.size(); ++j) {
            std::vector<int> pattern(static_cast<size_t>(n), 0);
            for (size_t t = 0; t < parts[j].parts().size(); ++t)
                pattern[t] = parts[j].parts()[t];
            auto it = prod.find(pattern);
            if (it != prod.end()) m.at(static_cast<int>(i), static_cast<int>(j)) =
                Rational(static_cast<long>(it->second));
        }
    }
    return m;
}

}  // namespace

TEST_SUITE("sympoly") {

TEST_CASE("transition matrices match a literal monomial-by-monomial expansion") {
    for (int n = 0; n <= 8; ++n) CHECK(e_to_m_matrix(n) == raw_e_to_m(n));
}

TEST_CASE("e-to-m transitions in low degree") {
    const RationalMatrix& m1 = e_to_m_matrix(1);
    REQUIRE(m1.rows() == 1);
    CHECK(m1.at(0, 0) == 1);  // e_1 = m_1

    // degree 2, canonical order (2), (1,1)
    const RationalMatrix& m2 = e_to_m_matrix(2);
    REQUIRE(m2.rows() == 2);
    CHECK(m2.at(0, 0) == 0);  // e_2 = m_{1,1}
    CHECK(m2.at(0, 1) == 1);
    CHECK(m2.at(1, 0) == 1);  // e_{1,1} = m_2 + 2 m_{1,1}
    CHECK(m2.at(1, 1) == 2);

    // degree 3, canonical order (3), (2,1), (1,1,1)
    const RationalMatrix& m3 = e_to_m_matrix(3);
    REQUIRE(m3.rows() == 3);
    CHECK(m3.at(0, 0) == 0);  // e_3 = m_{1,1,1}
    CHECK(m3.at(0, 1) == 0);
    CHECK(m3.at(0, 2) == 1);
    CHECK(m3.at(1, 1) == 1);  // e_{2,1} = m_{2,1} + 3 m_{1,1,1}
    CHECK(m3.at(1, 2) == 3);
    CHECK(m3.at(2, 0) == 1);  // e_{1,1,1} = m_3 + 3 m_{2,1} + 6 m_{1,1,1}
    CHECK(m3.at(2, 1) == 3);
    CHECK(m3.at(2, 2) == 6);
}

TEST_CASE("transition matrices invert exactly up to degree 12") {
    for (int n = 0; n <= 12; ++n) {
        const RationalMatrix& a = e_to_m_matrix(n);
        const RationalMatrix& b = m_to_e_matrix(n);
        CHECK(a * b == RationalMatrix::identity(a.rows()));
        CHECK(b * a == RationalMatrix::identity(a.rows()));
    }
}

TEST_CASE("power sums via Newton's identities") {
    SymPoly p1 = power_sum_in_e(1);
    CHECK(p1.coeffs.size() == 1);
    CHECK(p1.coeff(part({1})) == 1);

    SymPoly p2 = power_sum_in_e(2);
    CHECK(p2.coeff(part({1, 1})) == 1);
    CHECK(p2.coeff(part({2})) == -2);
    CHECK(p2.coeffs.size() == 2);

    SymPoly p3 = power_sum_in_e(3);
    CHECK(p3.coeff(part({1, 1, 1})) == 1);
    CHECK(p3.coeff(part({2, 1})) == -3);
    CHECK(p3.coeff(part({3})) == 3);
    CHECK(p3.coeffs.size() == 3);

    CHECK_THROWS_AS(power_sum_in_e(0), std::invalid_argument);
}

TEST_CASE("power sums convert to the single-row monomial function") {
    for (int k = 1; k <= 12; ++k) {
        SymPoly m = to_monomial_basis(power_sum_in_e(k));
        REQUIRE(m.coeffs.size() == 1);
        CHECK(m.coeff(part({k})) == 1);
    }
}

TEST_CASE("basis conversions round-trip") {
    SymPoly f;
    f.degree = 4;
    f.basis = SymBasis::elementary;
    f.add_term(part({2, 1, 1}), q(3, 7));
    f.add_term(part({4}), q(-2));
    f.add_term(part({2, 2}), q(5, 2));
    CHECK(to_elementary_basis(to_monomial_basis(f)) == f);
}

TEST_CASE("elementary products merge keys") {
    SymPoly a;
    a.degree = 2;
    a.add_term(part({2}), q(1));
    a.add_term(part({1, 1}), q(2));
    SymPoly b;
    b.degree = 1;
    b.add_term(part({1}), q(-1));
    SymPoly ab = multiply_elementary(a, b);
    CHECK(ab.degree == 3);
    CHECK(ab.coeff(part({2, 1})) == -1);
    CHECK(ab.coeff(part({1, 1, 1})) == -2);
}

TEST_CASE("transition degree is capped where int64 would overflow") {
    CHECK_THROWS_AS(e_to_m_matrix(21), std::invalid_argument);
    CHECK_THROWS_AS(e_to_m_matrix(-1), std::invalid_argument);
}

TEST_CASE("add_term validates weights and prunes zeros") {
    SymPoly f;
    f.degree = 3;
    CHECK_THROWS_AS(f.add_term(part({2}), q(1)), std::invalid_argument);
    f.add_term(part({3}), q(2));
    f.add_term(part({3}), q(-2));
    CHECK(f.coeffs.empty());
}

}  // TEST_SUITE
