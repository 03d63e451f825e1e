// Acceptance suite: one pass/fail line per criterion, exit 0 only if all
// pass. Every check is exact rational arithmetic, tolerance zero.

#include <cstdio>
#include <functional>
#include <future>
#include <random>
#include <string>
#include <vector>

#include "cobcalc/bundles.hpp"
#include "cobcalc/cobordism.hpp"
#include "cobcalc/genus.hpp"
#include "cobcalc/linalg.hpp"
#include "cobcalc/verifier.hpp"

using namespace cobcalc;

namespace {

Rational q(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

CobordismClass random_class(std::mt19937_64& rng, int dim) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    std::map<Partition, Rational, PartitionOrder> chern;
    for (const Partition& p : enumerate_partitions(dim)) chern.emplace(p, q(num(rng), den(rng)));
    return CobordismClass(dim, std::move(chern));
}

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
};

// 1. s_{n+2}(P(E)) = -(n+1)(n+3) c over random surfaces and twists
bool crit_s_closed_form(std::string& detail) {
    auto check_rank = [](int rank) {
        std::mt19937_64 rng(1000 + static_cast<unsigned>(rank));
        std::uniform_int_distribution<long> entry(-50, 50);
        const int n = rank - 1;
        for (int trial = 0; trial < 200; ++trial) {
            SurfaceModel s{q(entry(rng)), q(entry(rng)), ""};
            Rational c = q(entry(rng));
            CobordismClass p = projectivization_chern(s, BundleModel{rank, c});
            if (s_number(p) != q(-(n + 1) * (n + 3)) * c) return false;
        }
        return true;
    };
    std::vector<std::future<bool>> jobs;
    for (int rank = 2; rank <= 11; ++rank)
        jobs.push_back(std::async(std::launch::async, check_rank, rank));
    bool ok = true;
    for (auto& job : jobs) ok = job.get() && ok;
    detail = "ranks 2..11, 200 random (a,b,c) each";
    return ok;
}

// 2. c_1^i coordinate of the Abelian-base projectivization
bool crit_c1_power(std::string& detail) {
    for (int i = 3; i <= 12; ++i)
        for (long cval : {-3L, -1L, 1L, 5L}) {
            Rational c = q(cval);
            CobordismClass g = abelian_pbundle(i - 1, c);
            Rational expected = -c;
            for (int e = 0; e < i; ++e) expected *= (i - 1);
            Partition all_ones(std::vector<int>(static_cast<size_t>(i), 1));
            if (g.chern(all_ones) != expected) return false;
        }
    detail = "i = 3..12, c in {-3,-1,1,5}";
    return true;
}

// 3. chi_y vanishes identically on the gamma generators
bool crit_chi_y_kernel(std::string& detail) {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 5);
    for (int i = 3; i <= 8; ++i)
        for (int trial = 0; trial < 10; ++trial) {
            Rational c = q(num(rng), den(rng));
            if (c == 0) c = q(1);
            if (!chi_y_functional(i).evaluate(abelian_pbundle(i - 1, c)).is_zero())
                return false;
        }
    detail = "i = 3..8, 10 random nonzero c each";
    return true;
}

// 4. dimension-two genus formulas
bool crit_surface_formulas(std::string& detail) {
    const ParametricFunctional& chi = chi_y_functional(2);
    Functional chi0 = chi.y_coefficient(0);
    Functional chi1 = chi.y_coefficient(1);
    Partition p11({1, 1}), p2({2});
    if (chi0.coeff(p11) != q(1, 12) || chi0.coeff(p2) != q(1, 12)) return false;
    if (chi1.coeff(p11) != q(1, 6) || chi1.coeff(p2) != q(-5, 6)) return false;
    if (chi.evaluate(cp_class(2)) != YPoly({q(1), q(-1), q(1)})) return false;
    detail = "chi_0 = (c_1^2+c_2)/12, chi_1 = (c_1^2-5c_2)/6, chi_y(CP^2) = 1-y+y^2";
    return true;
}

// 5. specializations of chi_y at y = -1, 0, +1
bool crit_specializations(std::string& detail) {
    for (int n = 1; n <= 10; ++n) {
        const ParametricFunctional& chi = chi_y_functional(n);
        if (!(chi.at_y(q(-1)) == euler_functional(n))) return false;
        if (!(chi.at_y(q(1)) == l_genus_functional(n))) return false;
        if (todd_functional(n).evaluate(cp_class(n)) != 1) return false;
    }
    detail = "n = 1..10, Euler / L-genus / Todd(CP^n) = 1";
    return true;
}

// 6. chi_y is multiplicative
bool crit_ring_homomorphism(std::string& detail) {
    std::mt19937_64 rng(31415);
    std::uniform_int_distribution<int> dim(1, 5);
    int done = 0;
    while (done < 50) {
        int da = dim(rng), db = dim(rng);
        if (da + db > 6) continue;
        ++done;
        CobordismClass a = random_class(rng, da);
        CobordismClass b = random_class(rng, db);
        YPoly lhs = chi_y_functional(da + db).evaluate(product(a, b));
        YPoly rhs = chi_y_functional(da).evaluate(a) * chi_y_functional(db).evaluate(b);
        if (!(lhs == rhs)) return false;
    }
    detail = "50 random pairs with total dimension <= 6";
    return true;
}

// 7. span structure of the chi_p
bool crit_chi_span(std::string& detail) {
    for (int n = 2; n <= 10; ++n) {
        auto chi = chi_p_functionals(n);
        std::vector<std::vector<Rational>> vecs;
        for (const Functional& f : chi) vecs.push_back(f.coordinates());
        Subspace span = Subspace::span(static_cast<int>(vecs[0].size()), vecs);
        if (span.dim() != (n + 2) / 2) return false;
        for (int p = 0; p <= n; ++p) {
            const Functional& lhs = chi[static_cast<size_t>(p)];
            const Functional& rhs = chi[static_cast<size_t>(n - p)];
            for (const Partition& key : enumerate_partitions(n)) {
                Rational want = (n % 2) ? -rhs.coeff(key) : rhs.coeff(key);
                if (lhs.coeff(key) != want) return false;
            }
        }
        Partition c1cn1 = (n == 2) ? Partition({1, 1}) : Partition({n - 1, 1});
        Functional f(n, {{c1cn1, q(1)}});
        if (!span.contains(f.coordinates())) return false;
    }
    detail = "n = 2..10: dim = floor((n+2)/2), symmetry, c_1 c_{n-1} membership";
    return true;
}

// 8. generator criterion for the beta and gamma sequences
bool crit_generators(std::string& detail) {
    SurfaceModel x{q(152), q(100), "X"};
    GeneratorSequence beta = beta_sequence(x, q(248), 8);
    if (s_number(beta.at(2)) != -96) return false;
    for (int k = 3; k <= 8; ++k)
        if (s_number(beta.at(k)) != q(-496) * (k * k - 1)) return false;
    GeneratorSequence gamma = gamma_sequence(q(-1), 8);
    for (int n = 1; n <= 8; ++n) {
        if (!invertible(evaluation_matrix(beta, n))) return false;
        if (!invertible(evaluation_matrix(gamma, n))) return false;
    }
    detail = "s_2(beta_2) = -96, s_k(beta_k) = -496(k^2-1), bases invertible to dim 8";
    return true;
}

// 9. the four annihilator computations
bool crit_theorems(std::string& detail) {
    SurfaceModel x{q(152), q(100), "X"};
    GeneratorSequence beta = beta_sequence(x, q(248), 8);
    GeneratorSequence gamma = gamma_sequence(q(-1), 8);

    auto pi = [](int n) { return static_cast<int>(enumerate_partitions(n).size()); };
    for (int n = 3; n <= 8; ++n) {
        VerifyReport r = verify_theorem(IdealKind::oriented_diffeo, n, beta);
        int expected = (n % 2) ? 1 : 1 + pi(n / 2);
        if (!r.passed() || r.annihilator_dim != expected) return false;
    }
    for (int n = 2; n <= 8; ++n) {
        VerifyReport rd = verify_theorem(IdealKind::diffeo, n, beta);
        if (!rd.passed() || rd.annihilator_dim != (n == 2 ? 2 : 1)) return false;
        VerifyReport rh = verify_theorem(IdealKind::homeo, n, beta);
        if (!rh.passed() || rh.annihilator_dim != 1) return false;
        VerifyReport ri = verify_theorem(IdealKind::chi_kernel, n, gamma);
        if (!ri.passed() || ri.annihilator_dim != (n + 2) / 2) return false;
    }
    detail = "do 3..8 (dims 1,3,1,4,1,6), d 2..8, h 2..8, betti 2..8, exact equality";
    return true;
}

// 10. covering degrees scale functionals outside the chi_p span
bool crit_unboundedness(std::string& detail) {
    GeneratorSequence gamma = gamma_sequence(q(-1), 6);
    const std::vector<long> degrees{1, 2, 4, 8};
    for (int i = 3; i <= 6; ++i) {
        Functional f(i, {{Partition(std::vector<int>(static_cast<size_t>(i), 1)), q(1)}},
                     "c1^" + std::to_string(i));
        UnboundedReport r = unboundedness_demo(f, gamma, degrees);
        if (r.rejected || r.base_value == 0) return false;
        if (r.values.size() != degrees.size()) return false;
        for (size_t j = 0; j < degrees.size(); ++j) {
            if (r.values[j].first != degrees[j]) return false;
            if (r.values[j].second != q(degrees[j]) * r.base_value) return false;
            if (r.values[j].second == 0) return false;
        }
    }
    Functional chi0 = chi_p_functionals(4)[0];
    UnboundedReport rejected = unboundedness_demo(chi0, gamma, degrees);
    if (!rejected.rejected || rejected.certificate.empty()) return false;
    detail = "c_1^i for i = 3..6 scales linearly; chi_0 rejected with certificate";
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {"s-number closed form", crit_s_closed_form},
        {"c_1-power closed form", crit_c1_power},
        {"chi_y kernel membership", crit_chi_y_kernel},
        {"surface genus formulas", crit_surface_formulas},
        {"specialization identities", crit_specializations},
        {"ring homomorphism", crit_ring_homomorphism},
        {"chi_p span structure", crit_chi_span},
        {"generator criterion", crit_generators},
        {"theorem verifications", crit_theorems},
        {"unboundedness demo", crit_unboundedness},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::printf("[%s] %2zu/10 %s%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].name.c_str(), detail.empty() ? "" : " — ", detail.c_str());
        std::fflush(stdout);
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all 10 criteria passed\n");
    return failures ? 1 : 0;
}
