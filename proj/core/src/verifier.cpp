#include "cobcalc/verifier.hpp"

#include <functional>
#include <stdexcept>

#include "cobcalc/genus.hpp"

namespace cobcalc {

std::string ideal_kind_name(IdealKind kind) {
    switch (kind) {
        case IdealKind::oriented_diffeo: return "do";
        case IdealKind::diffeo: return "d";
        case IdealKind::homeo: return "h";
        case IdealKind::chi_kernel: return "betti";
    }
    return "?";
}

std::optional<IdealKind> ideal_kind_from_name(std::string_view name) {
    if (name == "do") return IdealKind::oriented_diffeo;
    if (name == "d") return IdealKind::diffeo;
    if (name == "h") return IdealKind::homeo;
    if (name == "betti") return IdealKind::chi_kernel;
    return std::nullopt;
}

const CobordismClass& GeneratorSequence::at(int k) const {
    auto it = classes.find(k);
    if (it == classes.end())
        throw std::invalid_argument("generator sequence has no degree " + std::to_string(k));
    return it->second;
}

GeneratorSequence beta_sequence(const SurfaceModel& x, const Rational& twist, int max_deg) {
    if (max_deg < 1) throw std::invalid_argument("beta_sequence: max_deg must be >= 1");
    if (x.signature() == 0)
        throw std::invalid_argument("beta_sequence: surface signature must be nonzero");
    if (twist == 0) throw std::invalid_argument("beta_sequence: twist must be nonzero");

    const SurfaceModel y = partner_surface(x);
    GeneratorSequence g;
    g.kind = GeneratorSequence::Kind::beta;
    g.classes.emplace(1, cp_class(1));
    if (max_deg >= 2) {
        CobordismClass x_cls(2, {{Partition({1, 1}), x.c1sq}, {Partition({2}), x.c2}}, "X");
        CobordismClass y_cls(2, {{Partition({1, 1}), y.c1sq}, {Partition({2}), y.c2}}, "Y");
        CobordismClass beta2 = linear_combine({{Rational(1), x_cls}, {Rational(-1), y_cls}});
        beta2.set_label("beta_2 = [X] - [Y]");
        g.classes.emplace(2, std::move(beta2));
    }
    for (int k = 3; k <= max_deg; ++k) {
        CobordismClass xk = projectivization_chern(x, BundleModel{k - 1, twist});
        CobordismClass yk = projectivization_chern(y, BundleModel{k - 1, -twist});
        CobordismClass beta = linear_combine({{Rational(1), xk}, {Rational(-1), yk}});
        beta.set_label("beta_" + std::to_string(k));
        g.classes.emplace(k, std::move(beta));
    }
    return g;
}

GeneratorSequence gamma_sequence(const Rational& c, int max_deg) {
    if (max_deg < 1) throw std::invalid_argument("gamma_sequence: max_deg must be >= 1");
    if (c == 0) throw std::invalid_argument("gamma_sequence: twist must be nonzero");
    GeneratorSequence g;
    g.kind = GeneratorSequence::Kind::gamma;
    g.classes.emplace(1, cp_class(1));
    if (max_deg >= 2) g.classes.emplace(2, cp_class(2));
    for (int i = 3; i <= max_deg; ++i) {
        CobordismClass gi = abelian_pbundle(i - 1, c);
        gi.set_label("gamma_" + std::to_string(i));
        g.classes.emplace(i, std::move(gi));
    }
    return g;
}

GeneratorSequence cp_sequence(int max_deg) {
    if (max_deg < 1) throw std::invalid_argument("cp_sequence: max_deg must be >= 1");
    GeneratorSequence g;
    g.kind = GeneratorSequence::Kind::cp;
    for (int k = 1; k <= max_deg; ++k) g.classes.emplace(k, cp_class(k));
    return g;
}

std::map<Partition, CobordismClass, PartitionOrder> monomial_classes(
    const GeneratorSequence& g, int n) {
    if (g.max_degree() < n)
        throw std::invalid_argument("generator sequence not defined up to degree " +
                                    std::to_string(n));
    std::map<Partition, CobordismClass, PartitionOrder> out;
    // share prefix products over the descending-partition tree
    std::vector<int> stack;
    std::function<void(const CobordismClass&, int, int)> rec =
        [&](const CobordismClass& prod, int remaining, int max_part) {
            if (remaining == 0) {
                out.emplace(Partition(stack), prod);
                return;
            }
            for (int k = std::min(remaining, max_part); k >= 1; --k) {
                stack.push_back(k);
                rec(product(prod, g.at(k)), remaining - k, k);
                stack.pop_back();
            }
        };
    rec(cp_class(0), n, n);
    return out;
}

RationalMatrix evaluation_matrix(const GeneratorSequence& g, int n) {
    const std::vector<Partition> parts = enumerate_partitions(n);
    const auto monomials = monomial_classes(g, n);
    RationalMatrix m(static_cast<int>(parts.size()), static_cast<int>(parts.size()));
    for (size_t i = 0; i < parts.size(); ++i)
        m.set_row(static_cast<int>(i), monomials.at(parts[i]).coordinates());
    return m;
}

bool ideal_membership_rule(IdealKind kind, const Partition& p) {
    bool has_one = false, has_two = false, has_even = false;
    int twos = 0;
    bool big_odd = false, big = false, at_least_two = false;
    for (int part : p.parts()) {
        if (part == 1) has_one = true;
        if (part == 2) {
            has_two = true;
            ++twos;
        }
        if (part >= 2) at_least_two = true;
        if (part % 2 == 0) has_even = true;
        if (part >= 3) {
            big = true;
            if (part % 2) big_odd = true;
        }
    }
    switch (kind) {
        case IdealKind::oriented_diffeo:
            return big_odd || (has_one && has_even);
        case IdealKind::diffeo:
            return big || (has_one && has_two) || twos >= 2;
        case IdealKind::homeo:
            return at_least_two;
        case IdealKind::chi_kernel:
            return big;
    }
    return false;
}

namespace {

std::vector<std::vector<Rational>> expected_annihilator_vectors(IdealKind kind, int n) {
    std::vector<std::vector<Rational>> vecs;
    switch (kind) {
        case IdealKind::oriented_diffeo:
            vecs.push_back(euler_functional(n).coordinates());
            if (n % 2 == 0)
                for (const auto& [index, f] : pontryagin_functionals(n))
                    vecs.push_back(f.coordinates());
            break;
        case IdealKind::diffeo:
            if (n == 2) {
                for (const Partition& p : enumerate_partitions(2)) {
                    Functional coord(2, {{p, Rational(1)}});
                    vecs.push_back(coord.coordinates());
                }
            } else {
                vecs.push_back(euler_functional(n).coordinates());
            }
            break;
        case IdealKind::homeo:
            vecs.push_back(euler_functional(n).coordinates());
            break;
        case IdealKind::chi_kernel:
            for (const Functional& chi : chi_p_functionals(n)) vecs.push_back(chi.coordinates());
            break;
    }
    return vecs;
}

// a functional separating the two subspaces, for failure reports
std::optional<Functional> mismatch_witness(int n, const Subspace& annihilator,
                                           const Subspace& expected) {
    for (int r = 0; r < annihilator.basis().rows(); ++r) {
        std::vector<Rational> v = annihilator.basis().row(r);
        if (!expected.contains(v))
            return functional_from_coordinates(n, v, "annihilator \\ expected");
    }
    for (int r = 0; r < expected.basis().rows(); ++r) {
        std::vector<Rational> v = expected.basis().row(r);
        if (!annihilator.contains(v))
            return functional_from_coordinates(n, v, "expected \\ annihilator");
    }
    return std::nullopt;
}

}  // namespace

VerifyReport verify_theorem(IdealKind kind, int n, const GeneratorSequence& g) {
    const int min_dim = (kind == IdealKind::oriented_diffeo) ? 3 : 2;
    if (n < min_dim)
        throw std::invalid_argument("verify_theorem: dimension below theorem range");
    for (int k = 1; k <= n; ++k)
        if (s_number(g.at(k)) == 0)
            throw std::invalid_argument("verify_theorem: generator criterion fails in degree " +
                                        std::to_string(k));

    VerifyReport report;
    report.kind = kind;
    report.dim = n;

    const auto monomials = monomial_classes(g, n);
    std::vector<std::vector<Rational>> in_ideal_rows;
    for (const auto& [index, cls] : monomials)
        if (ideal_membership_rule(kind, index)) {
            report.in_ideal.push_back(index);
            in_ideal_rows.push_back(cls.coordinates());
        }

    const int pi_n = static_cast<int>(enumerate_partitions(n).size());
    RationalMatrix span_rows(static_cast<int>(in_ideal_rows.size()), pi_n);
    for (size_t i = 0; i < in_ideal_rows.size(); ++i)
        span_rows.set_row(static_cast<int>(i), in_ideal_rows[i]);

    const Subspace annihilator = Subspace::from_rows(kernel_basis(span_rows));
    const Subspace expected = Subspace::span(pi_n, expected_annihilator_vectors(kind, n));

    report.annihilator_dim = annihilator.dim();
    report.expected_dim = expected.dim();
    report.equal = annihilator == expected;

    if (kind == IdealKind::chi_kernel) {
        const ParametricFunctional& chi = chi_y_functional(n);
        for (const Partition& index : report.in_ideal)
            if (!chi.evaluate(monomials.at(index)).is_zero()) {
                report.chi_y_vanishes = false;
                report.message = "chi_y does not vanish on the monomial " + index.str() + "; ";
                break;
            }
    }

    if (!report.equal) {
        report.witness = mismatch_witness(n, annihilator, expected);
        report.message +=
            "annihilator and invariant span differ; this indicates an implementation "
            "bug, not a counterexample";
    } else if (report.chi_y_vanishes) {
        report.message = "annihilator equals the invariant span";
    }
    return report;
}

UnboundedReport unboundedness_demo(const Functional& f, const GeneratorSequence& g,
                                   const std::vector<long>& degrees) {
    const int n = f.dim();
    UnboundedReport report;
    report.functional_label = f.label();

    std::vector<std::vector<Rational>> chi_vecs;
    for (const Functional& chi : chi_p_functionals(n)) chi_vecs.push_back(chi.coordinates());
    if (auto cert = express_in_span(chi_vecs, f.coordinates())) {
        report.rejected = true;
        report.certificate = *cert;
        return report;
    }

    const auto monomials = monomial_classes(g, n);
    bool found = false;
    for (const auto& [index, cls] : monomials) {
        if (!ideal_membership_rule(IdealKind::chi_kernel, index)) continue;
        Rational value = f.evaluate(cls);
        if (value != 0) {
            report.witness = index;
            report.base_value = value;
            found = true;
            break;
        }
    }
    if (!found)
        throw std::logic_error(
            "unboundedness_demo: functional outside span{chi_p} vanished on every in-ideal "
            "monomial; this indicates an implementation bug");

    const CobordismClass& witness_class = monomials.at(report.witness);
    for (long d : degrees)
        report.values.emplace_back(d, f.evaluate(cover_scale(witness_class, d)));
    return report;
}

}  // namespace cobcalc
