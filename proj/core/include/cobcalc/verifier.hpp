#ifndef COBCALC_VERIFIER_HPP
#define COBCALC_VERIFIER_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cobcalc/bundles.hpp"
#include "cobcalc/cobordism.hpp"
#include "cobcalc/linalg.hpp"
#include "cobcalc/partition.hpp"

namespace cobcalc {

/// The four ideals whose annihilators are computed degree by degree:
/// differences of oriented-diffeomorphic pairs (do), diffeomorphic pairs
/// (d), homeomorphic pairs (h), and the kernel of the chi_y genus (betti).
enum class IdealKind { oriented_diffeo, diffeo, homeo, chi_kernel };

std::string ideal_kind_name(IdealKind kind);                    // "do", "d", "h", "betti"
std::optional<IdealKind> ideal_kind_from_name(std::string_view name);

/// Sequence of ring generators indexed by degree, each passing Milnor's
/// criterion (nonzero s-number in its degree).
struct GeneratorSequence {
    enum class Kind { beta, gamma, cp };
    Kind kind = Kind::cp;
    std::map<int, CobordismClass> classes;

    const CobordismClass& at(int k) const;
    int max_degree() const { return classes.empty() ? 0 : classes.rbegin()->first; }
};

/// beta_1 = [CP^1], beta_2 = [X] - [partner(X)], and for k >= 3
/// beta_k = [P(E) over X, rank k-1, c_2 = twist] - [P(F) over partner(X),
/// rank k-1, c_2 = -twist]. Requires a nonzero signature and twist
/// (std::invalid_argument otherwise: the generator criterion fails).
GeneratorSequence beta_sequence(const SurfaceModel& x, const Rational& twist, int max_deg);

/// gamma_1 = [CP^1], gamma_2 = [CP^2], gamma_i = abelian_pbundle(i-1, c)
/// for i >= 3. Requires c != 0.
GeneratorSequence gamma_sequence(const Rational& c, int max_deg);

/// The projective spaces themselves: g_k = [CP^k].
GeneratorSequence cp_sequence(int max_deg);

/// Products g_{I_1} * ... * g_{I_l} for every partition I of n.
std::map<Partition, CobordismClass, PartitionOrder> monomial_classes(
    const GeneratorSequence& g, int n);

/// Rows are the Chern-number coordinates of the monomial classes, in
/// canonical partition order both ways. Invertibility certifies that the
/// sequence generates in degree n.
RationalMatrix evaluation_matrix(const GeneratorSequence& g, int n);

/// Whether the generator monomial indexed by the partition lies in the
/// ideal, per the exhibited generators and the ideal property:
///   do: a part that is odd and >= 3, or a part 1 together with an even part
///   d:  a part >= 3, or a 1 together with a 2, or two 2s
///   h:  any part >= 2
///   betti: a part >= 3
bool ideal_membership_rule(IdealKind kind, const Partition& p);

struct VerifyReport {
    IdealKind kind = IdealKind::oriented_diffeo;
    int dim = 0;
    std::vector<Partition> in_ideal;
    int annihilator_dim = 0;
    int expected_dim = 0;
    bool equal = false;
    bool chi_y_vanishes = true;  // checked for the betti kind only
    std::optional<Functional> witness;  // populated on mismatch
    std::string message;

    bool passed() const { return equal && chi_y_vanishes; }
};

/// Spans the in-ideal generator monomials in degree n, computes the exact
/// annihilator of that span, and compares it (as a canonical subspace,
/// never by dimension alone) with the invariant span the theorems predict:
///   do, n odd:  <euler>
///   do, n even: <euler> + all Pontryagin functionals
///   d: full dual space at n = 2, <euler> for n >= 3
///   h: <euler>
///   betti: <chi_0, ..., chi_n>
/// For the betti kind additionally checks that chi_y vanishes on every
/// in-ideal monomial. Requires n >= 2 (n >= 3 for do) and generators with
/// nonzero s-numbers up to n.
VerifyReport verify_theorem(IdealKind kind, int n, const GeneratorSequence& g);

struct UnboundedReport {
    bool rejected = false;                      // functional lies in span{chi_p}
    std::vector<Rational> certificate;          // chi_p coefficients when rejected
    Partition witness;                          // in-ideal monomial with f != 0
    Rational base_value;                        // f on the witness monomial
    std::vector<std::pair<long, Rational>> values;  // (d, f(cover_scale(witness, d)))
    std::string functional_label;
};

/// Exhibits the unboundedness of a Chern-number functional outside
/// span{chi_p}: finds an in-ideal monomial gamma_I with f(gamma_I) != 0
/// and tabulates f on its degree-d coverings. A functional inside the
/// span is rejected with the membership certificate.
UnboundedReport unboundedness_demo(const Functional& f, const GeneratorSequence& g,
                                   const std::vector<long>& degrees);

}  // namespace cobcalc

#endif
