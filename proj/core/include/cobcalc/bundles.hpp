#ifndef COBCALC_BUNDLES_HPP
#define COBCALC_BUNDLES_HPP

#include <array>
#include <string>
#include <vector>

#include "cobcalc/cobordism.hpp"
#include "cobcalc/rational.hpp"

namespace cobcalc {

/// Algebraic surface reduced to its two Chern numbers: a = c_1^2[S] and
/// b = c_2[S] (the Euler number). Everything downstream needs only these.
struct SurfaceModel {
    Rational c1sq;
    Rational c2;
    std::string label;

    Rational signature() const { return (c1sq - 2 * c2) / 3; }
    Rational chi0() const { return (c1sq + c2) / 12; }
};

/// The surface with the same Euler number and opposite signature:
/// c_1^2 -> 4 c_2 - c_1^2, c_2 unchanged. An involution.
SurfaceModel partner_surface(const SurfaceModel& x);

/// Feasibility report for a surface model: c_2 > 0 and the Miyaoka-Yau
/// inequality c_1^2 <= 3 c_2, plus integrality of chi_0 = (c_1^2+c_2)/12.
struct GeographyReport {
    bool pass = false;           // c2 > 0 and Miyaoka-Yau both hold
    bool c2_positive = false;
    bool miyaoka_yau = false;
    bool chi0_integral = false;
    Rational chi0;
};

GeographyReport my_check(const SurfaceModel& s);

/// Weakly decreasing quadruple with a1^2+a2^2+a3^2+a4^2 = m, the
/// lexicographically greatest one (deterministic). Requires m >= 0.
std::array<long long, 4> four_squares(long long m);

/// Rank-(n+1) holomorphic bundle over a surface with c_1 = 0 (hard-wired)
/// and second Chern number c2. rank >= 2.
struct BundleModel {
    int rank = 2;
    Rational c2;
};

/// Cohomology of a CP^n-bundle P(E) over a surface S, modeled over the
/// base classes 1, kappa = c_1(S), omega = orientation class with
/// kappa^2 = c1sq * omega, kappa*omega = omega^2 = 0, and the fiberwise
/// class y subject to y^{n+1} + c_1(E) y^n + c_2(E) y^{n-1} = 0.
/// Elements are y-polynomials with (scalar, kappa, omega) coefficients;
/// <omega y^n> evaluates to 1. The c_1(E) term of the relation is carried
/// in full but every construction in this library feeds it zero.
class FiberRing {
public:
    FiberRing(const SurfaceModel& s, const BundleModel& e);

    struct Coef {
        Rational s, k, w;  // scalar, kappa and omega components
    };
    using Elem = std::vector<Coef>;  // index = power of y

    int fiber_dim() const { return n_; }

    Elem zero() const;
    Elem one() const;
    Elem add(const Elem& x, const Elem& y) const;
    Elem mul(const Elem& x, const Elem& y) const;

    /// Total Chern class of P(E):
    /// ((1+y)^{n+1} + c_1(E)(1+y)^n + c_2(E)(1+y)^{n-1}) * (1 + kappa + c_2(S) omega).
    Elem total_chern() const;

    /// Degree-i graded piece of an element (y carries degree 1, kappa 1,
    /// omega 2).
    Elem graded_piece(const Elem& x, int degree) const;

    /// Evaluation against the fundamental class: coefficient of omega y^n.
    Rational integrate(const Elem& x) const;

private:
    void reduce(Elem& x) const;

    int n_;           // fiber dimension, rank - 1
    Rational a_, b_;  // c_1^2 and c_2 of the base
    Rational c1e_;    // kappa-multiple in c_1(E); always zero here
    Rational c2e_;    // second Chern number of E
};

/// Full Chern-number vector of P(E) in complex dimension rank+1.
/// Requires rank >= 2. The s-number of the result is -(n+1)(n+3) c and
/// the top Chern number is (n+1) b, with n = rank-1.
CobordismClass projectivization_chern(const SurfaceModel& s, const BundleModel& e);

/// Projectivization over the (0,0) surface (Abelian base): the chi_y genus
/// vanishes identically on these classes. Requires rank >= 2.
CobordismClass abelian_pbundle(int rank, const Rational& c);

}  // namespace cobcalc

#endif
