#include "cobcalc/bundles.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "cobcalc/partition.hpp"

namespace cobcalc {

SurfaceModel partner_surface(const SurfaceModel& x) {
    SurfaceModel y;
    y.c1sq = 4 * x.c2 - x.c1sq;
    y.c2 = x.c2;
    y.label = x.label.empty() ? "partner" : "partner(" + x.label + ")";
    return y;
}

GeographyReport my_check(const SurfaceModel& s) {
    GeographyReport r;
    r.c2_positive = s.c2 > 0;
    r.miyaoka_yau = s.c1sq <= 3 * s.c2;
    r.chi0 = s.chi0();
    r.chi0_integral = is_integer(r.chi0);
    r.pass = r.c2_positive && r.miyaoka_yau;
    return r;
}

namespace {

long long isqrt_floor(long long m) {
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(m)));
    while (r * r > m) --r;
    while ((r + 1) * (r + 1) <= m) ++r;
    return r;
}

bool four_squares_rec(long long m, int slot, long long max_value,
                      std::array<long long, 4>& out) {
    if (slot == 4) return m == 0;
    // remaining slots must be able to absorb m
    for (long long v = std::min(max_value, isqrt_floor(m)); v >= 0; --v) {
        out[static_cast<size_t>(slot)] = v;
        if (four_squares_rec(m - v * v, slot + 1, v, out)) return true;
        if (v == 0) break;
    }
    return false;
}

}  // namespace

std::array<long long, 4> four_squares(long long m) {
    if (m < 0) throw std::invalid_argument("four_squares: m must be >= 0");
    std::array<long long, 4> out{0, 0, 0, 0};
    // Lagrange guarantees a solution; descending search finds the
    // lexicographically greatest one first.
    if (!four_squares_rec(m, 0, m, out))
        throw std::logic_error("four_squares: no decomposition found");
    return out;
}

FiberRing::FiberRing(const SurfaceModel& s, const BundleModel& e)
    : n_(e.rank - 1), a_(s.c1sq), b_(s.c2), c1e_(0), c2e_(e.c2) {
    if (e.rank < 2) throw std::invalid_argument("FiberRing: bundle rank must be >= 2");
}

FiberRing::Elem FiberRing::zero() const { return Elem(); }

FiberRing::Elem FiberRing::one() const {
    Elem x(1);
    x[0].s = 1;
    return x;
}

FiberRing::Elem FiberRing::add(const Elem& x, const Elem& y) const {
    Elem out = x;
    if (out.size() < y.size()) out.resize(y.size());
    for (size_t i = 0; i < y.size(); ++i) {
        out[i].s += y[i].s;
        out[i].k += y[i].k;
        out[i].w += y[i].w;
    }
    return out;
}

void FiberRing::reduce(Elem& x) const {
    // rewrite y^m for m > n via y^{n+1} = -c_1(E) y^n - c_2(E) y^{n-1};
    // kappa y^m collapses through kappa^2 = a omega, omega y^m dies.
    for (size_t m = x.size(); m-- > 0;) {
        if (static_cast<int>(m) <= n_) break;
        Coef c = x[m];
        x[m] = Coef{};
        if (c.s != 0) {
            x[m - 1].k += -c1e_ * c.s;
            x[m - 2].w += -c2e_ * c.s;
        }
        if (c.k != 0) x[m - 1].w += -c1e_ * a_ * c.k;
        // omega component reduces to zero
    }
    while (!x.empty() && x.back().s == 0 && x.back().k == 0 && x.back().w == 0) x.pop_back();
}

FiberRing::Elem FiberRing::mul(const Elem& x, const Elem& y) const {
    if (x.empty() || y.empty()) return Elem();
    Elem out(x.size() + y.size() - 1);
    for (size_t i = 0; i < x.size(); ++i) {
        const Coef& p = x[i];
        if (p.s == 0 && p.k == 0 && p.w == 0) continue;
        for (size_t j = 0; j < y.size(); ++j) {
            const Coef& q = y[j];
            Coef& r = out[i + j];
            if (p.s != 0) {
                if (q.s != 0) r.s += p.s * q.s;
                if (q.k != 0) r.k += p.s * q.k;
                if (q.w != 0) r.w += p.s * q.w;
            }
            if (p.k != 0) {
                if (q.s != 0) r.k += p.k * q.s;
                if (q.k != 0) r.w += a_ * p.k * q.k;
            }
            if (p.w != 0 && q.s != 0) r.w += p.w * q.s;
        }
    }
    reduce(out);
    return out;
}

FiberRing::Elem FiberRing::total_chern() const {
    // (1+y)^{n+1} + c_1(E)(1+y)^n + c_2(E)(1+y)^{n-1}, then times c(S)
    Elem fiber(static_cast<size_t>(n_) + 2);
    for (int j = 0; j <= n_ + 1; ++j) fiber[static_cast<size_t>(j)].s = binomial(n_ + 1, j);
    for (int j = 0; j <= n_; ++j) fiber[static_cast<size_t>(j)].k += c1e_ * binomial(n_, j);
    for (int j = 0; j <= n_ - 1; ++j) fiber[static_cast<size_t>(j)].w += c2e_ * binomial(n_ - 1, j);
    reduce(fiber);

    Elem base(1);
    base[0] = Coef{Rational(1), Rational(1), b_};  // 1 + kappa + c_2(S) omega
    return mul(fiber, base);
}

FiberRing::Elem FiberRing::graded_piece(const Elem& x, int degree) const {
    Elem out(x.size());
    for (size_t m = 0; m < x.size(); ++m) {
        if (static_cast<int>(m) == degree) out[m].s = x[m].s;
        if (static_cast<int>(m) == degree - 1) out[m].k = x[m].k;
        if (static_cast<int>(m) == degree - 2) out[m].w = x[m].w;
    }
    while (!out.empty() && out.back().s == 0 && out.back().k == 0 && out.back().w == 0)
        out.pop_back();
    return out;
}

Rational FiberRing::integrate(const Elem& x) const {
    if (static_cast<int>(x.size()) <= n_) return Rational(0);
    return x[static_cast<size_t>(n_)].w;
}

CobordismClass projectivization_chern(const SurfaceModel& s, const BundleModel& e) {
    if (e.rank < 2) throw std::invalid_argument("projectivization_chern: rank must be >= 2");
    const int dim = e.rank + 1;  // (rank-1) + 2
    FiberRing ring(s, e);
    const FiberRing::Elem total = ring.total_chern();

    std::vector<FiberRing::Elem> chern_class(static_cast<size_t>(dim) + 1);
    chern_class[0] = ring.one();
    for (int i = 1; i <= dim; ++i) chern_class[static_cast<size_t>(i)] = ring.graded_piece(total, i);

    // one product per node of the descending-partition tree, sharing prefixes
    std::map<Partition, Rational, PartitionOrder> numbers;
    std::vector<int> stack;
    std::function<void(const FiberRing::Elem&, int, int)> rec =
        [&](const FiberRing::Elem& prod, int remaining, int max_part) {
            if (remaining == 0) {
                numbers.emplace(Partition(stack), ring.integrate(prod));
                return;
            }
            for (int k = std::min(remaining, max_part); k >= 1; --k) {
                stack.push_back(k);
                rec(ring.mul(prod, chern_class[static_cast<size_t>(k)]), remaining - k, k);
                stack.pop_back();
            }
        };
    rec(ring.one(), dim, dim);

    std::string label = "P(E) rank " + std::to_string(e.rank) + " over (" + pretty_str(s.c1sq) +
                        "," + pretty_str(s.c2) + "), c2(E)=" + pretty_str(e.c2);
    return CobordismClass(dim, std::move(numbers), std::move(label));
}

CobordismClass abelian_pbundle(int rank, const Rational& c) {
    SurfaceModel abelian{Rational(0), Rational(0), "abelian"};
    CobordismClass out = projectivization_chern(abelian, BundleModel{rank, c});
    out.set_label("P(E_" + pretty_str(c) + ") over abelian surface, rank " +
                  std::to_string(rank));
    return out;
}

}  // namespace cobcalc
