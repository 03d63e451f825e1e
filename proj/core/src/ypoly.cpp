#include "cobcalc/ypoly.hpp"

#include <stdexcept>

namespace cobcalc {

YPoly::YPoly(Rational constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

YPoly::YPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

YPoly YPoly::y() { return YPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

Rational YPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(k)];
}

void YPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

YPoly& YPoly::operator+=(const YPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

YPoly& YPoly::operator-=(const YPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

YPoly YPoly::operator+(const YPoly& o) const {
    YPoly r = *this;
    r += o;
    return r;
}

YPoly YPoly::operator-(const YPoly& o) const {
    YPoly r = *this;
    r -= o;
    return r;
}

YPoly YPoly::operator*(const YPoly& o) const {
    if (is_zero() || o.is_zero()) return YPoly();
    std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            if (o.c_[j] != 0) out[i + j] += c_[i] * o.c_[j];
    }
    return YPoly(std::move(out));
}

YPoly& YPoly::operator*=(const YPoly& o) {
    *this = *this * o;
    return *this;
}

YPoly YPoly::operator-() const {
    YPoly r = *this;
    for (Rational& x : r.c_) x = -x;
    return r;
}

Rational YPoly::at(const Rational& y) const {
    Rational v(0);
    for (size_t i = c_.size(); i-- > 0;) v = v * y + c_[i];
    return v;
}

std::string YPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        const Rational& c = c_[k];
        if (c == 0) continue;
        Rational abs = c < 0 ? Rational(-c) : c;
        std::string mag;
        if (k == 0)
            mag = pretty_str(abs);
        else {
            std::string power = (k == 1) ? "y" : "y^" + std::to_string(k);
            mag = (abs == 1) ? power : pretty_str(abs) + " " + power;
        }
        if (first) {
            out = (c < 0 ? "-" : "") + mag;
            first = false;
        } else {
            out += (c < 0 ? " - " : " + ") + mag;
        }
    }
    return out;
}

YPoly operator*(const Rational& s, const YPoly& p) { return YPoly(s) * p; }

YPoly one_plus_y_power(int k) {
    if (k < 0) throw std::invalid_argument("one_plus_y_power: negative exponent");
    std::vector<Rational> c(static_cast<size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) c[static_cast<size_t>(j)] = binomial(k, j);
    return YPoly(std::move(c));
}

}  // namespace cobcalc
