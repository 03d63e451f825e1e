#include "cobcalc/rational.hpp"

#include <stdexcept>

namespace cobcalc {

std::string fraction_str(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string pretty_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer in rational");
    // mpz ignores whitespace; require strict [sign]digits here
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        bool sign_ok = (i == 0 && (c == '-' || c == '+') && s.size() > 1);
        if (!sign_ok && (c < '0' || c > '9'))
            throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    }
    Integer z;
    if (z.set_str(std::string(s), 10) != 0)
        throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    return z;
}

}  // namespace

Rational parse_rational(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(s));
    }
    Integer num = parse_integer(s.substr(0, slash));
    Integer den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Rational binomial(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    Integer z;
    mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(z);
}

}  // namespace cobcalc
