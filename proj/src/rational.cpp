#include "clp/rational.hpp"

namespace clp {

void Rational::canonical_() {
    if (v_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s), Integer(1));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw std::invalid_argument("Rational: 0^negative");
        return Rational(0);
    }
    unsigned long k = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    Integer n = ipow(num(), k), d = ipow(den(), k);
    return e < 0 ? Rational(d, n) : Rational(n, d);
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::string Rational::decimal(int digits) const {
    if (digits < 0) throw std::invalid_argument("Rational: negative digit count");
    Integer scale = ipow(Integer(10), static_cast<unsigned long>(digits));
    Integer t = num() * scale;
    bool neg = sgn(t) < 0;
    if (neg) t = -t;
    // round half away from zero
    Integer r = (2 * t + den()) / (2 * den());
    Integer ip = r / scale, fp = r % scale;
    std::string frac = fp.get_str();
    frac.insert(0, static_cast<size_t>(digits) - frac.size(), '0');
    std::string out = neg && (ip != 0 || fp != 0) ? "-" : "";
    out += ip.get_str();
    if (digits > 0) out += "." + frac;
    return out;
}

Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

}  // namespace clp
