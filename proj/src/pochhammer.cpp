#include "clp/pochhammer.hpp"

#include <stdexcept>

namespace clp {

namespace {
void require_q(const Rational& q) {
    if (q <= Rational(1)) throw std::invalid_argument("pochhammer: requires q > 1");
}
}  // namespace

Rational pochhammer(const Rational& q, int j, PochVariant variant) {
    require_q(q);
    if (j < 0) throw std::invalid_argument("pochhammer: negative factor count");
    Rational acc(1);
    for (int k = 1; k <= j; ++k) {
        Rational f = Rational(1) - q.pow(-k);
        if (variant == PochVariant::signed_ && k % 2 != 0) f = Rational(1) + q.pow(-k);
        acc *= f;
    }
    return acc;
}

std::vector<Rational> power_sums_geometric(const Rational& q, int count) {
    require_q(q);
    std::vector<Rational> p;
    p.reserve(count);
    for (int k = 1; k <= count; ++k) p.push_back(Rational(1) / (q.pow(k) - Rational(1)));
    return p;
}

std::vector<Rational> power_sums_alternating(const Rational& q, int count) {
    require_q(q);
    std::vector<Rational> p;
    p.reserve(count);
    for (int k = 1; k <= count; ++k) {
        Rational sign(k % 2 == 0 ? 1 : -1);
        p.push_back(Rational(1) / (q.pow(k) - sign));
    }
    return p;
}

std::vector<Rational> power_sums_odd_exponents(const Rational& q, int count) {
    require_q(q);
    std::vector<Rational> p;
    p.reserve(count);
    for (int k = 1; k <= count; ++k) p.push_back(q.pow(k) / (q.pow(2 * k) - Rational(1)));
    return p;
}

std::vector<Rational> power_sums_even_exponents(const Rational& q, int count) {
    require_q(q);
    std::vector<Rational> p;
    p.reserve(count);
    for (int k = 1; k <= count; ++k) p.push_back(Rational(1) / (q.pow(2 * k) - Rational(1)));
    return p;
}

namespace {

/* (q^1 - 1)(q^2 - 1)...(q^j - 1) */
Rational rising_qfact(int j, const Rational& q) {
    Rational acc(1);
    for (int k = 1; k <= j; ++k) acc *= q.pow(k) - Rational(1);
    return acc;
}

/* (q^1 + 1)(q^2 - 1)(q^3 + 1)...(q^j - (-1)^j) */
Rational rising_qfact_signed(int j, const Rational& q) {
    Rational acc(1);
    for (int k = 1; k <= j; ++k) acc *= q.pow(k) - Rational(k % 2 == 0 ? 1 : -1);
    return acc;
}

/* (q^2 - 1)(q^4 - 1)...(q^2j - 1) */
Rational rising_qfact_even(int j, const Rational& q) {
    Rational acc(1);
    for (int k = 1; k <= j; ++k) acc *= q.pow(2 * k) - Rational(1);
    return acc;
}

}  // namespace

Rational gl_term(int j, const Rational& q) {
    require_q(q);
    if (j < 0) throw std::invalid_argument("gl_term: negative index");
    Rational v = Rational(1) / rising_qfact(j, q);
    return j % 2 == 0 ? v : -v;
}

Rational u_term(int j, const Rational& q) {
    require_q(q);
    if (j < 0) throw std::invalid_argument("u_term: negative index");
    Rational v = Rational(1) / rising_qfact_signed(j, q);
    long tri = static_cast<long>(j) * (j + 1) / 2;  // C(j+1, 2)
    return tri % 2 == 0 ? v : -v;
}

Rational sp_term(int j, const Rational& q) {
    require_q(q);
    if (j < 0) throw std::invalid_argument("sp_term: negative index");
    Rational v = q.pow(j) / rising_qfact_even(j, q);
    return j % 2 == 0 ? v : -v;
}

namespace {
template <class Term>
Rational partial_sum(int t, const Rational& q, Term term) {
    if (t < 0) throw std::invalid_argument("partial sum: negative cut");
    Rational acc(0);
    for (int j = 0; j <= t; ++j) acc += term(j, q);
    return acc;
}
}  // namespace

Rational gl_partial_sum(int t, const Rational& q) { return partial_sum(t, q, gl_term); }
Rational u_partial_sum(int t, const Rational& q) { return partial_sum(t, q, u_term); }
Rational sp_partial_sum(int t, const Rational& q) { return partial_sum(t, q, sp_term); }

Rational gl_size_mass(int m, const Rational& q) {
    require_q(q);
    if (m < 0) throw std::invalid_argument("gl_size_mass: negative size");
    return q.pow(static_cast<long>(m) * (m - 1) / 2) / rising_qfact(m, q);
}

Rational u_size_mass(int m, const Rational& q) {
    require_q(q);
    if (m < 0) throw std::invalid_argument("u_size_mass: negative size");
    return q.pow(static_cast<long>(m) * (m - 1) / 2) / rising_qfact_signed(m, q);
}

Rational sp_size_mass(int m, const Rational& q) {
    require_q(q);
    if (m < 0) throw std::invalid_argument("sp_size_mass: negative size");
    return q.pow(static_cast<long>(m) * m) / rising_qfact_even(m, q);
}

Rational o_odd_size_mass(int m, const Rational& q) {
    require_q(q);
    if (m < 0) throw std::invalid_argument("o_odd_size_mass: negative size");
    int h = m / 2;  // floor; for odd m the exponent uses (m-1)/2 = h
    return q.pow(static_cast<long>(h) * h) / rising_qfact_even(h, q);
}

Rational o_even_size_mass(int m, const Rational& q) {
    require_q(q);
    if (m < 0) throw std::invalid_argument("o_even_size_mass: negative size");
    if (m == 0) return Rational(1);
    return sp_size_mass(m, q) + sp_size_mass(m - 1, q);
}

}  // namespace clp
