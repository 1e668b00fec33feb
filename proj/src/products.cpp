#include "clp/products.hpp"

#include <stdexcept>

namespace clp {

namespace {

Rational factor_at(ProductFamily fam, const Rational& q, const Rational& u, int i) {
    switch (fam) {
        case ProductFamily::gl:
            return Rational(1) - u * q.pow(-i);
        case ProductFamily::unitary: {
            Rational t = u * q.pow(-i);
            return i % 2 == 0 ? Rational(1) + t : Rational(1) - t;
        }
        case ProductFamily::odd_exp:
            return Rational(1) - u * u * q.pow(-(2 * i - 1));
        case ProductFamily::even_exp:
            return Rational(1) - u * u * q.pow(-2 * i);
    }
    throw std::logic_error("factor_at: unreachable");
}

/* sum_{i >= t} q^(-a i + b) = q^(b - a t) * q^a / (q^a - 1) */
Rational geometric_from(const Rational& q, int a, int b, int t) {
    return q.pow(b - a * t) * q.pow(a) / (q.pow(a) - Rational(1));
}

/* Exact sum of |factor_i - 1| over all i >= t (pairs k >= t for unitary). */
Rational tail_deviation_sum(ProductFamily fam, const Rational& q, const Rational& u, int t) {
    Rational au = u.abs();
    switch (fam) {
        case ProductFamily::gl:
            return au * geometric_from(q, 1, 0, t);
        case ProductFamily::unitary:
            // pair k = factors 2k-1, 2k: (1 - u q^-(2k-1))(1 + u q^-2k)
            //   = 1 - u (q-1) q^-2k - u^2 q^-(4k-1)
            return au * (q - Rational(1)) * geometric_from(q, 2, 0, t) +
                   u * u * geometric_from(q, 4, 1, t);
        case ProductFamily::odd_exp:
            return u * u * geometric_from(q, 2, 1, t);
        case ProductFamily::even_exp:
            return u * u * geometric_from(q, 2, 0, t);
    }
    throw std::logic_error("tail_deviation_sum: unreachable");
}

}  // namespace

Interval infinite_product(ProductKind kind, const Rational& q, const Rational& u, int nfactors,
                          int first_index) {
    if (q < Rational(2)) throw std::invalid_argument("infinite_product: requires q >= 2");
    if (u.abs() > Rational(1)) throw std::invalid_argument("infinite_product: requires |u| <= 1");
    if (nfactors < 1) throw std::invalid_argument("infinite_product: need at least one factor");
    if (first_index < 1) throw std::invalid_argument("infinite_product: factor indices start at 1");

    bool unitary = kind.family == ProductFamily::unitary;
    if (unitary && first_index != 1)
        throw std::invalid_argument("infinite_product: unitary family starts at index 1");

    // Unitary factors are handled in consecutive pairs; round the cut up so
    // the tail starts on a pair boundary.
    if (unitary && nfactors % 2 != 0) ++nfactors;

    Rational partial(1);
    for (int i = first_index; i < first_index + nfactors; ++i) {
        Rational f = factor_at(kind.family, q, u, i);
        if (f.sign() <= 0)
            throw std::domain_error("infinite_product: nonpositive factor at these parameters");
        partial *= f;
    }

    int tail_from = unitary ? nfactors / 2 + 1 : first_index + nfactors;
    Rational s = tail_deviation_sum(kind.family, q, u, tail_from);
    if (s >= Rational(1))
        throw std::domain_error("infinite_product: tail bound invalid, increase the factor count");

    // With u >= 0 every remaining factor (pair, for unitary) is <= 1.
    Rational tail_lo = Rational(1) - s;
    Rational tail_hi = u.sign() >= 0 ? Rational(1) : Rational(1) / (Rational(1) - s);

    Interval enclosure{partial * tail_lo, partial * tail_hi};
    if (kind.reciprocal) enclosure = reciprocal(enclosure);
    return enclosure;
}

}  // namespace clp
