#pragma once

#include "clp/interval.hpp"
#include "clp/rational.hpp"

namespace clp {

/* The four factor sequences whose infinite products the measures need.
 * Factor at index i >= 1:
 *   gl:        1 - u q^-i
 *   unitary:   1 + u (-q)^-i
 *   odd_exp:   1 - u^2 q^-(2i-1)
 *   even_exp:  1 - u^2 q^-2i
 */
enum class ProductFamily { gl, unitary, odd_exp, even_exp };

struct ProductKind {
    ProductFamily family;
    bool reciprocal = false;
};

inline constexpr ProductKind GL_PROD{ProductFamily::gl, false};
inline constexpr ProductKind U_PROD{ProductFamily::unitary, false};
inline constexpr ProductKind ODD_EXP_PROD{ProductFamily::odd_exp, false};
inline constexpr ProductKind EVEN_EXP_RECIP{ProductFamily::even_exp, true};

/* Certified enclosure of prod_{i >= first_index} factor_i at numeric (q, u):
 * the first `nfactors` factors are multiplied exactly, the rest are bounded
 * through the exact geometric sum S of their deviations from 1
 * (Weierstrass: the tail lies in [1 - S, 1] when every remaining factor is
 * <= 1, inside [1 - S, 1/(1 - S)] otherwise).  Enclosures are nested as
 * nfactors grows.
 *
 * Requires q >= 2, |u| <= 1, every multiplied factor positive, and S < 1;
 * the unitary family additionally requires first_index = 1 (its tail is
 * bounded over consecutive factor pairs, which start at 1). */
Interval infinite_product(ProductKind kind, const Rational& q, const Rational& u, int nfactors,
                          int first_index = 1);

}  // namespace clp
