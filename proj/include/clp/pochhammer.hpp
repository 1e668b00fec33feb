#pragma once

#include <vector>

#include "clp/rational.hpp"

namespace clp {

enum class PochVariant {
    plain,    // k-th factor 1 - q^-k
    signed_,  // k-th factor 1 - (-1)^k q^-k
};

/* prod_{k=1..j} of the variant's factor; j = 0 gives 1.  Requires q > 1. */
Rational pochhammer(const Rational& q, int j, PochVariant variant);

/* Exact power sums of the factor-variable families behind the four infinite
 * products, summed as geometric series:
 *   x_i = q^-i:              p_k = 1/(q^k - 1)
 *   x_i = (-1)^(i+1) q^-i:   p_k = 1/(q^k - (-1)^k)
 *   x_i = q^-(2i-1):         p_k = q^k/(q^2k - 1)
 *   x_i = q^-2i:             p_k = 1/(q^2k - 1)
 */
std::vector<Rational> power_sums_geometric(const Rational& q, int count);
std::vector<Rational> power_sums_alternating(const Rational& q, int count);
std::vector<Rational> power_sums_odd_exponents(const Rational& q, int count);
std::vector<Rational> power_sums_even_exponents(const Rational& q, int count);

/* Alternating partial-sum terms appearing in the finite-n measures:
 *   gl_term(j)  = (-1)^j / ((q^j - 1) ... (q - 1))
 *   u_term(j)   = (-1)^C(j+1,2) / ((q^j - (-1)^j) ... (q + 1))
 *   sp_term(j)  = (-1)^j q^j / ((q^2j - 1) ... (q^2 - 1))
 * and their partial sums over j = 0..t. */
Rational gl_term(int j, const Rational& q);
Rational u_term(int j, const Rational& q);
Rational sp_term(int j, const Rational& q);
Rational gl_partial_sum(int t, const Rational& q);
Rational u_partial_sum(int t, const Rational& q);
Rational sp_partial_sum(int t, const Rational& q);

/* Total 1/|Aut| mass carried by the size-m stratum of each family's support
 * (the u^m coefficient of the corresponding generating function):
 *   gl:  q^C(m,2) / ((q^m - 1) ... (q - 1))
 *   u:   q^C(m,2) / ((q^m - (-1)^m) ... (q + 1))
 *   sp:  size 2m,  q^(m^2) / ((q^2m - 1) ... (q^2 - 1))
 *   o_odd:  size m,  q^(m^2/4)/((q^m - 1)(q^(m-2) - 1)...(q^2 - 1))   m even
 *                    q^((m-1)^2/4)/((q^(m-1) - 1)...(q^2 - 1))        m odd
 *   o_even: size 2m, sp mass at m plus sp mass at m-1  (m >= 1; 1 at m = 0)
 */
Rational gl_size_mass(int m, const Rational& q);
Rational u_size_mass(int m, const Rational& q);
Rational sp_size_mass(int m, const Rational& q);
Rational o_odd_size_mass(int m, const Rational& q);
Rational o_even_size_mass(int m, const Rational& q);

}  // namespace clp
