#pragma once

#include <vector>

#include "clp/rational.hpp"

namespace clp {

/* Power series in u truncated at a fixed degree bound; coefficients are
 * exact rationals.  Binary operations require equal bounds. */
class TruncatedSeries {
public:
    explicit TruncatedSeries(int degree);

    static TruncatedSeries one(int degree);
    static TruncatedSeries monomial(int degree, int k, const Rational& c);

    int degree() const { return degree_; }
    const Rational& coeff(int k) const;
    void set_coeff(int k, const Rational& c);

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;

    /* Multiplicative inverse mod u^(degree+1); constant term must be nonzero.
     * b_0 = 1/a_0,  b_n = -(1/a_0) * sum_{k=1..n} a_k b_{n-k}. */
    TruncatedSeries invert() const;

    /* Substitute u -> u^k, same degree bound (source coefficients beyond
     * degree/k fall off the end). */
    TruncatedSeries stretch(int k) const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.degree_ == b.degree_ && a.c_ == b.c_;
    }

private:
    int degree_;
    std::vector<Rational> c_;
};

/* Coefficients of prod_i (1 - u x_i) resp. 1/prod_i (1 - u x_i) for a
 * variable family {x_i} given by its power sums p_k = sum_i x_i^k
 * (k = 1..degree).  Newton's identities, exact:
 *   k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i,   coefficient (-1)^k e_k
 *   k h_k = sum_{i=1..k} h_{k-i} p_i,              coefficient h_k
 * This evaluates infinite products with geometrically summable power sums
 * without truncating the product itself. */
TruncatedSeries product_from_power_sums(const std::vector<Rational>& p, int degree);
TruncatedSeries reciprocal_from_power_sums(const std::vector<Rational>& p, int degree);

}  // namespace clp
