#include "clp/series.hpp"

#include <stdexcept>

namespace clp {

TruncatedSeries::TruncatedSeries(int degree) : degree_(degree) {
    if (degree < 0) throw std::invalid_argument("TruncatedSeries: negative degree bound");
    c_.assign(static_cast<size_t>(degree) + 1, Rational(0));
}

TruncatedSeries TruncatedSeries::one(int degree) {
    TruncatedSeries s(degree);
    s.c_[0] = Rational(1);
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int degree, int k, const Rational& c) {
    TruncatedSeries s(degree);
    s.set_coeff(k, c);
    return s;
}

const Rational& TruncatedSeries::coeff(int k) const {
    if (k < 0 || k > degree_) throw std::out_of_range("TruncatedSeries: coefficient index");
    return c_[static_cast<size_t>(k)];
}

void TruncatedSeries::set_coeff(int k, const Rational& c) {
    if (k < 0 || k > degree_) throw std::out_of_range("TruncatedSeries: coefficient index");
    c_[static_cast<size_t>(k)] = c;
}

namespace {
void require_same_degree(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("TruncatedSeries: mismatched degree bounds");
}
}  // namespace

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    require_same_degree(*this, o);
    TruncatedSeries r(degree_);
    for (int k = 0; k <= degree_; ++k) r.c_[k] = c_[k] + o.c_[k];
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    require_same_degree(*this, o);
    TruncatedSeries r(degree_);
    for (int k = 0; k <= degree_; ++k) r.c_[k] = c_[k] - o.c_[k];
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    require_same_degree(*this, o);
    TruncatedSeries r(degree_);
    for (int i = 0; i <= degree_; ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; i + j <= degree_; ++j) {
            if (o.c_[j].is_zero()) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::invert() const {
    if (c_[0].is_zero())
        throw std::domain_error("TruncatedSeries: inverting series with zero constant term");
    TruncatedSeries r(degree_);
    Rational inv0 = Rational(1) / c_[0];
    r.c_[0] = inv0;
    for (int n = 1; n <= degree_; ++n) {
        Rational acc(0);
        for (int k = 1; k <= n; ++k) acc += c_[k] * r.c_[n - k];
        r.c_[n] = -(inv0 * acc);
    }
    return r;
}

TruncatedSeries TruncatedSeries::stretch(int k) const {
    if (k <= 0) throw std::invalid_argument("TruncatedSeries: stretch factor must be positive");
    TruncatedSeries r(degree_);
    for (int j = 0; j <= degree_ && j * k <= degree_; ++j) r.c_[j * k] = c_[j];
    return r;
}

TruncatedSeries product_from_power_sums(const std::vector<Rational>& p, int degree) {
    if (static_cast<int>(p.size()) < degree)
        throw std::invalid_argument("product_from_power_sums: need power sums up to the degree");
    // a_k = (-1)^k e_k satisfies k a_k = -sum_{i=1..k} p_i a_{k-i}
    TruncatedSeries s = TruncatedSeries::one(degree);
    for (int k = 1; k <= degree; ++k) {
        Rational acc(0);
        for (int i = 1; i <= k; ++i) acc += p[i - 1] * s.coeff(k - i);
        s.set_coeff(k, -(acc / Rational(k)));
    }
    return s;
}

TruncatedSeries reciprocal_from_power_sums(const std::vector<Rational>& p, int degree) {
    if (static_cast<int>(p.size()) < degree)
        throw std::invalid_argument("reciprocal_from_power_sums: need power sums up to the degree");
    TruncatedSeries s = TruncatedSeries::one(degree);
    for (int k = 1; k <= degree; ++k) {
        Rational acc(0);
        for (int i = 1; i <= k; ++i) acc += p[i - 1] * s.coeff(k - i);
        s.set_coeff(k, acc / Rational(k));
    }
    return s;
}

}  // namespace clp
