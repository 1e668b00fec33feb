#include "clp/gf.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace clp {

namespace {

using Poly = std::vector<int>;  // coefficients mod p, constant term first

Poly poly_decode(long code, long p, int len) {
    Poly c(len, 0);
    for (int i = 0; i < len && code > 0; ++i) {
        c[i] = int(code % p);
        code /= p;
    }
    return c;
}

int poly_deg(const Poly& a) {
    for (int i = int(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

/* Remainder of a modulo the monic polynomial m. */
Poly poly_mod(Poly a, const Poly& m, long p) {
    int dm = poly_deg(m);
    for (int i = poly_deg(a); i >= dm; --i) {
        int c = a[i];
        if (c == 0) continue;
        for (int j = 0; j <= dm; ++j) {
            int& t = a[i - dm + j];
            t = int(((t - long(c) * m[j]) % p + p) % p);
        }
    }
    a.resize(dm);
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, long p) {
    Poly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = int((out[i + j] + long(a[i]) * b[j]) % p);
    return out;
}

bool poly_divides(const Poly& d, const Poly& a, long p) {
    // d monic
    return poly_deg(poly_mod(a, d, p)) < 0;
}

bool irreducible(const Poly& f, long p) {
    int k = poly_deg(f);
    for (int d = 1; d <= k / 2; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long c = 0; c < count; ++c) {
            Poly cand = poly_decode(c, p, d + 1);
            cand[d] = 1;
            if (poly_divides(cand, f, p)) return false;
        }
    }
    return true;
}

bool prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

Field::Field(long p, int k) : p_(p), k_(k) {
    if (!prime(p)) throw std::invalid_argument("Field: characteristic must be prime");
    if (k < 1) throw std::invalid_argument("Field: extension degree must be positive");
    long q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        if (q > 256) throw std::invalid_argument("Field: supports at most 256 elements");
    }
    q_ = int(q);

    // smallest monic irreducible of degree k, by coefficient encoding
    Poly mod;
    for (long c = 0;; ++c) {
        if (c >= q) throw std::logic_error("Field: no irreducible modulus found");
        Poly cand = poly_decode(c, p, k + 1);
        cand[k] = 1;
        if (irreducible(cand, p)) {
            mod = cand;
            break;
        }
    }
    modulus_ = mod;

    add_.resize(size_t(q_) * q_);
    mul_.resize(size_t(q_) * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        Poly pa = poly_decode(a, p, k);
        for (int b = 0; b < q_; ++b) {
            Poly pb = poly_decode(b, p, k);
            long sum = 0, prod = 0;
            Poly pm = poly_mod(poly_mul(pa, pb, p), mod, p);
            for (int i = k - 1; i >= 0; --i) {
                sum = sum * p + (pa[i] + pb[i]) % p;
                prod = prod * p + pm[i];
            }
            add_[idx(std::uint8_t(a), std::uint8_t(b))] = std::uint8_t(sum);
            mul_[idx(std::uint8_t(a), std::uint8_t(b))] = std::uint8_t(prod);
        }
    }
    for (int a = 0; a < q_; ++a) {
        long negsum = 0;
        Poly pa = poly_decode(a, p, k);
        for (int i = k - 1; i >= 0; --i) negsum = negsum * p + (p - pa[i]) % p;
        neg_[a] = std::uint8_t(negsum);
        for (int b = 1; b < q_; ++b)
            if (mul_[idx(std::uint8_t(a), std::uint8_t(b))] == 1) {
                inv_[a] = std::uint8_t(b);
                break;
            }
    }

    if (k_ % 2 == 0) {
        // Frobenius to the power k/2: x -> x^(p^(k/2))
        conj_.resize(q_);
        for (int a = 0; a < q_; ++a) {
            std::uint8_t x = std::uint8_t(a);
            for (int step = 0; step < k_ / 2; ++step) {
                std::uint8_t y = x;
                for (long e = 1; e < p; ++e) y = mul_[idx(y, x)];
                x = y;
            }
            conj_[a] = x;
        }
    }
}

std::uint8_t Field::inv(std::uint8_t a) const {
    if (a == 0) throw std::domain_error("Field: inverse of zero");
    return inv_[a];
}

std::uint8_t Field::conj(std::uint8_t a) const {
    if (!has_conj()) throw std::logic_error("Field: conj needs a quadratic extension");
    return conj_[a];
}

std::uint8_t Field::from_int(long v) const {
    long r = ((v % p_) + p_) % p_;
    return std::uint8_t(r);
}

FieldPtr Field::make(long p, int k) {
    static std::mutex lock;
    static std::map<std::pair<long, int>, FieldPtr> cache;
    std::lock_guard<std::mutex> guard(lock);
    auto key = std::make_pair(p, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    FieldPtr f(new Field(p, k));
    cache.emplace(key, f);
    return f;
}

}  // namespace clp
