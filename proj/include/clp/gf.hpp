#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace clp {

/* Table-driven arithmetic for GF(p^k), p^k <= 256.  Elements are encoded as
 * 0..q-1, the base-p digit string of the residue polynomial's coefficients
 * (code = sum coeff_i * p^i), so the prime subfield occupies codes 0..p-1 and
 * code 1 is the multiplicative identity.  The reduction modulus is the monic
 * irreducible of degree k with the smallest such encoding, making every table
 * reproducible: GF(4) uses t^2+t+1, GF(8) uses t^3+t+1, GF(9) uses t^2+1. */
class Field {
public:
    static std::shared_ptr<const Field> make(long p, int k);

    long p() const { return p_; }
    int k() const { return k_; }
    int size() const { return q_; }

    std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[idx(a, b)]; }
    std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add_[idx(a, neg_[b])]; }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[idx(a, b)]; }
    std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
    std::uint8_t inv(std::uint8_t a) const;

    /* x -> x^(p^(k/2)), the order-two field automorphism of a quadratic
     * extension; requires even k. */
    std::uint8_t conj(std::uint8_t a) const;
    bool has_conj() const { return k_ % 2 == 0; }

    /* Residue of an integer, landing in the prime subfield. */
    std::uint8_t from_int(long v) const;

    /* Modulus coefficients, constant term first, including the leading 1. */
    const std::vector<int>& modulus() const { return modulus_; }

private:
    Field(long p, int k);
    int idx(std::uint8_t a, std::uint8_t b) const { return int(a) * q_ + int(b); }

    long p_;
    int k_, q_;
    std::vector<int> modulus_;
    std::vector<std::uint8_t> add_, mul_, neg_, inv_, conj_;
};

using FieldPtr = std::shared_ptr<const Field>;

}  // namespace clp
