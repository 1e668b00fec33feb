#pragma once

#include <algorithm>
#include <stdexcept>

#include "clp/rational.hpp"

namespace clp {

/* Closed interval [lo, hi] with exact rational endpoints.  Every operation
 * returns an interval containing the image of the operands' intervals, so
 * enclosures are certified, never approximate. */
struct Interval {
    Rational lo, hi;

    Interval() = default;
    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("Interval: lo > hi");
    }

    static Interval point(const Rational& r) { return Interval(r, r); }

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / Rational(2); }

    bool contains(const Rational& r) const { return lo <= r && r <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool intersects(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

inline Interval operator+(const Interval& a, const Interval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

inline Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

inline Interval operator-(const Interval& a, const Interval& b) { return a + (-b); }

inline Interval operator*(const Interval& a, const Interval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

inline Interval operator*(const Interval& a, const Rational& c) {
    if (c.sign() >= 0) return {a.lo * c, a.hi * c};
    return {a.hi * c, a.lo * c};
}

inline Interval operator*(const Rational& c, const Interval& a) { return a * c; }

inline Interval operator+(const Interval& a, const Rational& c) { return {a.lo + c, a.hi + c}; }
inline Interval operator-(const Rational& c, const Interval& a) { return {c - a.hi, c - a.lo}; }
inline Interval operator-(const Interval& a, const Rational& c) { return {a.lo - c, a.hi - c}; }

/* |[a,b]|: [a,b] for 0 <= a; [-b,-a] for b <= 0; else [0, max(-a, b)]. */
inline Interval abs(const Interval& a) {
    if (a.lo.sign() >= 0) return a;
    if (a.hi.sign() <= 0) return -a;
    return {Rational(0), std::max(-a.lo, a.hi)};
}

/* 1/[a,b]; requires 0 strictly outside. */
inline Interval reciprocal(const Interval& a) {
    if (a.lo.sign() <= 0 && a.hi.sign() >= 0)
        throw std::domain_error("Interval: reciprocal of interval containing 0");
    return {Rational(1) / a.hi, Rational(1) / a.lo};
}

inline Interval operator/(const Interval& a, const Rational& c) {
    return a * (Rational(1) / c);
}

/* Intersection; the caller asserts the intervals meet. */
inline Interval intersect(const Interval& a, const Interval& b) {
    if (!a.intersects(b)) throw std::domain_error("Interval: empty intersection");
    return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

}  // namespace clp
