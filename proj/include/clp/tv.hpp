#pragma once

#include <utility>
#include <vector>

#include "clp/interval.hpp"
#include "clp/measures.hpp"

namespace clp {

/* Certified enclosure of the total variation distance between the finite-n
 * measure and the limit measure, evaluated from the closed-form expression:
 * the strata of size beyond the support bound contribute their full limit
 * mass, the strata inside contribute |product - partial alternating sum|
 * weighted by the stratum's 1/|Aut| mass.  `tail_cut` is the last stratum
 * index summed explicitly (must exceed n); the rest is enclosed by the
 * geometric term bounds.  `product_factors` factors of the normalizing
 * product are multiplied exactly (at least tail_cut + 2 are used, which
 * makes enclosures shrink monotonically as the cuts grow). */
Interval tv_proposition(Family f, int n, long q, int tail_cut = 64, int product_factors = 64);

/* Same distance, summed directly over the support: partitions of size up to
 * `support_cut` (at least the finite-n size bound) contribute
 * |limit({lambda}) - finite_n({lambda})| termwise, the remaining limit mass
 * is accounted as one certified enclosure. */
Interval tv_direct(Family f, int n, long q, int support_cut = -1, int product_factors = 64);

enum class BoundVerdict { contained, undecided, violated };

struct BoundCheck {
    Family family;
    int n = 0;
    long q = 0;
    Interval tv;
    Rational bound_lo, bound_hi;
    BoundVerdict verdict = BoundVerdict::undecided;
    int tail_cut_used = 0;
};

/* The sharp two-sided rate bounds, as exact rationals:
 *   GL:      .38 / q^(n+1)  <= tv <= 14  / q^(n+1)   (n >= 1)
 *   U:       1/6 / q^(n+1)  <= tv <= 3   / q^(n+1)   (n >= 1)
 *   SP:      .2  / q^(n+1)  <= tv <= 2.5 / q^(n+1)   (n >= 1)
 *   O_ODD:   .1 / q^(n/2)     <= tv <= 1.3 / q^(n/2)      (n >= 2 even)
 *            .1 / q^((n+1)/2) <= tv <= 2   / q^((n+1)/2)  (n >= 1 odd)
 *   O_EVEN:  .1 / q^n        <= tv <= 2.6 / q^n       (n >= 1)
 */
std::pair<Rational, Rational> theorem_bounds(Family f, int n, long q);

/* Checks containment of tv_proposition in the theorem bounds, doubling the
 * truncation until the interval decides the question or the cut reaches 512
 * (verdict undecided then). */
BoundCheck verify_theorem_bounds(Family f, int n, long q);

/* One check per (n, q) grid cell, cells evaluated independently in parallel;
 * output order follows the input grids regardless of thread count. */
std::vector<BoundCheck> verify_grid(Family f, const std::vector<int>& ns,
                                    const std::vector<long>& qs, int threads = 0);

}  // namespace clp
