#include "clp/tv.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

#include "clp/pochhammer.hpp"
#include "clp/products.hpp"

namespace clp {

namespace {

struct FamilyAlgebra {
    Rational prefactor;                         // 1/2, or 1/4 for the orthogonal mixtures
    Rational (*stratum_mass)(int, const Rational&);  // sum of 1/|Aut| over the stratum
    int (*inner_cut)(int n, int m);                  // partial-sum cut inside stratum m
    int last_stratum;                                // strata run m = 0..bound
};

int cut_linear(int n, int m) { return n - m; }
int cut_halved(int n, int m) { return (n - m) / 2; }

FamilyAlgebra algebra_for(Family f, int n) {
    switch (f) {
        case Family::GL:
            return {Rational(1, 2), gl_size_mass, cut_linear, n};
        case Family::U:
            return {Rational(1, 2), u_size_mass, cut_linear, n};
        case Family::SP:
            // strata indexed by half-size m, sizes 2m <= 2n
            return {Rational(1, 2), sp_size_mass, cut_linear, n};
        case Family::O_ODD:
            return {Rational(1, 4), o_odd_size_mass, cut_halved, n};
        case Family::O_EVEN:
            // strata indexed by half-size m, with the bracketed two-piece mass
            return {Rational(1, 4), o_even_size_mass, cut_linear, n};
    }
    throw std::logic_error("algebra_for: unreachable");
}

/* Product side of the family's measure at u = 1 (the orthogonal families
 * carry their 1/2 in the prefactor, not here). */
Interval limit_product(Family f, long q, int product_factors) {
    Rational rq(q), one(1);
    switch (f) {
        case Family::GL:
            return infinite_product(GL_PROD, rq, one, product_factors);
        case Family::U:
            return infinite_product(U_PROD, rq, one, product_factors);
        case Family::SP:
        case Family::O_ODD:
        case Family::O_EVEN:
            return infinite_product(ODD_EXP_PROD, rq, one, product_factors);
    }
    throw std::logic_error("limit_product: unreachable");
}

/* Inner alternating partial sum matching the family's strata. */
Rational inner_partial(Family f, int t, const Rational& q) {
    switch (f) {
        case Family::GL:
            return gl_partial_sum(t, q);
        case Family::U:
            return u_partial_sum(t, q);
        default:
            return sp_partial_sum(t, q);
    }
}

}  // namespace

Interval tv_proposition(Family f, int n, long q, int tail_cut, int product_factors) {
    validate_family_q(f, q);
    if (n < 1) throw std::invalid_argument("tv_proposition: requires n >= 1");
    if (tail_cut <= n) throw std::invalid_argument("tv_proposition: tail cut must exceed n");
    if (product_factors < tail_cut + 2) product_factors = tail_cut + 2;

    Rational rq(q);
    FamilyAlgebra alg = algebra_for(f, n);
    Interval product = limit_product(f, q, product_factors);

    // strata beyond the support bound carry their whole limit mass
    Rational mass_beyond(0);
    for (int m = n + 1; m <= tail_cut; ++m) mass_beyond += alg.stratum_mass(m, rq);
    Interval total = mass_beyond * product;

    // certified enclosure of the strata past the explicit cut
    Rational tail;
    switch (f) {
        case Family::GL:
        case Family::U:
        case Family::SP:
            // term_m <= q^-m
            tail = rq.pow(-tail_cut) / (rq - Rational(1));
            break;
        case Family::O_ODD: {
            // even strata <= q^-(m/2), odd strata <= q^-((m-1)/2)
            int m_even = tail_cut % 2 == 0 ? tail_cut + 2 : tail_cut + 1;
            int m_odd = tail_cut % 2 == 0 ? tail_cut + 1 : tail_cut + 2;
            tail = rq.pow(1 - m_even / 2) / (rq - Rational(1)) +
                   rq.pow(1 - (m_odd - 1) / 2) / (rq - Rational(1));
            break;
        }
        case Family::O_EVEN:
            // bracket term <= q^-m + q^-(m-1)
            tail = rq.pow(-tail_cut) * (Rational(1) + rq) / (rq - Rational(1));
            break;
    }
    total = total + Interval(Rational(0), tail);

    // strata inside the support bound
    for (int m = 0; m <= alg.last_stratum; ++m) {
        Rational mass = alg.stratum_mass(m, rq);
        Rational partial = inner_partial(f, alg.inner_cut(n, m), rq);
        total = total + mass * abs(product - partial);
    }

    return intersect(total * alg.prefactor, Interval(Rational(0), Rational(1)));
}

Interval tv_direct(Family f, int n, long q, int support_cut, int product_factors) {
    validate_family_q(f, q);
    if (n < 1) throw std::invalid_argument("tv_direct: requires n >= 1");
    int bound = family_size_bound(f, n);
    if (support_cut < 0) support_cut = bound;
    if (support_cut < bound)
        throw std::invalid_argument("tv_direct: support cut below the finite-n size bound");

    Rational rq(q);
    Interval product = limit_product(f, q, product_factors);
    bool orthogonal = f == Family::O_ODD || f == Family::O_EVEN;
    Interval norm = orthogonal ? product / Rational(2) : product;

    Interval sum = Interval::point(Rational(0));
    Rational enumerated_weight(0);  // sum of 1/|Aut| over the enumerated support
    for (const auto& lambda : enumerate_partitions(family_support(f), support_cut)) {
        Rational weight = Rational(1) / aut_order(f, lambda, rq);
        enumerated_weight += weight;
        Rational finite = lambda_measure(f, n, q, lambda);
        sum = sum + abs(norm * weight - finite);
    }

    // limit mass past the enumerated sizes; the finite-n measure vanishes there
    Interval residual = Rational(1) - norm * enumerated_weight;
    residual = intersect(residual, Interval(Rational(0), Rational(1)));

    Interval tv = (sum + residual) * Rational(1, 2);
    return intersect(tv, Interval(Rational(0), Rational(1)));
}

std::pair<Rational, Rational> theorem_bounds(Family f, int n, long q) {
    validate_family_q(f, q);
    if (n < 1) throw std::invalid_argument("theorem_bounds: requires n >= 1");
    Rational rq(q);
    switch (f) {
        case Family::GL: {
            Rational rate = rq.pow(-(n + 1));
            return {Rational(38, 100) * rate, Rational(14) * rate};
        }
        case Family::U: {
            Rational rate = rq.pow(-(n + 1));
            return {Rational(1, 6) * rate, Rational(3) * rate};
        }
        case Family::SP: {
            Rational rate = rq.pow(-(n + 1));
            return {Rational(2, 10) * rate, Rational(25, 10) * rate};
        }
        case Family::O_ODD: {
            if (n % 2 == 0) {
                Rational rate = rq.pow(-(n / 2));
                return {Rational(1, 10) * rate, Rational(13, 10) * rate};
            }
            Rational rate = rq.pow(-((n + 1) / 2));
            return {Rational(1, 10) * rate, Rational(2) * rate};
        }
        case Family::O_EVEN: {
            Rational rate = rq.pow(-n);
            return {Rational(1, 10) * rate, Rational(26, 10) * rate};
        }
    }
    throw std::logic_error("theorem_bounds: unreachable");
}

BoundCheck verify_theorem_bounds(Family f, int n, long q) {
    auto [lo, hi] = theorem_bounds(f, n, q);
    BoundCheck check{f, n, q, Interval::point(Rational(0)), lo, hi, BoundVerdict::undecided, 0};
    for (int cut = std::max(32, n + 8);; cut *= 2) {
        check.tv = tv_proposition(f, n, q, cut, cut + 2);
        check.tail_cut_used = cut;
        if (lo <= check.tv.lo && check.tv.hi <= hi) {
            check.verdict = BoundVerdict::contained;
            return check;
        }
        if (check.tv.hi < lo || check.tv.lo > hi) {
            check.verdict = BoundVerdict::violated;
            return check;
        }
        if (cut >= 512) {
            check.verdict = BoundVerdict::undecided;
            return check;
        }
    }
}

std::vector<BoundCheck> verify_grid(Family f, const std::vector<int>& ns,
                                    const std::vector<long>& qs, int threads) {
    std::vector<std::pair<int, long>> cells;
    for (int n : ns)
        for (long q : qs) cells.emplace_back(n, q);
    std::vector<BoundCheck> out(cells.size());
    int count = static_cast<int>(cells.size());
#pragma omp parallel for schedule(dynamic) \
    num_threads(threads > 0 ? threads : omp_get_max_threads())
    for (int i = 0; i < count; ++i) {
        out[i] = verify_theorem_bounds(f, cells[i].first, cells[i].second);
    }
    return out;
}

}  // namespace clp
