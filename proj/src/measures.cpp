#include "clp/measures.hpp"

#include <omp.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "clp/pochhammer.hpp"
#include "clp/products.hpp"

namespace clp {

Family family_parse(const std::string& name) {
    if (name == "gl") return Family::GL;
    if (name == "u") return Family::U;
    if (name == "sp") return Family::SP;
    if (name == "o-odd") return Family::O_ODD;
    if (name == "o-even") return Family::O_EVEN;
    throw std::invalid_argument("unknown family '" + name + "' (gl, u, sp, o-odd, o-even)");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::GL: return "gl";
        case Family::U: return "u";
        case Family::SP: return "sp";
        case Family::O_ODD: return "o-odd";
        case Family::O_EVEN: return "o-even";
    }
    throw std::logic_error("family_name: unreachable");
}

SupportConstraint family_support(Family f) {
    switch (f) {
        case Family::GL:
        case Family::U:
            return SupportConstraint::ALL;
        case Family::SP:
        case Family::O_EVEN:
            return SupportConstraint::ODD_PARTS_EVEN_MULT;
        case Family::O_ODD:
            return SupportConstraint::EVEN_PARTS_EVEN_MULT;
    }
    throw std::logic_error("family_support: unreachable");
}

int family_size_bound(Family f, int n) {
    switch (f) {
        case Family::GL:
        case Family::U:
        case Family::O_ODD:
            return n;
        case Family::SP:
        case Family::O_EVEN:
            return 2 * n;
    }
    throw std::logic_error("family_size_bound: unreachable");
}

bool is_prime_power(long q, long* p_out, int* k_out) {
    if (q < 2) return false;
    long p = 0;
    for (long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = q;  // q itself prime
    int k = 0;
    long rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) return false;
    if (p_out) *p_out = p;
    if (k_out) *k_out = k;
    return true;
}

void validate_family_q(Family f, long q) {
    if (!is_prime_power(q))
        throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    if (f == Family::O_ODD && q % 2 == 0)
        throw std::invalid_argument("family o-odd requires odd q");
    if (f == Family::O_EVEN && q % 2 != 0)
        throw std::invalid_argument("family o-even requires even q");
}

Rational aut_order(Family f, const Partition& lambda, const Rational& q) {
    if (q <= Rational(1)) throw std::invalid_argument("aut_order: requires q > 1");
    if (!satisfies(lambda, family_support(f)))
        throw std::invalid_argument("aut_order: partition outside the family support");
    PartitionStats st = partition_stats(lambda);

    if (f == Family::GL || f == Family::U) {
        PochVariant variant = f == Family::GL ? PochVariant::plain : PochVariant::signed_;
        Rational acc = q.pow(st.dual_square_sum);
        for (const auto& [part, mult] : st.mult) acc *= pochhammer(q, mult, variant);
        return acc;
    }

    // |lambda| and o(lambda) always have the same parity, so the halved
    // exponents below are integers.
    long exponent = st.n_stat;
    switch (f) {
        case Family::SP:
            exponent += (static_cast<long>(st.size) + st.odd_parts) / 2;
            break;
        case Family::O_ODD:
            exponent += (static_cast<long>(st.size) - st.odd_parts) / 2;
            break;
        case Family::O_EVEN:
            exponent += (static_cast<long>(st.size) + st.odd_parts) / 2 - st.length;
            break;
        default:
            throw std::logic_error("aut_order: unreachable");
    }
    Rational acc = q.pow(exponent);
    Rational q2 = q * q;
    for (const auto& [part, mult] : st.mult) acc *= pochhammer(q2, mult / 2, PochVariant::plain);
    return acc;
}

namespace {

/* Normalizing constant of the u-deformed limit measure, as an enclosure. */
Interval normalizer(const MeasureParams& params, int nfactors) {
    Rational q(params.q);
    const Rational& u = params.u;
    switch (params.family) {
        case Family::GL:
            return infinite_product(GL_PROD, q, u, nfactors);
        case Family::U:
            return infinite_product(U_PROD, q, u, nfactors);
        case Family::SP:
            return infinite_product(ODD_EXP_PROD, q, u, nfactors);
        case Family::O_ODD:
            return infinite_product(ODD_EXP_PROD, q, u, nfactors) / (Rational(1) + u);
        case Family::O_EVEN:
            return infinite_product(ODD_EXP_PROD, q, u, nfactors) / (Rational(1) + u * u);
    }
    throw std::logic_error("normalizer: unreachable");
}

void validate_params(const MeasureParams& params) {
    validate_family_q(params.family, params.q);
    if (params.u < Rational(0) || params.u > Rational(1))
        throw std::invalid_argument("measure deformation u must lie in [0, 1]");
}

}  // namespace

Interval limit_measure(const MeasureParams& params, const Partition& lambda, int nfactors) {
    validate_params(params);
    if (!satisfies(lambda, family_support(params.family)))
        throw std::invalid_argument("limit_measure: partition outside the family support");
    Rational weight =
        params.u.pow(lambda.size()) / aut_order(params.family, lambda, Rational(params.q));
    return normalizer(params, nfactors) * weight;
}

Rational lambda_measure(Family f, int n, long q, const Partition& lambda) {
    validate_family_q(f, q);
    if (n < 1) throw std::invalid_argument("lambda_measure: requires n >= 1");
    if (!satisfies(lambda, family_support(f))) return Rational(0);
    int m = lambda.size();
    if (m > family_size_bound(f, n)) return Rational(0);
    Rational rq(q);
    Rational aut = aut_order(f, lambda, rq);
    switch (f) {
        case Family::GL:
            return gl_partial_sum(n - m, rq) / aut;
        case Family::U:
            return u_partial_sum(n - m, rq) / aut;
        case Family::SP:
            if (m % 2 != 0) return Rational(0);
            return sp_partial_sum(n - m / 2, rq) / aut;
        case Family::O_ODD:
            return sp_partial_sum((n - m) / 2, rq) / (Rational(2) * aut);
        case Family::O_EVEN:
            if (m % 2 != 0) return Rational(0);
            return sp_partial_sum(n - m / 2, rq) / (Rational(2) * aut);
    }
    throw std::logic_error("lambda_measure: unreachable");
}

DistributionTable distribution_table(Family f, int n, long q, int threads) {
    validate_family_q(f, q);
    if (n < 1) throw std::invalid_argument("distribution_table: requires n >= 1");
    std::vector<Partition> support =
        enumerate_partitions(family_support(f), family_size_bound(f, n));
    DistributionTable table{f, n, q, {}};
    table.entries.resize(support.size());
    int count = static_cast<int>(support.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads > 0 ? threads : omp_get_max_threads())
    for (int i = 0; i < count; ++i) {
        table.entries[i] = {support[i], lambda_measure(f, n, q, support[i])};
    }
    return table;
}

bool normalization_check(const DistributionTable& table) {
    Rational mass(0);
    for (const auto& [lambda, value] : table.entries) {
        if (value.sign() < 0) return false;
        mass += value;
    }
    return mass == Rational(1);
}

SampleResult sample_measure(const MeasureParams& params, long count, std::uint64_t seed,
                            const Rational& tail_epsilon, int size_cap) {
    validate_params(params);
    if (count < 0) throw std::invalid_argument("sample_measure: negative count");
    if (tail_epsilon.sign() <= 0 || tail_epsilon >= Rational(1))
        throw std::invalid_argument("sample_measure: tail_epsilon must lie in (0, 1)");

    // Enclosure width must leave room below tail_epsilon for the lower
    // bounds to reach 1 - epsilon at all; tighten the product generously.
    int nfactors = 128;
    Interval norm = normalizer(params, nfactors);

    SupportConstraint support = family_support(params.family);
    std::vector<Partition> atoms;
    std::vector<Rational> cumulative;  // certified lower bounds on the CDF
    Rational target = Rational(1) - tail_epsilon;
    Rational acc(0);
    int size_used = 0;
    for (int size = 0; size <= size_cap && acc < target; ++size) {
        size_used = size;
        for (auto& lambda : enumerate_partitions_exact(support, size)) {
            Rational weight =
                params.u.pow(lambda.size()) / aut_order(params.family, lambda, Rational(params.q));
            acc += norm.lo * weight;
            atoms.push_back(std::move(lambda));
            cumulative.push_back(acc);
        }
    }
    if (acc < target)
        throw std::runtime_error("sample_measure: size cap reached before covering 1 - epsilon");

    SampleResult result;
    result.covered_mass = acc;
    result.max_size_reached = size_used;
    std::mt19937_64 gen(seed);
    Integer two64 = ipow(Integer(2), 64);
    for (long i = 0; i < count; ++i) {
        Rational r(Integer(gen()), two64);
        auto it = std::lower_bound(cumulative.begin(), cumulative.end(), r,
                                   [](const Rational& c, const Rational& v) { return c <= v; });
        if (it == cumulative.end()) {
            ++result.overflow;
        } else {
            result.draws.push_back(atoms[static_cast<size_t>(it - cumulative.begin())]);
        }
    }
    return result;
}

}  // namespace clp
