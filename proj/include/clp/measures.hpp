#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "clp/interval.hpp"
#include "clp/partition.hpp"
#include "clp/rational.hpp"

namespace clp {

enum class Family { GL, U, SP, O_ODD, O_EVEN };

Family family_parse(const std::string& name);  // gl | u | sp | o-odd | o-even
std::string family_name(Family f);

SupportConstraint family_support(Family f);

/* Size bound of the finite-n measure's support: n for GL/U/O_ODD (matrix
 * dimension n), 2n for SP/O_EVEN (matrix dimension 2n). */
int family_size_bound(Family f, int n);

/* q must be a prime power; O_ODD additionally needs q odd, O_EVEN q even. */
bool is_prime_power(long q, long* p_out = nullptr, int* k_out = nullptr);
void validate_family_q(Family f, long q);

/* |Aut(lambda)| in the sense matching the family's measure normalization:
 *   GL:     q^(sum dual_i^2) * prod_i (1/q)_{m_i}
 *   U:      q^(sum dual_i^2) * prod_i (-1/q)_{m_i}
 *   SP:     q^(n(l) + |l|/2 + o(l)/2)          * prod_i (1/q^2)_{floor(m_i/2)}
 *   O_ODD:  q^(n(l) + |l|/2 - o(l)/2)          * prod_i (1/q^2)_{floor(m_i/2)}
 *   O_EVEN: q^(n(l) + |l|/2 + o(l)/2 - len(l)) * prod_i (1/q^2)_{floor(m_i/2)}
 * The value is a positive rational (non-integer values occur for O_EVEN).
 * Throws if lambda is outside the family support.  q may be any rational
 * > 1: the formulas are algebraic and the series identities hold for all
 * such q, so no parity gate is applied here (the measure-level entry points
 * do apply it). */
Rational aut_order(Family f, const Partition& lambda, const Rational& q);

struct MeasureParams {
    Family family;
    long q;            // prime power, parity per family
    Rational u;        // deformation, 0 <= u <= 1
};

/* Certified enclosure of the limit measure of {lambda}: the family's
 * normalizing product (over `nfactors` explicit factors) times
 * u^|lambda| / |Aut(lambda)|.  Throws if lambda is outside the support. */
Interval limit_measure(const MeasureParams& params, const Partition& lambda, int nfactors);

/* Exact finite-n measure of {lambda} (z -> 1 specialization).  Zero for
 * lambda outside the support or beyond the size bound. */
Rational lambda_measure(Family f, int n, long q, const Partition& lambda);

struct DistributionTable {
    Family family;
    int n;
    long q;
    std::vector<std::pair<Partition, Rational>> entries;  // canonical order
};

/* Full finite-n table over the support, in canonical partition order.
 * threads = 0 uses the runtime default. */
DistributionTable distribution_table(Family f, int n, long q, int threads = 0);

/* Exact check that the table's values sum to 1. */
bool normalization_check(const DistributionTable& table);

struct SampleResult {
    std::vector<Partition> draws;          // in draw order; overflow draws excluded
    long overflow = 0;                     // draws that fell past the enumerated mass
    Rational covered_mass;                 // certified lower bound on enumerated mass
    int max_size_reached = 0;
};

/* Inverse-CDF sampling from the limit measure: partitions are enumerated in
 * canonical order until the certified lower bounds on their probabilities
 * cover at least 1 - tail_epsilon; draws landing past that are counted as
 * overflow.  Deterministic for fixed seed.  Throws if the enumeration would
 * exceed size_cap before covering enough mass. */
SampleResult sample_measure(const MeasureParams& params, long count, std::uint64_t seed,
                            const Rational& tail_epsilon, int size_cap = 64);

}  // namespace clp
