#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clp/rational.hpp"
#include "clp/series.hpp"

namespace clp {

/* The series identities the measures rest on, checked as exact coefficient
 * equalities of truncated series in u at numeric q:
 *
 *   eul-1     prod (1 - u/q^i)          = sum (-u)^j / ((q^j-1)...(q-1))
 *   eul-2     prod (1 - u/q^i)^-1       = sum u^j q^C(j,2) / ((q^j-1)...(q-1))
 *   eulU-1    prod (1 + u/(-q)^i)       = sum (-1)^C(j+1,2) u^j / ((q^j-(-1)^j)...(q+1))
 *   eulU-2    prod (1 + u/(-q)^i)^-1    = sum u^j q^C(j,2) / ((q^j-(-1)^j)...(q+1))
 *   eulSp-1   prod (1 - u^2/q^(2i-1))   = sum (-1)^j u^2j q^j / ((q^2j-1)...(q^2-1))
 *   eulSp-2   prod (1 - u^2/q^(2i-1))^-1= sum u^2j q^(j^2) / ((q^2j-1)...(q^2-1))
 *   sto-*     sum over the family's support of u^|lambda| / |Aut(lambda)|
 *             against the matching product side
 *
 * Product sides are evaluated exactly through Newton's identities from the
 * geometric power sums of the factor variables; sum sides from the closed
 * coefficient formulas; sto sides by enumerating partitions. */
enum class IdentityTag {
    eul1,
    eul2,
    eulU1,
    eulU2,
    eulSp1,
    eulSp2,
    stoGl,
    stoU,
    stoSp,
    stoOOdd,
    stoOEven,
};

const std::vector<IdentityTag>& all_identity_tags();
std::string identity_tag_name(IdentityTag tag);          // "eul-1", "sto-o-odd", ...
IdentityTag identity_tag_parse(const std::string& name);

struct IdentityReport {
    IdentityTag tag;
    Rational q;
    int degree = 0;
    bool pass = false;
    std::optional<int> first_mismatch;  // degree of the first differing coefficient
    Rational lhs_at_mismatch, rhs_at_mismatch;
};

/* The two sides, exposed so tests can perturb one of them. */
TruncatedSeries identity_lhs(IdentityTag tag, const Rational& q, int degree);
TruncatedSeries identity_rhs(IdentityTag tag, const Rational& q, int degree);

IdentityReport identity_check(IdentityTag tag, const Rational& q, int degree);

}  // namespace clp
