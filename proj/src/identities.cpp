#include "clp/identities.hpp"

#include <stdexcept>

#include "clp/measures.hpp"
#include "clp/partition.hpp"
#include "clp/pochhammer.hpp"

namespace clp {

const std::vector<IdentityTag>& all_identity_tags() {
    static const std::vector<IdentityTag> tags = {
        IdentityTag::eul1,  IdentityTag::eul2,  IdentityTag::eulU1,   IdentityTag::eulU2,
        IdentityTag::eulSp1, IdentityTag::eulSp2, IdentityTag::stoGl, IdentityTag::stoU,
        IdentityTag::stoSp, IdentityTag::stoOOdd, IdentityTag::stoOEven,
    };
    return tags;
}

std::string identity_tag_name(IdentityTag tag) {
    switch (tag) {
        case IdentityTag::eul1: return "eul-1";
        case IdentityTag::eul2: return "eul-2";
        case IdentityTag::eulU1: return "eulU-1";
        case IdentityTag::eulU2: return "eulU-2";
        case IdentityTag::eulSp1: return "eulSp-1";
        case IdentityTag::eulSp2: return "eulSp-2";
        case IdentityTag::stoGl: return "sto-gl";
        case IdentityTag::stoU: return "sto-u";
        case IdentityTag::stoSp: return "sto-sp";
        case IdentityTag::stoOOdd: return "sto-o-odd";
        case IdentityTag::stoOEven: return "sto-o-even";
    }
    throw std::logic_error("identity_tag_name: unreachable");
}

IdentityTag identity_tag_parse(const std::string& name) {
    for (IdentityTag tag : all_identity_tags())
        if (identity_tag_name(tag) == name) return tag;
    throw std::invalid_argument("unknown identity tag '" + name + "'");
}

namespace {

/* prod (1 - u/q^i) and its reciprocal, exact to `degree`. */
TruncatedSeries gl_product(const Rational& q, int degree, bool reciprocal) {
    auto p = power_sums_geometric(q, degree);
    return reciprocal ? reciprocal_from_power_sums(p, degree) : product_from_power_sums(p, degree);
}

/* prod (1 + u/(-q)^i): factors 1 - u x_i with x_i = (-1)^(i+1) q^-i. */
TruncatedSeries unitary_product(const Rational& q, int degree, bool reciprocal) {
    auto p = power_sums_alternating(q, degree);
    return reciprocal ? reciprocal_from_power_sums(p, degree) : product_from_power_sums(p, degree);
}

/* prod (1 - u^2/q^(2i-1)): a series in v = u^2 stretched back to u. */
TruncatedSeries odd_exp_product(const Rational& q, int degree, bool reciprocal) {
    int half = degree / 2;
    auto p = power_sums_odd_exponents(q, half);
    TruncatedSeries in_v =
        reciprocal ? reciprocal_from_power_sums(p, half) : product_from_power_sums(p, half);
    TruncatedSeries out(degree);
    for (int j = 0; j <= half; ++j) out.set_coeff(2 * j, in_v.coeff(j));
    return out;
}

TruncatedSeries partition_weight_sum(Family family, const Rational& q, int degree) {
    TruncatedSeries s(degree);
    for (const auto& lambda : enumerate_partitions(family_support(family), degree)) {
        int m = lambda.size();
        s.set_coeff(m, s.coeff(m) + Rational(1) / aut_order(family, lambda, q));
    }
    return s;
}

TruncatedSeries one_plus_u_power(int degree, int k) {
    TruncatedSeries s = TruncatedSeries::one(degree);
    if (k <= degree) s.set_coeff(k, Rational(1));
    return s;
}

}  // namespace

TruncatedSeries identity_lhs(IdentityTag tag, const Rational& q, int degree) {
    switch (tag) {
        case IdentityTag::eul1: return gl_product(q, degree, false);
        case IdentityTag::eul2: return gl_product(q, degree, true);
        case IdentityTag::eulU1: return unitary_product(q, degree, false);
        case IdentityTag::eulU2: return unitary_product(q, degree, true);
        case IdentityTag::eulSp1: return odd_exp_product(q, degree, false);
        case IdentityTag::eulSp2: return odd_exp_product(q, degree, true);
        case IdentityTag::stoGl: return partition_weight_sum(Family::GL, q, degree);
        case IdentityTag::stoU: return partition_weight_sum(Family::U, q, degree);
        case IdentityTag::stoSp: return partition_weight_sum(Family::SP, q, degree);
        case IdentityTag::stoOOdd: return partition_weight_sum(Family::O_ODD, q, degree);
        case IdentityTag::stoOEven: return partition_weight_sum(Family::O_EVEN, q, degree);
    }
    throw std::logic_error("identity_lhs: unreachable");
}

TruncatedSeries identity_rhs(IdentityTag tag, const Rational& q, int degree) {
    TruncatedSeries s(degree);
    switch (tag) {
        case IdentityTag::eul1:
            for (int j = 0; j <= degree; ++j) s.set_coeff(j, gl_term(j, q));
            return s;
        case IdentityTag::eul2:
            for (int j = 0; j <= degree; ++j) s.set_coeff(j, gl_size_mass(j, q));
            return s;
        case IdentityTag::eulU1:
            for (int j = 0; j <= degree; ++j) s.set_coeff(j, u_term(j, q));
            return s;
        case IdentityTag::eulU2:
            for (int j = 0; j <= degree; ++j) s.set_coeff(j, u_size_mass(j, q));
            return s;
        case IdentityTag::eulSp1:
            for (int j = 0; 2 * j <= degree; ++j) s.set_coeff(2 * j, sp_term(j, q));
            return s;
        case IdentityTag::eulSp2:
            for (int j = 0; 2 * j <= degree; ++j) s.set_coeff(2 * j, sp_size_mass(j, q));
            return s;
        // Product sides of the support sums; the eul checks above certify
        // these Newton evaluations against the closed forms independently.
        case IdentityTag::stoGl: return gl_product(q, degree, true);
        case IdentityTag::stoU: return unitary_product(q, degree, true);
        case IdentityTag::stoSp: return odd_exp_product(q, degree, true);
        case IdentityTag::stoOOdd:
            return one_plus_u_power(degree, 1) * odd_exp_product(q, degree, true);
        case IdentityTag::stoOEven:
            return one_plus_u_power(degree, 2) * odd_exp_product(q, degree, true);
    }
    throw std::logic_error("identity_rhs: unreachable");
}

IdentityReport identity_check(IdentityTag tag, const Rational& q, int degree) {
    if (q < Rational(2)) throw std::invalid_argument("identity_check: requires q >= 2");
    if (degree < 0) throw std::invalid_argument("identity_check: negative degree");
    IdentityReport report{tag, q, degree, true, std::nullopt, Rational(0), Rational(0)};
    TruncatedSeries lhs = identity_lhs(tag, q, degree);
    TruncatedSeries rhs = identity_rhs(tag, q, degree);
    for (int j = 0; j <= degree; ++j) {
        if (lhs.coeff(j) != rhs.coeff(j)) {
            report.pass = false;
            report.first_mismatch = j;
            report.lhs_at_mismatch = lhs.coeff(j);
            report.rhs_at_mismatch = rhs.coeff(j);
            break;
        }
    }
    return report;
}

}  // namespace clp
