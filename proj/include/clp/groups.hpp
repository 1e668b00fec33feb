#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "clp/forms.hpp"

namespace clp {

/* One concrete classical group to enumerate. */
struct GroupSpec {
    Family family;
    int dim = 0;
    long q = 0;
    FormType type = FormType::none;
};

std::string group_spec_name(const GroupSpec& spec);

/* Order of the group, from the classical product formulas. */
Integer group_order(const GroupSpec& spec);

/* Size of the raw search space, field_size^(dim^2); enumeration refuses to
 * start beyond the budget (default 2^32, overridable through the
 * CLP_MAX_CANDIDATES environment variable). */
Integer raw_candidate_count(const GroupSpec& spec);
Integer candidate_budget();
bool within_budget(const GroupSpec& spec);

/* Calls fn once per group element, in the lexicographic column order the
 * depth-first enumeration produces. */
void for_each_element(const GroupSpec& spec, const std::function<void(const Mat&)>& fn);

/* All elements, guarded by an explicit cap. */
std::vector<Mat> collect_elements(const GroupSpec& spec, std::size_t limit);

using CountMap = std::map<Partition, long, PartitionOrder>;

/* How many elements carry each Jordan type at the eigenvalue 1.  The plain
 * version walks the whole tree in one thread and is kept as the reference;
 * the parallel version splits the tree by first column and merges, so both
 * must agree exactly. */
CountMap jordan_counts_serial(const GroupSpec& spec);
CountMap jordan_counts(const GroupSpec& spec, int threads = 0);

/* Brute-force comparison of the enumerated Jordan-type frequencies against
 * the finite-n distribution table.  The measure index n maps to matrix
 * dimension n for GL, U and odd-characteristic O, and to dimension 2n for SP
 * and even-characteristic O; the orthogonal families average the "+" and "-"
 * forms.  Frequencies are exact rationals and must match the table exactly;
 * the report also records whether each enumerated total matched the group
 * order formula and whether the supports coincide. */
struct OracleReport {
    Family family = Family::GL;
    int n = 0;
    long q = 0;
    std::vector<GroupSpec> specs;
    std::vector<Integer> enumerated_orders;
    bool orders_match = false;
    std::map<Partition, Rational, PartitionOrder> empirical;
    DistributionTable predicted;
    bool support_match = false;
    bool values_match = false;
    bool pass = false;
    std::string detail;  // first discrepancy, empty when pass
};

OracleReport oracle_compare(Family f, int n, long q, int threads = 0);

}  // namespace clp
