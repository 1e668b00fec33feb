// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Tolerances and grids are pinned here on purpose; do not loosen them.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "clp/identities.hpp"
#include "clp/groups.hpp"
#include "clp/products.hpp"
#include "clp/tv.hpp"

using namespace clp;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int idx, bool ok, const std::string& detail) {
    std::printf("CRITERION %d: %s  (%s)\n", idx, ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string cell_name(Family f, int n, long q) {
    return family_name(f) + " n=" + std::to_string(n) + " q=" + std::to_string(q);
}

/* ---- criterion 1: identity suite ------------------------------------- */

void criterion_identities() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string bad;
    for (long q : {2L, 3L, 4L, 5L}) {
        for (IdentityTag tag : all_identity_tags()) {
            auto rep = identity_check(tag, Rational(q), 30);
            if (!rep.pass) {
                ok = false;
                if (bad.empty()) bad = identity_tag_name(tag) + " at q=" + std::to_string(q);
            }
        }
    }
    double secs = seconds_since(t0);
    bool in_time = secs < 10.0;
    std::string detail = "11 identities, q in {2,3,4,5}, degree 30, " +
                         std::to_string(secs).substr(0, 5) + "s of 10s";
    if (!bad.empty()) detail += ", first failure: " + bad;
    if (!in_time) detail += ", over time budget";
    report(1, ok && in_time, detail);
}

/* ---- criterion 2: enumeration oracles --------------------------------- */

struct OracleCell {
    Family f;
    int n;
    long q;
};

const std::vector<OracleCell>& oracle_cells() {
    static const std::vector<OracleCell> cells = {
        {Family::GL, 1, 2},    {Family::GL, 2, 2},   {Family::GL, 3, 2},  {Family::GL, 4, 2},
        {Family::GL, 1, 3},    {Family::GL, 2, 3},   {Family::GL, 3, 3},  {Family::GL, 2, 4},
        {Family::U, 1, 2},     {Family::U, 2, 2},    {Family::U, 3, 2},   {Family::U, 2, 3},
        {Family::SP, 1, 2},    {Family::SP, 1, 3},   {Family::SP, 1, 5},  {Family::SP, 2, 2},
        {Family::SP, 2, 3},    {Family::O_ODD, 1, 3}, {Family::O_ODD, 2, 3},
        {Family::O_ODD, 3, 3}, {Family::O_ODD, 1, 5}, {Family::O_ODD, 2, 5},
        {Family::O_ODD, 3, 5}, {Family::O_ODD, 4, 3}, {Family::O_EVEN, 1, 2},
        {Family::O_EVEN, 1, 4}, {Family::O_EVEN, 2, 2}, {Family::O_EVEN, 2, 4},
    };
    return cells;
}

std::vector<OracleReport> criterion_oracles() {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<OracleReport> reports;
    bool ok = true;
    std::string note;
    int skipped = 0;
    for (const auto& cell : oracle_cells()) {
        // the largest even-characteristic cell rides the edge of the budget,
        // and the grid excludes it rather than failing when the budget is cut
        GroupSpec probe{cell.f, cell.f == Family::SP || cell.f == Family::O_EVEN ? 2 * cell.n
                                                                                 : cell.n,
                        cell.q, cell.f == Family::O_EVEN || cell.f == Family::O_ODD
                                    ? FormType::plus
                                    : FormType::none};
        if (!within_budget(probe)) {
            ++skipped;
            note += (note.empty() ? "" : "; ") + cell_name(cell.f, cell.n, cell.q) +
                    " excluded by budget";
            continue;
        }
        auto rep = oracle_compare(cell.f, cell.n, cell.q);
        if (!rep.pass) {
            ok = false;
            if (note.empty()) note = cell_name(cell.f, cell.n, cell.q) + ": " + rep.detail;
        }
        reports.push_back(std::move(rep));
    }
    double secs = seconds_since(t0);
    bool in_time = secs < 600.0;
    std::string detail = std::to_string(reports.size()) + " cells exact, " +
                         std::to_string(skipped) + " excluded, " +
                         std::to_string(secs).substr(0, 5) + "s of 600s";
    if (!note.empty()) detail += "; " + note;
    if (!in_time) detail += ", over time budget";
    report(2, ok && in_time, detail);
    return reports;
}

/* ---- criterion 3: frozen spot values ---------------------------------- */

const OracleReport* find_report(const std::vector<OracleReport>& reports, Family f, int n,
                                long q) {
    for (const auto& r : reports)
        if (r.family == f && r.n == n && r.q == q) return &r;
    return nullptr;
}

bool spot_matches(const std::vector<OracleReport>& reports, Family f, int n, long q,
                  const std::vector<std::pair<Partition, Rational>>& expect, std::string* why) {
    const OracleReport* rep = find_report(reports, f, n, q);
    if (!rep) {
        *why = cell_name(f, n, q) + " not enumerated";
        return false;
    }
    if (rep->empirical.size() != expect.size()) {
        *why = cell_name(f, n, q) + " has " + std::to_string(rep->empirical.size()) +
               " nonzero classes, expected " + std::to_string(expect.size());
        return false;
    }
    for (const auto& [lambda, value] : expect) {
        auto it = rep->empirical.find(lambda);
        if (it == rep->empirical.end() || !(it->second == value)) {
            *why = cell_name(f, n, q) + " disagrees at " + lambda.str();
            return false;
        }
    }
    return true;
}

void criterion_spot_values(const std::vector<OracleReport>& reports) {
    bool ok = true;
    std::string why;
    ok &= spot_matches(reports, Family::GL, 2, 2,
                       {{Partition(), Rational(1, 3)},
                        {Partition({2}), Rational(1, 2)},
                        {Partition({1, 1}), Rational(1, 6)}},
                       &why);
    if (ok)
        ok &= spot_matches(reports, Family::U, 1, 2,
                           {{Partition(), Rational(2, 3)}, {Partition({1}), Rational(1, 3)}},
                           &why);
    if (ok)
        ok &= spot_matches(reports, Family::O_EVEN, 1, 2,
                           {{Partition(), Rational(1, 6)},
                            {Partition({1, 1}), Rational(1, 3)},
                            {Partition({2}), Rational(1, 2)}},
                           &why);
    if (ok)
        ok &= spot_matches(reports, Family::O_ODD, 1, 3,
                           {{Partition(), Rational(1, 2)}, {Partition({1}), Rational(1, 2)}},
                           &why);
    report(3, ok, ok ? "4 frozen tables reproduced from enumeration" : why);
}

/* ---- criterion 4: the closed-form distance ---------------------------- */

void criterion_closed_form() {
    Rational tol(1, 10000000000L);  // 1e-10
    Interval a = tv_proposition(Family::GL, 1, 2);
    Interval b = tv_direct(Family::GL, 1, 2);
    Interval target = Rational(1) - infinite_product(GL_PROD, Rational(2), Rational(1), 256);
    bool ok = a.width() < tol && b.width() < tol && a.contains(target) && b.contains(target) &&
              a.intersects(b);
    report(4, ok,
           "both routes enclose 1 - prod(1 - 2^-i) to width < 1e-10, mid " + a.mid().decimal(12));
}

/* ---- criterion 5: theorem grid --------------------------------------- */

void criterion_grid() {
    auto t0 = std::chrono::steady_clock::now();
    const std::vector<int> ns = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    const std::vector<long> generic_qs = {2, 3, 4, 5, 7, 8, 9};
    const std::vector<long> odd_qs = {3, 5, 7, 9};
    const std::vector<long> even_qs = {2, 4, 8};

    bool ok = true;
    std::string bad;
    int cells = 0;
    auto run = [&](Family f, const std::vector<long>& qs) {
        auto checks = verify_grid(f, ns, qs);
        for (const auto& chk : checks) {
            ++cells;
            if (chk.verdict != BoundVerdict::contained) {
                ok = false;
                if (bad.empty())
                    bad = cell_name(f, chk.n, chk.q) +
                          (chk.verdict == BoundVerdict::violated ? " violated" : " undecided");
            }
        }
    };
    run(Family::GL, generic_qs);
    run(Family::U, generic_qs);
    run(Family::SP, generic_qs);
    run(Family::O_ODD, odd_qs);
    run(Family::O_EVEN, even_qs);

    double secs = seconds_since(t0);
    bool in_time = secs < 120.0;
    std::string detail = std::to_string(cells) + " cells contained, " +
                         std::to_string(secs).substr(0, 5) + "s of 120s";
    if (!bad.empty()) detail += ", first failure: " + bad;
    if (!in_time) detail += ", over time budget";
    report(5, ok && in_time, detail);
}

/* ---- criterion 6: cross-method agreement ------------------------------ */

void criterion_cross_method() {
    Rational tol(1, 1000000000L);  // 1e-9
    bool ok = true;
    std::string bad;
    int cells = 0;
    for (Family f : {Family::GL, Family::U, Family::SP, Family::O_ODD, Family::O_EVEN}) {
        for (long q : {2L, 3L}) {
            if (f == Family::O_ODD && q % 2 == 0) continue;
            if (f == Family::O_EVEN && q % 2 != 0) continue;
            for (int n = 1; n <= 4; ++n) {
                ++cells;
                Interval a = tv_proposition(f, n, q);
                Interval b = tv_direct(f, n, q);
                if (!(a.intersects(b) && a.width() < tol && b.width() < tol)) {
                    ok = false;
                    if (bad.empty()) bad = cell_name(f, n, q);
                }
            }
        }
    }
    std::string detail =
        std::to_string(cells) + " cells intersect at width < 1e-9";
    if (!bad.empty()) detail += ", first failure: " + bad;
    report(6, ok, detail);
}

/* ---- criterion 7: exact normalization --------------------------------- */

void criterion_normalization() {
    bool ok = true;
    std::string bad;
    int tables = 0;
    for (Family f : {Family::GL, Family::U, Family::SP, Family::O_ODD, Family::O_EVEN}) {
        for (long q : {2L, 3L}) {
            if (f == Family::O_ODD && q % 2 == 0) continue;
            if (f == Family::O_EVEN && q % 2 != 0) continue;
            for (int n = 1; n <= 6; ++n) {
                ++tables;
                if (!normalization_check(distribution_table(f, n, q))) {
                    ok = false;
                    if (bad.empty()) bad = cell_name(f, n, q);
                }
            }
        }
    }
    std::string detail = std::to_string(tables) + " tables sum to 1 exactly";
    if (!bad.empty()) detail += ", first failure: " + bad;
    report(7, ok, detail);
}

/* ---- criterion 8: proof-constant enclosures ---------------------------- */

void criterion_constants() {
    Interval from3 = infinite_product(GL_PROD, Rational(2), Rational(1), 64, 3);
    Interval gl_recip = infinite_product({ProductFamily::gl, true}, Rational(2), Rational(1), 64);
    Interval even2 = infinite_product(EVEN_EXP_RECIP, Rational(2), Rational(1), 64);
    Interval even3 = infinite_product(EVEN_EXP_RECIP, Rational(3), Rational(1), 64);
    bool ok = from3.lo >= Rational(77, 100) && gl_recip.hi <= Rational(7, 2) &&
              even2.hi <= Rational(3, 2) && even3.hi <= Rational(6, 5);
    report(8, ok,
           "prod_{j>=3}(1-2^-j) >= 0.77, reciprocals <= 3.5 (gl q=2), 1.5 / 1.2 (even exp q=2,3)");
}

/* ---- criterion 9: support shape of the enumerated tables --------------- */

void criterion_support(const std::vector<OracleReport>& reports) {
    bool ok = true;
    std::string bad;
    for (const auto& rep : reports) {
        SupportConstraint support = family_support(rep.family);
        for (const auto& [lambda, value] : rep.empirical) {
            if (!satisfies(lambda, support)) {
                ok = false;
                if (bad.empty())
                    bad = cell_name(rep.family, rep.n, rep.q) + " breaks multiplicity at " +
                          lambda.str();
            }
            if ((rep.family == Family::SP || rep.family == Family::O_EVEN) &&
                lambda.size() % 2 != 0) {
                ok = false;
                if (bad.empty())
                    bad = cell_name(rep.family, rep.n, rep.q) + " has odd size " + lambda.str();
            }
        }
    }
    std::string detail = "all enumerated classes respect the family constraints";
    if (!bad.empty()) detail = bad;
    report(9, ok, detail);
}

}  // namespace

int main() {
    criterion_identities();
    auto reports = criterion_oracles();
    criterion_spot_values(reports);
    criterion_closed_form();
    criterion_grid();
    criterion_cross_method();
    criterion_normalization();
    criterion_constants();
    criterion_support(reports);
    if (failures == 0) {
        std::printf("acceptance: all 9 criteria pass\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
}
