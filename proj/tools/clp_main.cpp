#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "clp/groups.hpp"
#include "clp/identities.hpp"
#include "clp/tv.hpp"

using json = nlohmann::ordered_json;
using namespace clp;

namespace {

/* "a..b" inclusive, or a comma list, or a single value. */
std::vector<long> parse_range(const std::string& s) {
    auto dots = s.find("..");
    std::vector<long> out;
    auto parse_one = [](const std::string& tok) {
        size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad number '" + tok + "'");
        return v;
    };
    if (dots != std::string::npos) {
        long a = parse_one(s.substr(0, dots));
        long b = parse_one(s.substr(dots + 2));
        if (b < a) throw std::invalid_argument("empty range '" + s + "'");
        for (long v = a; v <= b; ++v) out.push_back(v);
        return out;
    }
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok =
            s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        out.push_back(parse_one(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("empty range '" + s + "'");
    return out;
}

json partition_json(const Partition& p) {
    json arr = json::array();
    for (int part : p.parts()) arr.push_back(part);
    return arr;
}

json interval_json(const Interval& iv) {
    return json{{"lo", iv.lo.str()}, {"hi", iv.hi.str()}, {"decimal_hint", iv.mid().decimal(12)}};
}

void emit(const json& j) { std::printf("%s\n", j.dump().c_str()); }

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

struct Args {
    std::string family, partition, format = "json", u = "1", tags = "all", method = "both";
    std::string n_range, q_range;
    long n = 0, q = 0, count = 0, seed = 0;
    int threads = 0, degree = 30, nfactors = 64, tail_cut = 64, support_cut = -1, size_cap = 64;
    std::string tail_epsilon = "1/1000000000";
};

int cmd_aut(const Args& a) {
    Family f = family_parse(a.family);
    Partition p = Partition::parse(a.partition);
    if (!is_prime_power(a.q)) throw std::invalid_argument("q must be a prime power");
    Rational aut = aut_order(f, p, Rational(a.q));
    emit(json{{"family", family_name(f)},
              {"q", a.q},
              {"partition", partition_json(p)},
              {"aut_order", aut.str()}});
    return 0;
}

int cmd_limit_measure(const Args& a) {
    MeasureParams params{family_parse(a.family), a.q, Rational::parse(a.u)};
    Partition p = Partition::parse(a.partition);
    Interval value = limit_measure(params, p, a.nfactors);
    emit(json{{"family", family_name(params.family)},
              {"q", a.q},
              {"u", params.u.str()},
              {"partition", partition_json(p)},
              {"nfactors", a.nfactors},
              {"value", interval_json(value)}});
    return 0;
}

int cmd_lambda(const Args& a) {
    Family f = family_parse(a.family);
    Partition p = Partition::parse(a.partition);
    Rational value = lambda_measure(f, int(a.n), a.q, p);
    emit(json{{"partition", partition_json(p)}, {"value", value.str()}});
    return 0;
}

int cmd_distribution(const Args& a) {
    Family f = family_parse(a.family);
    DistributionTable table = distribution_table(f, int(a.n), a.q, a.threads);
    bool normalized = normalization_check(table);
    if (a.format == "csv") {
        std::printf("partition,value\n");
        for (const auto& [p, v] : table.entries)
            std::printf("%s,%s\n", csv_quote(p.str()).c_str(), v.str().c_str());
    } else {
        json entries = json::array();
        for (const auto& [p, v] : table.entries)
            entries.push_back(json{{"partition", partition_json(p)}, {"value", v.str()}});
        emit(json{{"family", family_name(f)},
                  {"n", table.n},
                  {"q", table.q},
                  {"entries", entries},
                  {"normalized", normalized}});
    }
    return normalized ? 0 : 1;
}

int cmd_tv(const Args& a) {
    Family f = family_parse(a.family);
    bool want_prop = a.method == "proposition" || a.method == "both";
    bool want_direct = a.method == "direct" || a.method == "both";
    if (!want_prop && !want_direct)
        throw std::invalid_argument("--method must be proposition, direct or both");
    json out{{"family", family_name(f)}, {"n", a.n}, {"q", a.q}};
    Interval prop, direct;
    if (want_prop) {
        prop = tv_proposition(f, int(a.n), a.q, a.tail_cut, a.nfactors);
        out["proposition"] = interval_json(prop);
    }
    if (want_direct) {
        direct = tv_direct(f, int(a.n), a.q, a.support_cut, a.nfactors);
        out["direct"] = interval_json(direct);
    }
    bool consistent = true;
    if (want_prop && want_direct) {
        consistent = prop.intersects(direct);
        out["methods_intersect"] = consistent;
    }
    emit(out);
    return consistent ? 0 : 1;
}

int cmd_verify_bounds(const Args& a) {
    Family f = family_parse(a.family);
    std::vector<int> ns;
    for (long v : parse_range(a.n_range)) ns.push_back(int(v));
    std::vector<long> qs = parse_range(a.q_range);
    std::vector<BoundCheck> checks = verify_grid(f, ns, qs, a.threads);

    bool all_contained = true;
    for (const BoundCheck& c : checks)
        if (c.verdict != BoundVerdict::contained) all_contained = false;
    auto verdict_name = [](BoundVerdict v) {
        return v == BoundVerdict::contained   ? "contained"
               : v == BoundVerdict::violated ? "violated"
                                             : "undecided";
    };

    if (a.format == "csv") {
        std::printf("family,n,q,verdict,tv_lo,tv_hi,bound_lo,bound_hi,tail_cut\n");
        for (const BoundCheck& c : checks)
            std::printf("%s,%d,%ld,%s,%s,%s,%s,%s,%d\n", family_name(c.family).c_str(), c.n, c.q,
                        verdict_name(c.verdict), c.tv.lo.str().c_str(), c.tv.hi.str().c_str(),
                        c.bound_lo.str().c_str(), c.bound_hi.str().c_str(), c.tail_cut_used);
    } else {
        json cells = json::array();
        for (const BoundCheck& c : checks)
            cells.push_back(json{{"n", c.n},
                                 {"q", c.q},
                                 {"verdict", verdict_name(c.verdict)},
                                 {"tv", interval_json(c.tv)},
                                 {"bound_lo", c.bound_lo.str()},
                                 {"bound_hi", c.bound_hi.str()},
                                 {"tail_cut", c.tail_cut_used}});
        emit(json{{"family", family_name(f)}, {"cells", cells}, {"all_contained", all_contained}});
    }
    return all_contained ? 0 : 1;
}

int cmd_identities(const Args& a) {
    std::vector<IdentityTag> tags;
    if (a.tags == "all") {
        tags = all_identity_tags();
    } else {
        size_t pos = 0;
        while (pos <= a.tags.size()) {
            size_t comma = a.tags.find(',', pos);
            std::string tok = a.tags.substr(
                pos, comma == std::string::npos ? std::string::npos : comma - pos);
            tags.push_back(identity_tag_parse(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    std::vector<long> qs = parse_range(a.q_range.empty() ? "2" : a.q_range);

    bool all_pass = true;
    std::vector<IdentityReport> reports;
    for (IdentityTag tag : tags)
        for (long q : qs) {
            reports.push_back(identity_check(tag, Rational(q), a.degree));
            all_pass = all_pass && reports.back().pass;
        }

    if (a.format == "csv") {
        std::printf("tag,q,degree,pass\n");
        for (const IdentityReport& r : reports)
            std::printf("%s,%s,%d,%s\n", identity_tag_name(r.tag).c_str(), r.q.str().c_str(),
                        r.degree, r.pass ? "true" : "false");
    } else {
        json checks = json::array();
        for (const IdentityReport& r : reports) {
            json item{{"tag", identity_tag_name(r.tag)},
                      {"q", r.q.str()},
                      {"degree", r.degree},
                      {"pass", r.pass}};
            if (r.first_mismatch)
                item["first_mismatch"] = json{{"degree", *r.first_mismatch},
                                              {"lhs", r.lhs_at_mismatch.str()},
                                              {"rhs", r.rhs_at_mismatch.str()}};
            checks.push_back(std::move(item));
        }
        emit(json{{"checks", checks}, {"all_pass", all_pass}});
    }
    return all_pass ? 0 : 1;
}

int cmd_oracle(const Args& a) {
    Family f = family_parse(a.family);
    OracleReport r = oracle_compare(f, int(a.n), a.q, a.threads);

    json groups = json::array();
    for (size_t i = 0; i < r.specs.size(); ++i)
        groups.push_back(json{{"group", group_spec_name(r.specs[i])},
                              {"order", r.enumerated_orders[i].get_str()}});
    json empirical = json::array();
    for (const auto& [p, v] : r.empirical)
        empirical.push_back(json{{"partition", partition_json(p)}, {"value", v.str()}});
    json predicted = json::array();
    for (const auto& [p, v] : r.predicted.entries)
        predicted.push_back(json{{"partition", partition_json(p)}, {"value", v.str()}});

    json out{{"family", family_name(f)},       {"n", r.n},
             {"q", r.q},                       {"groups", groups},
             {"empirical", empirical},         {"predicted", predicted},
             {"orders_match", r.orders_match}, {"support_match", r.support_match},
             {"values_match", r.values_match}, {"pass", r.pass}};
    if (!r.pass) out["detail"] = r.detail;
    emit(out);
    return r.pass ? 0 : 1;
}

int cmd_sample(const Args& a) {
    MeasureParams params{family_parse(a.family), a.q, Rational::parse(a.u)};
    Rational eps = Rational::parse(a.tail_epsilon);
    SampleResult r =
        sample_measure(params, a.count, std::uint64_t(a.seed), eps, a.size_cap);
    json draws = json::array();
    for (const Partition& p : r.draws) draws.push_back(partition_json(p));
    emit(json{{"family", family_name(params.family)},
              {"q", a.q},
              {"u", params.u.str()},
              {"count", a.count},
              {"seed", a.seed},
              {"draws", draws},
              {"overflow", r.overflow},
              {"covered_mass", r.covered_mass.str()},
              {"max_size_reached", r.max_size_reached}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cohen-Lenstra partition measures for finite classical groups"};
    app.require_subcommand(1);
    Args a;

    auto add_family = [&](CLI::App* cmd) {
        cmd->add_option("--family", a.family, "gl | u | sp | o-odd | o-even")->required();
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", a.format, "json | csv (default json)")
            ->check(CLI::IsMember({"json", "csv"}));
    };
    auto add_threads = [&](CLI::App* cmd) {
        cmd->add_option("--threads", a.threads, "worker cap, 0 = runtime default");
    };

    CLI::App* aut = app.add_subcommand("aut", "automorphism order of a partition");
    add_family(aut);
    aut->add_option("--partition", a.partition, "parts like 3,1,1 or - for empty")->required();
    aut->add_option("--q", a.q, "prime power")->required();

    CLI::App* lim = app.add_subcommand("limit-measure", "limit measure of one partition");
    add_family(lim);
    lim->add_option("--partition", a.partition)->required();
    lim->add_option("--q", a.q, "prime power")->required();
    lim->add_option("--u", a.u, "deformation in [0,1], rational like 1/2");
    lim->add_option("--nfactors", a.nfactors, "product truncation");

    CLI::App* lam = app.add_subcommand("lambda", "finite-n measure of one partition");
    add_family(lam);
    lam->add_option("--partition", a.partition)->required();
    lam->add_option("--n", a.n)->required();
    lam->add_option("--q", a.q)->required();

    CLI::App* dist = app.add_subcommand("distribution", "full finite-n table");
    add_family(dist);
    dist->add_option("--n", a.n)->required();
    dist->add_option("--q", a.q)->required();
    add_format(dist);
    add_threads(dist);

    CLI::App* tv = app.add_subcommand("tv", "total variation distance to the limit");
    add_family(tv);
    tv->add_option("--n", a.n)->required();
    tv->add_option("--q", a.q)->required();
    tv->add_option("--method", a.method, "proposition | direct | both (default both)");
    tv->add_option("--tail-cut", a.tail_cut, "explicit strata cut (proposition method)");
    tv->add_option("--support-cut", a.support_cut, "enumeration cut (direct method)");
    tv->add_option("--nfactors", a.nfactors, "product truncation");

    CLI::App* vb = app.add_subcommand("verify-bounds", "check the sharp rate bounds on a grid");
    add_family(vb);
    vb->add_option("--n", a.n_range, "value, list or a..b")->required();
    vb->add_option("--q", a.q_range, "value, list or a..b")->required();
    add_format(vb);
    add_threads(vb);

    CLI::App* ids = app.add_subcommand("identities", "generating-function identity checks");
    ids->add_option("--tags", a.tags, "comma list or all (default all)");
    ids->add_option("--q", a.q_range, "value, list or a..b (default 2)");
    ids->add_option("--degree", a.degree, "series truncation (default 30)");
    add_format(ids);

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force check against one group");
    add_family(oracle);
    oracle->add_option("--n", a.n)->required();
    oracle->add_option("--q", a.q)->required();
    add_threads(oracle);

    CLI::App* sample = app.add_subcommand("sample", "draw from the limit measure");
    add_family(sample);
    sample->add_option("--q", a.q)->required();
    sample->add_option("--u", a.u, "deformation in [0,1]");
    sample->add_option("--count", a.count)->required();
    sample->add_option("--seed", a.seed, "RNG seed (default 0)");
    sample->add_option("--tail-epsilon", a.tail_epsilon, "uncovered mass cap");
    sample->add_option("--size-cap", a.size_cap, "enumeration size cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit 0, any parse failure is usage error
    }

    try {
        if (app.got_subcommand(aut)) return cmd_aut(a);
        if (app.got_subcommand(lim)) return cmd_limit_measure(a);
        if (app.got_subcommand(lam)) return cmd_lambda(a);
        if (app.got_subcommand(dist)) return cmd_distribution(a);
        if (app.got_subcommand(tv)) return cmd_tv(a);
        if (app.got_subcommand(vb)) return cmd_verify_bounds(a);
        if (app.got_subcommand(ids)) return cmd_identities(a);
        if (app.got_subcommand(oracle)) return cmd_oracle(a);
        if (app.got_subcommand(sample)) return cmd_sample(a);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
