// Drives the installed binary end to end; argv[1] is the path to clp.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    std::printf("%s: %s\n", ok ? "ok" : "FAIL", what.c_str());
    if (!ok) ++failures;
}

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& bin, const std::string& args) {
    RunResult r;
    std::string cmd = bin + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int status = pclose(p);
    if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <path-to-clp>\n", argv[0]);
        return 2;
    }
    std::string bin = argv[1];

    // the pinned one-partition example, byte for byte
    auto lam = run(bin, "lambda --family gl --n 2 --q 2 --partition 1,1");
    expect(lam.code == 0, "lambda exits 0");
    expect(lam.out == "{\"partition\":[1,1],\"value\":\"1/6\"}\n", "lambda emits the exact bytes");

    // usage and validation errors exit 2
    expect(run(bin, "lambda --family o-odd --n 2 --q 2 --partition -").code == 2,
           "parity mismatch exits 2");
    expect(run(bin, "lambda --family gl --n 2 --q 2 --partition 1,1 --bogus").code == 2,
           "unknown flag exits 2");
    expect(run(bin, "frobnicate").code == 2, "unknown subcommand exits 2");
    expect(run(bin, "aut --family gl --q 2").code == 2, "missing required flag exits 2");
    expect(run(bin, "distribution --family gl --n 2 --q 2 --format tsv").code == 2,
           "unknown format exits 2");
    expect(run(bin, "--help").code == 0, "--help exits 0");

    // aut: non-integer order shows up as a fraction in lowest terms
    auto aut = run(bin, "aut --family o-even --q 2 --partition 1,1");
    expect(aut.code == 0, "aut exits 0");
    expect(contains(aut.out, "\"aut_order\":\"3/2\""), "aut emits 3/2");

    // distribution: exact CSV table for gl n=2 q=2
    auto dist = run(bin, "distribution --family gl --n 2 --q 2 --format csv");
    expect(dist.code == 0, "distribution exits 0");
    expect(dist.out == "partition,value\n\"-\",1/3\n\"1\",0\n\"2\",1/2\n\"1,1\",1/6\n",
           "distribution csv is the frozen table");
    auto dist2 = run(bin, "distribution --family gl --n 2 --q 2 --format csv");
    expect(dist.out == dist2.out, "distribution output is byte-identical across runs");

    auto dist_json = run(bin, "distribution --family sp --n 2 --q 3");
    expect(dist_json.code == 0, "sp distribution normalizes");
    expect(contains(dist_json.out, "\"normalized\":true"), "distribution reports normalization");

    // limit-measure: interval payload with a 12-digit hint
    auto lim = run(bin, "limit-measure --family gl --q 2 --partition - --nfactors 40");
    expect(lim.code == 0, "limit-measure exits 0");
    expect(contains(lim.out, "\"decimal_hint\":\"0.288788095087\""),
           "limit-measure hints the q=2 constant");

    // tv: both methods agree
    auto tv = run(bin, "tv --family sp --n 1 --q 2");
    expect(tv.code == 0, "tv exits 0");
    expect(contains(tv.out, "\"methods_intersect\":true"), "tv methods intersect");
    expect(contains(tv.out, "\"decimal_hint\":\"0.387051705470\""), "tv hints the sp(2,2) value");

    // verify-bounds: small grid, all contained
    auto vb = run(bin, "verify-bounds --family gl --n 1..3 --q 2,3 --format csv");
    expect(vb.code == 0, "verify-bounds exits 0");
    int contained = 0;
    for (size_t pos = 0; (pos = vb.out.find("contained", pos)) != std::string::npos; ++pos)
        ++contained;
    expect(contained == 6, "verify-bounds reports 6 contained cells");

    // identities: csv row per tag, all true
    auto ids = run(bin, "identities --q 2 --degree 12 --format csv");
    expect(ids.code == 0, "identities exits 0");
    int true_rows = 0;
    for (size_t pos = 0; (pos = ids.out.find(",true\n", pos)) != std::string::npos; ++pos)
        ++true_rows;
    expect(true_rows == 11, "identities reports 11 passing tags");

    // oracle: a small cell passes end to end
    auto oracle = run(bin, "oracle --family u --n 2 --q 2");
    expect(oracle.code == 0, "oracle exits 0");
    expect(contains(oracle.out, "\"pass\":true"), "oracle reports pass");

    // sample: deterministic for a fixed seed, degenerate at u=0
    auto s1 = run(bin, "sample --family gl --q 2 --count 16 --seed 42");
    auto s2 = run(bin, "sample --family gl --q 2 --count 16 --seed 42");
    expect(s1.code == 0, "sample exits 0");
    expect(s1.out == s2.out, "sample output is seed-deterministic");
    auto s3 = run(bin, "sample --family gl --q 2 --count 16 --seed 43");
    expect(s1.out != s3.out, "different seeds draw differently");
    auto s0 = run(bin, "sample --family gl --q 2 --count 5 --seed 1 --u 0");
    expect(s0.code == 0, "sample at u=0 exits 0");
    expect(contains(s0.out, "\"draws\":[[],[],[],[],[]]"), "u=0 draws only the empty partition");
    expect(contains(s0.out, "\"overflow\":0"), "u=0 has no overflow");

    if (failures == 0) {
        std::printf("cli: all checks pass\n");
        return 0;
    }
    std::printf("cli: %d check(s) failed\n", failures);
    return 1;
}
