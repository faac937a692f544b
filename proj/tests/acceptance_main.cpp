// Acceptance suite: runs every acceptance criterion across the fixture set
// and prints one pass/fail line per criterion.  Exit code 0 iff all pass.
//
// Usage: acceptance [--criterion N] [--width W]

#include "klr/fixtures.hpp"
#include "klr/suites.hpp"

#include <cstring>
#include <iostream>
#include <map>
#include <thread>

namespace {

using namespace klr;

struct CriterionResult {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (detail.empty()) detail = why;
    }
};

class SuiteCache {
public:
    explicit SuiteCache(int width) : width_(width) {}

    const SuiteReport& get(const std::string& suite, const Fixture& fixture) {
        auto key = std::make_pair(suite, fixture.name);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        SuiteConfig cfg;
        cfg.width = width_;
        if (suite == "pairing") cfg.cap = 20; // criterion 3 pins cap 20
        SuiteReport report = runSuiteByName(suite, fixture.datum, cfg, fixture.name);
        return cache_.emplace(key, std::move(report)).first->second;
    }

private:
    int width_;
    std::map<std::pair<std::string, std::string>, SuiteReport> cache_;
};

void mergeSuiteFailures(const SuiteReport& report, CriterionResult& result,
                        const std::string& prefix = "") {
    for (const CheckResult& c : report.checks) {
        if (!prefix.empty() && c.name.rfind(prefix, 0) != 0) continue;
        if (!c.pass)
            result.fail(report.datumName + ": " + c.name +
                        (c.detail.empty() ? "" : " (" + c.detail + ")"));
    }
}

long countChecks(const SuiteReport& report, const std::string& prefix) {
    long n = 0;
    for (const CheckResult& c : report.checks)
        if (c.name.rfind(prefix, 0) == 0) n++;
    return n;
}

CriterionResult criterion1(SuiteCache& cache) {
    CriterionResult r;
    for (const Fixture& f : fixtureDatums()) mergeSuiteFailures(cache.get("polyrep", f), r);
    return r;
}

CriterionResult criterion2(SuiteCache& cache) {
    CriterionResult r;
    for (const Fixture& f : fixtureDatums()) mergeSuiteFailures(cache.get("basis-oracle", f), r);
    return r;
}

CriterionResult criterion3(SuiteCache& cache) {
    CriterionResult r;
    long pairs = 0;
    for (const Fixture& f : fixtureDatums()) {
        const SuiteReport& report = cache.get("pairing", f);
        mergeSuiteFailures(report, r);
        auto it = report.stats.find("ordered-pairs");
        if (it != report.stats.end()) pairs += it->second;
    }
    if (pairs < 100) r.fail("pairing sweep unexpectedly small");
    return r;
}

CriterionResult criterion4(SuiteCache& cache) {
    CriterionResult r;
    for (const Fixture& f : fixtureDatums()) {
        const SuiteReport& report = cache.get("serre", f);
        mergeSuiteFailures(report, r, "serre ");
        mergeSuiteFailures(report, r, "P_ij = P_ji");
    }
    // every a_ij in {0,-1,-2} must be exercised somewhere in the fixture set
    std::map<long, long> coverage;
    for (const Fixture& f : fixtureDatums())
        for (int i : f.datum.realIndices())
            for (int j = 0; j < f.datum.rank(); j++)
                if (j != i && f.datum.a(i, j) >= -2) coverage[f.datum.a(i, j)]++;
    for (long a : {0L, -1L, -2L})
        if (coverage[a] == 0) r.fail("no fixture instance with a_ij = " + std::to_string(a));
    return r;
}

CriterionResult criterion5(SuiteCache& cache) {
    CriterionResult r;
    long instances = 0;
    for (const Fixture& f : fixtureDatums()) {
        const SuiteReport& report = cache.get("modules", f);
        mergeSuiteFailures(report, r, "lbar(");
        instances += countChecks(report, "lbar(");
    }
    // four values of n per imaginary index across the fixture set
    long expected = 0;
    for (const Fixture& f : fixtureDatums())
        expected += 4L * static_cast<long>(f.datum.imaginaryIndices().size());
    if (instances != expected) r.fail("missing lbar instances");
    return r;
}

CriterionResult criterion6(SuiteCache& cache) {
    CriterionResult r;
    long instances = 0;
    for (const Fixture& f : fixtureDatums()) {
        const SuiteReport& report = cache.get("modules", f);
        mergeSuiteFailures(report, r, "induced trivials");
        mergeSuiteFailures(report, r, "Res of V(");
        auto it = report.stats.find("induced-modules");
        if (it != report.stats.end()) instances += it->second;
    }
    long expected = 0; // ten (n,m) pairs with n+m <= 5 per imaginary index
    for (const Fixture& f : fixtureDatums())
        expected += 10L * static_cast<long>(f.datum.imaginaryIndices().size());
    if (instances != expected) r.fail("missing induced-trivial instances");
    return r;
}

CriterionResult criterion7(SuiteCache& cache) {
    CriterionResult r;
    for (const Fixture& f : fixtureDatums()) {
        const SuiteReport& report = cache.get("center", f);
        mergeSuiteFailures(report, r);
        auto it = report.stats.find("nonsymmetric-failures");
        if (it == report.stats.end() || it->second < 1)
            r.fail(f.name + ": no non-symmetric counterexample was exercised");
    }
    return r;
}

CriterionResult criterion8(SuiteCache& cache) {
    CriterionResult r;
    long idempotents = 0, oracles = 0;
    for (const Fixture& f : fixtureDatums()) {
        const SuiteReport& report = cache.get("serre", f);
        mergeSuiteFailures(report, r, "e_{");
        mergeSuiteFailures(report, r, "divided gdim matches rank oracle");
        idempotents += countChecks(report, "e_{");
        oracles += countChecks(report, "divided gdim matches rank oracle");
    }
    if (idempotents < 1 || oracles < 1) r.fail("no divided-power instances in the fixture set");
    return r;
}

CriterionResult criterion9(SuiteCache& cache) {
    CriterionResult r;
    long twisted = 0;
    for (const Fixture& f : fixtureDatums()) {
        const SuiteReport& report = cache.get("mackey", f);
        mergeSuiteFailures(report, r);
        auto it = report.stats.find("mackey-twisted");
        if (it != report.stats.end()) twisted += it->second;
    }
    if (twisted < 1) r.fail("no instance exercised a nontrivial grading twist");
    return r;
}

CriterionResult criterion10(SuiteCache& cache) {
    CriterionResult r;
    long lemmaInstances = 0;
    for (const Fixture& f : fixtureDatums()) {
        const SuiteReport& report = cache.get("modules", f);
        mergeSuiteFailures(report, r, "epsilon/delta");
        mergeSuiteFailures(report, r, "delta recovers");
        auto it = report.stats.find("delta-recovery-instances");
        if (it != report.stats.end()) lemmaInstances += it->second;
    }
    if (lemmaInstances < 3) r.fail("fewer than 3 delta-recovery instances");
    return r;
}

const char* kTitles[10] = {
    "polynomial-representation relations hold exactly (ht <= 4, degree <= 4)",
    "normal-form mul matches the faithful action; mul is associative",
    "pairing recursion equals corner gdim for every pair of ht <= 4 (cap 20)",
    "quantum Serre categorification at character level; Serre radical pairs to zero",
    "imaginary rank-1 structure: dims, vanishing dots, unique maximal/minimal, trivial head",
    "induced trivials: binomial dimension, codim-1 head, shuffle character",
    "center: symmetric polynomials pass, non-symmetric fail, gdim matches the rank oracle",
    "divided-power idempotents are idempotent; divided gdim matches the rank oracle",
    "Mackey character identity on all fixture splits, with a nontrivial twist exercised",
    "epsilon/delta tail calculus and delta-recovery on fixture characters",
};

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    int width = static_cast<int>(std::thread::hardware_concurrency());
    if (width <= 0) width = 2;
    for (int a = 1; a < argc; a++) {
        if (std::strcmp(argv[a], "--criterion") == 0 && a + 1 < argc) only = std::atoi(argv[++a]);
        else if (std::strcmp(argv[a], "--width") == 0 && a + 1 < argc) width = std::atoi(argv[++a]);
    }

    SuiteCache cache(width);
    CriterionResult (*criteria[10])(SuiteCache&) = {
        criterion1, criterion2, criterion3, criterion4, criterion5,
        criterion6, criterion7, criterion8, criterion9, criterion10,
    };

    bool allPass = true;
    for (int c = 1; c <= 10; c++) {
        if (only != 0 && c != only) continue;
        CriterionResult result = criteria[c - 1](cache);
        std::cout << "[" << (result.pass ? "PASS" : "FAIL") << "] criterion " << c << ": "
                  << kTitles[c - 1];
        if (!result.pass) std::cout << " -- " << result.detail;
        std::cout << "\n" << std::flush;
        if (!result.pass) allPass = false;
    }
    return allPass ? 0 : 1;
}
