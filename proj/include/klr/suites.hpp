#pragma once

// Verification suites over a datum: each suite runs a family of exact checks
// and returns a structured report.  The CLI prints these; the acceptance
// binary runs them across the fixture set with the pinned configurations.

#include "klr/datum.hpp"

#include <map>
#include <string>
#include <vector>

namespace klr {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail; // counterexample payload when failing, context otherwise
};

struct SuiteReport {
    std::string suite;
    std::string datumName;
    std::vector<CheckResult> checks;
    std::map<std::string, long> stats;

    bool allPass() const;
    long passCount() const;
    long failCount() const;
};

struct SuiteConfig {
    long cap = 24;
    int maxHeight = 4;    // sweep guard on ht(nu)
    int moduleGuard = 5;  // construction guard for induced modules
    int testDegree = 4;   // polynomial-representation monomial degree
    unsigned long seed = 7;
    int width = 1;        // parallel task width
    long randomPairs = 50;
    long randomTriples = 100;
    std::string checkpointPath; // optional: pairing sweep resumption
};

SuiteReport runPolyrepSuite(const BorcherdsCartanDatum& datum, const SuiteConfig& cfg,
                            const std::string& datumName = "");
SuiteReport runBasisOracleSuite(const BorcherdsCartanDatum& datum, const SuiteConfig& cfg,
                                const std::string& datumName = "");
SuiteReport runSerreSuite(const BorcherdsCartanDatum& datum, const SuiteConfig& cfg,
                          const std::string& datumName = "");
SuiteReport runPairingSuite(const BorcherdsCartanDatum& datum, const SuiteConfig& cfg,
                            const std::string& datumName = "");
SuiteReport runModulesSuite(const BorcherdsCartanDatum& datum, const SuiteConfig& cfg,
                            const std::string& datumName = "");
SuiteReport runMackeySuite(const BorcherdsCartanDatum& datum, const SuiteConfig& cfg,
                           const std::string& datumName = "");
SuiteReport runCenterSuite(const BorcherdsCartanDatum& datum, const SuiteConfig& cfg,
                           const std::string& datumName = "");

SuiteReport runSuiteByName(const std::string& suite, const BorcherdsCartanDatum& datum,
                           const SuiteConfig& cfg, const std::string& datumName = "");

extern const std::vector<std::string> kSuiteNames;

} // namespace klr
