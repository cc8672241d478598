#pragma once

// Cross-verification: recompute the same quantities along independent
// routes and report every identity as PASS, FAIL or SKIP. A check is
// skipped (never silently dropped) when a feasibility guard excludes it
// at the requested n.

#include <iosfwd>
#include <string>
#include <vector>

#include "graphcount/genfunc.hpp"
#include "graphcount/invariants.hpp"
#include "graphcount/oracle.hpp"
#include "graphcount/polydet.hpp"

namespace graphcount {

enum class VerifyStatus { Pass, Fail, Skip };
enum class VerifySuite { Formulas, Lemmas, Invariants };

const char* suite_name(VerifySuite suite);

/// Parse a comma-separated suite list; "all" selects every suite.
std::vector<VerifySuite> parse_suites(const std::string& names);

struct VerifyLine {
    VerifySuite suite;
    std::string name;
    VerifyStatus status;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyLine> lines;

    bool any_fail() const;
    bool any_skip() const;
    /// 0 all pass, 1 any failure, 2 no failures but guarded skips.
    int exit_code() const;
};

struct VerifyOptions {
    unsigned element_guard = kElementSumGuard;
    unsigned det_guard = kCharDetGuard;
    unsigned cofactor_guard = kCofactorGuard;
    unsigned reynolds_guard = kReynoldsGuard;
    unsigned orbit_guard = kOrbitGuard;
    unsigned brute_simple_guard = kBruteSimpleGuard;
    unsigned brute_multi_guard = kBruteMultiGuard;
    unsigned brute_multi_degree_guard = kBruteMultiDegreeGuard;
};

VerifyReport run_verify(unsigned n, const std::vector<VerifySuite>& suites,
                        const VerifyOptions& opts = {});

void render_report(const VerifyReport& report, std::ostream& out);

} // namespace graphcount
