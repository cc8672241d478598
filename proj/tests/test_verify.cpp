#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "graphcount/verify.hpp"

using namespace graphcount;

TEST_SUITE("verify") {

TEST_CASE("suite parsing") {
    std::vector<VerifySuite> all = parse_suites("all");
    CHECK(all.size() == 3);
    CHECK(std::find(all.begin(), all.end(), VerifySuite::Formulas) != all.end());
    CHECK(std::find(all.begin(), all.end(), VerifySuite::Lemmas) != all.end());
    CHECK(std::find(all.begin(), all.end(), VerifySuite::Invariants) != all.end());

    CHECK(parse_suites("formulas") == std::vector<VerifySuite>{VerifySuite::Formulas});
    CHECK(parse_suites("lemmas,invariants") ==
          std::vector<VerifySuite>{VerifySuite::Lemmas, VerifySuite::Invariants});
    CHECK(parse_suites("formulas,formulas").size() == 1); // duplicates collapse
    CHECK(parse_suites("formulas,all").size() == 3);

    CHECK_THROWS_AS(parse_suites("bogus"), std::invalid_argument);
    CHECK_THROWS_AS(parse_suites(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_suites("formulas,"), std::invalid_argument);

    CHECK(std::string(suite_name(VerifySuite::Formulas)) == "formulas");
    CHECK(std::string(suite_name(VerifySuite::Lemmas)) == "lemmas");
    CHECK(std::string(suite_name(VerifySuite::Invariants)) == "invariants");
}

TEST_CASE("report bookkeeping") {
    VerifyReport r;
    CHECK_FALSE(r.any_fail());
    CHECK_FALSE(r.any_skip());
    CHECK(r.exit_code() == 0);

    r.lines.push_back({VerifySuite::Formulas, "a", VerifyStatus::Pass, ""});
    CHECK(r.exit_code() == 0);
    r.lines.push_back({VerifySuite::Formulas, "b", VerifyStatus::Skip, "guarded"});
    CHECK(r.exit_code() == 2);
    r.lines.push_back({VerifySuite::Formulas, "c", VerifyStatus::Fail, "boom"});
    CHECK(r.exit_code() == 1); // failure outranks skip
}

TEST_CASE("worked example size passes everything") {
    VerifyReport r = run_verify(4, parse_suites("all"));
    CHECK(r.lines.size() == 18);
    for (const auto& line : r.lines) {
        CAPTURE(line.name);
        CAPTURE(line.detail);
        CHECK(line.status == VerifyStatus::Pass);
    }
    CHECK(r.exit_code() == 0);
}

TEST_CASE("smallest nontrivial size passes") {
    VerifyReport r = run_verify(2, parse_suites("formulas"));
    CHECK(r.lines.size() == 8);
    for (const auto& line : r.lines) {
        CAPTURE(line.name);
        CHECK(line.status == VerifyStatus::Pass);
    }
    CHECK(r.exit_code() == 0);
}

TEST_CASE("guards turn checks into skips, never failures") {
    VerifyReport r6 = run_verify(6, {VerifySuite::Lemmas});
    int skips = 0;
    for (const auto& line : r6.lines) {
        CHECK(line.status != VerifyStatus::Fail);
        if (line.status == VerifyStatus::Skip) {
            ++skips;
            CHECK_FALSE(line.detail.empty()); // a skip always says why
        }
    }
    CHECK(skips == 1); // only the cofactor second opinion is out of reach
    CHECK(r6.exit_code() == 2);

    VerifyReport r9 = run_verify(9, parse_suites("all"));
    CHECK_FALSE(r9.any_fail());
    CHECK(r9.any_skip());
    CHECK(r9.exit_code() == 2);
    for (const auto& line : r9.lines) {
        if (line.status == VerifyStatus::Skip) CHECK_FALSE(line.detail.empty());
    }
}

TEST_CASE("raised guards unlock skipped checks") {
    VerifyOptions opts;
    opts.cofactor_guard = 15;
    VerifyReport r = run_verify(6, {VerifySuite::Lemmas}, opts);
    for (const auto& line : r.lines) {
        CAPTURE(line.name);
        CHECK(line.status == VerifyStatus::Pass);
    }
    CHECK(r.exit_code() == 0);
}

TEST_CASE("report rendering") {
    VerifyReport r = run_verify(3, parse_suites("all"));
    std::ostringstream os;
    render_report(r, os);
    std::string text = os.str();
    CHECK(text.find("PASS") != std::string::npos);
    CHECK(text.find("formulas:") != std::string::npos);
    CHECK(text.find("invariants:") != std::string::npos);
    CHECK(text.find("passed") != std::string::npos);
    CHECK(text.find("FAIL") == std::string::npos);
    // One rendered line per check plus the summary tail.
    CHECK(std::count(text.begin(), text.end(), '\n') >= static_cast<long>(r.lines.size()));
}

} // TEST_SUITE
