#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cpitch/oracle.hpp"

// Exhaustive desk-scale checks of the classifier and the sum algebra
// against the search oracle.  Each suite enumerates every instance within
// its bound and reports how many were checked and how many disagreed; the
// cli `verify` command and the acceptance harness both run these.

namespace cpitch {

struct SuiteResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::vector<std::string> failures;  // first few, for diagnostics

  bool ok() const { return failed == 0; }
  void fail(std::string description);
};

struct VerifyOptions {
  // Single-board suites: every normalized board with at most this much
  // total bump mass and this many bumps.
  std::int64_t max_mass = 14;
  std::size_t max_bumps = 7;
  // reductions: contexts X are sums of at most sum_components boards, each
  // of mass at most sum_board_mass.
  std::int64_t sum_board_mass = 6;
  std::size_t sum_components = 2;
  // disj-sum: multisets of at most unit_components one-bump boards with
  // heights up to unit_height_cap.
  std::int64_t unit_height_cap = 5;
  std::size_t unit_components = 4;
};

// classify == oracle on every board within the bound (trace replay checked
// along the way).
SuiteResult suite_classifier(const VerifyOptions&, Oracle&);
// Boards with bumps on one side only follow the parity rule: an even bump
// anywhere makes them N, otherwise the bumpless player wins.
SuiteResult suite_one_side(const VerifyOptions&, Oracle&);
// Removing the outermost bump of a side when it is odd and not the side's
// last bump never changes the outcome (oracle) or the class (classifier).
SuiteResult suite_removeodd(const VerifyOptions&, Oracle&);
// Two-sided boards decided by the side-pair rule agree with the oracle.
SuiteResult suite_theorem1(const VerifyOptions&, Oracle&);
// Two-sided boards decided by the pivot comparison agree with the oracle.
SuiteResult suite_theorem2(const VerifyOptions&, Oracle&);
// One-bump pitches are dead weight or unit moves in any bounded context:
// o("2|"+X)=o(X), o("4|"+X)=o(X), o("3|"+X)=o("1|"+X), o("5|"+X)=o("1|"+X),
// o("|1"+"1|"+X)=o(X), plus mirror images.
SuiteResult suite_reductions(const VerifyOptions&, Oracle&);
// one_bump_sum_outcome == oracle on all bounded one-bump multisets; also
// pins the corrected unit labels: o("|1")=L and o("1|")=R, so a counting
// rule with the labels the other way round must disagree with the oracle
// (it predicts R for the singleton "|1").
SuiteResult suite_disj_sum(const VerifyOptions&, Oracle&);
// Structural laws: two successive moves by one player land inside the
// single-move successor set; a moveless player stays moveless or can be
// made moveless again after any opponent move; mirroring a board swaps the
// two winner coordinates.
SuiteResult suite_closure(const VerifyOptions&, Oracle&);

// `which` is one of the suite names (classifier, one-side, removeodd,
// theorem1, theorem2, reductions, disj-sum, closure) or "all".  Throws
// std::invalid_argument on anything else.
std::vector<SuiteResult> run_suites(const std::string& which,
                                    const VerifyOptions&, Oracle&);

std::vector<std::string> suite_names();

}  // namespace cpitch
