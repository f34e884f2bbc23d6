#include "cpitch/verify.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "cpitch/algebra.hpp"
#include "cpitch/classifier.hpp"
#include "cpitch/enumerate.hpp"
#include "cpitch/notation.hpp"

namespace cpitch {

namespace {
constexpr std::size_t kMaxFailureSamples = 8;
}

void SuiteResult::fail(std::string description) {
  ++failed;
  if (failures.size() < kMaxFailureSamples) {
    failures.push_back(std::move(description));
  }
}

namespace {

std::vector<Board> bounded_boards(const VerifyOptions& opt) {
  return enumerate_boards(opt.max_mass, opt.max_bumps);
}

void check_board_against_oracle(SuiteResult& result, const Board& b,
                                Oracle& oracle) {
  ++result.checked;
  const Classification c = classify(b);
  const Outcome truth = oracle.outcome(Position(b));
  if (c.outcome != truth) {
    result.fail("\"" + to_string(b) + "\": classify " +
                to_string(c.outcome.cls()) + " != oracle " +
                to_string(truth.cls()));
    return;
  }
  if (make_outcome(replay_outcome(c.trace)) != c.outcome) {
    result.fail("\"" + to_string(b) + "\": trace [" + to_string(c.trace) +
                "] replays to a different outcome");
  }
}

// The side-pair under the one-side rule, or nothing if either side is empty.
struct SidePair {
  OutcomeClass left_alone;
  OutcomeClass right_alone;
};

std::optional<SidePair> side_pair(const Board& b) {
  const SideClass lc = side_class(b.left);
  const SideClass rc = side_class(b.right);
  if (lc == SideClass::Empty || rc == SideClass::Empty) return std::nullopt;
  return SidePair{
      lc == SideClass::AllOdd ? OutcomeClass::R : OutcomeClass::N,
      rc == SideClass::AllOdd ? OutcomeClass::L : OutcomeClass::N};
}

Board drop_outermost(const Board& b, Player side) {
  Board out = b;
  Side& s = side == Player::Left ? out.left : out.right;
  s.bumps.pop_back();
  return out;
}

}  // namespace

SuiteResult suite_classifier(const VerifyOptions& opt, Oracle& oracle) {
  SuiteResult result;
  result.name = "classifier";
  for (const Board& b : bounded_boards(opt)) {
    check_board_against_oracle(result, b, oracle);
  }
  return result;
}

SuiteResult suite_one_side(const VerifyOptions& opt, Oracle& oracle) {
  SuiteResult result;
  result.name = "one-side";
  for (const Side& s : enumerate_sides(opt.max_mass, opt.max_bumps)) {
    if (s.empty()) continue;
    const bool has_even = side_class(s) == SideClass::HasEven;
    const struct {
      Board board;
      OutcomeClass expected;
    } cases[] = {
        {Board{s, Side{}}, has_even ? OutcomeClass::N : OutcomeClass::R},
        {Board{Side{}, s}, has_even ? OutcomeClass::N : OutcomeClass::L},
    };
    for (const auto& [board, expected] : cases) {
      ++result.checked;
      const Outcome truth = oracle.outcome(Position(board));
      if (truth != make_outcome(expected)) {
        result.fail("\"" + to_string(board) + "\": oracle " +
                    to_string(truth.cls()) + " != one-side rule " +
                    to_string(expected));
      }
    }
  }
  return result;
}

SuiteResult suite_removeodd(const VerifyOptions& opt, Oracle& oracle) {
  SuiteResult result;
  result.name = "removeodd";
  for (const Board& b : bounded_boards(opt)) {
    for (const Player side : {Player::Right, Player::Left}) {
      const Side& s = side == Player::Left ? b.left : b.right;
      // Outermost bump odd, and not the side's only bump (the remainder
      // must stay nonempty).
      if (s.size() < 2 || s.bumps.back() % 2 == 0) continue;
      ++result.checked;
      const Board reduced = drop_outermost(b, side);
      const Outcome full = oracle.outcome(Position(b));
      const Outcome dropped = oracle.outcome(Position(reduced));
      if (full != dropped) {
        result.fail("\"" + to_string(b) + "\" vs \"" + to_string(reduced) +
                    "\": oracle " + to_string(full.cls()) + " != " +
                    to_string(dropped.cls()));
        continue;
      }
      if (classify(b).outcome != classify(reduced).outcome) {
        result.fail("\"" + to_string(b) + "\" vs \"" + to_string(reduced) +
                    "\": classifier changes class on odd-tail removal");
      }
    }
  }
  return result;
}

SuiteResult suite_theorem1(const VerifyOptions& opt, Oracle& oracle) {
  SuiteResult result;
  result.name = "theorem1";
  for (const Board& b : bounded_boards(opt)) {
    const auto pair = side_pair(b);
    if (!pair || (pair->left_alone == OutcomeClass::N &&
                  pair->right_alone == OutcomeClass::N)) {
      continue;
    }
    check_board_against_oracle(result, b, oracle);
  }
  return result;
}

SuiteResult suite_theorem2(const VerifyOptions& opt, Oracle& oracle) {
  SuiteResult result;
  result.name = "theorem2";
  for (const Board& b : bounded_boards(opt)) {
    const auto pair = side_pair(b);
    if (!pair || pair->left_alone != OutcomeClass::N ||
        pair->right_alone != OutcomeClass::N) {
      continue;
    }
    check_board_against_oracle(result, b, oracle);
  }
  return result;
}

SuiteResult suite_reductions(const VerifyOptions& opt, Oracle& oracle) {
  SuiteResult result;
  result.name = "reductions";
  std::vector<Board> pool = enumerate_boards(opt.sum_board_mass);
  std::erase_if(pool, [](const Board& b) { return b.is_empty(); });
  const std::vector<Position> contexts =
      sums_of_boards(pool, opt.sum_components);

  struct Law {
    const char* label;
    Position lhs;  // added to X on the left-hand side
    Position rhs;  // added to X on the right-hand side
  };
  auto pos = [](const char* text) {
    return Position(parse_board(text));
  };
  const Law laws[] = {
      {"2|+X = X", pos("2|"), Position{}},
      {"4|+X = X", pos("4|"), Position{}},
      {"3|+X = 1|+X", pos("3|"), pos("1|")},
      {"5|+X = 1|+X", pos("5|"), pos("1|")},
      {"|1+1|+X = X", pos("|1") + pos("1|"), Position{}},
      {"|2+X = X", pos("|2"), Position{}},
      {"|4+X = X", pos("|4"), Position{}},
      {"|3+X = |1+X", pos("|3"), pos("|1")},
      {"|5+X = |1+X", pos("|5"), pos("|1")},
  };
  for (const Position& x : contexts) {
    for (const Law& law : laws) {
      ++result.checked;
      const Outcome lhs = oracle.outcome(law.lhs + x);
      const Outcome rhs = oracle.outcome(law.rhs + x);
      if (lhs != rhs) {
        result.fail(std::string(law.label) + " fails at X = \"" +
                    to_string(x) + "\": " + to_string(lhs.cls()) + " vs " +
                    to_string(rhs.cls()));
      }
    }
  }
  return result;
}

SuiteResult suite_disj_sum(const VerifyOptions& opt, Oracle& oracle) {
  SuiteResult result;
  result.name = "disj-sum";
  std::vector<Board> units;
  for (std::int64_t h = 1; h <= opt.unit_height_cap; ++h) {
    units.push_back(Board{Side{{h}}, Side{}});
    units.push_back(Board{Side{}, Side{{h}}});
  }
  for (const Position& sum : sums_of_boards(units, opt.unit_components)) {
    ++result.checked;
    const Outcome predicted = one_bump_sum_outcome(sum.components());
    const Outcome truth = oracle.outcome(sum);
    if (predicted != truth) {
      result.fail("\"" + to_string(sum) + "\": counting rule " +
                  to_string(predicted.cls()) + " != oracle " +
                  to_string(truth.cls()));
    }
  }

  // With the unit labels swapped ("|1" counted as a Right win, "1|" as a
  // Left win) the counting rule calls the singleton "|1" an R — the oracle
  // must contradict that, and agree with the corrected labels.
  ++result.checked;
  const Position left_unit{canon_board(OneBumpCanon::LeftUnit)};
  const Outcome truth = oracle.outcome(left_unit);
  const OutcomeClass swapped_prediction = OutcomeClass::R;  // l=0, r=1
  if (truth.cls() == swapped_prediction ||
      truth != one_bump_sum_outcome(left_unit.components())) {
    result.fail("label check on \"|1\": oracle " + to_string(truth.cls()) +
                " fails to refute the swapped labels");
  }
  return result;
}

SuiteResult suite_closure(const VerifyOptions& opt, Oracle& oracle) {
  SuiteResult result;
  result.name = "closure";
  for (const Board& b : bounded_boards(opt)) {
    ++result.checked;

    // Two moves by one player never leave the single-move successor set.
    for (const Player p : {Player::Left, Player::Right}) {
      std::vector<Board> once = successors(b, p);
      std::vector<Board> sorted = once;
      std::ranges::sort(sorted);
      for (const Board& s : once) {
        for (const Board& twice : successors(s, p)) {
          if (!std::ranges::binary_search(sorted, twice)) {
            result.fail("\"" + to_string(b) + "\": double " +
                        to_string(p) + " move to \"" + to_string(twice) +
                        "\" is not a single-move successor");
          }
        }
      }
    }

    // A player without a move either still has none after any opponent
    // move, or can spend their forced move to become moveless again.
    for (const Player p : {Player::Left, Player::Right}) {
      if (has_move(b, p)) continue;
      for (const Board& s : successors(b, opponent(p))) {
        if (!has_move(s, p)) continue;
        const std::vector<Board> replies = successors(s, p);
        const bool restorable =
            std::ranges::any_of(replies, [p](const Board& t) {
              return !has_move(t, p);
            });
        if (!restorable) {
          result.fail("\"" + to_string(b) + "\": after the opponent moves " +
                      "to \"" + to_string(s) + "\", " + to_string(p) +
                      " cannot return to movelessness");
        }
      }
    }

    // Mirroring swaps the two winner coordinates.
    const Outcome straight = oracle.outcome(Position(b));
    const Outcome flipped = oracle.outcome(Position(mirror(b)));
    if (flipped != conjugate(straight)) {
      result.fail("\"" + to_string(b) + "\": mirror outcome " +
                  to_string(flipped.cls()) + " != conjugate of " +
                  to_string(straight.cls()));
    }
  }
  return result;
}

std::vector<std::string> suite_names() {
  return {"classifier", "one-side", "removeodd", "theorem1",
          "theorem2",   "reductions", "disj-sum", "closure"};
}

std::vector<SuiteResult> run_suites(const std::string& which,
                                    const VerifyOptions& opt,
                                    Oracle& oracle) {
  using Suite = SuiteResult (*)(const VerifyOptions&, Oracle&);
  static const std::pair<const char*, Suite> table[] = {
      {"classifier", suite_classifier},
      {"one-side", suite_one_side},
      {"removeodd", suite_removeodd},
      {"theorem1", suite_theorem1},
      {"theorem2", suite_theorem2},
      {"reductions", suite_reductions},
      {"disj-sum", suite_disj_sum},
      {"closure", suite_closure},
  };
  std::vector<SuiteResult> results;
  for (const auto& [name, fn] : table) {
    if (which == "all" || which == name) {
      results.push_back(fn(opt, oracle));
    }
  }
  if (results.empty()) {
    throw std::invalid_argument("unknown suite \"" + which +
                                "\"; expected all or one of: classifier, "
                                "one-side, removeodd, theorem1, theorem2, "
                                "reductions, disj-sum, closure");
  }
  return results;
}

}  // namespace cpitch
