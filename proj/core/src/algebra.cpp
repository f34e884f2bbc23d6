#include "cpitch/algebra.hpp"

#include "cpitch/notation.hpp"

namespace cpitch {

NotOneBumpError::NotOneBumpError(const std::string& message)
    : std::invalid_argument(message) {}

Board canon_board(OneBumpCanon c) {
  switch (c) {
    case OneBumpCanon::Zero: return Board{};
    case OneBumpCanon::LeftUnit: return Board{Side{}, Side{{1}}};
    case OneBumpCanon::RightUnit: return Board{Side{{1}}, Side{}};
  }
  return Board{};  // unreachable
}

std::string to_string(OneBumpCanon c) {
  switch (c) {
    case OneBumpCanon::Zero: return "0";
    case OneBumpCanon::LeftUnit: return "|1";
    case OneBumpCanon::RightUnit: return "1|";
  }
  return "?";
}

OneBumpCanon reduce_one_bump(const Board& b) {
  if (b.bump_count() != 1) {
    throw NotOneBumpError("board \"" + to_string(b) +
                          "\" does not have exactly one bump");
  }
  const bool on_left = !b.left.empty();
  const std::int64_t h = on_left ? b.left.bumps[0] : b.right.bumps[0];
  if (h % 2 == 0) return OneBumpCanon::Zero;
  return on_left ? OneBumpCanon::RightUnit : OneBumpCanon::LeftUnit;
}

Outcome one_bump_sum_outcome(std::span<const Board> components) {
  std::int64_t l = 0;
  std::int64_t r = 0;
  for (const Board& b : components) {
    if (b.is_empty()) continue;  // already Zero
    switch (reduce_one_bump(b)) {
      case OneBumpCanon::LeftUnit: ++l; break;
      case OneBumpCanon::RightUnit: ++r; break;
      case OneBumpCanon::Zero: break;
    }
  }
  if (l > r) return make_outcome(OutcomeClass::L);
  if (l < r) return make_outcome(OutcomeClass::R);
  return make_outcome(OutcomeClass::N);
}

DistinguishReport distinguish(const Position& g, const Position& h,
                              const EnumerationBound& bound, Oracle& oracle) {
  DistinguishReport report;
  report.bound = bound;
  for (const Position& x : enumerate_positions(bound)) {
    ++report.searched;
    const Outcome og = oracle.outcome(g + x);
    const Outcome oh = oracle.outcome(h + x);
    if (og != oh) {
      report.witness = Witness{x, og, oh};
      break;
    }
  }
  return report;
}

EquivalenceReport check_equiv_sampled(const Position& g, const Position& h,
                                      std::span<const Position> contexts,
                                      Oracle& oracle) {
  EquivalenceReport report;
  for (const Position& x : contexts) {
    const Outcome og = oracle.outcome(g + x);
    const Outcome oh = oracle.outcome(h + x);
    if (og == oh) {
      ++report.agreements;
    } else {
      ++report.disagreements;
      if (!report.first_counterexample) {
        report.first_counterexample = Witness{x, og, oh};
      }
    }
  }
  return report;
}

}  // namespace cpitch
