#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cpitch/game.hpp"
#include "cpitch/outcome.hpp"

// Closed-form outcome classification of a single pitch, linear in the number
// of bumps.  The rules, in dispatch order:
//
//   1. No bumps at all: the first player is stuck and wins (N).
//   2. Bumps on one side only: that side decides.  A lone left side makes
//      the pitch N when it contains an even bump, else R; a lone right side
//      is the mirror image (N / L).
//   3. Read each nonempty side as its one-sided outcome (left: AllOdd -> R,
//      HasEven -> N; right: AllOdd -> L, HasEven -> N).  The pairs (R,L),
//      (R,N), (N,L) resolve to P, R, L respectively.
//   4. The remaining pair (N,N): drop each side's outer run of odd bumps
//      (both sides keep their last even bump, so both stay nonempty), then
//      compare pivots.  The pivot height M of a side is the height of the
//      outermost odd bump that is no taller than everything between it and
//      the roller, or infinity when no such bump exists.  M(left) < M(right)
//      favours Left (L), > favours Right (R), equal finite pivots are a
//      first-player win (N), two infinite pivots a second-player win (P).
//
// Every call returns the applied-rule trace alongside the outcome; the trace
// alone replays to the same outcome.

namespace cpitch {

enum class SideClass { Empty, AllOdd, HasEven };

SideClass side_class(std::span<const std::int64_t> bumps);
SideClass side_class(const Side&);

// Pivot statistic of one side.  index is 1-based from the roller; both
// fields are empty when the side has no qualifying odd bump (M infinite).
struct MStat {
  std::optional<std::size_t> index;
  std::optional<std::int64_t> height;

  auto operator<=>(const MStat&) const = default;
  bool finite() const { return height.has_value(); }
};

// One roller-outward scan keeping the running minimum of earlier entries:
// the last odd entry at or below that minimum is the pivot.
MStat m_stat(std::span<const std::int64_t> bumps);
MStat m_stat(const Side&);

// Length of the side once its removable odd tail is gone: up to the last
// even bump if there is one, unchanged otherwise (a side may never be
// stripped to empty, so an all-odd side keeps its bumps).
std::size_t reduced_length(std::span<const std::int64_t> bumps);

Side strip_odd_tail(const Side&);
Board strip_odd_tails(const Board&);
Position strip_odd_tails(const Position&);

// Trace steps, in the order the rules fired.
struct EmptyBothStep {
  auto operator<=>(const EmptyBothStep&) const = default;
};
struct OneSideOnlyStep {
  Player side;  // the side that has bumps
  SideClass cls;
  auto operator<=>(const OneSideOnlyStep&) const = default;
};
struct Theorem1CaseStep {
  OutcomeClass left_alone;   // outcome of the left side on its own pitch
  OutcomeClass right_alone;  // ditto for the right side
  auto operator<=>(const Theorem1CaseStep&) const = default;
};
struct StrippedOddTailStep {
  Player side;
  std::size_t count;  // bumps removed, >= 1
  auto operator<=>(const StrippedOddTailStep&) const = default;
};
struct Theorem2CaseStep {
  int case_number;  // 1: M(l)<M(r), 2: M(l)>M(r), 3: equal finite, 4: both inf
  MStat left;
  MStat right;
  auto operator<=>(const Theorem2CaseStep&) const = default;
};

using TraceStep = std::variant<EmptyBothStep, OneSideOnlyStep,
                               Theorem1CaseStep, StrippedOddTailStep,
                               Theorem2CaseStep>;

std::string to_string(const TraceStep&);

struct ClassificationTrace {
  std::vector<TraceStep> steps;
};

std::string to_string(const ClassificationTrace&);  // steps joined by "; "

// Recomputes the outcome class from the trace's final step.  Throws
// std::invalid_argument on a trace that decides nothing.
OutcomeClass replay_outcome(const ClassificationTrace&);

struct Classification {
  Outcome outcome;
  ClassificationTrace trace;
};

Classification classify(const Board&);

// The moves for `player` whose successors `player` wins when the opponent
// replies first (successor class L or P for Left, R or P for Right), found
// by classifying each successor.  Ordered by count.
std::vector<Move> winning_moves(const Board&, Player);

}  // namespace cpitch
