#include "cpitch/classifier.hpp"

#include <stdexcept>

namespace cpitch {

SideClass side_class(std::span<const std::int64_t> bumps) {
  if (bumps.empty()) return SideClass::Empty;
  for (std::int64_t h : bumps) {
    if (h % 2 == 0) return SideClass::HasEven;
  }
  return SideClass::AllOdd;
}

SideClass side_class(const Side& s) { return side_class(std::span(s.bumps)); }

MStat m_stat(std::span<const std::int64_t> bumps) {
  MStat out;
  std::int64_t min_before = 0;
  bool any_before = false;
  for (std::size_t i = 0; i < bumps.size(); ++i) {
    const std::int64_t h = bumps[i];
    if (h % 2 != 0 && (!any_before || h <= min_before)) {
      out.index = i + 1;
      out.height = h;
    }
    if (!any_before || h < min_before) {
      min_before = h;
      any_before = true;
    }
  }
  return out;
}

MStat m_stat(const Side& s) { return m_stat(std::span(s.bumps)); }

std::size_t reduced_length(std::span<const std::int64_t> bumps) {
  for (std::size_t i = bumps.size(); i-- > 0;) {
    if (bumps[i] % 2 == 0) return i + 1;
  }
  return bumps.size();  // no even bump: the guard forbids stripping
}

Side strip_odd_tail(const Side& s) {
  const std::size_t len = reduced_length(std::span(s.bumps));
  return Side{{s.bumps.begin(), s.bumps.begin() + len}};
}

Board strip_odd_tails(const Board& b) {
  return Board{strip_odd_tail(b.left), strip_odd_tail(b.right)};
}

Position strip_odd_tails(const Position& pos) {
  std::vector<Board> out;
  out.reserve(pos.size());
  for (const Board& b : pos.components()) out.push_back(strip_odd_tails(b));
  return Position(std::move(out));
}

namespace {

std::string side_name(Player side) {
  return side == Player::Left ? "left" : "right";
}

std::string class_name(SideClass c) {
  switch (c) {
    case SideClass::Empty: return "Empty";
    case SideClass::AllOdd: return "AllOdd";
    case SideClass::HasEven: return "HasEven";
  }
  return "?";
}

// Outcome of a one-sided pitch from its side class.
OutcomeClass one_side_outcome(Player side, SideClass c) {
  if (c == SideClass::HasEven) return OutcomeClass::N;
  // All odd: the owner of the bumps loses the race and the opponent wins.
  return side == Player::Left ? OutcomeClass::R : OutcomeClass::L;
}

struct TraceVisitor {
  std::string operator()(const EmptyBothStep&) const { return "EmptyBoth"; }
  std::string operator()(const OneSideOnlyStep& s) const {
    return "OneSideOnly(" + side_name(s.side) + "," + class_name(s.cls) + ")";
  }
  std::string operator()(const Theorem1CaseStep& s) const {
    return std::string("Theorem1Case(") + to_char(s.left_alone) + "," +
           to_char(s.right_alone) + ")";
  }
  std::string operator()(const StrippedOddTailStep& s) const {
    return "StrippedOddTail(" + side_name(s.side) + "," +
           std::to_string(s.count) + ")";
  }
  std::string operator()(const Theorem2CaseStep& s) const {
    return "Theorem2Case(" + std::to_string(s.case_number) + ")";
  }
};

OutcomeClass step_outcome(const TraceStep& step) {
  if (std::holds_alternative<EmptyBothStep>(step)) return OutcomeClass::N;
  if (const auto* s = std::get_if<OneSideOnlyStep>(&step)) {
    return one_side_outcome(s->side, s->cls);
  }
  if (const auto* s = std::get_if<Theorem1CaseStep>(&step)) {
    if (s->left_alone == OutcomeClass::R) {
      return s->right_alone == OutcomeClass::L ? OutcomeClass::P
                                               : OutcomeClass::R;
    }
    return OutcomeClass::L;  // (N, L)
  }
  if (const auto* s = std::get_if<Theorem2CaseStep>(&step)) {
    switch (s->case_number) {
      case 1: return OutcomeClass::L;
      case 2: return OutcomeClass::R;
      case 3: return OutcomeClass::N;
      case 4: return OutcomeClass::P;
    }
  }
  throw std::invalid_argument("trace step decides no outcome");
}

}  // namespace

std::string to_string(const TraceStep& step) {
  return std::visit(TraceVisitor{}, step);
}

std::string to_string(const ClassificationTrace& trace) {
  std::string out;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    if (i != 0) out += "; ";
    out += to_string(trace.steps[i]);
  }
  return out;
}

OutcomeClass replay_outcome(const ClassificationTrace& trace) {
  if (trace.steps.empty()) {
    throw std::invalid_argument("empty classification trace");
  }
  return step_outcome(trace.steps.back());
}

Classification classify(const Board& b) {
  ClassificationTrace trace;
  const std::span<const std::int64_t> left(b.left.bumps);
  const std::span<const std::int64_t> right(b.right.bumps);
  const SideClass lc = side_class(left);
  const SideClass rc = side_class(right);

  if (lc == SideClass::Empty && rc == SideClass::Empty) {
    trace.steps.push_back(EmptyBothStep{});
    return {make_outcome(OutcomeClass::N), std::move(trace)};
  }
  if (rc == SideClass::Empty || lc == SideClass::Empty) {
    const Player side = rc == SideClass::Empty ? Player::Left : Player::Right;
    const SideClass cls = rc == SideClass::Empty ? lc : rc;
    trace.steps.push_back(OneSideOnlyStep{side, cls});
    return {make_outcome(one_side_outcome(side, cls)), std::move(trace)};
  }

  const OutcomeClass left_alone = one_side_outcome(Player::Left, lc);
  const OutcomeClass right_alone = one_side_outcome(Player::Right, rc);
  if (left_alone != OutcomeClass::N || right_alone != OutcomeClass::N) {
    trace.steps.push_back(Theorem1CaseStep{left_alone, right_alone});
    OutcomeClass result = OutcomeClass::L;  // (N, L)
    if (left_alone == OutcomeClass::R) {
      result = right_alone == OutcomeClass::L ? OutcomeClass::P
                                              : OutcomeClass::R;
    }
    return {make_outcome(result), std::move(trace)};
  }

  // Both sides contain an even bump: strip the odd tails (no copies, just
  // shorter views) and compare pivots.
  const auto stripped_left = left.first(reduced_length(left));
  const auto stripped_right = right.first(reduced_length(right));
  if (stripped_left.size() < left.size()) {
    trace.steps.push_back(
        StrippedOddTailStep{Player::Left, left.size() - stripped_left.size()});
  }
  if (stripped_right.size() < right.size()) {
    trace.steps.push_back(StrippedOddTailStep{
        Player::Right, right.size() - stripped_right.size()});
  }

  const MStat ml = m_stat(stripped_left);
  const MStat mr = m_stat(stripped_right);
  int case_number = 0;
  OutcomeClass result;
  if (!ml.finite() && !mr.finite()) {
    case_number = 4;
    result = OutcomeClass::P;
  } else if (ml.finite() && (!mr.finite() || *ml.height < *mr.height)) {
    case_number = 1;
    result = OutcomeClass::L;
  } else if (mr.finite() && (!ml.finite() || *mr.height < *ml.height)) {
    case_number = 2;
    result = OutcomeClass::R;
  } else {
    case_number = 3;  // equal finite pivots
    result = OutcomeClass::N;
  }
  trace.steps.push_back(Theorem2CaseStep{case_number, ml, mr});
  return {make_outcome(result), std::move(trace)};
}

std::vector<Move> winning_moves(const Board& b, Player player) {
  const std::size_t n =
      player == Player::Left ? b.left.size() : b.right.size();
  std::vector<Move> out;
  for (std::size_t k = 1; k <= n; ++k) {
    const Board next = apply(b, player, k);
    if (winner(classify(next).outcome, opponent(player)) == player) {
      out.push_back(Move{0, player, k});
    }
  }
  return out;
}

}  // namespace cpitch
