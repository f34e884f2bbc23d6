#pragma once

#include <compare>
#include <string>

#include "cpitch/game.hpp"

namespace cpitch {

// The four outcome classes: L = Left wins no matter who starts, R likewise
// for Right, N = the first ("next") player wins, P = the second ("previous")
// player wins.
enum class OutcomeClass { L, R, N, P };

// Who wins under best play, split by who moves first.  The class is a view
// of this pair: (L,L)=L, (L,R)=N, (R,L)=P, (R,R)=R.
struct Outcome {
  Player when_left_starts;
  Player when_right_starts;

  auto operator<=>(const Outcome&) const = default;
  OutcomeClass cls() const;
};

Outcome make_outcome(OutcomeClass);
Player winner(const Outcome&, Player first_mover);

// Outcome of the mirrored position: each coordinate answers for the other
// starter with the players renamed, so L and R trade places while N and P
// are fixed.
Outcome conjugate(const Outcome&);
OutcomeClass conjugate(OutcomeClass);

// Partial order on outcomes, favouring Left coordinatewise: R is the bottom,
// L the top, and N and P are incomparable.
bool outcome_leq(const Outcome& a, const Outcome& b);

char to_char(OutcomeClass);
std::string to_string(OutcomeClass);
std::string to_string(const Outcome&);  // e.g. "N (oL=L, oR=R)"

}  // namespace cpitch
