#include "cpitch/outcome.hpp"

namespace cpitch {

OutcomeClass Outcome::cls() const {
  if (when_left_starts == Player::Left) {
    return when_right_starts == Player::Left ? OutcomeClass::L
                                             : OutcomeClass::N;
  }
  return when_right_starts == Player::Left ? OutcomeClass::P : OutcomeClass::R;
}

Outcome make_outcome(OutcomeClass c) {
  switch (c) {
    case OutcomeClass::L: return {Player::Left, Player::Left};
    case OutcomeClass::N: return {Player::Left, Player::Right};
    case OutcomeClass::P: return {Player::Right, Player::Left};
    case OutcomeClass::R: return {Player::Right, Player::Right};
  }
  return {Player::Left, Player::Left};  // unreachable
}

Player winner(const Outcome& o, Player first_mover) {
  return first_mover == Player::Left ? o.when_left_starts
                                     : o.when_right_starts;
}

Outcome conjugate(const Outcome& o) {
  return {opponent(o.when_right_starts), opponent(o.when_left_starts)};
}

OutcomeClass conjugate(OutcomeClass c) {
  switch (c) {
    case OutcomeClass::L: return OutcomeClass::R;
    case OutcomeClass::R: return OutcomeClass::L;
    default: return c;
  }
}

bool outcome_leq(const Outcome& a, const Outcome& b) {
  auto rank = [](Player p) { return p == Player::Left ? 1 : 0; };
  return rank(a.when_left_starts) <= rank(b.when_left_starts) &&
         rank(a.when_right_starts) <= rank(b.when_right_starts);
}

char to_char(OutcomeClass c) {
  switch (c) {
    case OutcomeClass::L: return 'L';
    case OutcomeClass::R: return 'R';
    case OutcomeClass::N: return 'N';
    case OutcomeClass::P: return 'P';
  }
  return '?';
}

std::string to_string(OutcomeClass c) { return std::string(1, to_char(c)); }

std::string to_string(const Outcome& o) {
  std::string out = to_string(o.cls());
  out += " (oL=";
  out += player_char(o.when_left_starts);
  out += ", oR=";
  out += player_char(o.when_right_starts);
  out += ")";
  return out;
}

}  // namespace cpitch
