#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "cpitch/game.hpp"

namespace cpitch {

// Raised on malformed position text; token() is the piece of input at fault
// ("end of input" when the text stopped short).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string token, const std::string& message);
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

// Notation:
//   position := board ("+" board)* | "0"
//   board    := side? "|" side?
//   side     := INT ("," INT)*         (decimal heights, all >= 1)
// Whitespace between tokens is ignored.  The "|" marks the roller and the
// left side is written outermost-first, so in "2,3,2|4,2" the bump of height
// 2 just left of the roller is the third entry.  "0" denotes the empty
// position (no pitches at all); "|" is a single pitch with no bumps.
Position parse_position(std::string_view text);

// Same grammar restricted to a single board (no "+", no "0").
Board parse_board(std::string_view text);

std::string to_string(const Board&);
// Canonical form: components sorted and joined with " + ", or "0" if none.
// parse_position(to_string(p)) == p, and equal positions print identically.
std::string to_string(const Position&);
std::string to_string(Player);
std::string to_string(const Move&);  // e.g. "L 2"

}  // namespace cpitch
