#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpitch/enumerate.hpp"
#include "cpitch/game.hpp"
#include "cpitch/oracle.hpp"
#include "cpitch/outcome.hpp"

// Sum algebra for one-bump pitches, plus bounded equivalence testing.
//
// In any sum, a pitch with a single even bump is dead weight (rolling it
// only hands the opponent a free roll back), and a single odd bump plays
// like a single 1.  So every one-bump pitch reduces to "|1", "1|" or
// nothing, and a sum of one-bump pitches is decided by counting: more
// "|1" than "1|" favours Left, fewer favours Right, a tie is a
// first-player win.
//
// Equivalence of general positions (same outcome in every sum context) has
// no such closed form here; distinguish() searches a bounded set of contexts
// for a witness that two positions differ.

namespace cpitch {

enum class OneBumpCanon { Zero, LeftUnit, RightUnit };

class NotOneBumpError : public std::invalid_argument {
 public:
  explicit NotOneBumpError(const std::string& message);
};

// Zero -> empty pitch, LeftUnit -> "|1", RightUnit -> "1|".
Board canon_board(OneBumpCanon);
std::string to_string(OneBumpCanon);  // "0", "|1", "1|"

// Even bump -> Zero; odd bump left of the roller -> RightUnit; odd bump
// right of the roller -> LeftUnit.  Throws NotOneBumpError unless the board
// has exactly one bump.
OneBumpCanon reduce_one_bump(const Board&);

// Closed-form outcome of a sum of one-bump pitches: with l components
// reducing to LeftUnit and r to RightUnit, the class is L when l > r,
// N when l = r, R when l < r.  Throws NotOneBumpError if any component has
// more than one bump (empty components count as Zero).
Outcome one_bump_sum_outcome(std::span<const Board> components);

// A context X telling g and h apart, with the two differing outcomes.
struct Witness {
  Position x;
  Outcome g_outcome;  // of g + x
  Outcome h_outcome;  // of h + x
};

struct DistinguishReport {
  std::optional<Witness> witness;
  std::uint64_t searched = 0;  // contexts examined, witness included
  EnumerationBound bound;
};

// Tries every X within the bound, smallest total mass first (X = "0" is the
// first candidate), and stops at the first X with o(g+X) != o(h+X).  A
// missing witness only means none exists within the bound.
DistinguishReport distinguish(const Position& g, const Position& h,
                              const EnumerationBound&, Oracle&);

struct EquivalenceReport {
  std::uint64_t agreements = 0;
  std::uint64_t disagreements = 0;
  std::optional<Witness> first_counterexample;
};

// Compares o(g+X) with o(h+X) for every X in `contexts` — evidence of
// equivalence over that sample, not a proof.
EquivalenceReport check_equiv_sampled(const Position& g, const Position& h,
                                      std::span<const Position> contexts,
                                      Oracle&);

}  // namespace cpitch
