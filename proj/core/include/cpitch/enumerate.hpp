#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "cpitch/game.hpp"

namespace cpitch {

// Limits for enumerating candidate positions X in equivalence searches.
struct EnumerationBound {
  std::size_t max_components = 2;
  std::size_t max_bumps_per_side = 8;
  std::int64_t max_total_mass = 8;
};

// All sides with mass <= max_mass and at most max_bumps entries (each >= 1),
// the empty side included.  Deterministic order.
std::vector<Side> enumerate_sides(
    std::int64_t max_mass,
    std::size_t max_bumps = std::numeric_limits<std::size_t>::max());

// All normalized boards with total mass <= max_mass, at most max_bumps
// bumps across both sides, and at most max_bumps_per_side on each side.
// The empty board is included.  Deterministic order.
std::vector<Board> enumerate_boards(
    std::int64_t max_mass,
    std::size_t max_bumps = std::numeric_limits<std::size_t>::max(),
    std::size_t max_bumps_per_side = std::numeric_limits<std::size_t>::max());

// All positions within the bound: multisets of at most max_components
// nonempty boards (the empty pitch "|" adds nothing to a sum and is left
// out; the empty position "0" is the first entry).  Sorted by total mass,
// then component count, then canonical key, so searches meet small X first.
std::vector<Position> enumerate_positions(const EnumerationBound&);

// All multisets of up to max_components of the given boards (the empty
// multiset included).  The input must be free of duplicates.
std::vector<Position> sums_of_boards(std::span<const Board>,
                                     std::size_t max_components);

// Deterministic pseudo-random board: `bumps` bumps with heights uniform in
// 1..9, each placed on a side by a coin flip, all driven by `seed`.
Board random_board(std::size_t bumps, std::uint64_t seed);

}  // namespace cpitch
