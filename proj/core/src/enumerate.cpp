#include "cpitch/enumerate.hpp"

#include <algorithm>
#include <tuple>

#include "cpitch/notation.hpp"

namespace cpitch {

namespace {

void extend_side(std::vector<std::int64_t>& current, std::int64_t mass_left,
                 std::size_t bumps_left, std::vector<Side>& out) {
  out.push_back(Side{current});
  if (bumps_left == 0) return;
  for (std::int64_t h = 1; h <= mass_left; ++h) {
    current.push_back(h);
    extend_side(current, mass_left - h, bumps_left - 1, out);
    current.pop_back();
  }
}

struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

}  // namespace

std::vector<Side> enumerate_sides(std::int64_t max_mass,
                                  std::size_t max_bumps) {
  std::vector<Side> out;
  std::vector<std::int64_t> current;
  if (max_mass < 0) return out;
  extend_side(current, max_mass, max_bumps, out);
  return out;
}

std::vector<Board> enumerate_boards(std::int64_t max_mass,
                                    std::size_t max_bumps,
                                    std::size_t max_bumps_per_side) {
  const std::size_t side_cap = std::min(max_bumps, max_bumps_per_side);
  std::vector<Side> sides = enumerate_sides(max_mass, side_cap);
  std::ranges::sort(sides, [](const Side& a, const Side& b) {
    return std::make_tuple(a.mass(), a.bumps) <
           std::make_tuple(b.mass(), b.bumps);
  });
  std::vector<Board> out;
  for (const Side& left : sides) {
    const std::int64_t mass_left = max_mass - left.mass();
    for (const Side& right : sides) {
      if (right.mass() > mass_left) break;  // sides sorted by mass
      if (left.size() + right.size() > max_bumps) continue;
      out.push_back(Board{left, right});
    }
  }
  return out;
}

namespace {

void extend_position(const std::vector<Board>& boards, std::size_t from,
                     std::vector<Board>& current, std::size_t components_left,
                     std::int64_t mass_left, std::vector<Position>& out) {
  out.push_back(Position(current));
  if (components_left == 0) return;
  for (std::size_t i = from; i < boards.size(); ++i) {
    if (boards[i].mass() > mass_left) continue;
    current.push_back(boards[i]);
    extend_position(boards, i, current, components_left - 1,
                    mass_left - boards[i].mass(), out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Position> enumerate_positions(const EnumerationBound& bound) {
  std::vector<Board> boards = enumerate_boards(
      bound.max_total_mass, std::numeric_limits<std::size_t>::max(),
      bound.max_bumps_per_side);
  // The empty pitch contributes no moves to a sum; skip it so each X is the
  // canonical representative of its shape.
  std::erase_if(boards, [](const Board& b) { return b.is_empty(); });

  std::vector<Position> out;
  std::vector<Board> current;
  extend_position(boards, 0, current, bound.max_components,
                  bound.max_total_mass, out);
  std::ranges::sort(out, [](const Position& a, const Position& b) {
    return std::make_tuple(a.mass(), a.size(), to_string(a)) <
           std::make_tuple(b.mass(), b.size(), to_string(b));
  });
  return out;
}

std::vector<Position> sums_of_boards(std::span<const Board> boards,
                                     std::size_t max_components) {
  std::vector<Position> out;
  std::vector<Board> pool(boards.begin(), boards.end());
  std::vector<Board> current;
  extend_position(pool, 0, current, max_components,
                  std::numeric_limits<std::int64_t>::max(), out);
  return out;
}

Board random_board(std::size_t bumps, std::uint64_t seed) {
  SplitMix64 rng{seed};
  std::vector<std::int64_t> left;
  std::vector<std::int64_t> right;
  for (std::size_t i = 0; i < bumps; ++i) {
    const std::int64_t h = 1 + static_cast<std::int64_t>(rng.next() % 9);
    (rng.next() % 2 == 0 ? left : right).push_back(h);
  }
  return Board{Side{std::move(left)}, Side{std::move(right)}};
}

}  // namespace cpitch
