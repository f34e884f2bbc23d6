#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

// Misere Cricket Pitch.
//
// A pitch is a row of bumps with a roller somewhere in between.  On their
// turn, Left rolls the roller leftward over one or more bumps, Right rolls it
// rightward; every bump rolled over is lowered by one.  A bump that reaches
// height zero is flattened: the roller can never pass it again, so the
// flattened spot and everything beyond it are permanently out of play.
// Under the misere convention used throughout, the player whose turn it is
// and who has no legal move wins.

namespace cpitch {

enum class Player { Left, Right };

constexpr Player opponent(Player p) {
  return p == Player::Left ? Player::Right : Player::Left;
}

constexpr char player_char(Player p) { return p == Player::Left ? 'L' : 'R'; }

// One side of a pitch.  Heights are stored from the roller outward:
// bumps[0] is the bump adjacent to the roller.  Note the written notation
// lists the left side outermost-first, so parsing/printing reverse it.
struct Side {
  std::vector<std::int64_t> bumps;

  auto operator<=>(const Side&) const = default;

  bool empty() const { return bumps.empty(); }
  std::size_t size() const { return bumps.size(); }
  std::int64_t mass() const;  // sum of heights, saturating at INT64_MAX
};

// A single pitch.  Kept normalized: neither side contains a zero, because a
// flattened bump and everything behind it are unreachable and dropped.
struct Board {
  Side left;
  Side right;

  auto operator<=>(const Board&) const = default;

  bool is_empty() const { return left.empty() && right.empty(); }
  std::int64_t mass() const;
  std::size_t bump_count() const { return left.size() + right.size(); }
};

// Builds a Board from raw (possibly zero-containing) height rows, both given
// roller-outward.  Each side is truncated at its first zero.
Board normalize(std::span<const std::int64_t> left_raw,
                std::span<const std::int64_t> right_raw);

bool is_normalized(const Board&);

// A disjunctive sum of pitches.  Components are kept sorted so that two sums
// of the same pitches compare equal regardless of the order they were given.
class Position {
 public:
  Position() = default;
  explicit Position(Board board);
  explicit Position(std::vector<Board> components);

  const std::vector<Board>& components() const { return components_; }
  bool empty() const { return components_.empty(); }
  std::size_t size() const { return components_.size(); }
  std::int64_t mass() const;
  std::size_t bump_count() const;

  // Copy of this position with one component swapped out (and re-sorted).
  Position replaced(std::size_t index, Board replacement) const;

  friend Position operator+(const Position& a, const Position& b);
  auto operator<=>(const Position&) const = default;

 private:
  std::vector<Board> components_;
};

struct Move {
  std::size_t component = 0;  // index into Position::components()
  Player direction = Player::Left;
  std::size_t count = 1;  // number of bumps rolled over, >= 1

  auto operator<=>(const Move&) const = default;
};

// A player has a move on a pitch exactly when their side still has a bump.
bool has_move(const Board&, Player);
bool has_move(const Position&, Player);

// Rolls the roller over `count` bumps on `mover`'s side.  The rolled bumps
// end up on the opposite side of the roller, nearest first and each lowered
// by one; the result is normalized.  Throws std::invalid_argument unless
// 1 <= count <= size of the mover's side.
Board apply(const Board&, Player mover, std::size_t count);
Position apply(const Position&, const Move&);

// All positions reachable by `mover` in one move, in order of count = 1,2,...
std::vector<Board> successors(const Board&, Player mover);
// All moves for `mover`, ordered by (component, count).
std::vector<std::pair<Move, Position>> moves(const Position&, Player mover);

// Swaps the two sides (turns the pitch around).
Board mirror(const Board&);
Position mirror(const Position&);

}  // namespace cpitch
