#include "cpitch/game.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace cpitch {

namespace {

std::int64_t saturating_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    return std::numeric_limits<std::int64_t>::max();
  }
  return out;
}

std::vector<std::int64_t> trim_at_zero(std::span<const std::int64_t> raw) {
  std::vector<std::int64_t> out;
  out.reserve(raw.size());
  for (std::int64_t h : raw) {
    if (h <= 0) break;
    out.push_back(h);
  }
  return out;
}

}  // namespace

std::int64_t Side::mass() const {
  std::int64_t total = 0;
  for (std::int64_t h : bumps) total = saturating_add(total, h);
  return total;
}

std::int64_t Board::mass() const {
  return saturating_add(left.mass(), right.mass());
}

Board normalize(std::span<const std::int64_t> left_raw,
                std::span<const std::int64_t> right_raw) {
  return Board{Side{trim_at_zero(left_raw)}, Side{trim_at_zero(right_raw)}};
}

bool is_normalized(const Board& b) {
  auto positive = [](const Side& s) {
    return std::ranges::all_of(s.bumps, [](std::int64_t h) { return h > 0; });
  };
  return positive(b.left) && positive(b.right);
}

Position::Position(Board board) { components_.push_back(std::move(board)); }

Position::Position(std::vector<Board> components)
    : components_(std::move(components)) {
  std::ranges::sort(components_);
}

std::int64_t Position::mass() const {
  std::int64_t total = 0;
  for (const Board& b : components_) total = saturating_add(total, b.mass());
  return total;
}

std::size_t Position::bump_count() const {
  std::size_t n = 0;
  for (const Board& b : components_) n += b.bump_count();
  return n;
}

Position Position::replaced(std::size_t index, Board replacement) const {
  if (index >= components_.size()) {
    throw std::invalid_argument("component index out of range");
  }
  std::vector<Board> next = components_;
  next[index] = std::move(replacement);
  return Position(std::move(next));
}

Position operator+(const Position& a, const Position& b) {
  std::vector<Board> all = a.components_;
  all.insert(all.end(), b.components_.begin(), b.components_.end());
  return Position(std::move(all));
}

bool has_move(const Board& b, Player p) {
  return p == Player::Left ? !b.left.empty() : !b.right.empty();
}

bool has_move(const Position& pos, Player p) {
  return std::ranges::any_of(pos.components(),
                             [p](const Board& b) { return has_move(b, p); });
}

Board apply(const Board& b, Player mover, std::size_t count) {
  const Side& from = mover == Player::Left ? b.left : b.right;
  const Side& to = mover == Player::Left ? b.right : b.left;
  if (count < 1 || count > from.size()) {
    throw std::invalid_argument("roll count must be between 1 and the number "
                                "of bumps on the mover's side");
  }
  // The roller passes bumps 1..count of `from`; they pile up on the far side
  // nearest-last, i.e. bump `count` ends up adjacent to the roller.
  std::vector<std::int64_t> new_from(from.bumps.begin() + count,
                                     from.bumps.end());
  std::vector<std::int64_t> new_to;
  new_to.reserve(count + to.size());
  for (std::size_t i = count; i-- > 0;) new_to.push_back(from.bumps[i] - 1);
  new_to.insert(new_to.end(), to.bumps.begin(), to.bumps.end());
  return mover == Player::Left ? normalize(new_from, new_to)
                               : normalize(new_to, new_from);
}

Position apply(const Position& pos, const Move& m) {
  if (m.component >= pos.size()) {
    throw std::invalid_argument("component index out of range");
  }
  return pos.replaced(m.component,
                      apply(pos.components()[m.component], m.direction,
                            m.count));
}

std::vector<Board> successors(const Board& b, Player mover) {
  const std::size_t n =
      mover == Player::Left ? b.left.size() : b.right.size();
  std::vector<Board> out;
  out.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) out.push_back(apply(b, mover, k));
  return out;
}

std::vector<std::pair<Move, Position>> moves(const Position& pos,
                                             Player mover) {
  std::vector<std::pair<Move, Position>> out;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    const Board& b = pos.components()[i];
    const std::size_t n =
        mover == Player::Left ? b.left.size() : b.right.size();
    for (std::size_t k = 1; k <= n; ++k) {
      Move m{i, mover, k};
      out.emplace_back(m, pos.replaced(i, apply(b, mover, k)));
    }
  }
  return out;
}

Board mirror(const Board& b) { return Board{b.right, b.left}; }

Position mirror(const Position& pos) {
  std::vector<Board> flipped;
  flipped.reserve(pos.size());
  for (const Board& b : pos.components()) flipped.push_back(mirror(b));
  return Position(std::move(flipped));
}

}  // namespace cpitch
