#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cpitch/enumerate.hpp"
#include "cpitch/game.hpp"
#include "cpitch/notation.hpp"
#include "test_util.hpp"

using namespace cpitch;

TEST_CASE("normalize truncates each side at its first zero") {
  const std::vector<std::int64_t> l1{0, 4, 2};
  const std::vector<std::int64_t> r1{4, 2};
  CHECK(normalize(l1, r1) == B("|4,2"));

  const std::vector<std::int64_t> l2{3, 5};
  const std::vector<std::int64_t> r2{2, 0, 5};
  CHECK(normalize(l2, r2) == B("5,3|2"));

  const std::vector<std::int64_t> l3{1, 2};
  const std::vector<std::int64_t> r3{};
  CHECK(normalize(l3, r3) == B("2,1|"));
}

TEST_CASE("normalize is idempotent") {
  for (const Board& b : enumerate_boards(7)) {
    CHECK(normalize(b.left.bumps, b.right.bumps) == b);
    CHECK(is_normalized(b));
  }
}

TEST_CASE("rolling left moves bumps across the roller, lowered by one") {
  // 2,3,2|4,2 with Left rolling two bumps: the rolled pair lands on the
  // right, farthest-rolled bump nearest the roller.
  CHECK(apply(B("2,3,2|4,2"), Player::Left, 2) == B("2|2,1,4,2"));
  // Right rolling two bumps back: the 1 flattens to 0 next to the 2, which
  // cuts off the rest of the left side.
  CHECK(apply(B("2|2,1,4,2"), Player::Right, 2) == B("|4,2"));
}

TEST_CASE("apply rejects out-of-range roll counts") {
  CHECK_THROWS_AS(apply(B("2|"), Player::Left, 0), std::invalid_argument);
  CHECK_THROWS_AS(apply(B("2|"), Player::Left, 2), std::invalid_argument);
  CHECK_THROWS_AS(apply(B("2|"), Player::Right, 1), std::invalid_argument);
}

TEST_CASE("has_move looks only at the mover's side") {
  CHECK_FALSE(has_move(B("|"), Player::Left));
  CHECK_FALSE(has_move(B("|"), Player::Right));
  CHECK(has_move(B("1|"), Player::Left));
  CHECK_FALSE(has_move(B("1|"), Player::Right));
  CHECK(has_move(P("1| + |1"), Player::Right));
  CHECK_FALSE(has_move(P("0"), Player::Left));
}

TEST_CASE("a player's move count on a board equals their side length") {
  for (const Board& b : enumerate_boards(7)) {
    CHECK(successors(b, Player::Left).size() == b.left.size());
    CHECK(successors(b, Player::Right).size() == b.right.size());
  }
}

TEST_CASE("every move strictly decreases total bump mass") {
  for (const Board& b : enumerate_boards(7)) {
    for (const auto& [m, next] : moves(Position(b), Player::Left)) {
      CHECK(next.mass() < b.mass());
    }
    for (const auto& [m, next] : moves(Position(b), Player::Right)) {
      CHECK(next.mass() < b.mass());
    }
  }
}

TEST_CASE("mirror swaps sides and is an involution") {
  CHECK(mirror(B("2,1|")) == B("|1,2"));
  CHECK(mirror(B("|")) == B("|"));
  CHECK(mirror(P("1|2 + 3|")) == P("2|1 + |3"));
  for (const Board& b : enumerate_boards(6)) {
    CHECK(mirror(mirror(b)) == b);
  }
}

TEST_CASE("mirroring turns Left moves into Right moves") {
  for (const Board& b : enumerate_boards(7)) {
    const std::vector<Board> left_moves = successors(b, Player::Left);
    std::vector<Board> mirrored_right = successors(mirror(b), Player::Right);
    std::vector<Board> expected;
    expected.reserve(left_moves.size());
    for (const Board& s : left_moves) expected.push_back(mirror(s));
    CHECK(mirrored_right == expected);
  }
}

TEST_CASE("two moves by one player stay within single-move reach") {
  for (const Board& b : enumerate_boards(8)) {
    for (const Player p : {Player::Left, Player::Right}) {
      std::vector<Board> once = successors(b, p);
      std::ranges::sort(once);
      for (const Board& s : successors(b, p)) {
        for (const Board& twice : successors(s, p)) {
          CHECK(std::ranges::binary_search(once, twice));
        }
      }
    }
  }
}

TEST_CASE("a stranded player can always move back into movelessness") {
  for (const Board& b : enumerate_boards(8)) {
    for (const Player p : {Player::Left, Player::Right}) {
      if (has_move(b, p)) continue;
      for (const Board& s : successors(b, opponent(p))) {
        if (!has_move(s, p)) continue;
        const auto own_moves = successors(s, p);
        CHECK(std::ranges::any_of(own_moves, [p](const Board& t) {
          return !has_move(t, p);
        }));
      }
    }
  }
}

TEST_CASE("positions compare as multisets of boards") {
  CHECK(P("1| + |2") == P("|2 + 1|"));
  CHECK(P("1| + 1|") != P("1|"));
  CHECK(P("0").empty());
  CHECK(P("|").size() == 1);  // one empty pitch is not the empty position
  CHECK(P("1|2 + |") + P("0") == P("| + 1|2"));
}

TEST_CASE("moves on a sum touch exactly one component") {
  const Position pos = P("2| + 1|1");
  const auto all = moves(pos, Player::Left);
  REQUIRE(all.size() == 2);
  std::set<std::string> seen;
  for (const auto& [m, next] : all) {
    CHECK(m.direction == Player::Left);
    CHECK(m.count == 1);
    seen.insert(to_string(next));
  }
  CHECK(seen == std::set<std::string>{"|1 + 1|1", "| + 2|"});
}
