#include "cpitch/oracle.hpp"

#include "cpitch/notation.hpp"

namespace cpitch {

BudgetExceeded::BudgetExceeded(const std::string& message,
                               std::uint64_t states_explored)
    : std::runtime_error(message + " (states explored: " +
                         std::to_string(states_explored) + ")"),
      states_explored_(states_explored) {}

std::string canonical_key(const Position& pos) { return to_string(pos); }

Oracle::Oracle(SearchBudget budget) : budget_(budget) {}

void Oracle::clear() {
  memo_.clear();
  states_ = 0;
}

void Oracle::check_entry(const Position& pos) const {
  if (pos.mass() > budget_.max_total_bump_mass) {
    throw BudgetExceeded(
        "position mass " + std::to_string(pos.mass()) +
            " exceeds the search budget of " +
            std::to_string(budget_.max_total_bump_mass),
        states_);
  }
}

Player Oracle::winner(const Position& pos, Player to_move) {
  check_entry(pos);
  return solve(pos, to_move);
}

Player Oracle::solve(const Position& pos, Player to_move) {
  std::string key = std::string(1, player_char(to_move)) + canonical_key(pos);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  if (++states_ > budget_.max_states) {
    throw BudgetExceeded("state budget of " +
                             std::to_string(budget_.max_states) + " exhausted",
                         states_ - 1);
  }

  // Misere: a player left without a move wins.
  Player result = opponent(to_move);
  if (!has_move(pos, to_move)) {
    result = to_move;
  } else {
    for (const auto& [move, next] : moves(pos, to_move)) {
      if (solve(next, opponent(to_move)) == to_move) {
        result = to_move;
        break;
      }
    }
  }
  memo_.emplace(std::move(key), result);
  return result;
}

Outcome Oracle::outcome(const Position& pos) {
  return {winner(pos, Player::Left), winner(pos, Player::Right)};
}

std::vector<Move> Oracle::best_moves(const Position& pos, Player to_move) {
  check_entry(pos);
  std::vector<Move> out;
  for (const auto& [move, next] : moves(pos, to_move)) {
    if (solve(next, opponent(to_move)) == to_move) out.push_back(move);
  }
  return out;
}

Outcome misere_outcome(const Position& pos, const SearchBudget& budget) {
  Oracle oracle(budget);
  return oracle.outcome(pos);
}

std::vector<Move> best_moves(const Position& pos, Player to_move,
                             const SearchBudget& budget) {
  Oracle oracle(budget);
  return oracle.best_moves(pos, to_move);
}

}  // namespace cpitch
