#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cpitch/game.hpp"
#include "cpitch/outcome.hpp"

namespace cpitch {

// Caps for the exhaustive search.  Every move removes at least one unit of
// bump mass, so mass bounds both game length and recursion depth; the state
// cap bounds memory and time on wide positions.
struct SearchBudget {
  std::uint64_t max_states = 10'000'000;
  std::int64_t max_total_bump_mass = 64;
};

// Thrown when a search would exceed its budget.  Carries how many states had
// been solved by then, as a hint of how far beyond desk scale the input is.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& message, std::uint64_t states_explored);
  std::uint64_t states_explored() const { return states_explored_; }

 private:
  std::uint64_t states_explored_;
};

// Canonical transposition key: the printed form, unique per position value
// (components sorted, zeros never stored).  Note key("|") != key("0").
std::string canonical_key(const Position&);

// Exhaustive misere game-tree search with a transposition table.  The table
// persists across calls, so one Oracle instance amortizes work over a whole
// suite of queries.  Not thread-safe; use one instance per thread.
class Oracle {
 public:
  explicit Oracle(SearchBudget budget = {});

  // Winner under best play with `to_move` to move.  Base case is the misere
  // convention: if `to_move` has no move, `to_move` wins.
  Player winner(const Position&, Player to_move);
  Outcome outcome(const Position&);

  // Every move after which the mover still wins; empty exactly when the
  // mover has no move or loses moving first.  Ordered by (component, count).
  std::vector<Move> best_moves(const Position&, Player to_move);

  std::uint64_t states_explored() const { return states_; }
  const SearchBudget& budget() const { return budget_; }
  void clear();

 private:
  Player solve(const Position&, Player to_move);
  void check_entry(const Position&) const;

  SearchBudget budget_;
  std::unordered_map<std::string, Player> memo_;
  std::uint64_t states_ = 0;
};

// One-shot conveniences for callers that do not need a persistent table.
Outcome misere_outcome(const Position&, const SearchBudget& = {});
std::vector<Move> best_moves(const Position&, Player to_move,
                             const SearchBudget& = {});

}  // namespace cpitch
