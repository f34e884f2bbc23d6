// cpitch — misere Cricket Pitch solver.
//
// Positions are written as comma-separated bump heights around a "|" roller,
// left side outermost-first: "6,2,4,5|4,3,3,4,6".  Sums join boards with
// "+", and "0" is the empty position.  See `cpitch --help` for commands.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "cpitch/algebra.hpp"
#include "cpitch/classifier.hpp"
#include "cpitch/enumerate.hpp"
#include "cpitch/game.hpp"
#include "cpitch/notation.hpp"
#include "cpitch/oracle.hpp"
#include "cpitch/verify.hpp"

using nlohmann::json;
using namespace cpitch;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

class Stopwatch {
 public:
  double millis() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

// Budget precedence: --max-states flag, then CPITCH_MAX_STATES, then the
// library default.
SearchBudget make_budget(std::uint64_t flag_max_states) {
  SearchBudget budget;
  if (const char* env = std::getenv("CPITCH_MAX_STATES")) {
    try {
      budget.max_states = std::stoull(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("CPITCH_MAX_STATES",
                                 "not a valid state count: " +
                                     std::string(env));
    }
  }
  if (flag_max_states != 0) budget.max_states = flag_max_states;
  return budget;
}

Player parse_player(const std::string& s) {
  return s == "L" ? Player::Left : Player::Right;
}

// Reporting order for moves: smallest roll first, Left-ward before
// Right-ward, then lowest component.
bool report_order(const Move& a, const Move& b) {
  auto key = [](const Move& m) {
    return std::make_tuple(m.count, m.direction == Player::Right,
                           m.component);
  };
  return key(a) < key(b);
}

std::string describe_move(const Move& m, const Position& pos) {
  std::string out = to_string(m);
  if (pos.size() > 1) {
    out += " (component " + std::to_string(m.component + 1) + ")";
  }
  return out;
}

json move_json(const Move& m) {
  return json{{"player", to_string(m.direction)},
              {"k", m.count},
              {"component", m.component + 1}};
}

void emit(const json& object) { std::cout << object.dump() << "\n"; }

// ---------------------------------------------------------------- outcome

int run_outcome(const std::string& text, bool want_trace, bool want_json,
                bool use_oracle, std::uint64_t max_states) {
  const Position pos = parse_position(text);
  if (pos.size() != 1 && !use_oracle) {
    std::cerr << "position \"" << to_string(pos) << "\" has " << pos.size()
              << " components; the closed-form classifier handles single "
                 "boards only — rerun with --oracle to search the sum\n";
    return kExitUsage;
  }

  Stopwatch watch;
  Outcome outcome{};
  std::optional<ClassificationTrace> trace;
  if (use_oracle) {
    Oracle oracle(make_budget(max_states));
    outcome = oracle.outcome(pos);
  } else {
    Classification c = classify(pos.components().front());
    outcome = c.outcome;
    trace = std::move(c.trace);
  }
  const double millis = watch.millis();

  if (want_json) {
    json out{{"position", to_string(pos)},
             {"outcome", to_string(outcome.cls())},
             {"oL", to_string(outcome.when_left_starts)},
             {"oR", to_string(outcome.when_right_starts)},
             {"millis", millis}};
    if (want_trace && trace) {
      json steps = json::array();
      for (const TraceStep& step : trace->steps) {
        steps.push_back(to_string(step));
      }
      out["trace"] = std::move(steps);
    }
    emit(out);
  } else {
    std::cout << to_string(outcome.cls()) << "\n";
    if (want_trace && trace) {
      std::cout << "trace: " << to_string(*trace) << "\n";
    }
  }
  return kExitOk;
}

// ----------------------------------------------------------------- oracle

int run_oracle(const std::string& text, bool want_json,
               std::uint64_t max_states) {
  const Position pos = parse_position(text);
  Oracle oracle(make_budget(max_states));
  Stopwatch watch;
  const Outcome outcome = oracle.outcome(pos);
  const double millis = watch.millis();
  if (want_json) {
    emit(json{{"position", to_string(pos)},
              {"outcome", to_string(outcome.cls())},
              {"oL", to_string(outcome.when_left_starts)},
              {"oR", to_string(outcome.when_right_starts)},
              {"states", oracle.states_explored()},
              {"millis", millis}});
  } else {
    std::cout << to_string(outcome) << "\n";
  }
  return kExitOk;
}

// -------------------------------------------------------------- best-move

int run_best_move(const std::string& text, const std::string& player_text,
                  bool want_json, std::uint64_t max_states) {
  const Position pos = parse_position(text);
  const Player player = parse_player(player_text);

  Stopwatch watch;
  std::vector<Move> wins;
  if (pos.size() == 1) {
    wins = winning_moves(pos.components().front(), player);
  } else {
    Oracle oracle(make_budget(max_states));
    wins = oracle.best_moves(pos, player);
  }
  std::ranges::sort(wins, report_order);
  const double millis = watch.millis();

  if (want_json) {
    json moves_json = json::array();
    for (const Move& m : wins) moves_json.push_back(move_json(m));
    emit(json{{"position", to_string(pos)},
              {"player", player_text},
              {"moves", std::move(moves_json)},
              {"best", wins.empty() ? json(nullptr) : move_json(wins.front())},
              {"millis", millis}});
    return kExitOk;
  }
  if (wins.empty()) {
    std::cout << "no winning move for " << player_text << "\n";
    return kExitOk;
  }
  std::cout << "winning moves:";
  for (const Move& m : wins) std::cout << " [" << describe_move(m, pos) << "]";
  std::cout << "\nbest: " << describe_move(wins.front(), pos) << "\n";
  return kExitOk;
}

// ----------------------------------------------------------------- reduce

int run_reduce(const std::string& text, bool want_json) {
  const Position pos = parse_position(text);
  const Position reduced = strip_odd_tails(pos);

  struct Canon {
    std::string board;
    std::string canon;
  };
  std::vector<Canon> canons;
  for (const Board& b : pos.components()) {
    if (b.bump_count() == 1) {
      canons.push_back({to_string(b), to_string(reduce_one_bump(b))});
    }
  }

  if (want_json) {
    json canon_json = json::array();
    for (const Canon& c : canons) {
      canon_json.push_back(json{{"board", c.board}, {"canon", c.canon}});
    }
    emit(json{{"position", to_string(pos)},
              {"reduced", to_string(reduced)},
              {"canons", std::move(canon_json)}});
    return kExitOk;
  }
  std::cout << to_string(reduced) << "\n";
  for (const Canon& c : canons) {
    std::cout << "one-bump: " << c.board << " = " << c.canon << "\n";
  }
  return kExitOk;
}

// -------------------------------------------------------------------- sum

int run_sum(const std::vector<std::string>& texts, bool want_json,
            std::uint64_t max_states) {
  Position combined;
  for (const std::string& text : texts) {
    combined = combined + parse_position(text);
  }
  const bool all_one_bump =
      std::ranges::all_of(combined.components(), [](const Board& b) {
        return b.bump_count() <= 1;
      });

  Stopwatch watch;
  Outcome outcome{};
  std::string method;
  std::uint64_t states = 0;
  if (all_one_bump) {
    outcome = one_bump_sum_outcome(combined.components());
    method = "one-bump";
  } else {
    Oracle oracle(make_budget(max_states));
    outcome = oracle.outcome(combined);
    states = oracle.states_explored();
    method = "oracle";
  }
  const double millis = watch.millis();

  if (want_json) {
    json out{{"position", to_string(combined)},
             {"outcome", to_string(outcome.cls())},
             {"oL", to_string(outcome.when_left_starts)},
             {"oR", to_string(outcome.when_right_starts)},
             {"method", method},
             {"millis", millis}};
    if (method == "oracle") out["states"] = states;
    emit(out);
    return kExitOk;
  }
  std::cout << to_string(outcome) << " [" << method;
  if (method == "oracle") std::cout << ": " << states << " states";
  std::cout << "]\n";
  return kExitOk;
}

// ------------------------------------------------------------ distinguish

int run_distinguish(const std::string& g_text, const std::string& h_text,
                    const EnumerationBound& bound, bool want_json,
                    std::uint64_t max_states) {
  const Position g = parse_position(g_text);
  const Position h = parse_position(h_text);
  Oracle oracle(make_budget(max_states));
  Stopwatch watch;
  const DistinguishReport report = distinguish(g, h, bound, oracle);
  const double millis = watch.millis();

  if (want_json) {
    json out{{"position", to_string(g)},
             {"other", to_string(h)},
             {"witness", report.witness ? json(to_string(report.witness->x))
                                        : json(nullptr)},
             {"searched", report.searched},
             {"states", oracle.states_explored()},
             {"millis", millis}};
    if (report.witness) {
      out["gOutcome"] = to_string(report.witness->g_outcome.cls());
      out["hOutcome"] = to_string(report.witness->h_outcome.cls());
    }
    emit(out);
    return kExitOk;
  }
  if (report.witness) {
    std::cout << "witness \"" << to_string(report.witness->x) << "\": o(\""
              << to_string(g) << "\" + X) = "
              << to_string(report.witness->g_outcome.cls()) << ", o(\""
              << to_string(h) << "\" + X) = "
              << to_string(report.witness->h_outcome.cls()) << " (searched "
              << report.searched << ")\n";
  } else {
    std::cout << "no witness within bound (searched " << report.searched
              << "; max-mass " << bound.max_total_mass << ", max-components "
              << bound.max_components << ", max-bumps-per-side "
              << bound.max_bumps_per_side << ")\n";
  }
  return kExitOk;
}

// ----------------------------------------------------------------- verify

int run_verify(const std::string& suite, const VerifyOptions& options,
               bool want_json) {
  Oracle oracle;
  bool all_ok = true;
  for (const SuiteResult& result : run_suites(suite, options, oracle)) {
    all_ok = all_ok && result.ok();
    if (want_json) {
      json out{{"suite", result.name},
               {"checked", result.checked},
               {"failed", result.failed}};
      if (!result.failures.empty()) out["failures"] = result.failures;
      emit(out);
      continue;
    }
    std::cout << (result.ok() ? "[PASS] " : "[FAIL] ") << result.name << ": "
              << result.checked << " checked";
    if (result.failed != 0) std::cout << ", " << result.failed << " failed";
    std::cout << "\n";
    for (const std::string& failure : result.failures) {
      std::cout << "       " << failure << "\n";
    }
  }
  return all_ok ? kExitOk : kExitVerifyFailed;
}

// ------------------------------------------------------------------- play

// Engine move choice: the first winning move in report order, else the
// first legal move (a losing engine still has to play something).
Move choose_engine_move(const Position& pos, Player engine,
                        const SearchBudget& budget) {
  std::vector<Move> wins;
  if (pos.size() == 1) {
    wins = winning_moves(pos.components().front(), engine);
  } else {
    Oracle oracle(budget);
    wins = oracle.best_moves(pos, engine);
  }
  if (wins.empty()) {
    for (const auto& [m, next] : moves(pos, engine)) wins.push_back(m);
  }
  std::ranges::sort(wins, report_order);
  return wins.front();
}

std::optional<Move> read_human_move(const Position& pos, Player human,
                                    const std::string& line) {
  std::istringstream in(line);
  std::string letter;
  std::size_t k = 0;
  if (!(in >> letter >> k) || (letter != "L" && letter != "R")) {
    std::cout << "could not read that; enter e.g. \"" << to_string(human)
              << " 2\"\n";
    return std::nullopt;
  }
  if (parse_player(letter) != human) {
    std::cout << "you play " << to_string(human) << ", not " << letter
              << "\n";
    return std::nullopt;
  }
  std::size_t component = 0;
  if (std::size_t explicit_component; in >> explicit_component) {
    if (explicit_component < 1 || explicit_component > pos.size()) {
      std::cout << "component must be 1.." << pos.size() << "\n";
      return std::nullopt;
    }
    component = explicit_component - 1;
  } else if (pos.size() > 1) {
    // No component given: take the lowest-numbered one where the roll fits.
    bool found = false;
    for (std::size_t i = 0; i < pos.size(); ++i) {
      const Side& side = human == Player::Left ? pos.components()[i].left
                                               : pos.components()[i].right;
      if (k >= 1 && k <= side.size()) {
        component = i;
        found = true;
        break;
      }
    }
    if (!found) {
      std::cout << "no component admits a roll of " << k << "\n";
      return std::nullopt;
    }
  }
  const Side& side = human == Player::Left ? pos.components()[component].left
                                           : pos.components()[component].right;
  if (k < 1 || k > side.size()) {
    std::cout << "roll must be 1.." << side.size() << " on component "
              << component + 1 << "\n";
    return std::nullopt;
  }
  return Move{component, human, k};
}

int run_play(const std::string& text, const std::string& human_text,
             const std::string& first_text, std::uint64_t max_states) {
  const Player human = parse_player(human_text);
  const Player engine = opponent(human);
  const SearchBudget budget = make_budget(max_states);
  Position pos = parse_position(text);
  Player to_move = first_text.empty() ? human : parse_player(first_text);

  std::cout << "you are " << to_string(human) << ", the engine is "
            << to_string(engine) << "; whoever cannot move wins\n";
  while (true) {
    std::cout << "position: " << to_string(pos) << "\n";
    if (!has_move(pos, to_move)) {
      const bool human_won = to_move == human;
      std::cout << to_string(to_move) << " has no move — "
                << (human_won ? "you win" : "the engine wins") << "\n";
      return kExitOk;
    }
    if (to_move == human) {
      std::cout << "your move (" << to_string(human) << " k"
                << (pos.size() > 1 ? " [component]" : "") << "): "
                << std::flush;
      std::string line;
      if (!std::getline(std::cin, line)) {
        std::cout << "\ninput closed — stopping\n";
        return kExitOk;
      }
      if (line.empty()) continue;
      const std::optional<Move> move = read_human_move(pos, human, line);
      if (!move) continue;
      pos = apply(pos, *move);
    } else {
      const Move move = choose_engine_move(pos, engine, budget);
      std::cout << "engine plays " << describe_move(move, pos) << "\n";
      pos = apply(pos, move);
    }
    to_move = opponent(to_move);
  }
}

// ------------------------------------------------------------------ bench

int run_bench(std::size_t bumps, std::uint64_t seed, bool want_json) {
  const Board board = random_board(bumps, seed);
  Stopwatch watch;
  const Classification c = classify(board);
  const double millis = watch.millis();
  const double per_sec =
      millis > 0 ? static_cast<double>(bumps) / (millis / 1000.0) : 0.0;

  if (want_json) {
    emit(json{{"bumps", bumps},
              {"seed", seed},
              {"outcome", to_string(c.outcome.cls())},
              {"millis", millis},
              {"bumpsPerSec", per_sec}});
  } else {
    std::cout << "seed=" << seed << " bumps=" << bumps
              << " outcome=" << to_string(c.outcome.cls())
              << " millis=" << millis << " bumps_per_sec=" << per_sec << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"misere Cricket Pitch solver"};
  app.require_subcommand(1);

  std::string position_text;
  std::string other_text;
  std::vector<std::string> sum_texts;
  std::string player_text = "L";
  std::string first_text;
  std::string suite = "all";
  bool want_json = false;
  bool want_trace = false;
  bool use_oracle = false;
  std::uint64_t max_states = 0;  // 0: use env or default
  EnumerationBound bound;
  VerifyOptions verify_options;
  std::size_t bench_bumps = 1'000'000;
  std::uint64_t bench_seed = 1;

  CLI::App* outcome_cmd = app.add_subcommand(
      "outcome", "classify a position (closed form for single boards)");
  outcome_cmd->add_option("position", position_text)->required();
  outcome_cmd->add_flag("--trace", want_trace, "show the rules that fired");
  outcome_cmd->add_flag("--json", want_json);
  outcome_cmd->add_flag("--oracle", use_oracle, "search sums exhaustively");
  outcome_cmd->add_option("--max-states", max_states);

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "exhaustive misere game-tree search");
  oracle_cmd->add_option("position", position_text)->required();
  oracle_cmd->add_flag("--json", want_json);
  oracle_cmd->add_option("--max-states", max_states);

  CLI::App* best_cmd =
      app.add_subcommand("best-move", "list the winning moves");
  best_cmd->add_option("position", position_text)->required();
  best_cmd->add_option("--player", player_text, "who moves first")
      ->required()
      ->check(CLI::IsMember({"L", "R"}));
  best_cmd->add_flag("--json", want_json);
  best_cmd->add_option("--max-states", max_states);

  CLI::App* reduce_cmd = app.add_subcommand(
      "reduce", "strip odd tails; canonicalize one-bump boards");
  reduce_cmd->add_option("position", position_text)->required();
  reduce_cmd->add_flag("--json", want_json);

  CLI::App* sum_cmd =
      app.add_subcommand("sum", "outcome of a disjunctive sum");
  sum_cmd->add_option("positions", sum_texts)->required()->expected(-1);
  sum_cmd->add_flag("--json", want_json);
  sum_cmd->add_option("--max-states", max_states);

  CLI::App* distinguish_cmd = app.add_subcommand(
      "distinguish", "search for a context telling two positions apart");
  distinguish_cmd->add_option("first", position_text)->required();
  distinguish_cmd->add_option("second", other_text)->required();
  distinguish_cmd->add_option("--max-mass", bound.max_total_mass);
  distinguish_cmd->add_option("--max-components", bound.max_components);
  distinguish_cmd->add_option("--max-bumps", bound.max_bumps_per_side);
  distinguish_cmd->add_flag("--json", want_json);
  distinguish_cmd->add_option("--max-states", max_states);

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "run the exhaustive classifier/algebra suites");
  verify_cmd->add_option("--suite", suite,
                         "classifier, one-side, removeodd, theorem1, "
                         "theorem2, reductions, disj-sum, closure, or all");
  verify_cmd->add_option("--max-mass", verify_options.max_mass);
  verify_cmd->add_option("--max-bumps", verify_options.max_bumps);
  verify_cmd->add_flag("--json", want_json);

  CLI::App* play_cmd = app.add_subcommand("play", "interactive game");
  play_cmd->add_option("position", position_text)->required();
  play_cmd->add_option("--human", player_text, "your side")
      ->required()
      ->check(CLI::IsMember({"L", "R"}));
  play_cmd->add_option("--first", first_text, "who starts (default: you)")
      ->check(CLI::IsMember({"L", "R"}));
  play_cmd->add_option("--max-states", max_states);

  CLI::App* bench_cmd =
      app.add_subcommand("bench", "time the classifier on a random board");
  bench_cmd->add_option("--bumps", bench_bumps);
  bench_cmd->add_option("--seed", bench_seed);
  bench_cmd->add_flag("--json", want_json);

  try {
    app.parse(argc, argv);

    if (outcome_cmd->parsed()) {
      return run_outcome(position_text, want_trace, want_json, use_oracle,
                         max_states);
    }
    if (oracle_cmd->parsed()) {
      return run_oracle(position_text, want_json, max_states);
    }
    if (best_cmd->parsed()) {
      return run_best_move(position_text, player_text, want_json, max_states);
    }
    if (reduce_cmd->parsed()) {
      return run_reduce(position_text, want_json);
    }
    if (sum_cmd->parsed()) {
      return run_sum(sum_texts, want_json, max_states);
    }
    if (distinguish_cmd->parsed()) {
      return run_distinguish(position_text, other_text, bound, want_json,
                             max_states);
    }
    if (verify_cmd->parsed()) {
      return run_verify(suite, verify_options, want_json);
    }
    if (play_cmd->parsed()) {
      return run_play(position_text, player_text, first_text, max_states);
    }
    if (bench_cmd->parsed()) {
      return run_bench(bench_bumps, bench_seed, want_json);
    }
    return kExitUsage;  // unreachable: a subcommand is required
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "search budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
}
