#include "cpitch/notation.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <vector>

namespace cpitch {

ParseError::ParseError(std::string token, const std::string& message)
    : std::runtime_error("parse error at \"" + token + "\": " + message),
      token_(std::move(token)) {}

namespace {

struct Token {
  enum class Kind { Number, Bar, Comma, Plus, End };
  Kind kind;
  std::string text;
  std::int64_t value = 0;  // Number only
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '|') {
      out.push_back({Token::Kind::Bar, "|"});
      ++i;
    } else if (c == ',') {
      out.push_back({Token::Kind::Comma, ","});
      ++i;
    } else if (c == '+') {
      out.push_back({Token::Kind::Plus, "+"});
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[j]))) {
        ++j;
      }
      std::string digits(text.substr(i, j - i));
      std::int64_t value = 0;
      auto [ptr, ec] =
          std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw ParseError(digits, "height does not fit in a 64-bit integer");
      }
      out.push_back({Token::Kind::Number, std::move(digits), value});
      i = j;
    } else {
      // Grab the whole run of unexpected characters for the message.
      std::size_t j = i;
      while (j < text.size() && text[j] != '|' && text[j] != ',' &&
             text[j] != '+' &&
             !std::isspace(static_cast<unsigned char>(text[j])) &&
             !std::isdigit(static_cast<unsigned char>(text[j]))) {
        ++j;
      }
      throw ParseError(std::string(text.substr(i, j - i)),
                       "unexpected character");
    }
  }
  out.push_back({Token::Kind::End, "end of input"});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  Position position() {
    // "0" on its own denotes the empty position.
    if (peek().kind == Token::Kind::Number && peek().text == "0" &&
        tokens_[pos_ + 1].kind == Token::Kind::End) {
      ++pos_;
      return Position{};
    }
    std::vector<Board> boards;
    boards.push_back(board());
    while (peek().kind == Token::Kind::Plus) {
      ++pos_;
      boards.push_back(board());
    }
    expect_end();
    return Position(std::move(boards));
  }

  Board single_board() {
    Board b = board();
    if (peek().kind == Token::Kind::Plus) {
      throw ParseError(peek().text, "expected a single board, not a sum");
    }
    expect_end();
    return b;
  }

 private:
  Board board() {
    std::vector<std::int64_t> left_written;  // outermost-first, as written
    if (peek().kind == Token::Kind::Number) {
      left_written = heights();
    }
    if (peek().kind != Token::Kind::Bar) {
      throw ParseError(peek().text, "expected \"|\"");
    }
    ++pos_;
    std::vector<std::int64_t> right;  // roller-outward, as written
    if (peek().kind == Token::Kind::Number) {
      right = heights();
    }
    // Storage is roller-outward on both sides, so the left row flips.
    std::vector<std::int64_t> left(left_written.rbegin(), left_written.rend());
    return Board{Side{std::move(left)}, Side{std::move(right)}};
  }

  std::vector<std::int64_t> heights() {
    std::vector<std::int64_t> out;
    out.push_back(height());
    while (peek().kind == Token::Kind::Comma) {
      ++pos_;
      out.push_back(height());
    }
    return out;
  }

  std::int64_t height() {
    if (peek().kind != Token::Kind::Number) {
      throw ParseError(peek().text, "expected a bump height");
    }
    const Token& tok = tokens_[pos_++];
    if (tok.value < 1) {
      throw ParseError(tok.text, "bump heights must be >= 1");
    }
    return tok.value;
  }

  void expect_end() {
    if (peek().kind != Token::Kind::End) {
      throw ParseError(peek().text, "expected \"+\" or end of input");
    }
  }

  const Token& peek() const { return tokens_[pos_]; }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

void append_heights(std::string& out, const Side& side, bool outermost_first) {
  const auto& b = side.bumps;
  if (outermost_first) {
    for (std::size_t i = b.size(); i-- > 0;) {
      out += std::to_string(b[i]);
      if (i != 0) out += ',';
    }
  } else {
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i != 0) out += ',';
      out += std::to_string(b[i]);
    }
  }
}

}  // namespace

Position parse_position(std::string_view text) {
  return Parser(text).position();
}

Board parse_board(std::string_view text) { return Parser(text).single_board(); }

std::string to_string(const Board& b) {
  std::string out;
  append_heights(out, b.left, /*outermost_first=*/true);
  out += '|';
  append_heights(out, b.right, /*outermost_first=*/false);
  return out;
}

std::string to_string(const Position& pos) {
  if (pos.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (i != 0) out += " + ";
    out += to_string(pos.components()[i]);
  }
  return out;
}

std::string to_string(Player p) { return p == Player::Left ? "L" : "R"; }

std::string to_string(const Move& m) {
  return std::string(1, player_char(m.direction)) + " " +
         std::to_string(m.count);
}

}  // namespace cpitch
