#include "hln/parse.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

namespace hln {

namespace {

enum class TokenType { Ident, Number, LParen, RParen, Comma, Semicolon, End };

struct Token {
  TokenType type;
  std::string text;
  double value = 0.0;  // Number only
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_whitespace();
    Token tok;
    tok.line = line_;
    tok.column = column_;
    if (pos_ >= src_.size()) {
      tok.type = TokenType::End;
      return tok;
    }
    char c = src_[pos_];
    if (c == '(') return single(tok, TokenType::LParen);
    if (c == ')') return single(tok, TokenType::RParen);
    if (c == ',') return single(tok, TokenType::Comma);
    if (c == ';') return single(tok, TokenType::Semicolon);
    if (std::isalpha(static_cast<unsigned char>(c))) return ident(tok);
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number(tok);
    throw ParseError(line_, column_,
                     std::string("unexpected character '") + c + "'");
  }

private:
  Token single(Token tok, TokenType type) {
    tok.type = type;
    tok.text = src_[pos_];
    advance();
    return tok;
  }

  Token ident(Token tok) {
    std::size_t start = pos_;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') break;
      advance();
    }
    tok.type = TokenType::Ident;
    tok.text = std::string(src_.substr(start, pos_ - start));
    return tok;
  }

  Token number(Token tok) {
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      advance();
    }
    if (pos_ < src_.size() && src_[pos_] == '.') {
      advance();
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        advance();
      }
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t mark = pos_;
      advance();
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) advance();
      if (pos_ >= src_.size() ||
          !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        throw ParseError(tok.line, tok.column + (mark - start),
                         "malformed exponent in number");
      }
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        advance();
      }
    }
    tok.type = TokenType::Number;
    tok.text = std::string(src_.substr(start, pos_ - start));
    double value = 0.0;
    auto res = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(),
                               value);
    if (res.ec == std::errc::result_out_of_range || !std::isfinite(value)) {
      throw ParseError(tok.line, tok.column, "number out of range: " + tok.text);
    }
    if (res.ec != std::errc() || res.ptr != tok.text.data() + tok.text.size()) {
      throw ParseError(tok.line, tok.column, "malformed number: " + tok.text);
    }
    tok.value = value;
    return tok;
  }

  void skip_whitespace() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      advance();
    }
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
public:
  explicit Parser(std::string_view src) : lexer_(src) { advance(); }

  Process parse() {
    Process p;
    if (cur_.type == TokenType::End) {
      throw ParseError(cur_.line, cur_.column,
                       "empty program: expected an action or \"()\"");
    }
    // "()" alone is the empty process; after a sequence it is the
    // optional terminator.
    if (cur_.type == TokenType::LParen) {
      expect_unit_terminator();
      finish();
      return p;
    }
    for (;;) {
      p.actions.push_back(parse_action());
      if (cur_.type != TokenType::Semicolon) break;
      advance();
      if (cur_.type == TokenType::LParen) {
        expect_unit_terminator();
        break;
      }
    }
    finish();
    return p;
  }

private:
  Action parse_action() {
    if (cur_.type != TokenType::Ident) {
      throw ParseError(cur_.line, cur_.column,
                       "expected an action name, got '" + describe(cur_) + "'");
    }
    Token name = cur_;
    auto kind = action_kind_from_keyword(name.text);
    if (!kind) {
      throw ParseError(name.line, name.column,
                       "unknown action '" + name.text + "'");
    }
    advance();
    expect(TokenType::LParen, "'('");

    std::vector<Token> args;
    if (cur_.type != TokenType::RParen) {
      for (;;) {
        if (cur_.type != TokenType::Ident && cur_.type != TokenType::Number) {
          throw ParseError(cur_.line, cur_.column,
                           "expected an argument, got '" + describe(cur_) + "'");
        }
        args.push_back(cur_);
        advance();
        if (cur_.type != TokenType::Comma) break;
        advance();
      }
    }
    expect(TokenType::RParen, "')'");

    std::size_t arity = action_arity(*kind);
    if (args.size() != arity + 1) {
      throw ParseError(name.line, name.column,
                       name.text + " takes " + std::to_string(arity) +
                           " species and a rate (" + std::to_string(arity + 1) +
                           " arguments), got " + std::to_string(args.size()));
    }

    Action action;
    action.kind = *kind;
    for (std::size_t i = 0; i < arity; ++i) {
      const Token& arg = args[i];
      if (arg.type != TokenType::Ident) {
        throw ParseError(arg.line, arg.column,
                         "expected a species name, got '" + arg.text + "'");
      }
      if (action_kind_from_keyword(arg.text)) {
        throw ParseError(arg.line, arg.column,
                         "species name '" + arg.text +
                             "' collides with an action keyword");
      }
      action.operands.push_back(arg.text);
    }
    const Token& rate = args[arity];
    if (rate.type != TokenType::Number) {
      throw ParseError(rate.line, rate.column,
                       "expected a numeric rate, got '" + rate.text + "'");
    }
    if (!(rate.value > 0.0)) {
      throw ParseError(rate.line, rate.column,
                       "rate must be positive, got " + rate.text);
    }
    action.rate = rate.value;
    return action;
  }

  // Consumes the "()" empty-process unit. cur_ is the '('.
  void expect_unit_terminator() {
    advance();
    expect(TokenType::RParen, "')' (the empty process \"()\")");
  }

  void finish() {
    if (cur_.type != TokenType::End) {
      throw ParseError(cur_.line, cur_.column,
                       "unexpected '" + describe(cur_) + "' after end of program");
    }
  }

  void expect(TokenType type, const std::string& what) {
    if (cur_.type != type) {
      throw ParseError(cur_.line, cur_.column,
                       "expected " + what + ", got '" + describe(cur_) + "'");
    }
    advance();
  }

  static std::string describe(const Token& tok) {
    return tok.type == TokenType::End ? "end of input" : tok.text;
  }

  void advance() { cur_ = lexer_.next(); }

  Lexer lexer_;
  Token cur_;
};

}  // namespace

std::string_view action_keyword(ActionKind kind) {
  switch (kind) {
    case ActionKind::Bind: return "bind";
    case ActionKind::Dimerize: return "dimerize";
    case ActionKind::Activate: return "activate";
    case ActionKind::ActivateAndDissociate: return "activateAnddissociate";
    case ActionKind::Phosphorylate: return "phosphorylate";
    case ActionKind::Dissociate: return "dissociate";
    case ActionKind::Degrade: return "degrade";
    case ActionKind::Hydrolyze: return "hydrolyze";
  }
  return "";
}

std::optional<ActionKind> action_kind_from_keyword(std::string_view word) {
  for (ActionKind kind : kAllActionKinds) {
    if (action_keyword(kind) == word) return kind;
  }
  return std::nullopt;
}

std::size_t action_arity(ActionKind kind) {
  switch (kind) {
    case ActionKind::Degrade: return 1;
    case ActionKind::Hydrolyze: return 2;
    case ActionKind::ActivateAndDissociate: return 4;
    default: return 3;
  }
}

Process parse_program(std::string_view source) {
  return Parser(source).parse();
}

std::string format_program(const Process& p) {
  if (p.actions.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < p.actions.size(); ++i) {
    const Action& a = p.actions[i];
    if (i > 0) out += "; ";
    out += action_keyword(a.kind);
    out += '(';
    for (const std::string& operand : a.operands) {
      out += operand;
      out += ", ";
    }
    out += format_double(a.rate);
    out += ')';
  }
  return out;
}

}  // namespace hln
