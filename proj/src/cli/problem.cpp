#include "unc/cli/problem.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <utility>

namespace unc {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { LParen, RParen, Comma, Arrow, Equation, Bar, Ident, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    Token tok{Tok::End, "", line_, column_};
    if (pos_ >= text_.size()) return tok;
    char c = text_[pos_];
    if (c == '(' || c == ')' || c == ',' || c == '|') {
      advance();
      tok.kind = c == '(' ? Tok::LParen : c == ')' ? Tok::RParen : c == ',' ? Tok::Comma : Tok::Bar;
      tok.text = std::string(1, c);
      return tok;
    }
    if (starts_with("->")) {
      advance(2);
      tok.kind = Tok::Arrow;
      tok.text = "->";
      return tok;
    }
    if (starts_with("==")) {
      advance(2);
      tok.kind = Tok::Equation;
      tok.text = "==";
      return tok;
    }
    tok.kind = Tok::Ident;
    while (pos_ < text_.size()) {
      c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ',' ||
          c == '|' || starts_with("->") || starts_with("=="))
        break;
      tok.text += c;
      advance();
    }
    return tok;
  }

  /// Raw text up to the parenthesis closing an already opened block; the
  /// closing parenthesis is consumed.
  std::string block_text(std::size_t open_line, std::size_t open_column) {
    std::string out;
    int depth = 1;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '(') ++depth;
      if (c == ')' && --depth == 0) {
        advance();
        return out;
      }
      out += c;
      advance();
    }
    throw ParseError(open_line, open_column, "unterminated block");
  }

 private:
  bool starts_with(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i, ++pos_) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
    }
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

std::string describe(const Token& t) {
  return t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
}

std::string trim(std::string s) {
  auto space = [](unsigned char c) { return std::isspace(c); };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), space));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), space).base(), s.end());
  return s;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { tok_ = lexer_.next(); }

  Term single_term(const std::vector<std::string>& variables) {
    problem_.variables = variables;
    Term t = term();
    if (tok_.kind != Tok::End) throw error(tok_, "unexpected " + describe(tok_) + " after term");
    return t;
  }

  ProblemFile run() {
    while (tok_.kind != Tok::End) {
      Token open = expect(Tok::LParen, "'('");
      if (tok_.kind != Tok::Ident)
        throw error(tok_, "expected a block keyword, found " + describe(tok_));
      Token keyword = tok_;
      if (keyword.text == "COMMENT") {
        std::string text = trim(lexer_.block_text(open.line, open.column));
        tok_ = lexer_.next();
        if (problem_.comment) *problem_.comment += "\n" + text;
        else problem_.comment = text;
        continue;
      }
      take();
      if (keyword.text == "VAR") {
        while (tok_.kind == Tok::Ident) declare_variable(take());
        expect(Tok::RParen, "')'");
      } else if (keyword.text == "RULES") {
        while (tok_.kind != Tok::RParen) {
          if (tok_.kind == Tok::End) throw error(tok_, "unterminated RULES block");
          rule();
        }
        take();
      } else {
        throw error(keyword, "unsupported block '" + keyword.text + "'");
      }
    }
    return std::move(problem_);
  }

 private:
  ParseError error(const Token& at, const std::string& message) const {
    return ParseError(at.line, at.column, message);
  }

  Token take() {
    Token t = tok_;
    tok_ = lexer_.next();
    return t;
  }

  Token expect(Tok kind, const std::string& what) {
    if (tok_.kind != kind) throw error(tok_, "expected " + what + ", found " + describe(tok_));
    return take();
  }

  void declare_variable(const Token& t) {
    if (problem_.signature.contains(t.text))
      throw error(t, "'" + t.text + "' is declared as a variable after use as a function symbol");
    if (std::find(problem_.variables.begin(), problem_.variables.end(), t.text) ==
        problem_.variables.end())
      problem_.variables.push_back(t.text);
  }

  bool is_variable(const std::string& name) const {
    return std::find(problem_.variables.begin(), problem_.variables.end(), name) !=
           problem_.variables.end();
  }

  void rule() {
    Token start = tok_;
    Term lhs = term();
    if (tok_.kind == Tok::Equation)
      throw error(tok_, "equations ('==') are not supported; expected '->'");
    expect(Tok::Arrow, "'->'");
    Term rhs = term();
    if (tok_.kind == Tok::Bar) throw error(tok_, "conditional rules are not supported");
    if (lhs.is_variable())
      throw error(start, "ill-formed rule " + to_string(lhs) + " -> " + to_string(rhs) +
                             ": left-hand side is a variable");
    if (!variables_subset(rhs, lhs))
      throw error(start, "ill-formed rule " + to_string(lhs) + " -> " + to_string(rhs) +
                             ": right-hand side has variables not in the left-hand side");
    problem_.rules.emplace_back(lhs, rhs);
  }

  Term term() {
    Token head = expect(Tok::Ident, "a term");
    std::vector<Term> args;
    bool applied = false;
    if (tok_.kind == Tok::LParen) {
      applied = true;
      take();
      if (tok_.kind != Tok::RParen) {
        args.push_back(term());
        while (tok_.kind == Tok::Comma) {
          take();
          args.push_back(term());
        }
      }
      expect(Tok::RParen, "',' or ')'");
    }
    if (is_variable(head.text)) {
      if (applied) throw error(head, "variable '" + head.text + "' applied to arguments");
      return Term::variable(head.text, 0);
    }
    if (auto it = first_use_.find(head.text); it != first_use_.end()) {
      const auto& [arity, line, column] = it->second;
      if (arity != args.size())
        throw error(head, "symbol '" + head.text + "' used with arity " +
                              std::to_string(args.size()) + ", but with arity " +
                              std::to_string(arity) + " at line " + std::to_string(line) +
                              ", column " + std::to_string(column));
    } else {
      first_use_.emplace(head.text, std::make_tuple(args.size(), head.line, head.column));
      try {
        problem_.signature.declare(head.text, args.size());
      } catch (const SignatureError& e) {
        throw error(head, e.what());
      }
    }
    return Term::apply(head.text, std::move(args));
  }

  Lexer lexer_;
  Token tok_;
  ProblemFile problem_;
  std::map<std::string, std::tuple<std::size_t, std::size_t, std::size_t>> first_use_;
};

}  // namespace

ProblemFile parse_cops(std::string_view text) { return Parser(text).run(); }

Term parse_term(std::string_view text, const std::vector<std::string>& variables) {
  return Parser(text).single_term(variables);
}

std::string print_cops(const ProblemFile& problem) {
  std::string out;
  if (!problem.variables.empty()) {
    out += "(VAR";
    for (const std::string& v : problem.variables) out += " " + v;
    out += ")\n";
  }
  out += "(RULES\n";
  for (const RewriteRule& r : problem.rules) out += "  " + to_string(r.lhs) + " -> " + to_string(r.rhs) + "\n";
  out += ")\n";
  if (problem.comment) out += "(COMMENT\n" + *problem.comment + "\n)\n";
  return out;
}

}  // namespace unc
