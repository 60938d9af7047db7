#ifndef PACBR_PARSE_HPP
#define PACBR_PARSE_HPP

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pacbr/errors.hpp"
#include "pacbr/formula.hpp"
#include "pacbr/semantics.hpp"

namespace pacbr {

// Formula text grammar (ASCII):
//
//   formula  := imp ( "<->" formula )?          right-associative
//   imp      := or ( "->" imp )?                right-associative
//   or       := and ( "|" and )*                left-associative
//   and      := unary ( "&" unary )*            left-associative
//   unary    := "~" unary | primary
//   primary  := atom | "_|_" | "^T^" | "top" | "(" formula ")"
//   atom     := [a-z][a-z0-9_]*                 "top" is reserved
//
// Binding strength: ~ > & > | > -> > <->. The biconditional is sugar:
// a <-> b parses as (a -> b) & (b -> a).

namespace detail {

struct Token {
  enum class Type {
    Atom, Not, And, Or, Implies, Iff, Bottom, Top, LParen, RParen, End
  };
  Type type;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Token::Type t, std::size_t pos, std::string s = "") {
    out.push_back(Token{t, std::move(s), pos});
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    if (c == '(') { push(Token::Type::LParen, i++); continue; }
    if (c == ')') { push(Token::Type::RParen, i++); continue; }
    if (c == '~') { push(Token::Type::Not, i++); continue; }
    if (c == '&') { push(Token::Type::And, i++); continue; }
    if (c == '|') { push(Token::Type::Or, i++); continue; }
    if (text.substr(i, 3) == "<->") { push(Token::Type::Iff, i); i += 3; continue; }
    if (text.substr(i, 2) == "->") { push(Token::Type::Implies, i); i += 2; continue; }
    if (text.substr(i, 3) == "_|_") { push(Token::Type::Bottom, i); i += 3; continue; }
    if (text.substr(i, 3) == "^T^") { push(Token::Type::Top, i); i += 3; continue; }
    if (c >= 'a' && c <= 'z') {
      std::size_t j = i + 1;
      while (j < text.size() &&
             ((text[j] >= 'a' && text[j] <= 'z') ||
              (text[j] >= '0' && text[j] <= '9') || text[j] == '_'))
        ++j;
      std::string word(text.substr(i, j - i));
      if (word == "top") {
        push(Token::Type::Top, i);
      } else {
        push(Token::Type::Atom, i, word);
      }
      i = j;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", i);
  }
  push(Token::Type::End, text.size());
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Signature* sig)
      : tokens_(std::move(tokens)), sig_(sig) {}

  Formula parse() {
    Formula f = formula();
    if (peek().type != Token::Type::End)
      throw ParseError("trailing input after formula", peek().pos);
    return f;
  }

 private:
  const Token& peek() const { return tokens_[at_]; }
  Token take() { return tokens_[at_++]; }

  Formula formula() {
    Formula left = imp();
    if (peek().type == Token::Type::Iff) {
      take();
      Formula right = formula();
      return iff(left, right);
    }
    return left;
  }

  Formula imp() {
    Formula left = or_expr();
    if (peek().type == Token::Type::Implies) {
      take();
      return implies(left, imp());
    }
    return left;
  }

  Formula or_expr() {
    Formula f = and_expr();
    while (peek().type == Token::Type::Or) {
      take();
      f = disj(f, and_expr());
    }
    return f;
  }

  Formula and_expr() {
    Formula f = unary();
    while (peek().type == Token::Type::And) {
      take();
      f = conj(f, unary());
    }
    return f;
  }

  Formula unary() {
    if (peek().type == Token::Type::Not) {
      take();
      return neg(unary());
    }
    return primary();
  }

  Formula primary() {
    Token t = take();
    switch (t.type) {
      case Token::Type::Atom:
        if (sig_ && !sig_->contains(t.text))
          throw UnknownAtomError(t.text, t.pos);
        return atom(t.text);
      case Token::Type::Bottom: return bottom();
      case Token::Type::Top: return top();
      case Token::Type::LParen: {
        Formula f = formula();
        if (peek().type != Token::Type::RParen)
          throw ParseError("expected ')'", peek().pos);
        take();
        return f;
      }
      default:
        throw ParseError("expected a formula", t.pos);
    }
  }

  std::vector<Token> tokens_;
  const Signature* sig_;
  std::size_t at_ = 0;
};

}  // namespace detail

// Parses text, checking every atom against the signature.
inline Formula parse(std::string_view text, const Signature& sig) {
  return detail::Parser(detail::lex(text), &sig).parse();
}

// Parses text with no atom check (used for axiom schemata, whose letters
// are schema variables rather than signature atoms).
inline Formula parse_free(std::string_view text) {
  return detail::Parser(detail::lex(text), nullptr).parse();
}

namespace detail {

// Binding strengths used by the printer; larger binds tighter.
inline int print_precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Implies: return 1;
    case Formula::Kind::Or: return 2;
    case Formula::Kind::And: return 3;
    case Formula::Kind::Not: return 4;
    default: return 5;
  }
}

inline void render_into(const Formula& f, int required, std::string& out) {
  const int mine = print_precedence(f.kind());
  const bool wrap = mine < required;
  if (wrap) out += '(';
  switch (f.kind()) {
    case Formula::Kind::Atom: out += f.atom_name(); break;
    case Formula::Kind::Bottom: out += "_|_"; break;
    case Formula::Kind::Top: out += "top"; break;
    case Formula::Kind::Not:
      out += '~';
      render_into(f.lhs(), mine, out);
      break;
    case Formula::Kind::And:
      render_into(f.lhs(), mine, out);
      out += " & ";
      render_into(f.rhs(), mine + 1, out);
      break;
    case Formula::Kind::Or:
      render_into(f.lhs(), mine, out);
      out += " | ";
      render_into(f.rhs(), mine + 1, out);
      break;
    case Formula::Kind::Implies:
      // antecedents at | level or looser are parenthesized for readability,
      // even though precedence alone would disambiguate them
      render_into(f.lhs(), print_precedence(Formula::Kind::And), out);
      out += " -> ";
      render_into(f.rhs(), mine, out);
      break;
  }
  if (wrap) out += ')';
}

}  // namespace detail

// Minimal-parenthesization text; parse(render(f)) rebuilds f exactly.
inline std::string render(const Formula& f) {
  std::string out;
  detail::render_into(f, 0, out);
  return out;
}

}  // namespace pacbr

#endif  // PACBR_PARSE_HPP
