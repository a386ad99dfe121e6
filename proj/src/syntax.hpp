#pragma once

// Tokenizer and formula productions shared by the formula, term and theory
// parsers. Internal to the library.

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "smcnets/errors.hpp"
#include "smcnets/formula.hpp"
#include "smcnets/signature.hpp"
#include "smcnets/term.hpp"

namespace smcnets::syntax {

enum class Tok { Ident, Star, Lolli, Arrow, Dot, LParen, RParen, Colon, Equals, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(Tok kind);

/// Tokenizes `text`; `#` starts a comment running to end of line.
/// `line_offset` is added to reported line numbers.
std::vector<Token> tokenize(std::string_view text, std::size_t line_offset = 0);

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const;
  bool at(Tok kind) const { return peek().kind == kind; }
  bool at_ident(std::string_view text) const {
    return peek().kind == Tok::Ident && peek().text == text;
  }
  Token next();
  Token expect(Tok kind, std::string_view context);
  void expect_end(std::string_view context);

  [[noreturn]] void fail(const Token& at, const std::string& message) const;

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

/// Sorts accepted by the formula productions; a null set accepts any name.
struct SortScope {
  const std::set<std::string>* sorts = nullptr;
};

Formula parse_formula_hom(TokenStream& ts, SortScope scope);
Formula parse_formula_atom(TokenStream& ts, SortScope scope);
/// True if the next token can start a formula atom.
bool starts_formula_atom(const TokenStream& ts);

bool is_term_keyword(std::string_view word);

/// The `comp` production of the term grammar; stops at the first token that
/// cannot continue a term.
Term parse_term_expr(TokenStream& ts, const Signature& sig);

}  // namespace smcnets::syntax
