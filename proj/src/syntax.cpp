#include "syntax.hpp"

#include <cctype>

namespace smcnets::syntax {

std::string describe(Tok kind) {
  switch (kind) {
    case Tok::Ident: return "identifier";
    case Tok::Star: return "'*'";
    case Tok::Lolli: return "'-o'";
    case Tok::Arrow: return "'->'";
    case Tok::Dot: return "'.'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Colon: return "':'";
    case Tok::Equals: return "'='";
    case Tok::End: return "end of input";
  }
  return "?";
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

std::vector<Token> tokenize(std::string_view text, std::size_t line_offset) {
  std::vector<Token> out;
  std::size_t line = 1 + line_offset;
  std::size_t col = 1;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string s, std::size_t c) { out.push_back({k, std::move(s), line, c}); };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    std::size_t start_col = col;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      while (j < text.size() && text[j] == '\'') ++j;
      push(Tok::Ident, std::string(text.substr(i, j - i)), start_col);
      col += j - i;
      i = j;
      continue;
    }
    if (c == '-' && i + 1 < text.size() && (text[i + 1] == 'o' || text[i + 1] == '>')) {
      push(text[i + 1] == 'o' ? Tok::Lolli : Tok::Arrow, std::string(text.substr(i, 2)), start_col);
      i += 2;
      col += 2;
      continue;
    }
    Tok k;
    switch (c) {
      case '*': k = Tok::Star; break;
      case '.': k = Tok::Dot; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case ':': k = Tok::Colon; break;
      case '=': k = Tok::Equals; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, start_col);
    }
    push(k, std::string(1, c), start_col);
    ++i;
    ++col;
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

const Token& TokenStream::peek(std::size_t ahead) const {
  std::size_t i = pos_ + ahead;
  return i < tokens_.size() ? tokens_[i] : tokens_.back();
}

Token TokenStream::next() {
  Token t = peek();
  if (pos_ < tokens_.size() - 1) ++pos_;
  return t;
}

Token TokenStream::expect(Tok kind, std::string_view context) {
  if (!at(kind)) {
    fail(peek(), "expected " + describe(kind) + " in " + std::string(context) + ", found " +
                     (peek().kind == Tok::End ? describe(Tok::End) : "'" + peek().text + "'"));
  }
  return next();
}

void TokenStream::expect_end(std::string_view context) {
  if (!at(Tok::End)) {
    fail(peek(), "unexpected '" + peek().text + "' after " + std::string(context));
  }
}

void TokenStream::fail(const Token& at, const std::string& message) const {
  throw ParseError(message, at.line, at.column);
}

bool starts_formula_atom(const TokenStream& ts) {
  return ts.at(Tok::Ident) || ts.at(Tok::LParen);
}

Formula parse_formula_atom(TokenStream& ts, SortScope scope) {
  if (ts.at(Tok::LParen)) {
    ts.next();
    Formula f = parse_formula_hom(ts, scope);
    ts.expect(Tok::RParen, "formula");
    return f;
  }
  Token t = ts.expect(Tok::Ident, "formula");
  if (t.text == kUnitLabel) return Formula::unit();
  if (t.text.find('\'') != std::string::npos || is_term_keyword(t.text)) {
    ts.fail(t, "'" + t.text + "' cannot name a sort");
  }
  if (scope.sorts != nullptr && scope.sorts->count(t.text) == 0) {
    ts.fail(t, "unknown sort '" + t.text + "'");
  }
  return Formula::atom(t.text);
}

Formula parse_formula_hom(TokenStream& ts, SortScope scope) {
  Formula lhs = parse_formula_atom(ts, scope);
  while (ts.at(Tok::Star)) {
    ts.next();
    lhs = Formula::tensor(lhs, parse_formula_atom(ts, scope));
  }
  if (ts.at(Tok::Lolli)) {
    ts.next();
    return Formula::hom(lhs, parse_formula_hom(ts, scope));
  }
  return lhs;
}

bool is_term_keyword(std::string_view word) {
  static const std::set<std::string, std::less<>> kKeywords = {
      "id", "sym", "assoc", "assoc'", "lunit", "lunit'", "runit", "runit'", "eval", "coeval"};
  return kKeywords.count(word) > 0;
}

}  // namespace smcnets::syntax
