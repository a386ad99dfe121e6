#include "smcnets/theory.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "smcnets/errors.hpp"
#include "syntax.hpp"

namespace smcnets {

const Equation* Theory::find_equation(std::string_view name) const {
  for (const Equation& eq : equations) {
    if (eq.name == name) return &eq;
  }
  return nullptr;
}

using syntax::Tok;

Theory parse_theory(std::string_view text) {
  Theory th;
  std::set<std::string> eq_names;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    syntax::TokenStream ts(syntax::tokenize(line, line_no));
    ++line_no;
    if (ts.at(Tok::End)) continue;

    syntax::Token head = ts.expect(Tok::Ident, "theory declaration");
    if (head.text == "sort") {
      syntax::Token name = ts.expect(Tok::Ident, "sort declaration");
      ts.expect_end("sort declaration");
      try {
        th.signature.add_sort(name.text);
      } catch (const TypeError& e) {
        ts.fail(name, e.what());
      }
    } else if (head.text == "op") {
      syntax::Token name = ts.expect(Tok::Ident, "operation declaration");
      ts.expect(Tok::Colon, "operation declaration");
      Formula source = syntax::parse_formula_hom(ts, {&th.signature.sorts()});
      ts.expect(Tok::Arrow, "operation declaration");
      Formula target = syntax::parse_formula_hom(ts, {&th.signature.sorts()});
      ts.expect_end("operation declaration");
      try {
        th.signature.add_op(name.text, source, target);
      } catch (const TypeError& e) {
        ts.fail(name, e.what());
      }
    } else if (head.text == "eq") {
      syntax::Token name = ts.expect(Tok::Ident, "equation");
      ts.expect(Tok::Colon, "equation");
      Term lhs = syntax::parse_term_expr(ts, th.signature);
      ts.expect(Tok::Equals, "equation");
      Term rhs = syntax::parse_term_expr(ts, th.signature);
      ts.expect_end("equation");
      if (!eq_names.insert(name.text).second) ts.fail(name, "duplicate equation '" + name.text + "'");
      Arity l = infer_type(lhs, th.signature);
      Arity r = infer_type(rhs, th.signature);
      if (l != r) {
        throw TypeError("equation '" + name.text + "' (line " + std::to_string(name.line) +
                        ") has mismatched sides: " + to_string(l) + " vs " + to_string(r));
      }
      th.equations.push_back({name.text, lhs, rhs});
    } else {
      ts.fail(head, "expected 'sort', 'op' or 'eq', found '" + head.text + "'");
    }
  }
  return th;
}

Theory load_theory(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open theory file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_theory(buf.str());
}

}  // namespace smcnets
