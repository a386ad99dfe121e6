#include "smcnets/term.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "smcnets/errors.hpp"
#include "syntax.hpp"

namespace smcnets {

struct Term::Node {
  Kind kind;
  std::string op;
  std::vector<Formula> args;
  std::vector<Term> children;
  std::size_t size;
  std::size_t depth;
};

namespace {

std::size_t arg_count(Term::Kind k) {
  switch (k) {
    case Term::Kind::Id:
    case Term::Kind::Lunit:
    case Term::Kind::LunitInv:
    case Term::Kind::Runit:
    case Term::Kind::RunitInv:
      return 1;
    case Term::Kind::Sym:
    case Term::Kind::Eval:
    case Term::Kind::Coeval:
      return 2;
    case Term::Kind::Assoc:
    case Term::Kind::AssocInv:
      return 3;
    default:
      return 0;
  }
}

}  // namespace

Term Term::gen(std::string op) {
  return Term(std::make_shared<const Node>(Node{Kind::Gen, std::move(op), {}, {}, 1, 1}));
}

Term Term::structural(Kind kind, std::vector<Formula> args) {
  if (kind == Kind::Gen || kind == Kind::Comp || kind == Kind::Tensor || kind == Kind::Hom) {
    throw TypeError("not a constant term kind");
  }
  if (args.size() != arg_count(kind)) {
    throw TypeError(std::string(keyword(kind)) + " expects " + std::to_string(arg_count(kind)) +
                    " formula arguments");
  }
  return Term(std::make_shared<const Node>(Node{kind, {}, std::move(args), {}, 1, 1}));
}

Term Term::id(Formula a) { return structural(Kind::Id, {std::move(a)}); }

Term Term::binary(Kind kind, Term a, Term b) {
  std::size_t size = 1 + a.size() + b.size();
  std::size_t depth = 1 + std::max(a.depth(), b.depth());
  return Term(std::make_shared<const Node>(
      Node{kind, {}, {}, {std::move(a), std::move(b)}, size, depth}));
}

Term Term::comp(Term after, Term before) { return binary(Kind::Comp, std::move(after), std::move(before)); }
Term Term::tensor(Term left, Term right) { return binary(Kind::Tensor, std::move(left), std::move(right)); }
Term Term::hom(Term f, Term g) { return binary(Kind::Hom, std::move(f), std::move(g)); }
Term Term::assoc(Formula a, Formula b, Formula c) { return structural(Kind::Assoc, {a, b, c}); }
Term Term::assoc_inv(Formula a, Formula b, Formula c) { return structural(Kind::AssocInv, {a, b, c}); }
Term Term::lunit(Formula a) { return structural(Kind::Lunit, {a}); }
Term Term::lunit_inv(Formula a) { return structural(Kind::LunitInv, {a}); }
Term Term::runit(Formula a) { return structural(Kind::Runit, {a}); }
Term Term::runit_inv(Formula a) { return structural(Kind::RunitInv, {a}); }
Term Term::sym(Formula a, Formula b) { return structural(Kind::Sym, {a, b}); }
Term Term::eval(Formula a, Formula b) { return structural(Kind::Eval, {a, b}); }
Term Term::coeval(Formula a, Formula b) { return structural(Kind::Coeval, {a, b}); }

Term::Kind Term::kind() const { return node_->kind; }

bool Term::is_structural() const {
  switch (kind()) {
    case Kind::Gen:
    case Kind::Id:
    case Kind::Comp:
    case Kind::Tensor:
    case Kind::Hom:
      return false;
    default:
      return true;
  }
}

const std::string& Term::op() const { return node_->op; }
const std::vector<Formula>& Term::args() const { return node_->args; }
const std::vector<Term>& Term::children() const { return node_->children; }
std::size_t Term::size() const { return node_->size; }
std::size_t Term::depth() const { return node_->depth; }

Term Term::with_children(std::vector<Term> children) const {
  if (children.size() != node_->children.size()) throw TypeError("operand count mismatch");
  if (children.empty()) return *this;
  return binary(kind(), std::move(children[0]), std::move(children[1]));
}

std::string_view keyword(Term::Kind kind) {
  switch (kind) {
    case Term::Kind::Id: return "id";
    case Term::Kind::Assoc: return "assoc";
    case Term::Kind::AssocInv: return "assoc'";
    case Term::Kind::Lunit: return "lunit";
    case Term::Kind::LunitInv: return "lunit'";
    case Term::Kind::Runit: return "runit";
    case Term::Kind::RunitInv: return "runit'";
    case Term::Kind::Sym: return "sym";
    case Term::Kind::Eval: return "eval";
    case Term::Kind::Coeval: return "coeval";
    case Term::Kind::Gen: return "<gen>";
    case Term::Kind::Comp: return ".";
    case Term::Kind::Tensor: return "*";
    case Term::Kind::Hom: return "-o";
  }
  return "?";
}

namespace {

const std::map<std::string, Term::Kind, std::less<>>& keyword_table() {
  static const std::map<std::string, Term::Kind, std::less<>> kTable = {
      {"id", Term::Kind::Id},         {"assoc", Term::Kind::Assoc},
      {"assoc'", Term::Kind::AssocInv}, {"lunit", Term::Kind::Lunit},
      {"lunit'", Term::Kind::LunitInv}, {"runit", Term::Kind::Runit},
      {"runit'", Term::Kind::RunitInv}, {"sym", Term::Kind::Sym},
      {"eval", Term::Kind::Eval},     {"coeval", Term::Kind::Coeval}};
  return kTable;
}

// Levels: 0 composition, 1 tensor, 2 hom, 3 primitive.
int level_of(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Comp: return 0;
    case Term::Kind::Tensor: return 1;
    case Term::Kind::Hom: return 2;
    default: return 3;
  }
}

void print_arg(std::ostream& os, const Formula& f) {
  if (f.is_leaf()) {
    os << f.label();
  } else {
    os << '(' << to_string(f) << ')';
  }
}

void print(std::ostream& os, const Term& t, int context) {
  bool parens = level_of(t) < context;
  if (parens) os << '(';
  switch (t.kind()) {
    case Term::Kind::Gen:
      os << t.op();
      break;
    case Term::Kind::Comp:
      print(os, t.children()[0], 1);
      os << " . ";
      print(os, t.children()[1], 0);
      break;
    case Term::Kind::Tensor:
      print(os, t.children()[0], 1);
      os << " * ";
      print(os, t.children()[1], 2);
      break;
    case Term::Kind::Hom:
      print(os, t.children()[0], 3);
      os << " -o ";
      print(os, t.children()[1], 3);
      break;
    default:
      os << keyword(t.kind());
      for (const Formula& f : t.args()) {
        os << ' ';
        print_arg(os, f);
      }
  }
  if (parens) os << ')';
}

class TermParser {
 public:
  TermParser(syntax::TokenStream& ts, const Signature& sig) : ts_(ts), sig_(sig) {}

  Term comp() {
    Term lhs = tens();
    if (ts_.at(syntax::Tok::Dot)) {
      ts_.next();
      return Term::comp(lhs, comp());
    }
    return lhs;
  }

 private:
  Term tens() {
    Term lhs = hom();
    while (ts_.at(syntax::Tok::Star)) {
      ts_.next();
      lhs = Term::tensor(lhs, hom());
    }
    return lhs;
  }

  Term hom() {
    Term lhs = prim();
    if (ts_.at(syntax::Tok::Lolli)) {
      ts_.next();
      return Term::hom(lhs, prim());
    }
    return lhs;
  }

  Term prim() {
    if (ts_.at(syntax::Tok::LParen)) {
      ts_.next();
      Term t = comp();
      ts_.expect(syntax::Tok::RParen, "term");
      return t;
    }
    syntax::Token name = ts_.expect(syntax::Tok::Ident, "term");
    auto kw = keyword_table().find(name.text);
    if (kw == keyword_table().end()) {
      if (!sig_.has_op(name.text)) ts_.fail(name, "unknown operation '" + name.text + "'");
      return Term::gen(name.text);
    }
    std::vector<Formula> args;
    std::size_t want = arg_count(kw->second);
    for (std::size_t i = 0; i < want; ++i) {
      if (!syntax::starts_formula_atom(ts_)) {
        ts_.fail(ts_.peek(), name.text + " expects " + std::to_string(want) +
                                 " formula arguments, got " + std::to_string(i));
      }
      args.push_back(syntax::parse_formula_atom(ts_, {&sig_.sorts()}));
    }
    return Term::structural(kw->second, std::move(args));
  }

  syntax::TokenStream& ts_;
  const Signature& sig_;
};

}  // namespace

std::string to_string(const Term& t) {
  std::ostringstream os;
  print(os, t, 0);
  return os.str();
}

Term syntax::parse_term_expr(TokenStream& ts, const Signature& sig) {
  TermParser parser(ts, sig);
  return parser.comp();
}

Term parse_term(std::string_view text, const Signature& sig) {
  syntax::TokenStream ts(syntax::tokenize(text));
  Term t = syntax::parse_term_expr(ts, sig);
  ts.expect_end("term");
  return t;
}

Arity constant_arity(const Term& t) {
  using F = Formula;
  const auto& a = t.args();
  switch (t.kind()) {
    case Term::Kind::Id:
      return {a[0], a[0]};
    case Term::Kind::Assoc:
      return {F::tensor(a[0], F::tensor(a[1], a[2])), F::tensor(F::tensor(a[0], a[1]), a[2])};
    case Term::Kind::AssocInv:
      return {F::tensor(F::tensor(a[0], a[1]), a[2]), F::tensor(a[0], F::tensor(a[1], a[2]))};
    case Term::Kind::Lunit:
      return {F::tensor(F::unit(), a[0]), a[0]};
    case Term::Kind::LunitInv:
      return {a[0], F::tensor(F::unit(), a[0])};
    case Term::Kind::Runit:
      return {F::tensor(a[0], F::unit()), a[0]};
    case Term::Kind::RunitInv:
      return {a[0], F::tensor(a[0], F::unit())};
    case Term::Kind::Sym:
      return {F::tensor(a[0], a[1]), F::tensor(a[1], a[0])};
    case Term::Kind::Eval:
      return {F::tensor(F::hom(a[0], a[1]), a[0]), a[1]};
    case Term::Kind::Coeval:
      return {a[0], F::hom(a[1], F::tensor(a[0], a[1]))};
    default:
      throw TypeError("'" + to_string(t) + "' is not a constant");
  }
}

Arity infer_type(const Term& t, const Signature& sig) {
  using F = Formula;
  switch (t.kind()) {
    case Term::Kind::Gen:
      return sig.op(t.op());
    case Term::Kind::Comp: {
      Arity after = infer_type(t.children()[0], sig);
      Arity before = infer_type(t.children()[1], sig);
      if (before.target != after.source) {
        throw TypeError("composition mismatch in '" + to_string(t) + "': " +
                        to_string(before.target) + " vs " + to_string(after.source));
      }
      return {before.source, after.target};
    }
    case Term::Kind::Tensor: {
      Arity l = infer_type(t.children()[0], sig);
      Arity r = infer_type(t.children()[1], sig);
      return {F::tensor(l.source, r.source), F::tensor(l.target, r.target)};
    }
    case Term::Kind::Hom: {
      Arity f = infer_type(t.children()[0], sig);
      Arity g = infer_type(t.children()[1], sig);
      return {F::hom(f.target, g.source), F::hom(f.source, g.target)};
    }
    default:
      for (const Formula& f : t.args()) sig.check_formula(f);
      return constant_arity(t);
  }
}

bool operator==(const Term& a, const Term& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.op() <=> b.op(); c != 0) return c;
  if (auto c = a.args().size() <=> b.args().size(); c != 0) return c;
  for (std::size_t i = 0; i < a.args().size(); ++i) {
    if (auto c = a.args()[i] <=> b.args()[i]; c != 0) return c;
  }
  for (std::size_t i = 0; i < a.children().size(); ++i) {
    if (auto c = a.children()[i] <=> b.children()[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace smcnets
