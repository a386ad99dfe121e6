#include "smcnets/formula.hpp"

#include <functional>
#include <sstream>

#include "smcnets/errors.hpp"
#include "syntax.hpp"

namespace smcnets {

Path::Path(std::string steps) : steps_(std::move(steps)) {
  for (char c : steps_) {
    if (c != 'L' && c != 'R') throw TypeError("invalid path '" + steps_ + "': only L and R allowed");
  }
}

bool Path::starts_with(const Path& prefix) const {
  return steps_.compare(0, prefix.steps_.size(), prefix.steps_) == 0 &&
         prefix.steps_.size() <= steps_.size();
}

std::string Path::display() const { return steps_.empty() ? "ε" : steps_; }

struct Formula::Node {
  Kind kind;
  std::string label;
  std::vector<Formula> children;
  std::size_t leaves;
  std::size_t nodes;
};

Formula Formula::atom(std::string sort) {
  if (sort.empty()) throw TypeError("atom with empty sort name");
  if (sort == kUnitLabel) throw TypeError("'I' is reserved for the unit");
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(sort), {}, 1, 1}));
}

Formula Formula::unit() {
  static const Formula kUnit(
      std::make_shared<const Node>(Node{Kind::Unit, std::string(kUnitLabel), {}, 1, 1}));
  return kUnit;
}

Formula Formula::tensor(Formula left, Formula right) {
  std::size_t leaves = left.leaf_count() + right.leaf_count();
  std::size_t nodes = 1 + left.size() + right.size();
  return Formula(std::make_shared<const Node>(
      Node{Kind::Tensor, {}, {std::move(left), std::move(right)}, leaves, nodes}));
}

Formula Formula::hom(Formula antecedent, Formula consequent) {
  std::size_t leaves = antecedent.leaf_count() + consequent.leaf_count();
  std::size_t nodes = 1 + antecedent.size() + consequent.size();
  return Formula(std::make_shared<const Node>(
      Node{Kind::Hom, {}, {std::move(antecedent), std::move(consequent)}, leaves, nodes}));
}

Formula::Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::label() const { return node_->label; }
const Formula& Formula::left() const { return node_->children.at(0); }
const Formula& Formula::right() const { return node_->children.at(1); }
std::size_t Formula::leaf_count() const { return node_->leaves; }
std::size_t Formula::size() const { return node_->nodes; }

const Formula& Formula::at(const Path& path) const {
  const Formula* cur = this;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (cur->is_leaf()) {
      throw TypeError("path " + path.display() + " leaves formula " + to_string(*this));
    }
    cur = path[i] == 'L' ? &cur->left() : &cur->right();
  }
  return *cur;
}

bool Formula::has_leaf(const Path& path) const {
  const Formula* cur = this;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (cur->is_leaf()) return false;
    cur = path[i] == 'L' ? &cur->left() : &cur->right();
  }
  return cur->is_leaf();
}

bool operator==(const Formula& a, const Formula& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (a.is_leaf()) return a.label() <=> b.label();
  if (auto c = a.left() <=> b.left(); c != 0) return c;
  return a.right() <=> b.right();
}

namespace {

// Binding levels: 0 = implication, 1 = tensor operand on the left,
// 2 = atom (right operand of a tensor).
void print(std::ostream& os, const Formula& f, int level) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::Unit:
      os << f.label();
      return;
    case Formula::Kind::Tensor: {
      bool parens = level > 1;
      if (parens) os << '(';
      print(os, f.left(), 1);
      os << " * ";
      print(os, f.right(), 2);
      if (parens) os << ')';
      return;
    }
    case Formula::Kind::Hom: {
      bool parens = level > 0;
      if (parens) os << '(';
      print(os, f.left(), 1);
      os << " -o ";
      print(os, f.right(), 0);
      if (parens) os << ')';
      return;
    }
  }
}

}  // namespace

std::string to_string(const Formula& f) {
  std::ostringstream os;
  print(os, f, 0);
  return os.str();
}

Formula parse_formula(std::string_view text, const std::set<std::string>& sorts) {
  syntax::TokenStream ts(syntax::tokenize(text));
  Formula f = syntax::parse_formula_hom(ts, {&sorts});
  ts.expect_end("formula");
  return f;
}

Formula parse_formula_open(std::string_view text) {
  syntax::TokenStream ts(syntax::tokenize(text));
  Formula f = syntax::parse_formula_hom(ts, {});
  ts.expect_end("formula");
  return f;
}

namespace {

void collect_ports(const Formula& f, const Path& here, Polarity pol, std::vector<Port>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::Unit:
      out.push_back({here, f.label(), pol});
      return;
    case Formula::Kind::Tensor:
      collect_ports(f.left(), here.left(), pol, out);
      collect_ports(f.right(), here.right(), pol, out);
      return;
    case Formula::Kind::Hom:
      collect_ports(f.left(), here.left(), flip(pol), out);
      collect_ports(f.right(), here.right(), pol, out);
      return;
  }
}

}  // namespace

std::vector<Port> ports(const Formula& f) {
  std::vector<Port> out;
  out.reserve(f.leaf_count());
  collect_ports(f, Path::root(), Polarity::Positive, out);
  return out;
}

Polarity polarity_at(const Formula& f, const Path& path) {
  Polarity pol = Polarity::Positive;
  const Formula* cur = &f;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (cur->is_leaf()) {
      throw TypeError("path " + path.display() + " leaves formula " + to_string(f));
    }
    if (path[i] == 'L') {
      if (cur->kind() == Formula::Kind::Hom) pol = flip(pol);
      cur = &cur->left();
    } else {
      cur = &cur->right();
    }
  }
  return pol;
}

std::size_t MLLFormula::leaf_count() const {
  if (is_leaf()) return 1;
  return left().leaf_count() + right().leaf_count();
}

std::size_t MLLFormula::par_count() const {
  if (is_leaf()) return 0;
  return (kind_ == Kind::Par ? 1 : 0) + left().par_count() + right().par_count();
}

bool MLLFormula::operator==(const MLLFormula& other) const {
  return kind_ == other.kind_ && label_ == other.label_ && origin_ == other.origin_ &&
         children_ == other.children_;
}

MLLFormula to_one_sided(const Formula& f, bool negated) {
  std::function<MLLFormula(const Formula&, const Path&, bool)> go =
      [&](const Formula& g, const Path& here, bool neg) -> MLLFormula {
    MLLFormula out;
    out.origin_ = here;
    switch (g.kind()) {
      case Formula::Kind::Atom:
        out.kind_ = neg ? MLLFormula::Kind::NegAtom : MLLFormula::Kind::PosAtom;
        out.label_ = g.label();
        return out;
      case Formula::Kind::Unit:
        out.kind_ = neg ? MLLFormula::Kind::Bot : MLLFormula::Kind::One;
        out.label_ = g.label();
        return out;
      case Formula::Kind::Tensor:
        out.kind_ = neg ? MLLFormula::Kind::Par : MLLFormula::Kind::Tensor;
        out.children_.push_back(go(g.left(), here.left(), neg));
        out.children_.push_back(go(g.right(), here.right(), neg));
        return out;
      case Formula::Kind::Hom:
        out.kind_ = neg ? MLLFormula::Kind::Tensor : MLLFormula::Kind::Par;
        out.children_.push_back(go(g.left(), here.left(), !neg));
        out.children_.push_back(go(g.right(), here.right(), neg));
        return out;
    }
    return out;
  };
  return go(f, Path::root(), negated);
}

std::string to_string(const MLLFormula& f) {
  switch (f.kind()) {
    case MLLFormula::Kind::PosAtom: return f.label();
    case MLLFormula::Kind::NegAtom: return "~" + f.label();
    case MLLFormula::Kind::One: return "1";
    case MLLFormula::Kind::Bot: return "bot";
    case MLLFormula::Kind::Tensor:
      return "(" + to_string(f.left()) + " * " + to_string(f.right()) + ")";
    case MLLFormula::Kind::Par:
      return "(" + to_string(f.left()) + " | " + to_string(f.right()) + ")";
  }
  return {};
}

}  // namespace smcnets
