#include "smcnets/signature.hpp"

#include "smcnets/errors.hpp"
#include "syntax.hpp"

namespace smcnets {

std::string to_string(const Arity& a) { return to_string(a.source) + " -> " + to_string(a.target); }

void Signature::add_sort(const std::string& name) {
  if (name == kUnitLabel || syntax::is_term_keyword(name)) {
    throw TypeError("'" + name + "' is reserved and cannot name a sort");
  }
  if (!sorts_.insert(name).second) throw TypeError("duplicate sort '" + name + "'");
}

void Signature::add_op(const std::string& name, Formula source, Formula target) {
  if (name == kUnitLabel || syntax::is_term_keyword(name)) {
    throw TypeError("'" + name + "' is reserved and cannot name an operation");
  }
  if (ops_.count(name) != 0) throw TypeError("duplicate operation '" + name + "'");
  check_formula(source);
  check_formula(target);
  ops_.emplace(name, Arity{std::move(source), std::move(target)});
  op_order_.push_back(name);
}

const Arity& Signature::op(const std::string& name) const {
  auto it = ops_.find(name);
  if (it == ops_.end()) throw TypeError("unknown operation '" + name + "'");
  return it->second;
}

void Signature::check_formula(const Formula& f) const {
  switch (f.kind()) {
    case Formula::Kind::Unit:
      return;
    case Formula::Kind::Atom:
      if (sorts_.count(f.label()) == 0) throw TypeError("unknown sort '" + f.label() + "'");
      return;
    default:
      check_formula(f.left());
      check_formula(f.right());
  }
}

Formula ty(const std::string& op, const Signature& sig) {
  const Arity& a = sig.op(op);
  return Formula::hom(a.source, a.target);
}

Formula ty(std::span<const std::string> ops, const Signature& sig) {
  if (ops.empty()) return Formula::unit();
  Formula acc = ty(ops.front(), sig);
  for (std::size_t i = 1; i < ops.size(); ++i) acc = Formula::tensor(acc, ty(ops[i], sig));
  return acc;
}

}  // namespace smcnets
