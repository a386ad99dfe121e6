#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "smcnets/formula.hpp"

namespace smcnets {

/// Source and target formulas of a morphism.
struct Arity {
  Formula source;
  Formula target;

  bool operator==(const Arity&) const = default;
};

std::string to_string(const Arity& a);

/// Sorts plus typed operations.
class Signature {
 public:
  /// Throws TypeError on a duplicate or reserved sort name.
  void add_sort(const std::string& name);
  /// Throws TypeError on a duplicate op, a keyword name, or an undeclared sort.
  void add_op(const std::string& name, Formula source, Formula target);

  const std::set<std::string>& sorts() const { return sorts_; }
  const std::map<std::string, Arity>& ops() const { return ops_; }
  bool has_op(const std::string& name) const { return ops_.count(name) > 0; }
  /// Throws TypeError for unknown ops.
  const Arity& op(const std::string& name) const;
  /// Op names in declaration order.
  const std::vector<std::string>& op_order() const { return op_order_; }

  /// Throws TypeError if `f` mentions an undeclared sort.
  void check_formula(const Formula& f) const;

 private:
  std::set<std::string> sorts_;
  std::map<std::string, Arity> ops_;
  std::vector<std::string> op_order_;
};

/// The typing of an operation list: ty() = I, ty(op) = s(op) -o t(op), and
/// ty(op1..opn) = ty(op1..op(n-1)) * ty(opn).
Formula ty(std::span<const std::string> ops, const Signature& sig);
/// ty of a single op.
Formula ty(const std::string& op, const Signature& sig);

}  // namespace smcnets
