#pragma once

#include <compare>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "smcnets/formula.hpp"
#include "smcnets/signature.hpp"

namespace smcnets {

/// A derived term: generators, identities, the structural constants with
/// explicit formula arguments, composition, tensor and internal hom.
class Term {
 public:
  enum class Kind {
    Gen,
    Id,
    Comp,
    Tensor,
    Hom,
    Assoc,
    AssocInv,
    Lunit,
    LunitInv,
    Runit,
    RunitInv,
    Sym,
    Eval,
    Coeval,
  };

  static Term gen(std::string op);
  static Term id(Formula a);
  /// `after . before`: `before` runs first.
  static Term comp(Term after, Term before);
  static Term tensor(Term left, Term right);
  /// For f: a -> b and g: c -> d, the term (b -o c) -> (a -o d).
  static Term hom(Term f, Term g);
  static Term assoc(Formula a, Formula b, Formula c);
  static Term assoc_inv(Formula a, Formula b, Formula c);
  static Term lunit(Formula a);
  static Term lunit_inv(Formula a);
  static Term runit(Formula a);
  static Term runit_inv(Formula a);
  static Term sym(Formula a, Formula b);
  static Term eval(Formula a, Formula b);
  static Term coeval(Formula a, Formula b);

  /// Rebuilds a structural constant of `kind` from its formula arguments.
  static Term structural(Kind kind, std::vector<Formula> args);

  Kind kind() const;
  bool is_structural() const;
  /// Operation name of a generator.
  const std::string& op() const;
  /// Formula arguments of Id and the structural constants.
  const std::vector<Formula>& args() const;
  /// The two operands of Comp/Tensor/Hom, in constructor order.
  const std::vector<Term>& children() const;

  /// Same node kind and payload with new operands.
  Term with_children(std::vector<Term> children) const;

  std::size_t size() const;
  std::size_t depth() const;

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Node;
  static Term binary(Kind kind, Term a, Term b);
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Concrete keyword of a structural constant ("assoc'", "eval", ...).
std::string_view keyword(Term::Kind kind);

std::string to_string(const Term& t);

/// Parses `comp := tens ("." comp)?`, `tens := hom ("*" hom)*`,
/// `hom := prim ("-o" prim)?`; structural constants take atomic or
/// parenthesized formula arguments.
Term parse_term(std::string_view text, const Signature& sig);

/// Arity of Id or a structural constant, read off its formula arguments.
Arity constant_arity(const Term& constant);

/// Source and target of a well-typed term; throws TypeError otherwise.
Arity infer_type(const Term& t, const Signature& sig);

}  // namespace smcnets
