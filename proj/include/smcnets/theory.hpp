#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "smcnets/signature.hpp"
#include "smcnets/term.hpp"

namespace smcnets {

struct Equation {
  std::string name;
  Term lhs;
  Term rhs;
};

/// A signature together with named, well-typed equations.
struct Theory {
  Signature signature;
  std::vector<Equation> equations;

  const Equation* find_equation(std::string_view name) const;
};

/// Reads the line-oriented theory format:
///
///   sort IDENT
///   op IDENT : formula -> formula
///   eq IDENT : term = term
///   # comment
///
/// Equation sides must have identical source and target formulas.
Theory parse_theory(std::string_view text);
Theory load_theory(const std::string& path);

}  // namespace smcnets
