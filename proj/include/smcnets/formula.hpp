#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace smcnets {

/// Address of a node inside a formula tree: a word over L/R read from the
/// root. The empty path is the root itself.
class Path {
 public:
  Path() = default;
  explicit Path(std::string steps);

  static Path root() { return Path(); }

  Path left() const { return Path(steps_ + 'L'); }
  Path right() const { return Path(steps_ + 'R'); }
  /// this followed by `suffix`.
  Path operator/(const Path& suffix) const { return Path(steps_ + suffix.steps_); }

  bool empty() const { return steps_.empty(); }
  std::size_t size() const { return steps_.size(); }
  char operator[](std::size_t i) const { return steps_[i]; }
  bool starts_with(const Path& prefix) const;
  /// Strips a known prefix; the caller guarantees starts_with(prefix).
  Path drop(std::size_t n) const { return Path(steps_.substr(n)); }

  const std::string& str() const { return steps_; }
  /// "ε" for the root, the raw steps otherwise.
  std::string display() const;

  auto operator<=>(const Path&) const = default;

 private:
  std::string steps_;
};

enum class Polarity { Positive, Negative };

inline Polarity flip(Polarity p) {
  return p == Polarity::Positive ? Polarity::Negative : Polarity::Positive;
}

/// The label carried by unit leaves. `I` is reserved and cannot name a sort.
inline constexpr std::string_view kUnitLabel = "I";

/// An IMLL formula over named sorts: atoms, the unit I, tensor and linear
/// implication. Immutable; copies share structure.
class Formula {
 public:
  enum class Kind { Atom, Unit, Tensor, Hom };

  static Formula atom(std::string sort);
  static Formula unit();
  static Formula tensor(Formula left, Formula right);
  /// antecedent -o consequent
  static Formula hom(Formula antecedent, Formula consequent);

  Kind kind() const;
  bool is_leaf() const { return kind() == Kind::Atom || kind() == Kind::Unit; }
  /// Sort name of an atom, "I" for the unit.
  const std::string& label() const;
  const Formula& left() const;
  const Formula& right() const;

  /// Subformula at `path`; throws TypeError if the path leaves the tree.
  const Formula& at(const Path& path) const;
  bool has_leaf(const Path& path) const;

  std::size_t leaf_count() const;
  /// Number of nodes in the syntax tree.
  std::size_t size() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Prints with minimal parentheses; parse_formula reads the result back.
std::string to_string(const Formula& f);

/// Parses the concrete syntax `hom := tens ("-o" hom)?`,
/// `tens := atom ("*" atom)*`, `atom := IDENT | "I" | "(" hom ")"`.
/// Every atom must be one of `sorts`.
Formula parse_formula(std::string_view text, const std::set<std::string>& sorts);
/// Same grammar, any identifier is accepted as a sort.
Formula parse_formula_open(std::string_view text);

/// A leaf occurrence of a formula. Negative iff reached through the
/// antecedent of an odd number of implications.
struct Port {
  Path path;
  std::string label;
  Polarity polarity;

  bool is_unit() const { return label == kUnitLabel; }
  bool operator==(const Port&) const = default;
};

/// Leaves in left-to-right order.
std::vector<Port> ports(const Formula& f);
/// Polarity of the leaf at `path`, or of any inner node as seen from the root.
Polarity polarity_at(const Formula& f, const Path& path);

/// A one-sided classical MLL formula. Leaves remember the path of the IMLL
/// leaf they come from; the tree has the same shape as its source formula.
class MLLFormula {
 public:
  enum class Kind { PosAtom, NegAtom, One, Bot, Tensor, Par };

  Kind kind() const { return kind_; }
  bool is_leaf() const { return children_.empty(); }
  /// Sort of an atom leaf, "I" for One/Bot.
  const std::string& label() const { return label_; }
  /// Path of this node inside the source formula.
  const Path& origin() const { return origin_; }
  const MLLFormula& left() const { return children_.at(0); }
  const MLLFormula& right() const { return children_.at(1); }

  std::size_t leaf_count() const;
  std::size_t par_count() const;

  bool operator==(const MLLFormula& other) const;

 private:
  friend MLLFormula to_one_sided(const Formula&, bool);
  MLLFormula() = default;

  Kind kind_ = Kind::One;
  std::string label_;
  Path origin_;
  std::vector<MLLFormula> children_;
};

/// `f'` when `negated` is false, its De Morgan dual otherwise; in particular
/// (a -o b)' = dual(a') par b'.
MLLFormula to_one_sided(const Formula& f, bool negated);

std::string to_string(const MLLFormula& f);

}  // namespace smcnets
