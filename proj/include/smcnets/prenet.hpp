#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "smcnets/formula.hpp"
#include "smcnets/signature.hpp"

namespace smcnets {

enum class RegionKind : std::uint8_t { Dom, Cod, Sup };

/// Which formula of a net a port lives in: the domain, the codomain, or the
/// typing ty(op) of one support element.
struct Region {
  RegionKind kind = RegionKind::Dom;
  std::size_t index = 0;  // support position; 0 for Dom/Cod

  static Region dom() { return {RegionKind::Dom, 0}; }
  static Region cod() { return {RegionKind::Cod, 0}; }
  static Region sup(std::size_t i) { return {RegionKind::Sup, i}; }

  auto operator<=>(const Region&) const = default;
};

struct PortRef {
  Region region;
  Path path;

  auto operator<=>(const PortRef&) const = default;
};

std::string to_string(const Region& r);
/// `dom.LR`, `cod.ε`, `sup2.RL`.
std::string to_string(const PortRef& p);

/// Source-side ports carry outgoing linking edges, target-side ports receive them.
enum class Side { Source, Target };

struct PortInfo {
  PortRef ref;
  std::string label;
  Side side;

  bool is_unit() const { return label == kUnitLabel; }
};

/// A support element: an operation label and its typing ty(label).
struct SupportItem {
  std::string label;
  Formula type;

  bool operator==(const SupportItem&) const = default;
};

/// A prenet a -> b: a sequence of support elements and a partial function
/// from source-side to target-side ports. Sort-labelled sources link to
/// equally-labelled targets; unit sources may link to any target.
class Net {
 public:
  using Linking = std::map<PortRef, PortRef>;

  /// Throws TypeError if an edge leaves the source side, enters the target
  /// side wrongly, or joins ports of different sorts.
  Net(Formula dom, Formula cod, std::vector<SupportItem> support, Linking linking);

  const Formula& dom() const { return dom_; }
  const Formula& cod() const { return cod_; }
  const std::vector<SupportItem>& support() const { return support_; }
  std::vector<std::string> support_labels() const;
  const Linking& linking() const { return linking_; }

  const Formula& region_formula(const Region& r) const;
  /// Whether a region enters switching graphs dualized (domain and support).
  static bool region_negated(const Region& r) { return r.kind != RegionKind::Cod; }
  bool has_port(const PortRef& p) const;
  Side side(const PortRef& p) const;
  const std::string& label(const PortRef& p) const;

  /// All ports, domain first, then codomain, then support in order; each
  /// region left to right.
  std::vector<PortInfo> ports() const;

  /// Copy with one edge retargeted (or added).
  Net with_edge(const PortRef& source, const PortRef& target) const;

  /// Bit-for-bit equality: formulas, support sequence and linking.
  bool operator==(const Net& other) const;

 private:
  Formula dom_;
  Formula cod_;
  std::vector<SupportItem> support_;
  Linking linking_;
};

/// Throws TypeError unless, for each sort, the linking restricts to a
/// bijection between source-side and target-side ports of that sort.
void check_sort_bijection(const Net& n);

/// The support element for `op` under `sig`.
SupportItem support_item(const std::string& op, const Signature& sig);

Net identity_net(const Formula& a);

/// f : a -> b then g : b -> c, glued along the ports of b. The result's
/// support is g's followed by f's. A source whose alternating path through b
/// dead-ends or cycles is left unlinked.
Net compose(const Net& f, const Net& g);

/// f ⊗ g : a ⊗ a' -> b ⊗ b'; support is f's followed by g's.
Net tensor(const Net& f, const Net& g);

/// (u ⊗ a) -> d  to  u -> (a -o d), by re-indexing ports.
Net curry(const Net& f);
/// u -> (a -o d)  to  (u ⊗ a) -> d; exact inverse of curry.
Net uncurry(const Net& f);

/// Reorders the support: new position k holds old element perm[k].
Net permute_support(const Net& n, const std::vector<std::size_t>& perm);

/// Encoding of a net that is invariant under label-preserving renumbering
/// of its support and complete for it.
std::string support_canonical_key(const Net& n);

/// Equal up to a label-preserving bijection of support positions.
bool support_iso_equal(const Net& f, const Net& g);

}  // namespace smcnets
