#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smcnets/formula.hpp"
#include "smcnets/prenet.hpp"

namespace smcnets {

/// A node of one of the one-sided formula trees glued into a switching:
/// the dual of the domain, the codomain, and the dual of each support typing.
struct SwitchVertex {
  Region region;
  Path path;
  MLLFormula::Kind kind;
  std::string label;  // sort or "I" on leaves, empty on inner nodes
};

struct SwitchEdge {
  enum class Kind { Tree, Link };
  std::size_t a;
  std::size_t b;
  Kind kind;
  bool unit = false;  // a linking edge leaving a unit port
};

/// One switching of a net: formula-tree edges with exactly one premise kept
/// per par node, plus every linking edge with its orientation forgotten.
class SwitchGraph {
 public:
  SwitchGraph(std::vector<SwitchVertex> vertices, std::vector<SwitchEdge> edges, std::uint64_t index)
      : vertices_(std::move(vertices)), edges_(std::move(edges)), index_(index) {}

  const std::vector<SwitchVertex>& vertices() const { return vertices_; }
  const std::vector<SwitchEdge>& edges() const { return edges_; }
  /// Position in the enumeration order.
  std::uint64_t index() const { return index_; }

  bool is_connected() const;
  /// Connected and acyclic.
  bool is_tree() const;
  /// Vertex sequence of some cycle, closing back to its first vertex.
  std::optional<std::vector<std::size_t>> find_cycle() const;

 private:
  std::vector<SwitchVertex> vertices_;
  std::vector<SwitchEdge> edges_;
  std::uint64_t index_;
};

/// All 2^P switchings of a net, P its par-node count. Switching k keeps the
/// right premise of the i-th par node iff bit i of k is set; par nodes are
/// ordered by region (domain, codomain, support) then by path.
class Switchings {
 public:
  explicit Switchings(const Net& n);

  std::size_t par_count() const { return pars_.size(); }
  std::uint64_t size() const { return std::uint64_t{1} << pars_.size(); }
  SwitchGraph at(std::uint64_t k) const;
  /// Equivalent to at(k).is_tree() without materializing the graph.
  bool is_tree(std::uint64_t k) const;

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = SwitchGraph;
    using difference_type = std::ptrdiff_t;

    iterator(const Switchings* owner, std::uint64_t k) : owner_(owner), k_(k) {}
    SwitchGraph operator*() const { return owner_->at(k_); }
    iterator& operator++() {
      ++k_;
      return *this;
    }
    bool operator==(const iterator& o) const { return k_ == o.k_; }

   private:
    const Switchings* owner_;
    std::uint64_t k_;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size()}; }

 private:
  struct Par {
    std::size_t node;
    std::size_t left;
    std::size_t right;
  };

  std::vector<SwitchVertex> vertices_;
  std::vector<SwitchEdge> fixed_;  // tree edges below non-par nodes, and links
  std::vector<Par> pars_;
  std::vector<std::size_t> fixed_forest_;  // union-find parents after fixed_
  bool fixed_acyclic_ = true;
};

Switchings enumerate_switchings(const Net& n);
std::size_t par_count(const Net& n);

/// Every switching is a tree. Stops at the first failure.
bool is_correct(const Net& n);
/// The first switching that is not a tree, if any.
std::optional<SwitchGraph> first_failing_switching(const Net& n);

}  // namespace smcnets
