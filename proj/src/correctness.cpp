#include "smcnets/correctness.hpp"

#include <functional>
#include <map>
#include <numeric>

#include "smcnets/errors.hpp"

namespace smcnets {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  explicit DisjointSets(std::vector<std::size_t> parent) : parent_(std::move(parent)) {}

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  /// False if x and y were already joined.
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent_[x] = y;
    return true;
  }
  const std::vector<std::size_t>& parents() const { return parent_; }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

bool SwitchGraph::is_connected() const {
  if (vertices_.empty()) return true;
  DisjointSets ds(vertices_.size());
  std::size_t components = vertices_.size();
  for (const auto& e : edges_) {
    if (ds.unite(e.a, e.b)) --components;
  }
  return components == 1;
}

bool SwitchGraph::is_tree() const {
  if (edges_.size() + 1 != vertices_.size()) return false;
  DisjointSets ds(vertices_.size());
  for (const auto& e : edges_) {
    if (!ds.unite(e.a, e.b)) return false;
  }
  return true;
}

std::optional<std::vector<std::size_t>> SwitchGraph::find_cycle() const {
  const std::size_t n = vertices_.size();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);  // (neighbour, edge id)
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    adj[edges_[i].a].emplace_back(edges_[i].b, i);
    adj[edges_[i].b].emplace_back(edges_[i].a, i);
  }
  std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
  std::vector<std::size_t> parent(n, n), via(n, edges_.size());
  for (std::size_t root = 0; root < n; ++root) {
    if (state[root] != 0) continue;
    // Iterative DFS; an edge to an on-stack vertex other than through the
    // edge we arrived by closes a cycle.
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next == adj[v].size()) {
        state[v] = 2;
        stack.pop_back();
        continue;
      }
      auto [w, eid] = adj[v][next++];
      if (eid == via[v]) continue;
      if (state[w] == 1) {
        std::vector<std::size_t> cycle{w};
        for (std::size_t u = v; u != w; u = parent[u]) cycle.push_back(u);
        cycle.push_back(w);
        return cycle;
      }
      if (state[w] == 0) {
        state[w] = 1;
        parent[w] = v;
        via[w] = eid;
        stack.emplace_back(w, 0);
      }
    }
  }
  return std::nullopt;
}

Switchings::Switchings(const Net& n) {
  std::map<PortRef, std::size_t> leaf_ids;
  std::function<std::size_t(const MLLFormula&, const Region&)> add =
      [&](const MLLFormula& m, const Region& r) -> std::size_t {
    std::size_t id = vertices_.size();
    vertices_.push_back({r, m.origin(), m.kind(), m.is_leaf() ? m.label() : std::string()});
    if (m.is_leaf()) {
      leaf_ids.emplace(PortRef{r, m.origin()}, id);
      return id;
    }
    std::size_t l = add(m.left(), r);
    std::size_t rr = add(m.right(), r);
    if (m.kind() == MLLFormula::Kind::Par) {
      pars_.push_back({id, l, rr});
    } else {
      fixed_.push_back({id, l, SwitchEdge::Kind::Tree});
      fixed_.push_back({id, rr, SwitchEdge::Kind::Tree});
    }
    return id;
  };
  auto add_region = [&](const Region& r) {
    add(to_one_sided(n.region_formula(r), Net::region_negated(r)), r);
  };
  add_region(Region::dom());
  add_region(Region::cod());
  for (std::size_t i = 0; i < n.support().size(); ++i) add_region(Region::sup(i));

  for (const auto& [src, tgt] : n.linking()) {
    fixed_.push_back({leaf_ids.at(src), leaf_ids.at(tgt), SwitchEdge::Kind::Link, n.label(src) == kUnitLabel});
  }
  if (pars_.size() >= 63) throw Error("too many par nodes to enumerate switchings");

  DisjointSets ds(vertices_.size());
  for (const auto& e : fixed_) {
    if (!ds.unite(e.a, e.b)) fixed_acyclic_ = false;
  }
  fixed_forest_ = ds.parents();
}

SwitchGraph Switchings::at(std::uint64_t k) const {
  std::vector<SwitchEdge> edges = fixed_;
  for (std::size_t i = 0; i < pars_.size(); ++i) {
    bool keep_right = (k >> i) & 1U;
    edges.push_back({pars_[i].node, keep_right ? pars_[i].right : pars_[i].left, SwitchEdge::Kind::Tree});
  }
  return SwitchGraph(vertices_, std::move(edges), k);
}

bool Switchings::is_tree(std::uint64_t k) const {
  if (!fixed_acyclic_) return false;
  if (fixed_.size() + pars_.size() + 1 != vertices_.size()) return false;
  DisjointSets ds(fixed_forest_);
  for (std::size_t i = 0; i < pars_.size(); ++i) {
    bool keep_right = (k >> i) & 1U;
    if (!ds.unite(pars_[i].node, keep_right ? pars_[i].right : pars_[i].left)) return false;
  }
  return true;
}

Switchings enumerate_switchings(const Net& n) { return Switchings(n); }

std::size_t par_count(const Net& n) {
  std::size_t p = to_one_sided(n.dom(), true).par_count() + to_one_sided(n.cod(), false).par_count();
  for (const auto& s : n.support()) p += to_one_sided(s.type, true).par_count();
  return p;
}

bool is_correct(const Net& n) {
  Switchings sw(n);
  for (std::uint64_t k = 0; k < sw.size(); ++k) {
    if (!sw.is_tree(k)) return false;
  }
  return true;
}

std::optional<SwitchGraph> first_failing_switching(const Net& n) {
  Switchings sw(n);
  for (std::uint64_t k = 0; k < sw.size(); ++k) {
    if (!sw.is_tree(k)) return sw.at(k);
  }
  return std::nullopt;
}

}  // namespace smcnets
