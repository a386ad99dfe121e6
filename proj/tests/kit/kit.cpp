#include "kit.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <map>
#include <numeric>

#include "smcnets/signature.hpp"
#include "smcnets/translate.hpp"

#ifndef SMCNETS_THEORY_DIR
#define SMCNETS_THEORY_DIR "theories"
#endif

namespace kit {

using smcnets::PortRef;
using smcnets::Region;
using smcnets::RegionKind;
using FK = Formula::Kind;

std::string theory_path(const std::string& name) { return std::string(SMCNETS_THEORY_DIR) + "/" + name; }

Theory fixture(const std::string& name) { return smcnets::load_theory(theory_path(name)); }

namespace {

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

Formula formula_of_size(Rng& rng, std::size_t size, const std::vector<std::string>& sorts, bool allow_unit) {
  if (size <= 1) {
    if (allow_unit && pick(rng, sorts.size() + 1) == sorts.size()) return Formula::unit();
    return Formula::atom(sorts[pick(rng, sorts.size())]);
  }
  std::size_t inner = size - 1;  // even
  std::size_t left = 1 + 2 * pick(rng, inner / 2);
  Formula a = formula_of_size(rng, left, sorts, allow_unit);
  Formula b = formula_of_size(rng, inner - left, sorts, allow_unit);
  return coin(rng) ? Formula::tensor(a, b) : Formula::hom(a, b);
}

}  // namespace

Formula random_formula(Rng& rng, std::size_t max_size, const std::vector<std::string>& sorts, bool allow_unit) {
  std::size_t odd = (std::max<std::size_t>(max_size, 1) + 1) / 2;
  return formula_of_size(rng, 1 + 2 * pick(rng, odd), sorts, allow_unit);
}

namespace {

using Candidates = std::vector<std::function<Term()>>;

// An invertible structural map out of `a` together with its inverse.
std::optional<std::pair<Term, Term>> invertible_step(Rng& rng, const Formula& a) {
  std::vector<std::pair<Term, Term>> options;
  options.emplace_back(Term::lunit_inv(a), Term::lunit(a));
  options.emplace_back(Term::runit_inv(a), Term::runit(a));
  if (a.kind() == FK::Tensor) {
    const Formula& l = a.left();
    const Formula& r = a.right();
    options.emplace_back(Term::sym(l, r), Term::sym(r, l));
    if (l.kind() == FK::Unit) options.emplace_back(Term::lunit(r), Term::lunit_inv(r));
    if (r.kind() == FK::Unit) options.emplace_back(Term::runit(l), Term::runit_inv(l));
    if (r.kind() == FK::Tensor) {
      options.emplace_back(Term::assoc(l, r.left(), r.right()), Term::assoc_inv(l, r.left(), r.right()));
    }
    if (l.kind() == FK::Tensor) {
      options.emplace_back(Term::assoc_inv(l.left(), l.right(), r), Term::assoc(l.left(), l.right(), r));
    }
  }
  return options[pick(rng, options.size())];
}

Term step_once(Rng& rng, const Formula& x, const Signature& sig, int context_depth) {
  Candidates c;
  auto small_leaf = [&]() {
    std::vector<std::string> sorts(sig.sorts().begin(), sig.sorts().end());
    return formula_of_size(rng, 1, sorts, true);
  };
  c.push_back([&] { return Term::lunit_inv(x); });
  c.push_back([&] { return Term::runit_inv(x); });
  c.push_back([&] { return Term::coeval(x, small_leaf()); });
  for (const auto& [name, arity] : sig.ops()) {
    if (arity.source == x) {
      std::string op = name;
      // Generators weighted up.
      for (int i = 0; i < 3; ++i) c.push_back([op] { return Term::gen(op); });
    }
  }
  if (x.kind() == FK::Tensor) {
    const Formula& a = x.left();
    const Formula& b = x.right();
    c.push_back([&] { return invertible_step(rng, x)->first; });
    if (a.kind() == FK::Hom && a.left() == b) {
      for (int i = 0; i < 2; ++i) c.push_back([&] { return Term::eval(a.left(), a.right()); });
    }
    if (context_depth > 0) {
      c.push_back([&] { return Term::tensor(step_once(rng, a, sig, context_depth - 1), Term::id(b)); });
      c.push_back([&] { return Term::tensor(Term::id(a), step_once(rng, b, sig, context_depth - 1)); });
    }
  }
  if (x.kind() == FK::Hom && context_depth > 0) {
    const Formula& a = x.left();
    const Formula& b = x.right();
    c.push_back([&] { return Term::hom(Term::id(a), step_once(rng, b, sig, context_depth - 1)); });
    c.push_back([&] {
      auto [s, inv] = *invertible_step(rng, a);
      (void)s;
      return Term::hom(inv, Term::id(b));
    });
  }
  return c[pick(rng, c.size())]();
}

}  // namespace

Term random_step(Rng& rng, const Formula& from, const Signature& sig, int context_depth, std::size_t cap) {
  Term best = step_once(rng, from, sig, context_depth);
  for (int attempt = 0; attempt < 16; ++attempt) {
    if (smcnets::infer_type(best, sig).target.size() <= cap) return best;
    best = step_once(rng, from, sig, context_depth);
  }
  return best;
}

Term random_chain(Rng& rng, const Formula& from, const Signature& sig, int steps, std::size_t cap) {
  Term t = random_step(rng, from, sig, 2, cap);
  for (int i = 1; i < steps; ++i) {
    Formula cod = smcnets::infer_type(t, sig).target;
    t = Term::comp(random_step(rng, cod, sig, 2, cap), t);
  }
  return t;
}

Term random_term(Rng& rng, const Signature& sig, int depth) {
  std::vector<std::string> sorts(sig.sorts().begin(), sig.sorts().end());
  auto leaf = [&]() -> Term {
    auto f = [&] { return formula_of_size(rng, coin(rng, 0.7) ? 1 : 3, sorts, true); };
    switch (pick(rng, 11)) {
      case 0:
      case 1:
      case 2: {
        std::size_t i = pick(rng, sig.op_order().size());
        return Term::gen(sig.op_order()[i]);
      }
      case 3: return Term::id(f());
      case 4: return Term::sym(f(), f());
      case 5: return coin(rng) ? Term::assoc(f(), f(), f()) : Term::assoc_inv(f(), f(), f());
      case 6: return coin(rng) ? Term::lunit(f()) : Term::lunit_inv(f());
      case 7: return coin(rng) ? Term::runit(f()) : Term::runit_inv(f());
      case 8:
      case 9: return Term::eval(f(), f());
      default: return Term::coeval(f(), f());
    }
  };
  if (depth <= 1) return leaf();
  switch (pick(rng, 5)) {
    case 0: return leaf();
    case 1: return Term::tensor(random_term(rng, sig, depth - 1), random_term(rng, sig, depth - 1));
    case 2: return Term::hom(random_term(rng, sig, depth - 1), random_term(rng, sig, depth - 1));
    default: {
      Term t = random_term(rng, sig, depth - 1);
      Formula cod = smcnets::infer_type(t, sig).target;
      Term s = random_step(rng, cod, sig, std::max(0, depth - 3), 11);
      if (s.depth() >= static_cast<std::size_t>(depth)) return t;
      return Term::comp(s, t);
    }
  }
}

Net random_net_from(Rng& rng, const Formula& from, const Signature& sig, int steps, std::size_t cap) {
  return smcnets::translate(random_chain(rng, from, sig, steps, cap), sig);
}

// ---- ports, independently of the library's side computation ----

namespace {

struct OPort {
  PortRef ref;
  std::string label;
  bool source;
};

void collect_ports(const Formula& f, const Region& r, std::string path, bool positive, std::vector<OPort>& out) {
  if (f.is_leaf()) {
    bool cod = r.kind == RegionKind::Cod;
    out.push_back({{r, smcnets::Path(path)}, f.label(), positive != cod});
    return;
  }
  collect_ports(f.left(), r, path + "L", f.kind() == FK::Hom ? !positive : positive, out);
  collect_ports(f.right(), r, path + "R", positive, out);
}

std::vector<Region> regions(const Net& n) {
  std::vector<Region> rs{Region::dom(), Region::cod()};
  for (std::size_t i = 0; i < n.support().size(); ++i) rs.push_back(Region::sup(i));
  return rs;
}

std::vector<OPort> all_ports(const Net& n) {
  std::vector<OPort> out;
  for (const Region& r : regions(n)) collect_ports(n.region_formula(r), r, "", true, out);
  return out;
}

}  // namespace

Net random_prenet(Rng& rng, std::size_t max_size) {
  for (;;) {
    Net bare(random_formula(rng, max_size), random_formula(rng, max_size), {}, {});
    std::vector<OPort> ps = all_ports(bare);
    std::map<std::string, std::vector<PortRef>> src, tgt;
    std::vector<PortRef> targets, unit_sources;
    for (const OPort& p : ps) {
      if (!p.source) targets.push_back(p.ref);
      if (p.label == smcnets::kUnitLabel) {
        if (p.source) unit_sources.push_back(p.ref);
        continue;
      }
      (p.source ? src : tgt)[p.label].push_back(p.ref);
    }
    bool balanced = true;
    for (const auto& [label, s] : src) balanced = balanced && tgt[label].size() == s.size();
    for (const auto& [label, t] : tgt) balanced = balanced && src[label].size() == t.size();
    if (!balanced || (targets.empty() && !unit_sources.empty())) continue;
    Net::Linking l;
    for (auto& [label, s] : src) {
      std::vector<PortRef> t = tgt[label];
      std::shuffle(t.begin(), t.end(), rng);
      for (std::size_t i = 0; i < s.size(); ++i) l.emplace(s[i], t[i]);
    }
    for (const PortRef& u : unit_sources) l.emplace(u, targets[pick(rng, targets.size())]);
    return Net(bare.dom(), bare.cod(), {}, std::move(l));
  }
}

// ---- switching oracle ----

namespace {

struct OGraph {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> fixed;
  std::vector<std::array<std::pair<std::size_t, std::size_t>, 2>> pars;  // left and right premise edge
};

OGraph build_graph(const Net& n) {
  OGraph g;
  std::map<PortRef, std::size_t> leaf_vertex;
  std::function<std::size_t(const Formula&, const Region&, const std::string&, bool)> walk =
      [&](const Formula& f, const Region& r, const std::string& path, bool positive) -> std::size_t {
    std::size_t v = g.vertices++;
    if (f.is_leaf()) {
      leaf_vertex[{r, smcnets::Path(path)}] = v;
      return v;
    }
    bool is_hom = f.kind() == FK::Hom;
    std::size_t l = walk(f.left(), r, path + "L", is_hom ? !positive : positive);
    std::size_t rr = walk(f.right(), r, path + "R", positive);
    // A hom is a par when positive, a tensor is a par when negative.
    bool par = is_hom == positive;
    if (par) {
      g.pars.push_back({std::make_pair(v, l), std::make_pair(v, rr)});
    } else {
      g.fixed.emplace_back(v, l);
      g.fixed.emplace_back(v, rr);
    }
    return v;
  };
  for (const Region& r : regions(n)) walk(n.region_formula(r), r, "", r.kind == RegionKind::Cod);
  for (const auto& [s, t] : n.linking()) g.fixed.emplace_back(leaf_vertex.at(s), leaf_vertex.at(t));
  return g;
}

bool spanning_tree(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (edges.size() + 1 != vertices) return false;
  std::vector<std::vector<std::size_t>> adj(vertices);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(vertices, false);
  std::deque<std::size_t> q{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!q.empty()) {
    std::size_t v = q.front();
    q.pop_front();
    for (std::size_t w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        q.push_back(w);
      }
    }
  }
  return reached == vertices;
}

}  // namespace

std::size_t oracle_par_count(const Net& n) { return build_graph(n).pars.size(); }

bool oracle_is_correct(const Net& n) {
  OGraph g = build_graph(n);
  std::uint64_t total = std::uint64_t{1} << g.pars.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    auto edges = g.fixed;
    for (std::size_t i = 0; i < g.pars.size(); ++i) edges.push_back(g.pars[i][(mask >> i) & 1]);
    if (!spanning_tree(g.vertices, edges)) return false;
  }
  return true;
}

// ---- composition oracle ----

Net oracle_compose(const Net& f, const Net& g) {
  // Node ids: 0 = in f, 1 = in g.
  using Node = std::pair<int, PortRef>;
  std::vector<OPort> fp = all_ports(f), gp = all_ports(g);
  std::vector<Node> nodes;
  std::map<Node, std::size_t> id;
  std::map<Node, bool> source_in_own_net;
  for (const OPort& p : fp) {
    id[{0, p.ref}] = nodes.size();
    nodes.push_back({0, p.ref});
    source_in_own_net[{0, p.ref}] = p.source;
  }
  for (const OPort& p : gp) {
    id[{1, p.ref}] = nodes.size();
    nodes.push_back({1, p.ref});
    source_in_own_net[{1, p.ref}] = p.source;
  }
  std::size_t n = nodes.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (const auto& [s, t] : f.linking()) reach[id[{0, s}]][id[{0, t}]] = true;
  for (const auto& [s, t] : g.linking()) reach[id[{1, s}]][id[{1, t}]] = true;
  auto is_interface = [](const Node& x) {
    return (x.first == 0 && x.second.region.kind == RegionKind::Cod) ||
           (x.first == 1 && x.second.region.kind == RegionKind::Dom);
  };
  // Arriving at an interface port as a target continues from its twin.
  for (const OPort& p : fp) {
    if (p.ref.region.kind != RegionKind::Cod) continue;
    Node here{0, p.ref};
    Node twin{1, PortRef{Region::dom(), p.ref.path}};
    if (source_in_own_net[here]) {
      reach[id[twin]][id[here]] = true;
    } else {
      reach[id[here]][id[twin]] = true;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (reach[k][j]) reach[i][j] = true;
      }
    }
  }
  std::size_t shift = g.support().size();
  auto rename = [&](const Node& x) -> PortRef {
    Region r = x.second.region;
    if (r.kind == RegionKind::Sup && x.first == 0) r = Region::sup(r.index + shift);
    return {r, x.second.path};
  };
  Net::Linking l;
  for (std::size_t i = 0; i < n; ++i) {
    if (is_interface(nodes[i]) || !source_in_own_net[nodes[i]]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (reach[i][j] && !is_interface(nodes[j]) && !source_in_own_net[nodes[j]]) {
        l.emplace(rename(nodes[i]), rename(nodes[j]));
      }
    }
  }
  std::vector<smcnets::SupportItem> support = g.support();
  support.insert(support.end(), f.support().begin(), f.support().end());
  return Net(f.dom(), g.cod(), std::move(support), std::move(l));
}

// ---- support isomorphism oracle ----

bool oracle_support_iso(const Net& f, const Net& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod() || f.support().size() != g.support().size()) return false;
  std::size_t k = f.support().size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // f's position i plays g's position perm[i].
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) ok = f.support()[i] == g.support()[perm[i]];
    if (!ok) continue;
    auto move = [&](const PortRef& p) {
      if (p.region.kind != RegionKind::Sup) return p;
      return PortRef{Region::sup(perm[p.region.index]), p.path};
    };
    Net::Linking l;
    for (const auto& [s, t] : f.linking()) l.emplace(move(s), move(t));
    if (l == g.linking()) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// ---- rewiring oracle ----

std::size_t unit_edge_count(const Net& n) {
  std::size_t c = 0;
  for (const auto& [s, t] : n.linking()) {
    (void)t;
    if (n.label(s) == smcnets::kUnitLabel) ++c;
  }
  return c;
}

std::vector<Net> oracle_rewiring_component(const Net& n) {
  std::vector<PortRef> units, targets;
  for (const OPort& p : all_ports(n)) {
    if (!p.source) targets.push_back(p.ref);
  }
  for (const auto& [s, t] : n.linking()) {
    (void)t;
    if (n.label(s) == smcnets::kUnitLabel) units.push_back(s);
  }
  // Every assignment of unit sources to targets, as a mixed-radix number.
  std::map<std::vector<std::size_t>, Net> correct;
  std::vector<std::size_t> digits(units.size(), 0);
  for (;;) {
    Net m = n;
    for (std::size_t i = 0; i < units.size(); ++i) m = m.with_edge(units[i], targets[digits[i]]);
    if (oracle_is_correct(m)) correct.emplace(digits, m);
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == targets.size()) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  std::vector<std::size_t> start;
  for (const PortRef& u : units) {
    start.push_back(std::find(targets.begin(), targets.end(), n.linking().at(u)) - targets.begin());
  }
  std::set<std::vector<std::size_t>> seen{start};
  std::deque<std::vector<std::size_t>> q{start};
  while (!q.empty()) {
    auto cur = q.front();
    q.pop_front();
    for (const auto& [d, m] : correct) {
      (void)m;
      std::size_t diff = 0;
      for (std::size_t i = 0; i < d.size(); ++i) diff += d[i] != cur[i];
      if (diff == 1 && seen.insert(d).second) q.push_back(d);
    }
  }
  std::vector<Net> out;
  for (const auto& d : seen) out.push_back(correct.at(d));
  return out;
}

bool oracle_nets_equal(const Net& f, const Net& g) {
  for (const Net& m : oracle_rewiring_component(f)) {
    if (oracle_support_iso(m, g)) return true;
  }
  return false;
}

}  // namespace kit
