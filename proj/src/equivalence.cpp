#include "smcnets/equivalence.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>

#include "smcnets/correctness.hpp"
#include "smcnets/errors.hpp"
#include "smcnets/translate.hpp"

namespace smcnets {

std::vector<Net> rewire_moves(const Net& n) {
  if (!is_correct(n)) throw Error("rewire_moves: net is not correct");
  std::vector<PortRef> targets;
  for (const PortInfo& p : n.ports()) {
    if (p.side == Side::Target) targets.push_back(p.ref);
  }
  std::vector<Net> out;
  for (const auto& [src, tgt] : n.linking()) {
    if (n.label(src) != kUnitLabel) continue;
    for (const PortRef& t : targets) {
      if (t == tgt) continue;
      Net moved = n.with_edge(src, t);
      if (is_correct(moved)) out.push_back(std::move(moved));
    }
  }
  return out;
}

bool RewiringOrbit::contains(const Net& n) const { return members.count(support_canonical_key(n)) > 0; }

namespace {

// Breadth-first rewiring closure; stops early once `stop` holds for a key.
RewiringOrbit explore(const Net& start, const std::function<bool(const std::string&)>& stop) {
  RewiringOrbit orbit;
  std::deque<Net> queue;
  std::string key = support_canonical_key(start);
  orbit.members.emplace(key, start);
  if (stop && stop(key)) return orbit;
  queue.push_back(start);
  while (!queue.empty()) {
    Net cur = std::move(queue.front());
    queue.pop_front();
    for (Net& next : rewire_moves(cur)) {
      std::string k = support_canonical_key(next);
      if (orbit.members.count(k) != 0) continue;
      orbit.members.emplace(k, next);
      if (stop && stop(k)) return orbit;
      queue.push_back(std::move(next));
    }
  }
  return orbit;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

}  // namespace

RewiringOrbit explore_rewiring(const Net& start) {
  if (!is_correct(start)) throw Error("explore_rewiring: net is not correct");
  return explore(start, {});
}

std::uint64_t rewiring_orbit_bound(const Net& n) {
  std::uint64_t targets = 0;
  for (const PortInfo& p : n.ports()) {
    if (p.side == Side::Target) ++targets;
  }
  std::uint64_t bound = 1;
  for (const auto& [src, tgt] : n.linking()) {
    (void)tgt;
    if (n.label(src) == kUnitLabel) bound = saturating_mul(bound, targets);
  }
  std::map<std::string, std::uint64_t> multiplicity;
  for (const auto& s : n.support()) ++multiplicity[s.label];
  for (const auto& [label, m] : multiplicity) {
    (void)label;
    for (std::uint64_t i = 2; i <= m; ++i) bound = saturating_mul(bound, i);
  }
  return bound;
}

bool nets_equal(const Net& f, const Net& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod()) {
    throw TypeError("nets_equal: arity mismatch " + to_string(f.dom()) + " -> " + to_string(f.cod()) +
                    " vs " + to_string(g.dom()) + " -> " + to_string(g.cod()));
  }
  if (!is_correct(f) || !is_correct(g)) throw Error("nets_equal: both nets must be correct");
  // Rewiring never touches the support or sort-labelled edges.
  std::vector<std::string> fl = f.support_labels();
  std::vector<std::string> gl = g.support_labels();
  std::sort(fl.begin(), fl.end());
  std::sort(gl.begin(), gl.end());
  if (fl != gl || f.linking().size() != g.linking().size()) return false;

  const std::string goal = support_canonical_key(g);
  bool found = false;
  explore(f, [&](const std::string& k) {
    found = k == goal;
    return found;
  });
  return found;
}

std::string to_string(const RewriteStep& step) {
  std::ostringstream os;
  os << step.equation << (step.left_to_right ? " (lhs -> rhs)" : " (rhs -> lhs)") << " at ";
  if (step.position.empty()) {
    os << "root";
  } else {
    for (std::size_t i = 0; i < step.position.size(); ++i) os << (i ? "." : "") << step.position[i];
  }
  os << ": " << to_string(step.result);
  return os.str();
}

namespace {

Term replace_at(const Term& t, const std::vector<std::size_t>& pos, std::size_t depth, const Term& with) {
  if (depth == pos.size()) return with;
  std::vector<Term> kids = t.children();
  kids[pos[depth]] = replace_at(kids[pos[depth]], pos, depth + 1, with);
  return t.with_children(std::move(kids));
}

void collect_rewrites(const Term& root, const Term& here, std::vector<std::size_t>& pos, const Theory& th,
                      std::vector<RewriteStep>& out) {
  for (const Equation& eq : th.equations) {
    for (bool ltr : {true, false}) {
      const Term& from = ltr ? eq.lhs : eq.rhs;
      const Term& to = ltr ? eq.rhs : eq.lhs;
      if (here == from) {
        Term result = replace_at(root, pos, 0, to);
        infer_type(result, th.signature);
        out.push_back({eq.name, ltr, pos, std::move(result)});
      }
    }
  }
  for (std::size_t i = 0; i < here.children().size(); ++i) {
    pos.push_back(i);
    collect_rewrites(root, here.children()[i], pos, th, out);
    pos.pop_back();
  }
}

struct SearchNode {
  Term term;
  std::optional<std::size_t> parent;
  std::optional<RewriteStep> step;  // parent --step--> term
};

struct SearchSide {
  std::vector<SearchNode> nodes;
  std::map<Term, std::size_t> index;
  std::map<std::string, std::size_t> by_key;
  std::vector<std::size_t> frontier;
  std::size_t level = 0;
};

}  // namespace

std::vector<RewriteStep> rewrites(const Term& t, const Theory& th) {
  std::vector<RewriteStep> out;
  std::vector<std::size_t> pos;
  collect_rewrites(t, t, pos, th, out);
  return out;
}

SearchResult theory_equal_bounded(const Term& t1, const Term& t2, const Theory& th, std::size_t depth) {
  Arity a1 = infer_type(t1, th.signature);
  Arity a2 = infer_type(t2, th.signature);
  if (a1 != a2) {
    throw TypeError("terms have different arities: " + to_string(a1) + " vs " + to_string(a2));
  }

  std::map<Term, std::string> key_cache;
  auto key_of = [&](const Term& t) -> const std::string& {
    auto it = key_cache.find(t);
    if (it != key_cache.end()) return it->second;
    std::string k = explore_rewiring(translate(t, th.signature)).min_key();
    return key_cache.emplace(t, std::move(k)).first->second;
  };

  SearchSide fwd, bwd;
  auto seed = [&](SearchSide& side, const Term& t) {
    side.nodes.push_back({t, std::nullopt, std::nullopt});
    side.index.emplace(t, 0);
    side.by_key.emplace(key_of(t), 0);
    side.frontier.push_back(0);
  };
  seed(fwd, t1);
  seed(bwd, t2);

  auto build = [&](std::size_t f_node, std::size_t b_node) {
    SearchResult r{SearchResult::Verdict::Equal, {}, fwd.nodes.size() + bwd.nodes.size()};
    for (std::optional<std::size_t> n = f_node; fwd.nodes[*n].parent; n = fwd.nodes[*n].parent) {
      r.trace.push_back(*fwd.nodes[*n].step);
    }
    std::reverse(r.trace.begin(), r.trace.end());
    for (std::optional<std::size_t> n = b_node; bwd.nodes[*n].parent; n = bwd.nodes[*n].parent) {
      RewriteStep s = *bwd.nodes[*n].step;
      s.left_to_right = !s.left_to_right;
      s.result = bwd.nodes[*bwd.nodes[*n].parent].term;
      r.trace.push_back(std::move(s));
    }
    return r;
  };

  if (auto hit = bwd.by_key.find(key_of(t1)); hit != bwd.by_key.end()) return build(0, hit->second);

  while (fwd.level + bwd.level < depth && (!fwd.frontier.empty() || !bwd.frontier.empty())) {
    bool forward = !fwd.frontier.empty() && (bwd.frontier.empty() || fwd.frontier.size() <= bwd.frontier.size());
    SearchSide& side = forward ? fwd : bwd;
    SearchSide& other = forward ? bwd : fwd;
    std::vector<std::size_t> next;
    for (std::size_t id : side.frontier) {
      Term cur = side.nodes[id].term;
      for (RewriteStep& step : rewrites(cur, th)) {
        if (side.index.count(step.result) != 0) continue;
        std::size_t nid = side.nodes.size();
        Term result = step.result;
        side.nodes.push_back({result, id, std::move(step)});
        side.index.emplace(result, nid);
        const std::string& k = key_of(result);
        side.by_key.emplace(k, nid);
        if (auto hit = other.by_key.find(k); hit != other.by_key.end()) {
          return forward ? build(nid, hit->second) : build(hit->second, nid);
        }
        next.push_back(nid);
      }
    }
    side.frontier = std::move(next);
    ++side.level;
  }
  return {SearchResult::Verdict::NotFoundWithinBound, {}, fwd.nodes.size() + bwd.nodes.size()};
}

}  // namespace smcnets
