#include "smcnets/prenet.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "smcnets/errors.hpp"

namespace smcnets {

std::string to_string(const Region& r) {
  switch (r.kind) {
    case RegionKind::Dom: return "dom";
    case RegionKind::Cod: return "cod";
    case RegionKind::Sup: return "sup" + std::to_string(r.index);
  }
  return "?";
}

std::string to_string(const PortRef& p) { return to_string(p.region) + "." + p.path.display(); }

Net::Net(Formula dom, Formula cod, std::vector<SupportItem> support, Linking linking)
    : dom_(std::move(dom)), cod_(std::move(cod)), support_(std::move(support)), linking_(std::move(linking)) {
  for (const auto& [src, tgt] : linking_) {
    if (!has_port(src)) throw TypeError("edge source " + to_string(src) + " is not a port");
    if (!has_port(tgt)) throw TypeError("edge target " + to_string(tgt) + " is not a port");
    if (side(src) != Side::Source) throw TypeError("edge source " + to_string(src) + " is target-side");
    if (side(tgt) != Side::Target) throw TypeError("edge target " + to_string(tgt) + " is source-side");
    const std::string& ls = label(src);
    if (ls != kUnitLabel && ls != label(tgt)) {
      throw TypeError("edge " + to_string(src) + " -> " + to_string(tgt) + " joins sort " + ls +
                      " to " + label(tgt));
    }
  }
}

std::vector<std::string> Net::support_labels() const {
  std::vector<std::string> out;
  out.reserve(support_.size());
  for (const auto& s : support_) out.push_back(s.label);
  return out;
}

const Formula& Net::region_formula(const Region& r) const {
  switch (r.kind) {
    case RegionKind::Dom: return dom_;
    case RegionKind::Cod: return cod_;
    case RegionKind::Sup:
      if (r.index >= support_.size()) throw TypeError("no support element " + std::to_string(r.index));
      return support_[r.index].type;
  }
  return dom_;
}

bool Net::has_port(const PortRef& p) const {
  if (p.region.kind == RegionKind::Sup && p.region.index >= support_.size()) return false;
  if (p.region.kind != RegionKind::Sup && p.region.index != 0) return false;
  return region_formula(p.region).has_leaf(p.path);
}

Side Net::side(const PortRef& p) const {
  Polarity pol = polarity_at(region_formula(p.region), p.path);
  bool positive = pol == Polarity::Positive;
  return region_negated(p.region) == positive ? Side::Source : Side::Target;
}

const std::string& Net::label(const PortRef& p) const { return region_formula(p.region).at(p.path).label(); }

std::vector<PortInfo> Net::ports() const {
  std::vector<PortInfo> out;
  auto add = [&](const Region& r) {
    for (const Port& p : smcnets::ports(region_formula(r))) {
      bool positive = p.polarity == Polarity::Positive;
      out.push_back({{r, p.path}, p.label, region_negated(r) == positive ? Side::Source : Side::Target});
    }
  };
  add(Region::dom());
  add(Region::cod());
  for (std::size_t i = 0; i < support_.size(); ++i) add(Region::sup(i));
  return out;
}

Net Net::with_edge(const PortRef& source, const PortRef& target) const {
  Linking l = linking_;
  l[source] = target;
  return Net(dom_, cod_, support_, std::move(l));
}

bool Net::operator==(const Net& other) const {
  return dom_ == other.dom_ && cod_ == other.cod_ && support_labels() == other.support_labels() &&
         linking_ == other.linking_;
}

void check_sort_bijection(const Net& n) {
  std::map<PortRef, int> hits;
  for (const PortInfo& p : n.ports()) {
    if (p.is_unit()) continue;
    if (p.side == Side::Source && n.linking().count(p.ref) == 0) {
      throw TypeError("sort port " + to_string(p.ref) + " has no edge");
    }
    if (p.side == Side::Target) hits[p.ref] = 0;
  }
  for (const auto& [src, tgt] : n.linking()) {
    if (n.label(src) == kUnitLabel) continue;
    if (++hits[tgt] > 1) throw TypeError("sort port " + to_string(tgt) + " is hit twice");
  }
  for (const auto& [ref, count] : hits) {
    if (count == 0) throw TypeError("sort port " + to_string(ref) + " is never hit");
  }
}

SupportItem support_item(const std::string& op, const Signature& sig) { return {op, ty(op, sig)}; }

Net identity_net(const Formula& a) {
  Net::Linking l;
  for (const Port& p : ports(a)) {
    PortRef d{Region::dom(), p.path};
    PortRef c{Region::cod(), p.path};
    if (p.polarity == Polarity::Positive) {
      l.emplace(d, c);
    } else {
      l.emplace(c, d);
    }
  }
  return Net(a, a, {}, std::move(l));
}

Net compose(const Net& f, const Net& g) {
  if (f.cod() != g.dom()) {
    throw TypeError("cannot compose: codomain " + to_string(f.cod()) + " differs from domain " +
                    to_string(g.dom()));
  }
  const std::size_t shift = g.support().size();
  // f's codomain and g's domain are the shared interface b.
  auto from_f = [&](const PortRef& p) -> PortRef {
    if (p.region.kind == RegionKind::Sup) return {Region::sup(p.region.index + shift), p.path};
    return p;
  };
  auto follow = [&](bool in_f, PortRef at) -> std::optional<PortRef> {
    std::set<std::pair<bool, Path>> seen;
    for (;;) {
      const Net& net = in_f ? f : g;
      auto it = net.linking().find(at);
      if (it == net.linking().end()) return std::nullopt;
      const PortRef& dst = it->second;
      bool interface = in_f ? dst.region.kind == RegionKind::Cod : dst.region.kind == RegionKind::Dom;
      if (!interface) return in_f ? from_f(dst) : dst;
      in_f = !in_f;
      if (!seen.emplace(in_f, dst.path).second) return std::nullopt;
      at = {in_f ? Region::cod() : Region::dom(), dst.path};
    }
  };

  Net::Linking l;
  for (const auto& [src, tgt] : f.linking()) {
    (void)tgt;
    if (src.region.kind == RegionKind::Cod) continue;
    if (auto dst = follow(true, src)) l.emplace(from_f(src), *dst);
  }
  for (const auto& [src, tgt] : g.linking()) {
    (void)tgt;
    if (src.region.kind == RegionKind::Dom) continue;
    if (auto dst = follow(false, src)) l.emplace(src, *dst);
  }
  std::vector<SupportItem> support = g.support();
  support.insert(support.end(), f.support().begin(), f.support().end());
  return Net(f.dom(), g.cod(), std::move(support), std::move(l));
}

namespace {

PortRef tensor_side(const PortRef& p, char side, std::size_t shift) {
  if (p.region.kind == RegionKind::Sup) return {Region::sup(p.region.index + shift), p.path};
  return {p.region, Path(std::string(1, side)) / p.path};
}

}  // namespace

Net tensor(const Net& f, const Net& g) {
  Net::Linking l;
  for (const auto& [s, t] : f.linking()) l.emplace(tensor_side(s, 'L', 0), tensor_side(t, 'L', 0));
  const std::size_t shift = f.support().size();
  for (const auto& [s, t] : g.linking()) l.emplace(tensor_side(s, 'R', shift), tensor_side(t, 'R', shift));
  std::vector<SupportItem> support = f.support();
  support.insert(support.end(), g.support().begin(), g.support().end());
  return Net(Formula::tensor(f.dom(), g.dom()), Formula::tensor(f.cod(), g.cod()), std::move(support),
             std::move(l));
}

namespace {

template <typename Remap>
Net::Linking remap_linking(const Net::Linking& in, Remap remap) {
  Net::Linking out;
  for (const auto& [s, t] : in) out.emplace(remap(s), remap(t));
  return out;
}

}  // namespace

Net curry(const Net& f) {
  if (f.dom().kind() != Formula::Kind::Tensor) {
    throw TypeError("curry needs a tensor domain, got " + to_string(f.dom()));
  }
  auto remap = [](const PortRef& p) -> PortRef {
    switch (p.region.kind) {
      case RegionKind::Dom:
        if (p.path[0] == 'L') return {Region::dom(), p.path.drop(1)};
        return {Region::cod(), Path("L") / p.path.drop(1)};
      case RegionKind::Cod:
        return {Region::cod(), Path("R") / p.path};
      case RegionKind::Sup:
        return p;
    }
    return p;
  };
  return Net(f.dom().left(), Formula::hom(f.dom().right(), f.cod()), f.support(),
             remap_linking(f.linking(), remap));
}

Net uncurry(const Net& f) {
  if (f.cod().kind() != Formula::Kind::Hom) {
    throw TypeError("uncurry needs an implication codomain, got " + to_string(f.cod()));
  }
  auto remap = [](const PortRef& p) -> PortRef {
    switch (p.region.kind) {
      case RegionKind::Dom:
        return {Region::dom(), Path("L") / p.path};
      case RegionKind::Cod:
        if (p.path[0] == 'L') return {Region::dom(), Path("R") / p.path.drop(1)};
        return {Region::cod(), p.path.drop(1)};
      case RegionKind::Sup:
        return p;
    }
    return p;
  };
  return Net(Formula::tensor(f.dom(), f.cod().left()), f.cod().right(), f.support(),
             remap_linking(f.linking(), remap));
}

Net permute_support(const Net& n, const std::vector<std::size_t>& perm) {
  const std::size_t k = n.support().size();
  if (perm.size() != k) throw TypeError("permutation size mismatch");
  std::vector<std::size_t> new_index(k, k);
  std::vector<SupportItem> support;
  for (std::size_t pos = 0; pos < k; ++pos) {
    if (perm[pos] >= k || new_index[perm[pos]] != k) throw TypeError("not a permutation");
    new_index[perm[pos]] = pos;
    support.push_back(n.support()[perm[pos]]);
  }
  auto remap = [&](const PortRef& p) -> PortRef {
    if (p.region.kind != RegionKind::Sup) return p;
    return {Region::sup(new_index[p.region.index]), p.path};
  };
  return Net(n.dom(), n.cod(), std::move(support), remap_linking(n.linking(), remap));
}

namespace {

std::string describe_end(const Net& n, const PortRef& p, std::size_t self) {
  switch (p.region.kind) {
    case RegionKind::Dom: return "d" + p.path.str();
    case RegionKind::Cod: return "c" + p.path.str();
    case RegionKind::Sup:
      if (p.region.index == self) return "=" + p.path.str();
      return "s" + n.support()[p.region.index].label + ":" + p.path.str();
  }
  return {};
}

// Invariant colour of each support position: its label plus the shape of
// its incident edges, described without naming other support positions.
std::vector<std::string> support_colours(const Net& n) {
  const std::size_t k = n.support().size();
  std::vector<std::vector<std::string>> incident(k);
  for (const auto& [s, t] : n.linking()) {
    if (s.region.kind == RegionKind::Sup) {
      incident[s.region.index].push_back(">" + s.path.str() + ">" + describe_end(n, t, s.region.index));
    }
    if (t.region.kind == RegionKind::Sup) {
      incident[t.region.index].push_back("<" + t.path.str() + "<" + describe_end(n, s, t.region.index));
    }
  }
  std::vector<std::string> out(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::sort(incident[i].begin(), incident[i].end());
    std::string c = n.support()[i].label + "|";
    for (const auto& e : incident[i]) c += e + ",";
    out[i] = std::move(c);
  }
  return out;
}

std::string encode_ref(const PortRef& p, const std::vector<std::size_t>& new_index) {
  switch (p.region.kind) {
    case RegionKind::Dom: return "d." + p.path.str();
    case RegionKind::Cod: return "c." + p.path.str();
    case RegionKind::Sup: return "s" + std::to_string(new_index[p.region.index]) + "." + p.path.str();
  }
  return {};
}

}  // namespace

std::string support_canonical_key(const Net& n) {
  const std::size_t k = n.support().size();
  std::vector<std::string> colour = support_colours(n);

  // Positions sorted by colour; only permutations inside equal-colour runs
  // need to be tried.
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return colour[a] < colour[b]; });
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  for (std::size_t i = 0; i < k;) {
    std::size_t j = i;
    while (j < k && colour[order[j]] == colour[order[i]]) ++j;
    runs.emplace_back(i, j);
    i = j;
  }

  std::ostringstream head;
  head << to_string(n.dom()) << " -> " << to_string(n.cod()) << " [";
  for (std::size_t i = 0; i < k; ++i) head << (i ? "," : "") << n.support()[order[i]].label;
  head << "] ";

  std::string best;
  bool have_best = false;
  std::vector<std::size_t> new_index(k);
  std::vector<std::string> edges;
  edges.reserve(n.linking().size());
  for (;;) {
    for (std::size_t pos = 0; pos < k; ++pos) new_index[order[pos]] = pos;
    edges.clear();
    for (const auto& [s, t] : n.linking()) edges.push_back(encode_ref(s, new_index) + ">" + encode_ref(t, new_index));
    std::sort(edges.begin(), edges.end());
    std::string enc;
    for (const auto& e : edges) enc += e + ";";
    if (!have_best || enc < best) {
      best = std::move(enc);
      have_best = true;
    }
    // Odometer over the runs.
    std::size_t r = 0;
    for (; r < runs.size(); ++r) {
      auto first = order.begin() + static_cast<std::ptrdiff_t>(runs[r].first);
      auto last = order.begin() + static_cast<std::ptrdiff_t>(runs[r].second);
      if (std::next_permutation(first, last)) break;
    }
    if (r == runs.size()) break;
  }
  return head.str() + best;
}

bool support_iso_equal(const Net& f, const Net& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod()) return false;
  if (f.support().size() != g.support().size() || f.linking().size() != g.linking().size()) return false;
  return support_canonical_key(f) == support_canonical_key(g);
}

}  // namespace smcnets
