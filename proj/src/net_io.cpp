#include "smcnets/net_io.hpp"

#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "smcnets/errors.hpp"

namespace smcnets {

using ojson = nlohmann::ordered_json;

namespace {

ojson ref_to_json(const PortRef& p) {
  ojson j;
  switch (p.region.kind) {
    case RegionKind::Dom: j["region"] = "dom"; break;
    case RegionKind::Cod: j["region"] = "cod"; break;
    case RegionKind::Sup: j["region"] = ojson{{"sup", p.region.index}}; break;
  }
  j["path"] = p.path.str();
  return j;
}

PortRef ref_from_json(const ojson& j) {
  if (!j.is_object() || !j.contains("region") || !j.contains("path") || !j["path"].is_string()) {
    throw TypeError("port reference must be {\"region\": ..., \"path\": \"...\"}");
  }
  const ojson& r = j["region"];
  Region region;
  if (r.is_string() && r.get<std::string>() == "dom") {
    region = Region::dom();
  } else if (r.is_string() && r.get<std::string>() == "cod") {
    region = Region::cod();
  } else if (r.is_object() && r.contains("sup") && r["sup"].is_number_unsigned()) {
    region = Region::sup(r["sup"].get<std::size_t>());
  } else {
    throw TypeError("bad region " + r.dump());
  }
  return {region, Path(j["path"].get<std::string>())};
}

}  // namespace

std::string net_to_json(const Net& n) {
  ojson j;
  j["dom"] = to_string(n.dom());
  j["cod"] = to_string(n.cod());
  j["support"] = n.support_labels();
  ojson edges = ojson::array();
  for (const auto& [s, t] : n.linking()) edges.push_back(ojson::array({ref_to_json(s), ref_to_json(t)}));
  j["edges"] = std::move(edges);
  return j.dump();
}

Net net_from_json(std::string_view text, const Signature* sig) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 1, e.byte);
  }
  for (const char* key : {"dom", "cod", "support", "edges"}) {
    if (!j.contains(key)) throw TypeError(std::string("net JSON lacks \"") + key + "\"");
  }
  auto formula = [&](const char* key) {
    std::string s = j[key].get<std::string>();
    return sig ? parse_formula(s, sig->sorts()) : parse_formula_open(s);
  };
  Formula dom = formula("dom");
  Formula cod = formula("cod");
  std::vector<SupportItem> support;
  for (const auto& label : j["support"]) {
    if (sig == nullptr) throw TypeError("a net with nonempty support needs a theory");
    support.push_back(support_item(label.get<std::string>(), *sig));
  }
  Net::Linking linking;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw TypeError("each edge must be a [source, target] pair");
    PortRef s = ref_from_json(e[0]);
    if (!linking.emplace(s, ref_from_json(e[1])).second) {
      throw TypeError("port " + to_string(s) + " has two outgoing edges");
    }
  }
  return Net(std::move(dom), std::move(cod), std::move(support), std::move(linking));
}

namespace {

std::string node_id(const Region& r, const Path& p) {
  return to_string(r) + "_" + (p.empty() ? std::string("e") : p.str());
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string net_to_dot(const Net& n) {
  std::ostringstream os;
  os << "digraph net {\n  node [shape=plaintext];\n";
  auto cluster = [&](const Region& r, const std::string& title) {
    const Formula& f = n.region_formula(r);
    os << "  subgraph cluster_" << to_string(r) << " {\n    label=\"" << escape(title + ": " + to_string(f))
       << "\";\n";
    std::function<void(const Formula&, const Path&, Polarity)> walk = [&](const Formula& g, const Path& p,
                                                                           Polarity pol) {
      std::string label;
      switch (g.kind()) {
        case Formula::Kind::Atom:
        case Formula::Kind::Unit:
          label = g.label() + (pol == Polarity::Positive ? "+" : "-");
          break;
        case Formula::Kind::Tensor: label = "*"; break;
        case Formula::Kind::Hom: label = "-o"; break;
      }
      os << "    " << node_id(r, p) << " [label=\"" << escape(label) << "\"];\n";
      if (g.is_leaf()) return;
      Polarity left_pol = g.kind() == Formula::Kind::Hom ? flip(pol) : pol;
      walk(g.left(), p.left(), left_pol);
      walk(g.right(), p.right(), pol);
      os << "    " << node_id(r, p) << " -> " << node_id(r, p.left()) << " [dir=none, color=gray];\n";
      os << "    " << node_id(r, p) << " -> " << node_id(r, p.right()) << " [dir=none, color=gray];\n";
    };
    walk(f, Path::root(), Polarity::Positive);
    os << "  }\n";
  };
  cluster(Region::dom(), "dom");
  cluster(Region::cod(), "cod");
  for (std::size_t i = 0; i < n.support().size(); ++i) cluster(Region::sup(i), n.support()[i].label);
  for (const auto& [s, t] : n.linking()) {
    os << "  " << node_id(s.region, s.path) << " -> " << node_id(t.region, t.path);
    os << (n.label(s) == kUnitLabel ? " [style=dotted];\n" : " [style=solid];\n");
  }
  os << "}\n";
  return os.str();
}

std::string switching_to_dot(const SwitchGraph& g, const std::vector<std::size_t>* cycle) {
  std::set<std::pair<std::size_t, std::size_t>> hot;
  if (cycle != nullptr) {
    for (std::size_t i = 0; i + 1 < cycle->size(); ++i) {
      std::size_t a = (*cycle)[i], b = (*cycle)[i + 1];
      hot.emplace(std::min(a, b), std::max(a, b));
    }
  }
  std::ostringstream os;
  os << "graph switching_" << g.index() << " {\n";
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    const SwitchVertex& x = g.vertices()[v];
    std::string label;
    switch (x.kind) {
      case MLLFormula::Kind::PosAtom: label = x.label; break;
      case MLLFormula::Kind::NegAtom: label = "~" + x.label; break;
      case MLLFormula::Kind::One: label = "1"; break;
      case MLLFormula::Kind::Bot: label = "bot"; break;
      case MLLFormula::Kind::Tensor: label = "*"; break;
      case MLLFormula::Kind::Par: label = "par"; break;
    }
    os << "  v" << v << " [label=\"" << escape(to_string(x.region) + "." + x.path.display() + " " + label)
       << "\"];\n";
  }
  for (const auto& e : g.edges()) {
    bool on_cycle = hot.count({std::min(e.a, e.b), std::max(e.a, e.b)}) != 0;
    os << "  v" << e.a << " -- v" << e.b << " [";
    if (e.kind == SwitchEdge::Kind::Link) os << (e.unit ? "style=dotted, " : "style=solid, ");
    os << (on_cycle ? "color=red, penwidth=2" : e.kind == SwitchEdge::Kind::Tree ? "color=gray" : "color=black");
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace smcnets
