#include "smcnets/translate.hpp"

#include <utility>
#include <vector>

#include "smcnets/correctness.hpp"
#include "smcnets/errors.hpp"

namespace smcnets {

namespace {

using Pairs = std::vector<std::pair<PortRef, PortRef>>;

// Pairs up the leaves of `f` found under `from` in one region with the same
// leaves under `to` in another.
void correspond(const Formula& f, const Region& from_region, const Path& from, const Region& to_region,
                const Path& to, Pairs& out) {
  for (const Port& p : ports(f)) out.push_back({{from_region, from / p.path}, {to_region, to / p.path}});
}

// Orients each pair from its source-side end to its target-side end.
Net wire(Formula dom, Formula cod, std::vector<SupportItem> support, const Pairs& pairs) {
  Net bare(std::move(dom), std::move(cod), std::move(support), {});
  Net::Linking l;
  for (const auto& [p, q] : pairs) {
    if (bare.side(p) == Side::Source) {
      l.emplace(p, q);
    } else {
      l.emplace(q, p);
    }
  }
  return Net(bare.dom(), bare.cod(), bare.support(), std::move(l));
}

// Attaches the unit source `orphan` to the first target-side port, codomain
// then domain then support, for which the net is correct.
Net attach_unit(const Net& n, const PortRef& orphan) {
  std::vector<PortInfo> all = n.ports();
  std::vector<PortRef> candidates;
  for (RegionKind kind : {RegionKind::Cod, RegionKind::Dom, RegionKind::Sup}) {
    for (const PortInfo& p : all) {
      if (p.ref.region.kind == kind && p.side == Side::Target) candidates.push_back(p.ref);
    }
  }
  for (const PortRef& target : candidates) {
    Net attempt = n.with_edge(orphan, target);
    if (is_correct(attempt)) return attempt;
  }
  throw Error("no correct attachment for unit port " + to_string(orphan));
}

const Path kRoot;
const Path kL("L");
const Path kR("R");
const Path kLL("LL");
const Path kLR("LR");
const Path kRL("RL");
const Path kRR("RR");

}  // namespace

Net generator_net(const std::string& op, const Signature& sig) {
  const Arity& arity = sig.op(op);
  Pairs pairs;
  correspond(arity.source, Region::dom(), kRoot, Region::sup(0), kL, pairs);
  correspond(arity.target, Region::sup(0), kR, Region::cod(), kRoot, pairs);
  return wire(arity.source, arity.target, {support_item(op, sig)}, pairs);
}

Net structural_net(const Term& t) {
  const auto& a = t.args();
  const Region dom = Region::dom();
  const Region cod = Region::cod();
  Pairs pairs;
  auto arity_of = [&]() { return constant_arity(t); };
  switch (t.kind()) {
    case Term::Kind::Id:
      return identity_net(a[0]);
    case Term::Kind::Assoc:
      correspond(a[0], dom, kL, cod, kLL, pairs);
      correspond(a[1], dom, kRL, cod, kLR, pairs);
      correspond(a[2], dom, kRR, cod, kR, pairs);
      break;
    case Term::Kind::AssocInv:
      correspond(a[0], dom, kLL, cod, kL, pairs);
      correspond(a[1], dom, kLR, cod, kRL, pairs);
      correspond(a[2], dom, kR, cod, kRR, pairs);
      break;
    case Term::Kind::Lunit:
    case Term::Kind::LunitInv:
    case Term::Kind::Runit:
    case Term::Kind::RunitInv: {
      bool left = t.kind() == Term::Kind::Lunit || t.kind() == Term::Kind::LunitInv;
      bool inverse = t.kind() == Term::Kind::LunitInv || t.kind() == Term::Kind::RunitInv;
      const Path& kept = left ? kR : kL;
      if (inverse) {
        correspond(a[0], dom, kRoot, cod, kept, pairs);
      } else {
        correspond(a[0], dom, kept, cod, kRoot, pairs);
      }
      Arity ar = arity_of();
      Net n = wire(ar.source, ar.target, {}, pairs);
      // The inverse's extra unit sits in the codomain, target-side, unlinked.
      if (inverse) return n;
      return attach_unit(n, {dom, left ? kL : kR});
    }
    case Term::Kind::Sym:
      correspond(a[0], dom, kL, cod, kR, pairs);
      correspond(a[1], dom, kR, cod, kL, pairs);
      break;
    case Term::Kind::Eval:
      correspond(a[0], dom, kLL, dom, kR, pairs);
      correspond(a[1], dom, kLR, cod, kRoot, pairs);
      break;
    case Term::Kind::Coeval:
      correspond(a[0], dom, kRoot, cod, kRL, pairs);
      correspond(a[1], cod, kL, cod, kRR, pairs);
      break;
    default:
      throw TypeError("structural_net: '" + to_string(t) + "' is not a structural constant");
  }
  Arity ar = arity_of();
  return wire(ar.source, ar.target, {}, pairs);
}

Net translate(const Term& t, const Signature& sig) {
  switch (t.kind()) {
    case Term::Kind::Gen:
      return generator_net(t.op(), sig);
    case Term::Kind::Comp: {
      Net before = translate(t.children()[1], sig);
      Net after = translate(t.children()[0], sig);
      return compose(before, after);
    }
    case Term::Kind::Tensor:
      return tensor(translate(t.children()[0], sig), translate(t.children()[1], sig));
    case Term::Kind::Hom: {
      // f : a -> b, g : c -> d  gives  (b -o c) -> (a -o d).
      const Term& f = t.children()[0];
      const Term& g = t.children()[1];
      Arity fa = infer_type(f, sig);
      Arity ga = infer_type(g, sig);
      Net step = tensor(identity_net(Formula::hom(fa.target, ga.source)), translate(f, sig));
      step = compose(step, structural_net(Term::eval(fa.target, ga.source)));
      step = compose(step, translate(g, sig));
      return curry(step);
    }
    default:
      for (const Formula& f : t.args()) sig.check_formula(f);
      return structural_net(t);
  }
}

}  // namespace smcnets
