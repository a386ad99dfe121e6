#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "kit.hpp"
#include "smcnets/errors.hpp"
#include "smcnets/prenet.hpp"
#include "smcnets/translate.hpp"

using namespace smcnets;

namespace {
const std::set<std::string> kXY{"x", "y"};
Formula f(const std::string& s) { return parse_formula(s, kXY); }
PortRef dom(const std::string& p) { return {Region::dom(), Path(p)}; }
PortRef cod(const std::string& p) { return {Region::cod(), Path(p)}; }
}  // namespace

TEST_CASE("identity nets") {
  Net id = identity_net(f("(x -o y) * I"));
  Net::Linking expect{{cod("LL"), dom("LL")}, {dom("LR"), cod("LR")}, {dom("R"), cod("R")}};
  CHECK(id.linking() == expect);
  CHECK(id.support().empty());
}

TEST_CASE("prenet validation") {
  Formula x = f("x");
  CHECK_THROWS_AS(Net(x, x, {}, {{cod(""), dom("")}}), TypeError);
  CHECK_THROWS_AS(Net(x, f("y"), {}, {{dom(""), cod("")}}), TypeError);
  CHECK_THROWS_AS(Net(x, x, {}, {{dom("L"), cod("")}}), TypeError);
  CHECK_NOTHROW(Net(f("I"), f("x -o x"), {}, {{dom(""), cod("R")}, {cod("L"), cod("R")}}));
  CHECK_THROWS_AS(check_sort_bijection(Net(f("x * x"), f("x"), {}, {{dom("L"), cod("")}, {dom("R"), cod("")}})),
                  TypeError);
}

TEST_CASE("compose through b = x -o x follows a three-step alternating chain") {
  // The name of id_x, I -> x -o x: cod.L -> cod.R and the unit to cod.R.
  Net name(f("I"), f("x -o x"), {}, {{cod("L"), cod("R")}, {dom(""), cod("R")}});
  Net id = identity_net(f("x -o x"));
  // cod.L -> (g) dom.L -> (f) cod.R -> (g) cod.R
  Net composite = compose(name, id);
  Net::Linking expect{{dom(""), cod("R")}, {cod("L"), cod("R")}};
  CHECK(composite.linking() == expect);
  CHECK(composite == name);
  CHECK(composite == kit::oracle_compose(name, id));
}

TEST_CASE("compose leaves a cycling source unlinked") {
  // dom -> cod.R -> (g) dom.L -> cod.L -> cod.R -> ... never leaves b.
  Net f1(f("x"), f("x -o x"), {}, {{dom(""), cod("R")}, {cod("L"), cod("R")}});
  Net sink(f("x -o x"), f("x -o x"), {}, {{dom("R"), dom("L")}, {cod("L"), cod("R")}});
  Net composite = compose(f1, sink);
  CHECK(composite == kit::oracle_compose(f1, sink));
  CHECK(composite.linking().count(dom("")) == 0);
}

TEST_CASE("compose agrees with the transitive-closure oracle") {
  Theory th = kit::fixture("example.smc");
  kit::Rng rng(101);
  for (int i = 0; i < 150; ++i) {
    Formula a = kit::random_formula(rng, 5);
    Term t1 = kit::random_chain(rng, a, th.signature, 3, 9);
    Formula b = infer_type(t1, th.signature).target;
    Term t2 = kit::random_chain(rng, b, th.signature, 3, 9);
    Net n1 = translate(t1, th.signature);
    Net n2 = translate(t2, th.signature);
    CHECK(compose(n1, n2) == kit::oracle_compose(n1, n2));
  }
}

TEST_CASE("tensor of identities is an identity") {
  kit::Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    Formula a = kit::random_formula(rng, 7);
    Formula b = kit::random_formula(rng, 7);
    CHECK(tensor(identity_net(a), identity_net(b)) == identity_net(Formula::tensor(a, b)));
  }
}

TEST_CASE("curry re-indexes ports") {
  Net n = identity_net(f("x * y"));
  Net c = curry(n);
  CHECK(c.dom() == f("x"));
  CHECK(c.cod() == f("y -o x * y"));
  Net::Linking expect{{dom(""), cod("RL")}, {cod("L"), cod("RR")}};
  CHECK(c.linking() == expect);
  CHECK(uncurry(c) == n);
  CHECK_THROWS_AS(curry(identity_net(f("x -o y"))), TypeError);
  CHECK_THROWS_AS(uncurry(identity_net(f("x"))), TypeError);
}

TEST_CASE("support permutation and canonical keys") {
  Theory th = kit::fixture("example.smc");
  kit::Rng rng(17);
  int multi = 0;
  std::vector<Net> pool;
  for (int i = 0; i < 120; ++i) {
    Net n = translate(kit::random_term(rng, th.signature, 5), th.signature);
    pool.push_back(n);
    std::size_t k = n.support().size();
    if (k < 2) continue;
    ++multi;
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Net p = permute_support(n, perm);
    CHECK(support_canonical_key(p) == support_canonical_key(n));
    CHECK(support_iso_equal(n, p));
    CHECK(kit::oracle_support_iso(n, p));
  }
  CHECK(multi > 20);
  for (std::size_t i = 0; i + 1 < pool.size(); ++i) {
    const Net& a = pool[i];
    const Net& b = pool[i + 1];
    if (a.cod() != b.cod()) continue;
    CHECK(support_iso_equal(a, b) == kit::oracle_support_iso(a, b));
  }
}

TEST_CASE("permute_support moves sup indices") {
  Theory th = kit::fixture("example.smc");
  Net a = translate(parse_term("alpha * beta", th.signature), th.signature);
  Net p = permute_support(a, {1, 0});
  CHECK(p.support_labels() == std::vector<std::string>{"beta", "alpha"});
  CHECK(!(p == a));
  CHECK(permute_support(p, {1, 0}) == a);
}
