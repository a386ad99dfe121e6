#include <doctest.h>

#include <fstream>
#include <sstream>

#include "kit.hpp"
#include "smcnets/correctness.hpp"
#include "smcnets/net_io.hpp"
#include "smcnets/translate.hpp"

using namespace smcnets;

namespace {
const std::set<std::string> kXY{"x", "y"};
Formula f(const std::string& s) { return parse_formula(s, kXY); }

Net miswired_eval() {
  std::ifstream in(std::string(SMCNETS_TEST_DATA) + "/miswired_eval.json");
  std::stringstream ss;
  ss << in.rdbuf();
  return net_from_json(ss.str(), nullptr);
}

// Consecutive cycle vertices are joined by distinct edges of the graph.
bool is_cycle_in(const SwitchGraph& g, const std::vector<std::size_t>& cycle) {
  if (cycle.size() < 3 || cycle.front() != cycle.back()) return false;
  std::vector<bool> used(g.edges().size(), false);
  for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
    bool found = false;
    for (std::size_t e = 0; e < g.edges().size() && !found; ++e) {
      const SwitchEdge& edge = g.edges()[e];
      bool joins = (edge.a == cycle[i] && edge.b == cycle[i + 1]) || (edge.b == cycle[i] && edge.a == cycle[i + 1]);
      if (joins && !used[e]) found = used[e] = true;
    }
    if (!found) return false;
  }
  return true;
}
}  // namespace

TEST_CASE("par counts") {
  Theory th = kit::fixture("example.smc");
  CHECK(par_count(identity_net(f("x"))) == 0);
  CHECK(par_count(identity_net(f("x * x"))) == 1);
  CHECK(par_count(identity_net(f("x -o x"))) == 1);
  CHECK(par_count(generator_net("alpha", th.signature)) == 1);
  CHECK(enumerate_switchings(identity_net(f("x"))).size() == 1);
}

TEST_CASE("identity nets are correct") {
  kit::Rng rng(23);
  for (int i = 0; i < 100; ++i) CHECK(is_correct(identity_net(kit::random_formula(rng, 9))));
}

TEST_CASE("the miswired eval is rejected with a cycle") {
  Net n = miswired_eval();
  CHECK_FALSE(is_correct(n));
  std::optional<SwitchGraph> bad = first_failing_switching(n);
  REQUIRE(bad.has_value());
  CHECK_FALSE(bad->is_tree());
  auto cycle = bad->find_cycle();
  REQUIRE(cycle.has_value());
  CHECK(is_cycle_in(*bad, *cycle));
  CHECK(cycle->size() == 4);
}

TEST_CASE("switchings enumerate 2^P graphs in order") {
  Theory th = kit::fixture("example.smc");
  Net n = translate(parse_term("alpha * beta", th.signature), th.signature);
  Switchings all = enumerate_switchings(n);
  CHECK(all.par_count() == kit::oracle_par_count(n));
  std::uint64_t seen = 0;
  for (const SwitchGraph& g : all) {
    CHECK(g.index() == seen++);
    CHECK(g.is_tree() == all.is_tree(g.index()));
    CHECK(g.edges().size() + 1 == g.vertices().size());
  }
  CHECK(seen == (std::uint64_t{1} << all.par_count()));
}

TEST_CASE("switching criterion agrees with the oracle on random prenets") {
  kit::Rng rng(29);
  int correct = 0, incorrect = 0;
  for (int i = 0; i < 400; ++i) {
    Net n = kit::random_prenet(rng, 9);
    bool expect = kit::oracle_is_correct(n);
    CHECK(is_correct(n) == expect);
    CHECK(par_count(n) == kit::oracle_par_count(n));
    CHECK(first_failing_switching(n).has_value() == !expect);
    (expect ? correct : incorrect)++;
  }
  CHECK(correct > 20);
  CHECK(incorrect > 20);
}

TEST_CASE("a switching that is not a tree has a cycle or is disconnected") {
  kit::Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    Net n = kit::random_prenet(rng, 7);
    for (const SwitchGraph& g : enumerate_switchings(n)) {
      auto cycle = g.find_cycle();
      if (cycle) CHECK(is_cycle_in(g, *cycle));
      CHECK(g.is_tree() == (!cycle && g.is_connected()));
    }
  }
}
